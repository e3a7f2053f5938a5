#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "lamarle/cli.hpp"
#include "lamarle/report_io.hpp"

using namespace lamarle;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<const char*> args) {
    args.insert(args.begin(), "lamarle");
    std::ostringstream out, err;
    const int code = cli::main_entry(static_cast<int>(args.size()), args.data(), out, err);
    return {code, out.str(), err.str()};
}

int count_lines(const std::string& text, const std::string& prefix) {
    std::istringstream in(text);
    std::string line;
    int n = 0;
    while (std::getline(in, line)) n += line.rfind(prefix, 0) == 0;
    return n;
}

double summary_value(const std::string& text) {
    const auto at = text.find("max_abs_diff=");
    REQUIRE(at != std::string::npos);
    return std::stod(text.substr(at + 13));
}

std::filesystem::path temp_file(const char* name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("range and option parsing") {
    CHECK(cli::parse_range("-1:2.5") == Interval{-1.0, 2.5});
    CHECK_FALSE(cli::parse_range("2:1"));
    CHECK_FALSE(cli::parse_range("1"));
    CHECK_FALSE(cli::parse_range("a:b"));
    CHECK(cli::parse_command("verify") == cli::Command::Verify);
    CHECK_FALSE(cli::parse_command("plot"));
    CHECK(cli::parse_format("obj") == cli::OutputFormat::Obj);
}

TEST_CASE("list") {
    const Outcome r = run_cli({"list"});
    CHECK(r.code == 0);
    CHECK(r.out.find("helicoid-2,M1,1,") != std::string::npos);
}

TEST_CASE("verify helicoid-2") {
    const Outcome r = run_cli({"verify", "--surface", "helicoid-2", "--u-samples", "21", "--v-samples", "17"});
    CHECK(r.code == cli::kExitOk);
    CHECK(summary_value(r.err) <= 1e-8);
    std::istringstream csv(r.out);
    CHECK(read_report_csv(csv).size() == 21u * 17u);
}

TEST_CASE("verify writes the summary to stdout when the report goes to a file") {
    const auto path = temp_file("lamarle_cli_verify.csv");
    const Outcome r = run_cli({"verify", "--surface", "helicoid-3", "--output", path.c_str(), "--format", "json"});
    CHECK(r.code == 0);
    CHECK(summary_value(r.out) <= 1e-8);
    std::ifstream in(path);
    std::string first;
    std::getline(in, first);
    CHECK(first == "[");
    std::filesystem::remove(path);
}

TEST_CASE("verify exceeding the tolerance exits 3") {
    const Outcome r = run_cli({"verify", "--surface", "helicoid-2", "--tolerance", "1e-16"});
    CHECK(r.code == cli::kExitTolerance);
}

TEST_CASE("definition errors exit 2") {
    const auto path = temp_file("lamarle_cli_bad.json");
    std::ofstream(path) << R"({"name": "x", "base": ["0", "u", "0"], "director": ["-cosh(u", "0", "0"],
                              "u_range": [-1, 1], "v_range": [-1, 1]})";
    const Outcome r = run_cli({"verify", "--definition", path.c_str()});
    CHECK(r.code == cli::kExitUsage);
    CHECK(r.err.find("parse_error") != std::string::npos);
    std::filesystem::remove(path);

    CHECK(run_cli({"verify", "--surface", "helix"}).code == cli::kExitUsage);
    CHECK(run_cli({"verify", "--definition", "/nonexistent.json"}).code == cli::kExitUsage);
    CHECK(run_cli({"drall", "--base", "0,u", "--director", "1,0,0"}).code == cli::kExitUsage);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli({}).code == cli::kExitUsage);
    CHECK(run_cli({"plot"}).code == cli::kExitUsage);
    CHECK(run_cli({"verify"}).code == cli::kExitUsage);
    CHECK(run_cli({"verify", "--surface", "helicoid-1", "--random-class", "m1"}).code == cli::kExitUsage);
    CHECK(run_cli({"verify", "--surface", "helicoid-1", "--u-range", "1:0"}).code == cli::kExitUsage);
    CHECK(run_cli({"verify", "--surface", "helicoid-1", "--u-samples", "1"}).code == cli::kExitUsage);
    CHECK(run_cli({"mesh", "--surface", "helicoid-1", "--format", "csv"}).code == cli::kExitUsage);
    CHECK(run_cli({"curvature", "--surface", "helicoid-1", "--format", "obj"}).code == cli::kExitUsage);
    CHECK(run_cli({"drall", "--base", "0,u,0"}).code == cli::kExitUsage);
    CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("drall on helicoid-1") {
    const Outcome r = run_cli({"drall", "--surface", "helicoid-1", "--u-samples", "9"});
    CHECK(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "u,P,P_sigma,sigma,unit_speed,status");
    int rows = 0;
    while (std::getline(in, line)) {
        const auto first = line.find(',');
        const auto second = line.find(',', first + 1);
        CHECK(std::abs(std::stod(line.substr(first + 1, second - first - 1)) - 1.0) <= 1e-10);
        CHECK(line.substr(line.size() - 3) == ",ok");
        ++rows;
    }
    CHECK(rows == 9);
}

TEST_CASE("mesh vertex count equals the grid size") {
    const Outcome r = run_cli({"mesh", "--surface", "helicoid-3", "--format", "obj", "--u-samples", "7", "--v-samples", "5"});
    CHECK(r.code == 0);
    CHECK(count_lines(r.out, "v ") == 35);
    CHECK(count_lines(r.out, "f ") == 24);
    CHECK(count_lines(run_cli({"mesh", "--surface", "helicoid-1"}).out, "v ") == 41 * 33);
}

TEST_CASE("inline surfaces, overrides and other commands") {
    const Outcome c = run_cli({"curvature", "--base", "0,u,0", "--director", "-sinh(u),0,-cosh(u)", "--u-range",
                               "0:2", "--v-range", "-1:1", "--u-samples", "3", "--v-samples", "3"});
    CHECK(c.code == 0);
    CHECK(c.out.rfind("u,v,K_forms,status\n0,-1,0.2", 0) == 0);

    const Outcome k = run_cli({"classify", "--surface", "helicoid-2", "--u-samples", "2", "--v-samples", "3"});
    CHECK(k.code == 0);
    CHECK(k.out.find("degenerate_normal") != std::string::npos);
    CHECK(k.out.find("-1,0,M1,spacelike,spacelike,timelike,ok") != std::string::npos);
    CHECK(k.err.find("degenerate_normal at (u, v) = (-1, -1)") != std::string::npos);

    CHECK(run_cli({"frame", "--surface", "helicoid-3", "--u-samples", "2"}).out.find("time_space_space,ok") !=
          std::string::npos);
    CHECK(run_cli({"striction", "--random-class", "m2", "--seed", "3", "--u-samples", "2"}).code == 0);
    CHECK(run_cli({"verify", "--random-class", "M1", "--seed", "11", "--u-samples", "5"}).code == 0);
}

TEST_CASE("identical configurations give identical output") {
    const std::vector<const char*> args{"verify", "--random-class", "m3", "--seed", "2", "--format", "json"};
    const Outcome a = run_cli(args);
    const Outcome b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.err == b.err);
}

}
