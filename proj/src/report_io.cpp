#include "lamarle/report_io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "lamarle/error.hpp"

namespace lamarle {

namespace {

double parse_number(const std::string& field) {
    if (field.empty()) return std::nan("");
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), x);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw Error(ErrorCode::DefinitionError, "bad number '" + field + "' in report");
    }
    return x;
}

nlohmann::ordered_json number_or_null(double x) {
    return std::isfinite(x) ? nlohmann::ordered_json(x) : nlohmann::ordered_json(nullptr);
}

}  // namespace

std::string format_number(double x) {
    if (std::isnan(x)) return {};
    if (x == 0.0) x = 0.0;  // no "-0"
    std::array<char, 32> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    (void)ec;
    return std::string(buf.data(), end);
}

void write_report_csv(std::ostream& out, const std::vector<LamarleReport>& reports) {
    out << kReportCsvHeader << '\n';
    for (const LamarleReport& r : reports) {
        out << format_number(r.u) << ',' << format_number(r.v) << ',' << to_string(r.surface_class) << ','
            << format_number(r.P) << ',' << format_number(r.K_forms) << ',' << format_number(r.K_lamarle) << ','
            << format_number(r.abs_diff) << ',' << format_number(r.rel_diff) << ',' << r.status << '\n';
    }
}

void write_report_json(std::ostream& out, const std::vector<LamarleReport>& reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const LamarleReport& r : reports) {
        nlohmann::ordered_json row;
        row["u"] = r.u;
        row["v"] = r.v;
        row["class"] = std::string(to_string(r.surface_class));
        row["P"] = number_or_null(r.P);
        row["K_forms"] = number_or_null(r.K_forms);
        row["K_lamarle"] = number_or_null(r.K_lamarle);
        row["abs_diff"] = number_or_null(r.abs_diff);
        row["rel_diff"] = number_or_null(r.rel_diff);
        row["status"] = r.status;
        if (!r.ok()) row["message"] = r.message;
        arr.push_back(std::move(row));
    }
    out << arr.dump(2) << '\n';
}

std::vector<LamarleReport> read_report_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kReportCsvHeader) {
        throw Error(ErrorCode::DefinitionError, "report does not start with the expected header");
    }
    std::vector<LamarleReport> out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::istringstream row(line);
        std::string cell;
        while (std::getline(row, cell, ',')) f.push_back(cell);
        if (line.back() == ',') f.emplace_back();
        if (f.size() != 9) throw Error(ErrorCode::DefinitionError, "report row has " + std::to_string(f.size()) + " fields");
        const auto cls = parse_surface_class(f[2]);
        if (!cls) throw Error(ErrorCode::DefinitionError, "bad class '" + f[2] + "' in report");
        LamarleReport r{*cls,
                        parse_number(f[0]),
                        parse_number(f[1]),
                        std::nan(""),
                        parse_number(f[3]),
                        parse_number(f[4]),
                        parse_number(f[5]),
                        parse_number(f[6]),
                        parse_number(f[7]),
                        f[8],
                        ""};
        out.push_back(std::move(r));
    }
    return out;
}

void write_obj(std::ostream& out, const RuledSurface& surface, int nu, int nv) {
    nu = std::max(nu, 2);
    nv = std::max(nv, 2);
    for (int i = 0; i < nu; ++i) {
        const double u = surface.u_range().sample(i, nu);
        for (int j = 0; j < nv; ++j) {
            const LVec3 p = evaluate(surface, u, surface.v_range().sample(j, nv));
            out << "v " << format_number(p.x1) << ' ' << format_number(p.x2) << ' ' << format_number(p.x3) << '\n';
        }
    }
    for (int i = 0; i + 1 < nu; ++i) {
        for (int j = 0; j + 1 < nv; ++j) {
            const int a = i * nv + j + 1;
            const int b = (i + 1) * nv + j + 1;
            out << "f " << a << ' ' << b << ' ' << b + 1 << ' ' << a + 1 << '\n';
        }
    }
}

}  // namespace lamarle
