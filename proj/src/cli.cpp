#include "lamarle/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <tuple>
#include <stdexcept>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lamarle/catalog.hpp"
#include "lamarle/curvature.hpp"
#include "lamarle/error.hpp"
#include "lamarle/report_io.hpp"
#include "lamarle/surface_io.hpp"

namespace lamarle::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Errors raised while building the surface are definition errors (exit 2).
struct DefinitionFailure {
    Error error;
};

json number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

struct Table {
    std::vector<std::string> columns;
    std::vector<json> rows;
};

void emit(const Table& table, OutputFormat format, std::ostream& out) {
    if (format == OutputFormat::Json) {
        json arr = json::array();
        for (const json& row : table.rows) arr.push_back(row);
        out << arr.dump(2) << '\n';
        return;
    }
    for (std::size_t k = 0; k < table.columns.size(); ++k) out << (k ? "," : "") << table.columns[k];
    out << '\n';
    for (const json& row : table.rows) {
        for (std::size_t k = 0; k < table.columns.size(); ++k) {
            if (k) out << ',';
            const auto it = row.find(table.columns[k]);
            if (it == row.end() || it->is_null()) continue;
            if (it->is_number()) out << format_number(it->get<double>());
            else if (it->is_boolean()) out << (it->get<bool>() ? "true" : "false");
            else out << it->get<std::string>();
        }
        out << '\n';
    }
}

std::string fmt(double x) { return format_number(x); }

void diagnose(std::ostream& err, const Error& e, double u, std::optional<double> v = std::nullopt) {
    err << "lamarle: " << error_code_name(e.code()) << " at (u, v) = (" << fmt(u);
    if (v) err << ", " << fmt(*v);
    err << "): " << e.what() << '\n';
}

void put_vec(json& row, const char* prefix, const LVec3& v) {
    const std::string p(prefix);
    row[p + "1"] = number(v.x1);
    row[p + "2"] = number(v.x2);
    row[p + "3"] = number(v.x3);
}

json failed_row(const Error& e, double u, std::optional<double> v = std::nullopt) {
    json row;
    row["u"] = u;
    if (v) row["v"] = *v;
    row["status"] = std::string(error_code_name(e.code()));
    return row;
}

RuledSurface build_surface(const RunConfig& c) {
    const int sources = int(c.surface_name.has_value()) + int(c.definition_path.has_value()) +
                        int(c.base.has_value() || c.director.has_value()) + int(c.random_class.has_value());
    if (sources != 1) {
        throw UsageError("exactly one of --surface, --definition, --base/--director or --random-class is required");
    }
    if (c.base.has_value() != c.director.has_value()) {
        throw UsageError("--base and --director must be given together");
    }

    std::optional<RuledSurface> s;
    try {
        if (c.surface_name) {
            s = get_surface(*c.surface_name).surface;
        } else if (c.definition_path) {
            s = load_surface_definition(*c.definition_path);
        } else if (c.random_class) {
            s = random_surface(*c.random_class, c.seed);
        } else {
            const Interval ur = c.u_range.value_or(Interval{-1.0, 1.0});
            s = RuledSurface("inline", ParamCurve(parse_curve(*c.base), ur), ParamCurve(parse_curve(*c.director), ur),
                             c.v_range.value_or(Interval{-1.0, 1.0}));
        }
        if (c.u_range && !(s->u_range() == *c.u_range)) {
            s = RuledSurface(s->name(), ParamCurve(s->base().spec(), *c.u_range),
                             ParamCurve(s->director().spec(), *c.u_range), s->v_range());
        }
        if (c.v_range) s = s->with_v_range(*c.v_range);
    } catch (const Error& e) {
        throw DefinitionFailure{e};
    }
    return *s;
}

Table list_table() {
    Table t{{"name", "class", "P", "K"}, {}};
    for (const std::string& name : catalog_names()) {
        const CatalogEntry entry = get_surface(name);
        json row;
        row["name"] = name;
        row["class"] = std::string(to_string(entry.surface_class));
        row["P"] = entry.known_P ? json(*entry.known_P) : json(nullptr);
        row["K"] = entry.known_K_formula;
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table classify_table(const RuledSurface& s, const RunConfig& c, std::ostream& err) {
    Table t{{"u", "v", "class", "base", "ruling", "normal", "status"}, {}};
    for (int i = 0; i < c.u_samples; ++i) {
        const double u = s.u_range().sample(i, c.u_samples);
        for (int j = 0; j < c.v_samples; ++j) {
            const double v = s.v_range().sample(j, c.v_samples);
            json row;
            try {
                row["u"] = u;
                row["v"] = v;
                row["base"] = std::string(to_string(causal_character_at(s.base(), u, c.causal_epsilon)));
                row["ruling"] =
                    std::string(to_string(causal_character(eval_point(s.director(), u), c.causal_epsilon)));
                row["normal"] = std::string(to_string(unit_normal(s, u, v).character));
                row["class"] = std::string(to_string(classify(s, u, v, c.causal_epsilon)));
                row["status"] = "ok";
            } catch (const Error& e) {
                diagnose(err, e, u, v);
                row["status"] = std::string(error_code_name(e.code()));
            }
            t.rows.push_back(std::move(row));
        }
    }
    return t;
}

Table frame_table(const RuledSurface& s, const RunConfig& c, std::ostream& err) {
    Table t{{"u", "e1", "e2", "e3", "n1", "n2", "n3", "xi1", "xi2", "xi3", "kappa", "tau", "frame_type", "status"}, {}};
    for (int i = 0; i < c.u_samples; ++i) {
        const double u = s.u_range().sample(i, c.u_samples);
        try {
            const DirectorFrame f = director_frame(s.director(), u, c.causal_epsilon);
            json row;
            row["u"] = u;
            put_vec(row, "e", f.e);
            put_vec(row, "n", f.n);
            put_vec(row, "xi", f.xi);
            row["kappa"] = number(f.kappa);
            row["tau"] = number(f.tau);
            row["frame_type"] = std::string(to_string(f.frame_type));
            row["status"] = "ok";
            t.rows.push_back(std::move(row));
        } catch (const Error& e) {
            diagnose(err, e, u);
            t.rows.push_back(failed_row(e, u));
        }
    }
    return t;
}

Table striction_table(const RuledSurface& s, const RunConfig& c, std::ostream& err) {
    Table t{{"u", "beta1", "beta2", "beta3", "orthogonality", "speed", "status"}, {}};
    for (int i = 0; i < c.u_samples; ++i) {
        const double u = s.u_range().sample(i, c.u_samples);
        try {
            const StrictionSample st = striction_sample(s, u, c.causal_epsilon);
            json row;
            row["u"] = u;
            put_vec(row, "beta", st.beta);
            row["orthogonality"] = number(std::abs(metric(st.beta_prime, st.e.d1)));
            row["speed"] = number(norm(st.beta_prime));
            row["status"] = "ok";
            t.rows.push_back(std::move(row));
        } catch (const Error& e) {
            diagnose(err, e, u);
            t.rows.push_back(failed_row(e, u));
        }
    }
    return t;
}

Table drall_table(const RuledSurface& s, const RunConfig& c, std::ostream& err) {
    Table t{{"u", "P", "P_sigma", "sigma", "unit_speed", "status"}, {}};
    const StrictionForm form(s, {});
    for (int i = 0; i < c.u_samples; ++i) {
        const double u = s.u_range().sample(i, c.u_samples);
        try {
            json row;
            row["u"] = u;
            row["P"] = number(distribution_parameter(s, u, c.causal_epsilon));
            try {
                const SurfaceClass cls = causal_class(s, u, c.causal_epsilon);
                const DirectorFrame f = director_frame(s.director(), u, c.causal_epsilon);
                const StrictionAngle a = striction_angle(form, f, u);
                row["P_sigma"] = number(drall_from_striction_angle(cls, a, f.kappa));
                row["sigma"] = number(a.sigma);
                row["unit_speed"] = a.unit_speed;
            } catch (const Error&) {
                // the reconstruction is informational; P stands on its own
            }
            row["status"] = "ok";
            t.rows.push_back(std::move(row));
        } catch (const Error& e) {
            diagnose(err, e, u);
            t.rows.push_back(failed_row(e, u));
        }
    }
    return t;
}

Table curvature_table(const RuledSurface& s, const RunConfig& c, std::ostream& err) {
    Table t{{"u", "v", "K_forms", "status"}, {}};
    for (int i = 0; i < c.u_samples; ++i) {
        const double u = s.u_range().sample(i, c.u_samples);
        for (int j = 0; j < c.v_samples; ++j) {
            const double v = s.v_range().sample(j, c.v_samples);
            try {
                json row;
                row["u"] = u;
                row["v"] = v;
                row["K_forms"] = number(gaussian_curvature_forms(s, u, v));
                row["status"] = "ok";
                t.rows.push_back(std::move(row));
            } catch (const Error& e) {
                diagnose(err, e, u, v);
                t.rows.push_back(failed_row(e, u, v));
            }
        }
    }
    return t;
}

// `out` receives the artifact; `console` is the caller's stdout.
int run_command(const RunConfig& c, OutputFormat format, std::ostream& out, std::ostream& console,
                std::ostream& err, bool to_file) {
    if (c.command == Command::List) {
        emit(list_table(), format, out);
        return kExitOk;
    }
    const RuledSurface s = build_surface(c);
    switch (c.command) {
        case Command::List: break;
        case Command::Classify: emit(classify_table(s, c, err), format, out); break;
        case Command::Frame: emit(frame_table(s, c, err), format, out); break;
        case Command::Striction: emit(striction_table(s, c, err), format, out); break;
        case Command::Drall: emit(drall_table(s, c, err), format, out); break;
        case Command::Curvature: emit(curvature_table(s, c, err), format, out); break;
        case Command::Mesh: write_obj(out, s, c.u_samples, c.v_samples); break;
        case Command::Verify: {
            const std::vector<LamarleReport> reports = verify_lamarle(s, c.u_samples, c.v_samples);
            for (const LamarleReport& r : reports) {
                if (!r.ok()) {
                    err << "lamarle: " << r.status << " at (u, v) = (" << fmt(r.u) << ", " << fmt(r.v)
                        << "): " << r.message << '\n';
                }
            }
            if (format == OutputFormat::Json) write_report_json(out, reports);
            else write_report_csv(out, reports);
            const VerifySummary sum = summarize(reports);
            // keep stdout parseable when the report itself goes there
            std::ostream& summary = to_file ? console : err;
            summary << "max_abs_diff=" << fmt(sum.max_abs_diff) << '\n';
            if (!within_tolerance(sum, c.tolerance)) {
                err << "lamarle: verification failed: " << sum.ok_points << " of " << sum.points
                    << " points evaluable, max scaled difference " << fmt(sum.max_scaled_diff) << " exceeds tolerance "
                    << fmt(c.tolerance) << '\n';
                return kExitTolerance;
            }
            break;
        }
    }
    return kExitOk;
}

}  // namespace

std::optional<Command> parse_command(std::string_view text) noexcept {
    if (text == "list") return Command::List;
    if (text == "classify") return Command::Classify;
    if (text == "frame") return Command::Frame;
    if (text == "striction") return Command::Striction;
    if (text == "drall") return Command::Drall;
    if (text == "curvature") return Command::Curvature;
    if (text == "verify") return Command::Verify;
    if (text == "mesh") return Command::Mesh;
    return std::nullopt;
}

std::optional<OutputFormat> parse_format(std::string_view text) noexcept {
    if (text == "csv") return OutputFormat::Csv;
    if (text == "json") return OutputFormat::Json;
    if (text == "obj") return OutputFormat::Obj;
    return std::nullopt;
}

std::optional<Interval> parse_range(std::string_view text) noexcept {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) return std::nullopt;
    const auto read = [](std::string_view part) -> std::optional<double> {
        double x = 0.0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), x);
        if (part.empty() || ec != std::errc() || ptr != part.data() + part.size() || !std::isfinite(x)) {
            return std::nullopt;
        }
        return x;
    };
    const auto lo = read(text.substr(0, colon));
    const auto hi = read(text.substr(colon + 1));
    if (!lo || !hi || !(*lo < *hi)) return std::nullopt;
    return Interval{*lo, *hi};
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.u_samples < 2 || config.v_samples < 2) throw UsageError("sample counts must be at least 2");
        const OutputFormat format =
            config.format.value_or(config.command == Command::Mesh ? OutputFormat::Obj : OutputFormat::Csv);
        if ((config.command == Command::Mesh) != (format == OutputFormat::Obj)) {
            throw UsageError("obj output is available for mesh only, and mesh writes obj only");
        }
        if (config.output_path) {
            std::ofstream file(*config.output_path, std::ios::binary);
            if (!file) {
                err << "lamarle: cannot open output file '" << *config.output_path << "'\n";
                return kExitFailure;
            }
            return run_command(config, format, file, out, err, true);
        }
        return run_command(config, format, out, out, err, false);
    } catch (const UsageError& e) {
        err << "lamarle: usage: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DefinitionFailure& f) {
        err << "lamarle: " << error_code_name(f.error.code()) << ": " << f.error.what();
        if (f.error.position()) err << " (offset " << *f.error.position() << ")";
        err << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "lamarle: " << error_code_name(e.code()) << ": " << e.what() << '\n';
        return kExitFailure;
    }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Invariants of non-cylindrical ruled surfaces in Lorentz 3-space", "lamarle"};
    RunConfig config;
    std::string command;
    std::string u_range;
    std::string v_range;
    std::string format;
    std::string random_class;
    std::string surface, definition, base, director, output;

    app.add_option("command", command, "list, classify, frame, striction, drall, curvature, verify or mesh")
        ->required()
        ->check(CLI::IsMember({"list", "classify", "frame", "striction", "drall", "curvature", "verify", "mesh"}));
    app.add_option("--surface", surface, "catalog surface name");
    app.add_option("--definition", definition, "surface definition JSON file");
    app.add_option("--base", base, "base curve \"e1,e2,e3\" in u");
    app.add_option("--director", director, "director curve \"e1,e2,e3\" in u");
    app.add_option("--random-class", random_class, "generate a random surface of class m1, m2 or m3")
        ->check(CLI::IsMember({"m1", "m2", "m3", "M1", "M2", "M3"}));
    app.add_option("--seed", config.seed, "seed for --random-class");
    app.add_option("--u-range", u_range, "u-range override a:b");
    app.add_option("--v-range", v_range, "v-range override c:d");
    app.add_option("--u-samples", config.u_samples, "u grid size")->check(CLI::Range(2, 1000000));
    app.add_option("--v-samples", config.v_samples, "v grid size")->check(CLI::Range(2, 1000000));
    app.add_option("--format", format, "csv, json or obj")->check(CLI::IsMember({"csv", "json", "obj"}));
    app.add_option("--output", output, "write the table or mesh here instead of stdout");
    app.add_option("--tolerance", config.tolerance, "verify tolerance, scaled by max(1, |K|)");
    app.add_option("--causal-epsilon", config.causal_epsilon, "null band for causal characters");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    config.command = *parse_command(command);
    const auto set = [](std::optional<std::string>& dst, const std::string& src) {
        if (!src.empty()) dst = src;
    };
    set(config.surface_name, surface);
    set(config.definition_path, definition);
    set(config.base, base);
    set(config.director, director);
    set(config.output_path, output);
    if (!random_class.empty()) config.random_class = parse_surface_class(random_class);
    if (!format.empty()) config.format = parse_format(format);
    for (auto [text, dst, flag] : {std::tuple{&u_range, &config.u_range, "--u-range"},
                                   std::tuple{&v_range, &config.v_range, "--v-range"}}) {
        if (text->empty()) continue;
        *dst = parse_range(*text);
        if (!*dst) {
            err << "lamarle: usage: " << flag << " expects lo:hi with lo < hi, got '" << *text << "'\n";
            return kExitUsage;
        }
    }
    return run(config, out, err);
}

}  // namespace lamarle::cli
