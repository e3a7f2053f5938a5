#include "lamarle/surface_io.hpp"

#include <array>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "lamarle/error.hpp"

namespace lamarle {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& message) { throw Error(ErrorCode::DefinitionError, message); }

const json& field(const json& doc, const char* key) {
    const auto it = doc.find(key);
    if (it == doc.end()) bad(std::string("missing key '") + key + "'");
    return *it;
}

Interval read_range(const json& doc, const char* key) {
    const json& r = field(doc, key);
    if (!r.is_array() || r.size() != 2 || !r[0].is_number() || !r[1].is_number()) {
        bad(std::string("'") + key + "' must be an array of two numbers");
    }
    const Interval out{r[0].get<double>(), r[1].get<double>()};
    if (!(out.lo < out.hi)) bad(std::string("'") + key + "' must satisfy lo < hi");
    return out;
}

CurveSpec read_curve(const json& doc, const char* key) {
    const json& c = field(doc, key);
    if (!c.is_array() || c.size() != 3) bad(std::string("'") + key + "' must be an array of three expressions");
    std::array<std::string, 3> parts;
    for (std::size_t k = 0; k < 3; ++k) {
        if (!c[k].is_string()) bad(std::string("'") + key + "' entries must be strings");
        parts[k] = c[k].get<std::string>();
    }
    try {
        return parse_curve(parts);
    } catch (const Error& e) {
        throw Error(e.code(), std::string(key) + ": " + e.what(), e.position());
    }
}

}  // namespace

RuledSurface surface_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        bad(std::string("malformed definition: ") + e.what());
    }
    if (!doc.is_object()) bad("definition must be a JSON object");

    static const std::set<std::string> known{"name", "base", "director", "u_range", "v_range"};
    for (const auto& [key, value] : doc.items()) {
        if (!known.contains(key)) bad("unknown key '" + key + "'");
    }
    const json& name = field(doc, "name");
    if (!name.is_string()) bad("'name' must be a string");

    const Interval u_range = read_range(doc, "u_range");
    const Interval v_range = read_range(doc, "v_range");
    CurveSpec base = read_curve(doc, "base");
    CurveSpec director = read_curve(doc, "director");
    try {
        return RuledSurface(name.get<std::string>(), ParamCurve(std::move(base), u_range),
                            ParamCurve(std::move(director), u_range), v_range);
    } catch (const Error& e) {
        // the curves could not be evaluated on their own domain
        bad(e.what());
    }
}

RuledSurface load_surface_definition(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) bad("cannot read definition file '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return surface_from_json(buffer.str());
}

std::string surface_to_json(const RuledSurface& surface) {
    const auto curve = [](const ParamCurve& c) {
        json arr = json::array();
        for (const Expr& e : c.spec().components) arr.push_back(to_string(e));
        return arr;
    };
    json doc;
    doc["name"] = surface.name();
    doc["base"] = curve(surface.base());
    doc["director"] = curve(surface.director());
    doc["u_range"] = {surface.u_range().lo, surface.u_range().hi};
    doc["v_range"] = {surface.v_range().lo, surface.v_range().hi};
    return doc.dump(2);
}

}  // namespace lamarle
