#include "lamarle/catalog.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "lamarle/error.hpp"

namespace lamarle {

namespace {

constexpr Interval kCatalogU{-1.0, 1.0};

RuledSurface make_surface(std::string name, const std::array<std::string, 3>& base,
                          const std::array<std::string, 3>& director, Interval u_range, Interval v_range) {
    return RuledSurface(std::move(name), ParamCurve(parse_curve(base), u_range),
                        ParamCurve(parse_curve(director), u_range), v_range);
}

// Shortest round-trip text, parenthesized so it can be spliced anywhere.
std::string num(double x) {
    std::array<char, 32> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    (void)ec;
    return "(" + std::string(buf.data(), end) + ")";
}

// Uniform doubles from the raw 64-bit stream, independent of the standard
// library's distribution implementations.
class Stream {
public:
    explicit Stream(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi) {
        const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * unit;
    }
    double magnitude(double lo, double hi) { return sign() * uniform(lo, hi); }
    double sign() { return (engine_() >> 63) != 0 ? 1.0 : -1.0; }
    bool coin() { return (engine_() >> 63) != 0; }

private:
    std::mt19937_64 engine_;
};

struct Construction {
    std::array<std::string, 3> beta;
    std::array<std::string, 3> e;
};

// phase(u) = c0 + c1 u (+ c2 u^2 for the general variant)
struct Phase {
    double c0;
    double c1;
    double c2;

    [[nodiscard]] std::string text() const {
        std::string s = "(" + num(c0) + " + " + num(c1) + "*u";
        if (c2 != 0.0) s += " + " + num(c2) + "*u^2";
        return s + ")";
    }
};

Phase draw_phase(Stream& rng, bool general, double c0_span, double c1_lo, double c1_hi) {
    Phase p{rng.uniform(-c0_span, c0_span), rng.magnitude(c1_lo, c1_hi), 0.0};
    if (general) p.c2 = rng.uniform(-0.4, 0.4);
    return p;
}

// Q(u) = q1 u + q2 u^2
std::string quadratic(double q1, double q2) { return "(" + num(q1) + "*u + " + num(q2) + "*u^2)"; }

std::string fn(const char* name, const std::string& arg) { return std::string(name) + arg; }

// Spacelike director (a cosh psi, b, a sinh psi) with timelike e'.
Construction m1_family(Stream& rng, bool general) {
    const double lam = rng.uniform(-1.0, 1.0);
    const double a = std::cos(lam);
    const double b = std::sin(lam);
    const Phase psi = draw_phase(rng, general, 0.5, 0.8, 1.6);
    const std::string ps = psi.text();
    Construction c;
    c.e = {num(a) + "*" + fn("cosh", ps), num(b), num(a) + "*" + fn("sinh", ps)};
    if (!general) {
        // beta' = p (cosh psi, 0, sinh psi) + q (0, 1, 0), unit spacelike
        const double s = rng.uniform(-std::numbers::pi, std::numbers::pi);
        const double k = std::cos(s) / psi.c1;
        c.beta = {num(k) + "*" + fn("sinh", ps), num(std::sin(s)) + "*u", num(k) + "*" + fn("cosh", ps)};
    } else {
        const double k = rng.uniform(-1.0, 1.0);
        const std::string q = quadratic(rng.magnitude(0.5, 1.5), rng.uniform(-0.3, 0.3));
        c.beta = {num(k) + "*" + fn("sinh", ps), q, num(k) + "*" + fn("cosh", ps)};
    }
    return c;
}

// Timelike director (a sinh psi, b, a cosh psi), a = cosh l, b = sinh l.
Construction m2_family(Stream& rng, bool general) {
    const double lam = rng.uniform(-0.8, 0.8);
    const double a = std::cosh(lam);
    const double b = std::sinh(lam);
    const Phase psi = draw_phase(rng, general, 0.5, 0.8, 1.6);
    const std::string ps = psi.text();
    Construction c;
    c.e = {num(a) + "*" + fn("sinh", ps), num(b), num(a) + "*" + fn("cosh", ps)};
    if (!general) {
        // beta' = p (sinh psi, 0, cosh psi) + q (0, 1, 0), p = sinh s, q = cosh s
        const double s = rng.uniform(-1.0, 1.0);
        const double k = std::sinh(s) / psi.c1;
        c.beta = {num(k) + "*" + fn("cosh", ps), num(std::cosh(s)) + "*u", num(k) + "*" + fn("sinh", ps)};
    } else {
        const double k = rng.uniform(-0.4, 0.4);
        const std::string q = quadratic(rng.magnitude(0.8, 1.5), rng.uniform(-0.2, 0.2));
        c.beta = {num(k) + "*" + fn("cosh", ps), q, num(k) + "*" + fn("sinh", ps)};
    }
    return c;
}

// Spacelike director with spacelike e': either (cos t, sin t, 0) or
// (a sinh psi, b, a cosh psi) with b = cosh l, a = sinh l.
Construction m3_family(Stream& rng, bool general) {
    Construction c;
    if (rng.coin()) {
        const Phase th = draw_phase(rng, general, std::numbers::pi, 0.8, 1.6);
        const std::string ts = th.text();
        c.e = {fn("cos", ts), fn("sin", ts), "0"};
        if (!general) {
            // beta' = p (cos t, sin t, 0)^perp + q (0, 0, 1), p = sinh s, q = cosh s
            const double s = rng.uniform(-1.0, 1.0);
            const double k = std::sinh(s) / th.c1;
            c.beta = {num(k) + "*" + fn("sin", ts), num(-k) + "*" + fn("cos", ts), num(std::cosh(s)) + "*u"};
        } else {
            const double k = rng.uniform(-0.4, 0.4);
            const std::string q = quadratic(rng.magnitude(0.8, 1.5), rng.uniform(-0.2, 0.2));
            c.beta = {num(k) + "*" + fn("sin", ts), num(-k) + "*" + fn("cos", ts), q};
        }
        return c;
    }
    const double lam = rng.magnitude(0.3, 1.0);
    const double a = std::sinh(lam);
    const double b = std::cosh(lam);
    const Phase psi = draw_phase(rng, general, 0.5, 0.8, 1.6);
    const std::string ps = psi.text();
    c.e = {num(a) + "*" + fn("sinh", ps), num(b), num(a) + "*" + fn("cosh", ps)};
    if (!general) {
        // beta' = p (sinh psi, 0, cosh psi) + q (0, 1, 0), p = cosh s, q = sinh s
        const double s = rng.uniform(-1.0, 1.0);
        const double k = std::cosh(s) / psi.c1;
        c.beta = {num(k) + "*" + fn("cosh", ps), num(std::sinh(s)) + "*u", num(k) + "*" + fn("sinh", ps)};
    } else {
        const double k = rng.magnitude(1.0, 2.0);
        const std::string q = quadratic(rng.uniform(-0.5, 0.5), rng.uniform(-0.1, 0.1));
        c.beta = {num(k) + "*" + fn("cosh", ps), q, num(k) + "*" + fn("sinh", ps)};
    }
    return c;
}

FrameType expected_frame(SurfaceClass cls) {
    switch (cls) {
        case SurfaceClass::M1_Spacelike: return FrameType::SpaceTimeSpace;
        case SurfaceClass::M2_TimelikeSpacelikeBaseTimelikeRuling: return FrameType::TimeSpaceSpace;
        case SurfaceClass::M3_TimelikeTimelikeBaseSpacelikeRuling: return FrameType::SpaceSpaceTime;
    }
    return FrameType::SpaceTimeSpace;
}

// Offset along e, then a rotation about x3 and a translation.
RuledSurface assemble(const Construction& c, Stream& rng, std::string name) {
    const bool offset = rng.coin();
    const double m0 = offset ? rng.uniform(-0.05, 0.05) : 0.0;
    const double m1 = offset ? rng.uniform(-0.05, 0.05) : 0.0;
    const double w = rng.uniform(-std::numbers::pi, std::numbers::pi);
    const double cw = std::cos(w);
    const double sw = std::sin(w);
    const std::array<double, 3> t{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};

    std::array<std::string, 3> b;
    for (std::size_t k = 0; k < 3; ++k) {
        b[k] = "(" + c.beta[k] + ")";
        if (offset) b[k] = "(" + b[k] + " + (" + num(m0) + " + " + num(m1) + "*u)*(" + c.e[k] + "))";
    }
    const auto rotate = [&](const std::array<std::string, 3>& x, bool translate) {
        std::array<std::string, 3> r{num(cw) + "*(" + x[0] + ") - " + num(sw) + "*(" + x[1] + ")",
                                     num(sw) + "*(" + x[0] + ") + " + num(cw) + "*(" + x[1] + ")", x[2]};
        if (translate) {
            for (std::size_t k = 0; k < 3; ++k) r[k] += " + " + num(t[k]);
        }
        return r;
    };
    return make_surface(std::move(name), rotate(b, true), rotate(c.e, false), kCatalogU, Interval{-10.0, 10.0});
}

// Returns the surface with its final v-range, or nullopt to resample.
std::optional<RuledSurface> accept(const RuledSurface& s, SurfaceClass cls) {
    constexpr int kSamples = 50;
    try {
        for (int k = 0; k < kSamples; ++k) {
            const double u = s.u_range().sample(k, kSamples);
            if (causal_class(s, u) != cls) return std::nullopt;
            if (!is_noncylindrical(s, u)) return std::nullopt;
            const StrictionSample st = striction_sample(s, u);
            if (std::abs(metric(st.e.d1, st.e.d1)) < 0.1) return std::nullopt;
            if (director_frame(s.director(), u).frame_type != expected_frame(cls)) return std::nullopt;
            if (cls != SurfaceClass::M2_TimelikeSpacelikeBaseTimelikeRuling &&
                !(std::abs(distribution_parameter(s, u)) > 0.05)) {
                return std::nullopt;
            }
        }
        const RuledSurface out = cls == SurfaceClass::M2_TimelikeSpacelikeBaseTimelikeRuling
                                     ? s.with_v_range({-2.0, 2.0})
                                     : s.with_v_range(valid_v_range(s, cls));
        for (int i = 0; i < 9; ++i) {
            for (int j = 0; j < 5; ++j) {
                if (classify(out, out.u_range().sample(i, 9), out.v_range().sample(j, 5)) != cls) {
                    return std::nullopt;
                }
            }
        }
        return out;
    } catch (const Error&) {
        return std::nullopt;
    }
}

}  // namespace

std::vector<std::string> catalog_names() { return {"helicoid-1", "helicoid-2", "helicoid-3"}; }

CatalogEntry get_surface(std::string_view name) {
    if (name == "helicoid-1") {
        return {"helicoid-1",
                make_surface("helicoid-1", {"0", "0", "u"}, {"-cos(u)", "-sin(u)", "0"}, kCatalogU, {-1.0, 1.0}),
                SurfaceClass::M3_TimelikeTimelikeBaseSpacelikeRuling, 1.0, "1/(1 - v^2)^2",
                [](double v) { return 1.0 / ((1.0 - v * v) * (1.0 - v * v)); }};
    }
    if (name == "helicoid-2") {
        return {"helicoid-2",
                make_surface("helicoid-2", {"0", "u", "0"}, {"-cosh(u)", "0", "-sinh(u)"}, kCatalogU, {-1.0, 1.0}),
                SurfaceClass::M1_Spacelike, 1.0, "-1/(1 - v^2)^2",
                [](double v) { return -1.0 / ((1.0 - v * v) * (1.0 - v * v)); }};
    }
    if (name == "helicoid-3") {
        return {"helicoid-3",
                make_surface("helicoid-3", {"0", "u", "0"}, {"-sinh(u)", "0", "-cosh(u)"}, kCatalogU, {-3.0, 3.0}),
                SurfaceClass::M2_TimelikeSpacelikeBaseTimelikeRuling, 1.0, "1/(1 + v^2)^2",
                [](double v) { return 1.0 / ((1.0 + v * v) * (1.0 + v * v)); }};
    }
    throw Error(ErrorCode::UnknownSurface, "unknown catalog surface '" + std::string(name) + "'");
}

RuledSurface random_surface(SurfaceClass cls, std::uint64_t seed) {
    Stream rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(cls) + 1);
    const bool general = seed % 4 == 3;
    const std::string name = "random-" + std::string(to_string(cls)) + "-" + std::to_string(seed);
    for (int attempt = 0; attempt < kMaxGenerationAttempts; ++attempt) {
        Construction c;
        switch (cls) {
            case SurfaceClass::M1_Spacelike: c = m1_family(rng, general); break;
            case SurfaceClass::M2_TimelikeSpacelikeBaseTimelikeRuling: c = m2_family(rng, general); break;
            case SurfaceClass::M3_TimelikeTimelikeBaseSpacelikeRuling: c = m3_family(rng, general); break;
        }
        if (auto s = accept(assemble(c, rng, name), cls)) return *s;
    }
    throw Error(ErrorCode::GenerationExhausted,
                "no acceptable " + std::string(to_string(cls)) + " surface after " +
                    std::to_string(kMaxGenerationAttempts) + " attempts (seed " + std::to_string(seed) + ")");
}

}  // namespace lamarle
