#include <doctest.h>

#include <cmath>

#include "lamarle/catalog.hpp"
#include "lamarle/ruled_surface.hpp"
#include "support/expect_error.hpp"

using namespace lamarle;

namespace {

RuledSurface surface(const char* base, const char* director, Interval v = {-1.0, 1.0}) {
    const Interval u{-1.0, 1.0};
    return RuledSurface("test", ParamCurve(parse_curve(base), u), ParamCurve(parse_curve(director), u), v);
}

double dist(const LVec3& a, const LVec3& b) { return euclidean_norm(a - b); }

constexpr SurfaceClass kM1 = SurfaceClass::M1_Spacelike;
constexpr SurfaceClass kM2 = SurfaceClass::M2_TimelikeSpacelikeBaseTimelikeRuling;
constexpr SurfaceClass kM3 = SurfaceClass::M3_TimelikeTimelikeBaseSpacelikeRuling;

}  // namespace

TEST_SUITE("ruled_surface") {

TEST_CASE("construction checks") {
    const Interval u{-1.0, 1.0};
    const ParamCurve a(parse_curve("0, u, 0"), u);
    const ParamCurve g(parse_curve("1, 0, 0"), Interval{0.0, 1.0});
    CHECK(error_of([&] { (void)RuledSurface("x", a, g, {-1, 1}); }) == ErrorCode::DefinitionError);
    CHECK(error_of([&] { (void)RuledSurface("x", a, a, {1, -1}); }) == ErrorCode::DefinitionError);
    CHECK(parse_surface_class("m2") == kM2);
    CHECK_FALSE(parse_surface_class("M4"));
}

TEST_CASE("partials of helicoid-2 at u = 0") {
    const RuledSurface s = get_surface("helicoid-2").surface;
    const SurfacePartials p = partials(s, 0.0, 0.5);
    CHECK(dist(p.phi_u, LVec3{0, 1, -0.5}) < 1e-15);
    CHECK(dist(p.phi_v, LVec3{-1, 0, 0}) < 1e-15);
    CHECK(dist(p.phi_uv, LVec3{0, 0, -1}) < 1e-15);
    CHECK(p.phi_vv == LVec3{});
    CHECK(dist(evaluate(s, 0.3, 0.5), LVec3{-0.5 * std::cosh(0.3), 0.3, -0.5 * std::sinh(0.3)}) < 1e-15);
    CHECK(error_of([&] { (void)evaluate(s, 0.0, 1.5); }) == ErrorCode::OutOfDomain);
}

TEST_CASE("catalog classes and normals") {
    CHECK(classify(get_surface("helicoid-1").surface, 0.2, 0.3) == kM3);
    CHECK(classify(get_surface("helicoid-2").surface, 0.2, 0.3) == kM1);
    CHECK(classify(get_surface("helicoid-3").surface, 0.2, 2.5) == kM2);
    CHECK(unit_normal(get_surface("helicoid-2").surface, 0.1, 0.2).character == CausalCharacter::Timelike);
    CHECK(unit_normal(get_surface("helicoid-1").surface, 0.1, 0.2).character == CausalCharacter::Spacelike);
    CHECK(unit_normal(get_surface("helicoid-3").surface, 0.1, 0.2).character == CausalCharacter::Spacelike);
}

TEST_CASE("catalog classification is consistent on the declared grids") {
    for (const std::string& name : catalog_names()) {
        const CatalogEntry entry = get_surface(name);
        const RuledSurface& s = entry.surface;
        for (int i = 0; i < 21; ++i) {
            for (int j = 0; j < 17; ++j) {
                const double u = s.u_range().sample(i, 21), v = s.v_range().sample(j, 17);
                SurfaceClass cls{};
                const auto code = error_of([&] { cls = classify(s, u, v); });
                // the ends of the declared M1/M3 rulings sit on the light cone
                if (!code) {
                    CHECK(cls == entry.surface_class);
                } else {
                    CHECK(*code == ErrorCode::DegenerateNormal);
                    CHECK(std::abs(std::abs(v) - 1.0) < 1e-12);
                }
            }
        }
    }
}

TEST_CASE("unsupported and null configurations") {
    CHECK(error_of([] { (void)causal_class(surface("0, 0, u", "sinh(u), 0, cosh(u)"), 0.1); }) ==
          ErrorCode::UnsupportedClass);
    CHECK(error_of([] { (void)causal_class(surface("0, u, 0", "cos(u), sin(u), 1"), 0.1); }) == ErrorCode::NullInput);
    CHECK(error_of([] { (void)causal_class(surface("u, 0, u", "cos(u), sin(u), 0"), 0.1); }) == ErrorCode::NullInput);
}

TEST_CASE("zero and null normals are distinct") {
    // a cone: phi_u vanishes at the vertex
    CHECK(error_of([] { (void)unit_normal(surface("0, 0, 0", "cos(u), sin(u), 0.5"), 0.3, 0.0); }) ==
          ErrorCode::ZeroNormal);
    CHECK(error_of([] { (void)unit_normal(get_surface("helicoid-2").surface, 0.3, 1.0); }) ==
          ErrorCode::DegenerateNormal);
}

TEST_CASE("normal orthogonality on random surfaces") {
    for (SurfaceClass cls : {kM1, kM2, kM3}) {
        for (std::uint64_t seed = 0; seed < 6; ++seed) {
            const RuledSurface s = random_surface(cls, seed);
            for (int i = 0; i < 7; ++i) {
                for (int j = 0; j < 5; ++j) {
                    const double u = s.u_range().sample(i, 7), v = s.v_range().sample(j, 5);
                    const SurfacePartials p = partials(s, u, v);
                    const LVec3 eta = unit_normal(s, u, v).eta;
                    CHECK(std::abs(metric(eta, p.phi_u)) <= 1e-9 * std::max(1.0, euclidean_norm(p.phi_u)));
                    CHECK(std::abs(metric(eta, p.phi_v)) <= 1e-9 * std::max(1.0, euclidean_norm(p.phi_v)));
                    CHECK(std::abs(std::abs(metric(eta, eta)) - 1.0) < 1e-12);
                }
            }
        }
    }
}

TEST_CASE("catalog bases are their own striction curves") {
    for (const std::string& name : catalog_names()) {
        const RuledSurface s = get_surface(name).surface;
        for (int k = 0; k < 21; ++k) {
            const double u = s.u_range().sample(k, 21);
            CHECK(dist(striction_point(s, u), eval_point(s.base(), u)) < 1e-10);
            CHECK(striction_coordinate(s, u, 0.4) == doctest::Approx(0.4));
        }
    }
}

TEST_CASE("striction point removes an offset along the ruling") {
    const RuledSurface s =
        surface("(0.3 + 0.2*u)*(-cosh(u)), u, (0.3 + 0.2*u)*(-sinh(u))", "-cosh(u), 0, -sinh(u)", {-2, 2});
    for (double u : {-0.8, 0.0, 0.5}) {
        CHECK(dist(striction_point(s, u), LVec3{0, u, 0}) < 1e-12);
        const StrictionSample st = striction_sample(s, u);
        CHECK(st.offset == doctest::Approx(0.3 + 0.2 * u));
        CHECK(dist(st.beta_prime, LVec3{0, 1, 0}) < 1e-12);
        CHECK(distribution_parameter(s, u) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(striction_coordinate(s, u, 0.1) == doctest::Approx(0.4 + 0.2 * u));
    }
}

TEST_CASE("a non-unit director leaves the drall unchanged") {
    const RuledSurface s = surface("0, u, 0", "-2*cosh(u), 0, -2*sinh(u)", {-0.45, 0.45});
    CHECK(distribution_parameter(s, 0.3) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(striction_coordinate(s, 0.3, 0.25) == doctest::Approx(0.5));
    const Interval vr = valid_v_range(s.with_v_range({-5, 5}), kM1);
    CHECK(vr.hi == doctest::Approx(0.49));
}

TEST_CASE("catalog drall fixtures") {
    for (const std::string& name : catalog_names()) {
        const RuledSurface s = get_surface(name).surface;
        for (int k = 0; k < 50; ++k) {
            CHECK(std::abs(distribution_parameter(s, s.u_range().sample(k, 50)) - 1.0) <= 1e-10);
        }
    }
}

TEST_CASE("drall vanishes when the striction tangent lies along the ruling") {
    const RuledSurface s = surface("sinh(u), 0, cosh(u)", "cosh(u), 0, sinh(u)");
    for (double u : {-0.5, 0.0, 0.9}) CHECK(std::abs(distribution_parameter(s, u)) < 1e-14);
}

TEST_CASE("striction form of catalog and random surfaces") {
    for (const std::string& name : catalog_names()) {
        const StrictionForm f = to_striction_form(get_surface(name).surface, 50);
        CHECK(f.max_orthogonality_residual() <= 1e-8);
        CHECK(f.unit_speed());
    }
    for (SurfaceClass cls : {kM1, kM2, kM3}) {
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            const StrictionForm f = to_striction_form(random_surface(cls, seed), 50);
            CHECK(f.max_orthogonality_residual() <= 1e-8);
            CHECK(f.unit_speed() == (seed % 4 != 3));
        }
    }
    CHECK(error_of([] { (void)to_striction_form(surface("0, u, 0", "1, 0, 0"), 10); }) ==
          ErrorCode::CylindricalSurface);
}

TEST_CASE("drall from the striction angle matches on unit-speed striction curves") {
    for (SurfaceClass cls : {kM1, kM2, kM3}) {
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            if (seed % 4 == 3) continue;
            const RuledSurface s = random_surface(cls, seed);
            const StrictionForm form(s, {});
            for (int k = 0; k < 11; ++k) {
                const double u = s.u_range().sample(k, 11);
                const DirectorFrame f = director_frame(s.director(), u);
                const StrictionAngle a = striction_angle(form, f, u);
                INFO(to_string(cls) << " seed " << seed << " u " << u);
                CHECK(a.unit_speed);
                CHECK(std::abs(drall_from_striction_angle(cls, a, f.kappa) - distribution_parameter(s, u)) <= 1e-8);
            }
        }
    }
}

TEST_CASE("catalog striction angles") {
    // beta' = xi for every helicoid, so sigma = pi/2 on M1 and 0 otherwise
    const RuledSurface h2 = get_surface("helicoid-2").surface;
    CHECK(StrictionForm(h2, {}).sigma(0.3) == doctest::Approx(std::acos(0.0)));
    const RuledSurface h1 = get_surface("helicoid-1").surface;
    CHECK(std::abs(StrictionForm(h1, {}).sigma(0.3)) < 1e-12);
}

TEST_CASE("valid v-range clamps M1 and M3 only") {
    const Interval h2 = valid_v_range(get_surface("helicoid-2").surface, kM1);
    CHECK(h2.lo == doctest::Approx(-0.98));
    CHECK(h2.hi == doctest::Approx(0.98));
    const Interval h3 = valid_v_range(get_surface("helicoid-3").surface, kM2);
    CHECK(h3 == Interval{-3.0, 3.0});
    CHECK(error_of([] { (void)valid_v_range(get_surface("helicoid-1").surface.with_v_range({2, 3}), kM3); }) ==
          ErrorCode::OutsideDomain);
}

TEST_CASE("noncylindrical test") {
    CHECK(is_noncylindrical(get_surface("helicoid-1").surface, 0.0));
    CHECK_FALSE(is_noncylindrical(surface("0, u, 0", "1, 0, 0"), 0.0));
}

}
