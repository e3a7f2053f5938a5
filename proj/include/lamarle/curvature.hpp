#pragma once

#include <string>
#include <vector>

#include "lamarle/ruled_surface.hpp"

namespace lamarle {

struct FirstFundamentalForm {
    double E;
    double F;
    double G;
};

/// L = <phi_uu, eta>, N = <phi_uv, eta> (mixed), M = <phi_vv, eta>.
struct SecondFundamentalForm {
    double L;
    double N;
    double M;
};

struct FundamentalForms {
    FirstFundamentalForm first;
    SecondFundamentalForm second;
};

[[nodiscard]] FirstFundamentalForm first_forms(const RuledSurface& surface, double u, double v);

/// Throws DegenerateNormal / ZeroNormal where the unit normal is undefined.
[[nodiscard]] SecondFundamentalForm second_forms(const RuledSurface& surface, double u, double v);

[[nodiscard]] FundamentalForms fundamental_forms(const RuledSurface& surface, double u, double v);

/// K = (L M - N^2) / (E G - F^2) with Lorentzian inner products throughout.
/// Throws DegenerateMetric when |EG - F^2| <= 1e-12 * scale.
[[nodiscard]] double gaussian_curvature(const FundamentalForms& forms);
[[nodiscard]] double gaussian_curvature_forms(const RuledSurface& surface, double u, double v);

/// Closed-form curvature along a ruling in striction coordinates:
///   M1: -P^2 / (P^2 - v^2)^2   (|v| < |P|)
///   M2:  P^2 / (P^2 + v^2)^2
///   M3:  P^2 / (P^2 - v^2)^2   (|v| < |P|)
/// Throws OutsideDomain or IndeterminateAtOrigin (P = v = 0).
[[nodiscard]] double lamarle_curvature(SurfaceClass cls, double P, double v);

struct LamarleReport {
    SurfaceClass surface_class;
    double u;
    double v;            // surface parameter
    double v_striction;  // the same point in striction coordinates
    double P;
    double K_forms;
    double K_lamarle;
    double abs_diff;
    double rel_diff;
    std::string status;  // "ok" or an error code name
    std::string message;

    [[nodiscard]] bool ok() const { return status == "ok"; }
};

/// Compares curvature from the fundamental forms with the closed form on an
/// nu x nv grid, u over the surface's u-range and v over its valid v-range
/// (clamped for M1/M3). Per-point failures are recorded, never thrown.
/// Reports are ordered by (u, v).
[[nodiscard]] std::vector<LamarleReport> verify_lamarle(const RuledSurface& surface, int nu, int nv);

struct VerifySummary {
    std::size_t points = 0;
    std::size_t ok_points = 0;
    double max_abs_diff = 0.0;
    double max_rel_diff = 0.0;
    double max_scaled_diff = 0.0;  // abs_diff / max(1, |K_forms|)
};

[[nodiscard]] VerifySummary summarize(const std::vector<LamarleReport>& reports);

/// At least one evaluable point, and every evaluable point within
/// tolerance * max(1, |K_forms|).
[[nodiscard]] bool within_tolerance(const VerifySummary& summary, double tolerance);

}  // namespace lamarle
