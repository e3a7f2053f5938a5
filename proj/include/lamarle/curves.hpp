#pragma once

#include <string_view>

#include "lamarle/dual.hpp"
#include "lamarle/expr.hpp"
#include "lamarle/lorentz.hpp"

namespace lamarle {

/// Closed parameter interval [lo, hi].
struct Interval {
    double lo = 0.0;
    double hi = 1.0;

    [[nodiscard]] bool contains(double t) const;
    [[nodiscard]] double width() const { return hi - lo; }
    [[nodiscard]] double midpoint() const { return 0.5 * (lo + hi); }
    /// k-th of n equally spaced samples, endpoints included (n >= 2).
    [[nodiscard]] double sample(int k, int n) const;

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// A curve u -> (x1(u), x2(u), x3(u)) over a closed domain.
class ParamCurve {
public:
    /// Throws DefinitionError for an empty domain, DomainError when the curve
    /// cannot be evaluated at the domain midpoint.
    ParamCurve(CurveSpec spec, Interval domain);

    [[nodiscard]] const CurveSpec& spec() const noexcept { return spec_; }
    [[nodiscard]] const Interval& domain() const noexcept { return domain_; }

private:
    CurveSpec spec_;
    Interval domain_;
};

/// Point together with its first two derivatives.
struct CurveJet {
    LVec3 point;
    LVec3 d1;
    LVec3 d2;
};

using DualVec3 = BasicVec3<Dual2>;

[[nodiscard]] inline LVec3 values(const DualVec3& v) { return {v.x1.value, v.x2.value, v.x3.value}; }
[[nodiscard]] inline LVec3 first_derivatives(const DualVec3& v) { return {v.x1.d1, v.x2.d1, v.x3.d1}; }
[[nodiscard]] inline LVec3 second_derivatives(const DualVec3& v) { return {v.x1.d2, v.x2.d2, v.x3.d2}; }
[[nodiscard]] inline CurveJet to_jet(const DualVec3& v) {
    return {values(v), first_derivatives(v), second_derivatives(v)};
}

/// Throws OutOfDomain, or DomainError from expression evaluation.
[[nodiscard]] LVec3 eval_point(const ParamCurve& curve, double u);
[[nodiscard]] DualVec3 eval_dual(const ParamCurve& curve, double u);
[[nodiscard]] CurveJet derivatives(const ParamCurve& curve, double u);

/// Causal character of the velocity vector at u.
[[nodiscard]] CausalCharacter causal_character_at(const ParamCurve& curve, double u,
                                                  double eps = kCausalEpsilon);

/// The director normalized to unit Lorentzian length, with exact first and
/// second derivatives of the normalized curve.
struct UnitDirectorJet {
    CurveJet e;
    double raw_norm;    // Lorentzian length of the raw director at u
    bool renormalized;  // raw director was not unit to 1e-9
    CausalCharacter character;
};

/// Throws NullInput when the director is null or zero at u.
[[nodiscard]] UnitDirectorJet unit_director(const ParamCurve& director, double u,
                                            double eps = kCausalEpsilon);

/// Causal types of (e, n, xi) in order.
enum class FrameType { SpaceTimeSpace, TimeSpaceSpace, SpaceSpaceTime };

std::string_view to_string(FrameType t) noexcept;

/// Orthonormal frame {e, n, xi} along a director curve.
///
/// n = e'/|e'|, xi = (e ^ e')/|e ^ e'|, kappa = |e'| of the unit director.
/// Every frame type satisfies e' = kappa n and xi' = tau n, so the torsion is
/// read off as tau = g(xi', n) / g(n, n).
struct DirectorFrame {
    LVec3 e;
    LVec3 n;
    LVec3 xi;
    double kappa;
    double tau;
    FrameType frame_type;
    bool renormalized;  // NonUnitSpeedWarning: the raw director was rescaled
};

/// Throws NullTangent (e' null), CylindricalDirector (e ^ e' vanishes), or
/// NullInput (null director). Frames whose causal pattern is not one of the
/// three supported types raise NullTangent as well, since they can only arise
/// from a degenerate e'.
[[nodiscard]] DirectorFrame director_frame(const ParamCurve& director, double u,
                                           double eps = kCausalEpsilon);

/// xi' at u, exposed for Frenet-residual checks.
[[nodiscard]] LVec3 binormal_derivative(const ParamCurve& director, double u);

}  // namespace lamarle
