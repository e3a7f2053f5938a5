#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lamarle/curves.hpp"
#include "lamarle/lorentz.hpp"

namespace lamarle {

/// The three causal classes of non-cylindrical ruled surfaces with non-null
/// base curve and ruling.
enum class SurfaceClass {
    M1_Spacelike,                            // spacelike base, spacelike ruling
    M2_TimelikeSpacelikeBaseTimelikeRuling,  // spacelike base, timelike ruling
    M3_TimelikeTimelikeBaseSpacelikeRuling,  // timelike base, spacelike ruling
};

/// "M1", "M2" or "M3".
std::string_view to_string(SurfaceClass c) noexcept;

/// Accepts "m1"/"M1" etc.
std::optional<SurfaceClass> parse_surface_class(std::string_view text) noexcept;

/// phi(u, v) = base(u) + v * director(u). Both curves share the u-range.
class RuledSurface {
public:
    /// Throws DefinitionError when the curve domains differ or v_range is empty.
    RuledSurface(std::string name, ParamCurve base, ParamCurve director, Interval v_range);

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] const ParamCurve& base() const noexcept { return base_; }
    [[nodiscard]] const ParamCurve& director() const noexcept { return director_; }
    [[nodiscard]] const Interval& u_range() const noexcept { return base_.domain(); }
    [[nodiscard]] const Interval& v_range() const noexcept { return v_range_; }

    [[nodiscard]] RuledSurface with_v_range(Interval v_range) const;

private:
    std::string name_;
    ParamCurve base_;
    ParamCurve director_;
    Interval v_range_;
};

/// Throws OutOfDomain for u or v outside the surface ranges.
[[nodiscard]] LVec3 evaluate(const RuledSurface& surface, double u, double v);

struct SurfacePartials {
    LVec3 phi_u;
    LVec3 phi_v;
    LVec3 phi_uu;
    LVec3 phi_uv;
    LVec3 phi_vv;
};

/// Exact partials assembled from the curve jets:
/// phi_u = a' + v g', phi_v = g, phi_uu = a'' + v g'', phi_uv = g', phi_vv = 0.
[[nodiscard]] SurfacePartials partials(const RuledSurface& surface, double u, double v);

/// True iff the Euclidean length of director ^ director' exceeds eps.
[[nodiscard]] bool is_noncylindrical(const RuledSurface& surface, double u, double eps = 1e-9);

/// Striction data at one parameter value. The director is normalized first,
/// so base = beta + offset * e with offset = g(a', e') / g(e', e').
struct StrictionSample {
    double u;
    LVec3 beta;
    LVec3 beta_prime;  // exact: a' - offset' e - offset e'
    CurveJet e;        // unit director with derivatives
    double offset;
    double director_norm;  // Lorentzian length of the raw director
};

/// Throws NullDirectorDerivative when e' is null at u.
[[nodiscard]] StrictionSample striction_sample(const RuledSurface& surface, double u,
                                               double eps = kCausalEpsilon);

/// beta(u) = a(u) - [g(a', e') / g(e', e')] e(u).
[[nodiscard]] LVec3 striction_point(const RuledSurface& surface, double u, double eps = kCausalEpsilon);

/// The striction coordinate of surface parameter v: phi(u, v) = beta(u) + s e(u).
[[nodiscard]] double striction_coordinate(const RuledSurface& surface, double u, double v);

/// Surface reparametrized about its striction curve, beta(u) + s e(u), with
/// the striction curve sampled on a uniform u-grid.
class StrictionForm {
public:
    StrictionForm(RuledSurface surface, std::vector<StrictionSample> samples);

    [[nodiscard]] const RuledSurface& surface() const noexcept { return surface_; }
    [[nodiscard]] const std::vector<StrictionSample>& samples() const noexcept { return samples_; }

    [[nodiscard]] LVec3 beta(double u) const;
    [[nodiscard]] LVec3 beta_prime(double u) const;
    [[nodiscard]] LVec3 unit_director(double u) const;
    /// Striction angle at u (see striction_angle).
    [[nodiscard]] double sigma(double u) const;

    /// max |g(beta', e')| over interior samples, scaled by max(1, |beta'|_E |e'|_E).
    [[nodiscard]] double max_orthogonality_residual() const;
    /// True when every sample has |beta'| = 1 to 1e-8.
    [[nodiscard]] bool unit_speed() const;

private:
    RuledSurface surface_;
    std::vector<StrictionSample> samples_;
};

/// Throws CylindricalSurface when the director stops turning at any sample.
[[nodiscard]] StrictionForm to_striction_form(const RuledSurface& surface, int samples);

inline constexpr double kUnitSpeedTolerance = 1e-8;

/// Decomposition of beta' in the {e, xi} plane.
///   space-time-space frame: beta' = |beta'| (cos s e + sin s xi)
///   otherwise:              beta' = o |beta'| (sinh s e + cosh s xi), o = +-1
struct StrictionAngle {
    double sigma;
    double speed;        // Lorentzian length of beta'
    bool unit_speed;     // |speed - 1| <= kUnitSpeedTolerance
    double orientation;  // o above; +1 for the circular case
};

/// Throws OutOfPlane when beta' has an n-component above 1e-6 or does not
/// have the causal character its plane requires.
[[nodiscard]] StrictionAngle striction_angle(const StrictionForm& form, const DirectorFrame& frame, double u);

/// Drall reconstructed from the striction angle and curvature:
/// M1: sin s / kappa, M2: -o cosh s / kappa, M3: o cosh s / kappa.
/// Matches distribution_parameter whenever the striction curve is unit-speed.
[[nodiscard]] double drall_from_striction_angle(SurfaceClass cls, const StrictionAngle& angle, double kappa);

struct UnitNormal {
    LVec3 eta;
    CausalCharacter character;
};

inline constexpr double kDegenerateNormalEpsilon = 1e-8;

/// (phi_u ^ phi_v) / |phi_u ^ phi_v|. Throws ZeroNormal when the cross
/// product vanishes (|w|_E <= 1e-12 scale), DegenerateNormal when it is null
/// (|g(w, w)| <= 1e-8 scale^2), with scale = max(1, |phi_u|_E |phi_v|_E).
[[nodiscard]] UnitNormal unit_normal(const RuledSurface& surface, double u, double v);

/// Class from the base tangent and ruling characters at u alone. Throws
/// NullInput or UnsupportedClass.
[[nodiscard]] SurfaceClass causal_class(const RuledSurface& surface, double u, double eps = kCausalEpsilon);

/// Class from the causal characters of the base tangent and the ruling,
/// cross-checked against the sign of EG - F^2 and the normal's character.
/// Throws NullInput, UnsupportedClass (timelike base and ruling) or
/// InconsistentClassification.
[[nodiscard]] SurfaceClass classify(const RuledSurface& surface, double u, double v,
                                    double eps = kCausalEpsilon);

/// P = det(beta', e, e') / g(e', e') with the unit director e.
[[nodiscard]] double distribution_parameter(const RuledSurface& surface, double u, double eps = kCausalEpsilon);

inline constexpr double kVRangeMargin = 0.02;

/// For M1 and M3, the largest v-interval inside the surface's v_range on which
/// |s| <= (1 - margin) |P| for every sampled u (s the striction coordinate).
/// M2 surfaces are returned unchanged. Throws OutsideDomain when empty.
[[nodiscard]] Interval valid_v_range(const RuledSurface& surface, SurfaceClass cls, int u_samples = 101);

}  // namespace lamarle
