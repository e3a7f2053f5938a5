#include "lamarle/ruled_surface.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "lamarle/error.hpp"

namespace lamarle {

namespace {

std::string at(double u) { return " at u = " + std::to_string(u); }
std::string at(double u, double v) { return " at (u, v) = (" + std::to_string(u) + ", " + std::to_string(v) + ")"; }

void require_v(const RuledSurface& surface, double v) {
    if (!surface.v_range().contains(v)) {
        throw Error(ErrorCode::OutOfDomain, "v = " + std::to_string(v) + " outside surface v-range [" +
                                                std::to_string(surface.v_range().lo) + ", " +
                                                std::to_string(surface.v_range().hi) + "]");
    }
}

}  // namespace

std::string_view to_string(SurfaceClass c) noexcept {
    switch (c) {
        case SurfaceClass::M1_Spacelike: return "M1";
        case SurfaceClass::M2_TimelikeSpacelikeBaseTimelikeRuling: return "M2";
        case SurfaceClass::M3_TimelikeTimelikeBaseSpacelikeRuling: return "M3";
    }
    return "unknown";
}

std::optional<SurfaceClass> parse_surface_class(std::string_view text) noexcept {
    if (text == "m1" || text == "M1") return SurfaceClass::M1_Spacelike;
    if (text == "m2" || text == "M2") return SurfaceClass::M2_TimelikeSpacelikeBaseTimelikeRuling;
    if (text == "m3" || text == "M3") return SurfaceClass::M3_TimelikeTimelikeBaseSpacelikeRuling;
    return std::nullopt;
}

RuledSurface::RuledSurface(std::string name, ParamCurve base, ParamCurve director, Interval v_range)
    : name_(std::move(name)), base_(std::move(base)), director_(std::move(director)), v_range_(v_range) {
    if (!(base_.domain() == director_.domain())) {
        throw Error(ErrorCode::DefinitionError, "base and director must share the same u-range");
    }
    if (!(v_range_.lo < v_range_.hi) || !std::isfinite(v_range_.lo) || !std::isfinite(v_range_.hi)) {
        throw Error(ErrorCode::DefinitionError, "v-range must satisfy lo < hi");
    }
}

RuledSurface RuledSurface::with_v_range(Interval v_range) const {
    return RuledSurface(name_, base_, director_, v_range);
}

LVec3 evaluate(const RuledSurface& surface, double u, double v) {
    require_v(surface, v);
    return eval_point(surface.base(), u) + v * eval_point(surface.director(), u);
}

SurfacePartials partials(const RuledSurface& surface, double u, double v) {
    require_v(surface, v);
    const CurveJet a = derivatives(surface.base(), u);
    const CurveJet g = derivatives(surface.director(), u);
    return {a.d1 + v * g.d1, g.point, a.d2 + v * g.d2, g.d1, LVec3{}};
}

bool is_noncylindrical(const RuledSurface& surface, double u, double eps) {
    const CurveJet g = derivatives(surface.director(), u);
    return euclidean_norm(lorentz_cross(g.point, g.d1)) > eps;
}

StrictionSample striction_sample(const RuledSurface& surface, double u, double eps) {
    const CurveJet a = derivatives(surface.base(), u);
    const UnitDirectorJet ue = unit_director(surface.director(), u, eps);
    const CurveJet& e = ue.e;

    const double gee = metric(e.d1, e.d1);
    if (std::abs(gee) <= eps * std::max(1.0, euclidean_dot(e.d1, e.d1))) {
        throw Error(ErrorCode::NullDirectorDerivative, "director derivative is null" + at(u));
    }
    const double gae = metric(a.d1, e.d1);
    const double offset = gae / gee;
    const double offset_prime =
        ((metric(a.d2, e.d1) + metric(a.d1, e.d2)) * gee - gae * 2.0 * metric(e.d1, e.d2)) / (gee * gee);

    return {u,
            a.point - offset * e.point,
            a.d1 - offset_prime * e.point - offset * e.d1,
            e,
            offset,
            ue.raw_norm};
}

LVec3 striction_point(const RuledSurface& surface, double u, double eps) {
    return striction_sample(surface, u, eps).beta;
}

double striction_coordinate(const RuledSurface& surface, double u, double v) {
    const StrictionSample s = striction_sample(surface, u);
    return s.offset + v * s.director_norm;
}

StrictionForm::StrictionForm(RuledSurface surface, std::vector<StrictionSample> samples)
    : surface_(std::move(surface)), samples_(std::move(samples)) {}

LVec3 StrictionForm::beta(double u) const { return striction_sample(surface_, u).beta; }
LVec3 StrictionForm::beta_prime(double u) const { return striction_sample(surface_, u).beta_prime; }
LVec3 StrictionForm::unit_director(double u) const { return striction_sample(surface_, u).e.point; }

double StrictionForm::sigma(double u) const {
    return striction_angle(*this, director_frame(surface_.director(), u), u).sigma;
}

double StrictionForm::max_orthogonality_residual() const {
    double worst = 0.0;
    for (std::size_t k = 1; k + 1 < samples_.size(); ++k) {
        const StrictionSample& s = samples_[k];
        const double scale = std::max(1.0, euclidean_norm(s.beta_prime) * euclidean_norm(s.e.d1));
        worst = std::max(worst, std::abs(metric(s.beta_prime, s.e.d1)) / scale);
    }
    return worst;
}

bool StrictionForm::unit_speed() const {
    return std::all_of(samples_.begin(), samples_.end(), [](const StrictionSample& s) {
        return std::abs(norm(s.beta_prime) - 1.0) <= kUnitSpeedTolerance;
    });
}

StrictionForm to_striction_form(const RuledSurface& surface, int samples) {
    samples = std::max(samples, 2);
    std::vector<StrictionSample> out;
    out.reserve(static_cast<std::size_t>(samples));
    for (int k = 0; k < samples; ++k) {
        const double u = surface.u_range().sample(k, samples);
        if (!is_noncylindrical(surface, u)) {
            throw Error(ErrorCode::CylindricalSurface, "director stops turning" + at(u));
        }
        out.push_back(striction_sample(surface, u));
    }
    return StrictionForm(surface, std::move(out));
}

StrictionAngle striction_angle(const StrictionForm& form, const DirectorFrame& frame, double u) {
    const LVec3 bp = form.beta_prime(u);
    const double speed = norm(bp);
    const double ce = metric(bp, frame.e) / metric(frame.e, frame.e);
    const double cn = metric(bp, frame.n) / metric(frame.n, frame.n);
    const double cx = metric(bp, frame.xi) / metric(frame.xi, frame.xi);

    if (std::abs(cn) > 1e-6 * std::max(1.0, speed)) {
        throw Error(ErrorCode::OutOfPlane, "striction tangent leaves the {e, xi} plane" + at(u));
    }
    const bool unit = std::abs(speed - 1.0) <= kUnitSpeedTolerance;

    if (frame.frame_type == FrameType::SpaceTimeSpace) {
        return {std::atan2(cx, ce), speed, unit, 1.0};
    }
    if (!(std::abs(cx) > std::abs(ce))) {
        throw Error(ErrorCode::OutOfPlane,
                    "striction tangent has the wrong causal character for a hyperbolic angle" + at(u));
    }
    return {std::atanh(ce / cx), speed, unit, cx > 0.0 ? 1.0 : -1.0};
}

double drall_from_striction_angle(SurfaceClass cls, const StrictionAngle& angle, double kappa) {
    switch (cls) {
        case SurfaceClass::M1_Spacelike: return std::sin(angle.sigma) / kappa;
        case SurfaceClass::M2_TimelikeSpacelikeBaseTimelikeRuling:
            return -angle.orientation * std::cosh(angle.sigma) / kappa;
        case SurfaceClass::M3_TimelikeTimelikeBaseSpacelikeRuling:
            return angle.orientation * std::cosh(angle.sigma) / kappa;
    }
    return std::numeric_limits<double>::quiet_NaN();
}

UnitNormal unit_normal(const RuledSurface& surface, double u, double v) {
    const SurfacePartials p = partials(surface, u, v);
    const LVec3 w = lorentz_cross(p.phi_u, p.phi_v);
    const double scale = std::max(1.0, euclidean_norm(p.phi_u) * euclidean_norm(p.phi_v));
    const double euclid = euclidean_norm(w);
    if (euclid <= 1e-12 * scale) {
        throw Error(ErrorCode::ZeroNormal, "phi_u ^ phi_v vanishes" + at(u, v));
    }
    const double gww = metric(w, w);
    if (std::abs(gww) <= kDegenerateNormalEpsilon * scale * scale) {
        throw Error(ErrorCode::DegenerateNormal, "surface normal is null" + at(u, v));
    }
    return {w / std::sqrt(std::abs(gww)), gww > 0.0 ? CausalCharacter::Spacelike : CausalCharacter::Timelike};
}

SurfaceClass causal_class(const RuledSurface& surface, double u, double eps) {
    const CausalCharacter base = causal_character(derivatives(surface.base(), u).d1, eps);
    const CausalCharacter ruling = causal_character(eval_point(surface.director(), u), eps);
    using CC = CausalCharacter;
    if (base == CC::Null || ruling == CC::Null) {
        throw Error(ErrorCode::NullInput, "null base tangent or ruling" + at(u));
    }
    if (base == CC::Timelike && ruling == CC::Timelike) {
        throw Error(ErrorCode::UnsupportedClass, "timelike base curve with timelike ruling" + at(u));
    }
    if (base == CC::Timelike) return SurfaceClass::M3_TimelikeTimelikeBaseSpacelikeRuling;
    return ruling == CC::Spacelike ? SurfaceClass::M1_Spacelike : SurfaceClass::M2_TimelikeSpacelikeBaseTimelikeRuling;
}

SurfaceClass classify(const RuledSurface& surface, double u, double v, double eps) {
    using CC = CausalCharacter;
    const SurfaceClass cls = causal_class(surface, u, eps);

    const SurfacePartials p = partials(surface, u, v);
    const double gram = metric(p.phi_u, p.phi_u) * metric(p.phi_v, p.phi_v) - std::pow(metric(p.phi_u, p.phi_v), 2);
    const UnitNormal normal = unit_normal(surface, u, v);
    const bool spacelike_surface = cls == SurfaceClass::M1_Spacelike;
    const bool consistent = spacelike_surface
                                ? (gram > 0.0 && normal.character == CC::Timelike)
                                : (gram < 0.0 && normal.character == CC::Spacelike);
    if (!consistent) {
        throw Error(ErrorCode::InconsistentClassification,
                    std::string("class ") + std::string(to_string(cls)) + " disagrees with EG - F^2 = " +
                        std::to_string(gram) + " and a " + std::string(to_string(normal.character)) +
                        " normal" + at(u, v));
    }
    return cls;
}

double distribution_parameter(const RuledSurface& surface, double u, double eps) {
    const StrictionSample s = striction_sample(surface, u, eps);
    return det3(s.beta_prime, s.e.point, s.e.d1) / metric(s.e.d1, s.e.d1);
}

Interval valid_v_range(const RuledSurface& surface, SurfaceClass cls, int u_samples) {
    if (cls == SurfaceClass::M2_TimelikeSpacelikeBaseTimelikeRuling) {
        return surface.v_range();
    }
    double lo = surface.v_range().lo;
    double hi = surface.v_range().hi;
    u_samples = std::max(u_samples, 2);
    for (int k = 0; k < u_samples; ++k) {
        const double u = surface.u_range().sample(k, u_samples);
        const StrictionSample s = striction_sample(surface, u);
        const double p = std::abs(det3(s.beta_prime, s.e.point, s.e.d1) / metric(s.e.d1, s.e.d1));
        const double bound = (1.0 - kVRangeMargin) * p;
        lo = std::max(lo, (-bound - s.offset) / s.director_norm);
        hi = std::min(hi, (bound - s.offset) / s.director_norm);
    }
    if (!(lo < hi)) {
        throw Error(ErrorCode::OutsideDomain, "no v-interval satisfies |v| < |P| on surface '" + surface.name() + "'");
    }
    return {lo, hi};
}

}  // namespace lamarle
