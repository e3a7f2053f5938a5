#include "lamarle/curves.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lamarle/error.hpp"

namespace lamarle {

namespace {

// Relative slack for domain endpoints produced by floating-point sampling.
constexpr double kDomainSlack = 1e-12;
constexpr double kUnitTolerance = 1e-9;

void require_in_domain(const ParamCurve& curve, double u) {
    if (!curve.domain().contains(u)) {
        throw Error(ErrorCode::OutOfDomain, "u = " + std::to_string(u) + " outside curve domain [" +
                                                std::to_string(curve.domain().lo) + ", " +
                                                std::to_string(curve.domain().hi) + "]");
    }
}

}  // namespace

bool Interval::contains(double t) const {
    const double slack = kDomainSlack * std::max({1.0, std::abs(lo), std::abs(hi)});
    return t >= lo - slack && t <= hi + slack;
}

double Interval::sample(int k, int n) const {
    if (n <= 1) return midpoint();
    if (k == n - 1) return hi;
    return lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1);
}

ParamCurve::ParamCurve(CurveSpec spec, Interval domain) : spec_(std::move(spec)), domain_(domain) {
    if (!(domain_.lo < domain_.hi) || !std::isfinite(domain_.lo) || !std::isfinite(domain_.hi)) {
        throw Error(ErrorCode::DefinitionError, "curve domain must satisfy lo < hi");
    }
    for (const Expr& c : spec_.components) {
        if (c.empty()) {
            throw Error(ErrorCode::DefinitionError, "curve has an empty component");
        }
    }
    (void)eval_point(*this, domain_.midpoint());
}

LVec3 eval_point(const ParamCurve& curve, double u) {
    require_in_domain(curve, u);
    const auto& c = curve.spec().components;
    return {eval(c[0], u), eval(c[1], u), eval(c[2], u)};
}

DualVec3 eval_dual(const ParamCurve& curve, double u) {
    require_in_domain(curve, u);
    const auto& c = curve.spec().components;
    return {eval_dual2(c[0], u), eval_dual2(c[1], u), eval_dual2(c[2], u)};
}

CurveJet derivatives(const ParamCurve& curve, double u) { return to_jet(eval_dual(curve, u)); }

CausalCharacter causal_character_at(const ParamCurve& curve, double u, double eps) {
    return causal_character(derivatives(curve, u).d1, eps);
}

UnitDirectorJet unit_director(const ParamCurve& director, double u, double eps) {
    const DualVec3 raw = eval_dual(director, u);
    const LVec3 value = values(raw);
    const CausalCharacter character = causal_character(value, eps);
    if (character == CausalCharacter::Null || euclidean_dot(value, value) == 0.0) {
        throw Error(ErrorCode::NullInput, "director is null or zero at u = " + std::to_string(u));
    }
    const Dual2 length = sqrt(abs(metric(raw, raw)));
    const DualVec3 unit = raw / length;
    return {to_jet(unit), length.value, std::abs(length.value - 1.0) > kUnitTolerance, character};
}

std::string_view to_string(FrameType t) noexcept {
    switch (t) {
        case FrameType::SpaceTimeSpace: return "space_time_space";
        case FrameType::TimeSpaceSpace: return "time_space_space";
        case FrameType::SpaceSpaceTime: return "space_space_time";
    }
    return "unknown";
}

namespace {

struct FrameCore {
    LVec3 w;        // e ^ e'
    LVec3 w_prime;  // e ^ e''
    double w_norm;
};

FrameCore frame_core(const CurveJet& e, double u) {
    const LVec3 w = lorentz_cross(e.point, e.d1);
    const double scale = std::max(1.0, euclidean_norm(e.point) * euclidean_norm(e.d1));
    if (euclidean_norm(w) <= 1e-9 * scale) {
        throw Error(ErrorCode::CylindricalDirector,
                    "e ^ e' vanishes at u = " + std::to_string(u) + " (cylindrical director)");
    }
    return {w, lorentz_cross(e.point, e.d2), norm(w)};
}

// d/du (w / |w|) with w' = e ^ e'' (the e' ^ e' term vanishes).
LVec3 unit_derivative(const FrameCore& core) {
    const double sign = metric(core.w, core.w) > 0.0 ? 1.0 : -1.0;
    const double dnorm = sign * metric(core.w, core.w_prime) / core.w_norm;
    return core.w_prime / core.w_norm - core.w * (dnorm / (core.w_norm * core.w_norm));
}

}  // namespace

LVec3 binormal_derivative(const ParamCurve& director, double u) {
    const UnitDirectorJet ue = unit_director(director, u);
    const FrameCore core = frame_core(ue.e, u);
    if (core.w_norm == 0.0) {
        throw Error(ErrorCode::NullTangent, "e ^ e' is null at u = " + std::to_string(u));
    }
    return unit_derivative(core);
}

DirectorFrame director_frame(const ParamCurve& director, double u, double eps) {
    const UnitDirectorJet ue = unit_director(director, u, eps);
    const CurveJet& e = ue.e;
    const FrameCore core = frame_core(e, u);

    const CausalCharacter tangent_character = causal_character(e.d1, eps);
    if (tangent_character == CausalCharacter::Null) {
        throw Error(ErrorCode::NullTangent, "director derivative e' is null at u = " + std::to_string(u));
    }
    if (causal_character(core.w, eps) == CausalCharacter::Null) {
        throw Error(ErrorCode::NullTangent, "e ^ e' is null at u = " + std::to_string(u));
    }

    const double kappa = norm(e.d1);
    const LVec3 n = e.d1 / kappa;
    const LVec3 xi = core.w / core.w_norm;

    const CausalCharacter ce = ue.character;
    const CausalCharacter cn = tangent_character;
    const CausalCharacter cx = causal_character(xi, eps);
    FrameType type{};
    using CC = CausalCharacter;
    if (ce == CC::Spacelike && cn == CC::Timelike && cx == CC::Spacelike) {
        type = FrameType::SpaceTimeSpace;
    } else if (ce == CC::Timelike && cn == CC::Spacelike && cx == CC::Spacelike) {
        type = FrameType::TimeSpaceSpace;
    } else if (ce == CC::Spacelike && cn == CC::Spacelike && cx == CC::Timelike) {
        type = FrameType::SpaceSpaceTime;
    } else {
        throw Error(ErrorCode::NullTangent, "frame at u = " + std::to_string(u) +
                                                " has no supported causal type (" +
                                                std::string(to_string(ce)) + ", " + std::string(to_string(cn)) +
                                                ", " + std::string(to_string(cx)) + ")");
    }

    const LVec3 xi_prime = unit_derivative(core);
    const double tau = metric(xi_prime, n) / metric(n, n);

    return {e.point, n, xi, kappa, tau, type, ue.renormalized};
}

}  // namespace lamarle
