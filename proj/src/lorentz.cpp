#include "lamarle/lorentz.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lamarle/error.hpp"

namespace lamarle {

std::string_view error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NonFinite: return "non_finite";
        case ErrorCode::NotTimelike: return "not_timelike";
        case ErrorCode::NullInput: return "null_input";
        case ErrorCode::OppositeTimecones: return "opposite_timecones";
        case ErrorCode::DegenerateSpan: return "degenerate_span";
        case ErrorCode::LexError: return "lex_error";
        case ErrorCode::ParseError: return "parse_error";
        case ErrorCode::UnknownFunction: return "unknown_function";
        case ErrorCode::DomainError: return "domain_error";
        case ErrorCode::OutOfDomain: return "out_of_domain";
        case ErrorCode::NullTangent: return "null_tangent";
        case ErrorCode::CylindricalDirector: return "cylindrical_director";
        case ErrorCode::CylindricalSurface: return "cylindrical_surface";
        case ErrorCode::NullDirectorDerivative: return "null_director_derivative";
        case ErrorCode::OutOfPlane: return "out_of_plane";
        case ErrorCode::DegenerateNormal: return "degenerate_normal";
        case ErrorCode::ZeroNormal: return "zero_normal";
        case ErrorCode::DegenerateMetric: return "degenerate_metric";
        case ErrorCode::InconsistentClassification: return "inconsistent_classification";
        case ErrorCode::UnsupportedClass: return "unsupported_class";
        case ErrorCode::OutsideDomain: return "outside_domain";
        case ErrorCode::IndeterminateAtOrigin: return "indeterminate_at_origin";
        case ErrorCode::UnknownSurface: return "unknown_surface";
        case ErrorCode::GenerationExhausted: return "generation_exhausted";
        case ErrorCode::DefinitionError: return "definition_error";
    }
    return "unknown";
}

const LVec3& require_finite(const LVec3& v) {
    if (!is_finite(v)) {
        throw Error(ErrorCode::NonFinite, "vector has a non-finite component");
    }
    return v;
}

std::string_view to_string(CausalCharacter c) noexcept {
    switch (c) {
        case CausalCharacter::Spacelike: return "spacelike";
        case CausalCharacter::Timelike: return "timelike";
        case CausalCharacter::Null: return "null";
    }
    return "unknown";
}

std::string_view to_string(AngleKind k) noexcept {
    switch (k) {
        case AngleKind::TimelikeTimelike: return "timelike_timelike";
        case AngleKind::SpacelikeSpacelikeEuclidean: return "spacelike_spacelike_euclidean";
        case AngleKind::SpacelikeSpacelikeHyperbolic: return "spacelike_spacelike_hyperbolic";
        case AngleKind::SpacelikeTimelike: return "spacelike_timelike";
    }
    return "unknown";
}

CausalCharacter causal_character(const LVec3& v, double eps) {
    require_finite(v);
    const double e2 = euclidean_dot(v, v);
    if (e2 == 0.0) {
        return CausalCharacter::Spacelike;
    }
    const double g = metric(v, v);
    if (std::abs(g) <= eps * std::max(1.0, e2)) {
        return CausalCharacter::Null;
    }
    return g > 0.0 ? CausalCharacter::Spacelike : CausalCharacter::Timelike;
}

bool same_timecone(const LVec3& v, const LVec3& w, double eps) {
    if (causal_character(v, eps) != CausalCharacter::Timelike ||
        causal_character(w, eps) != CausalCharacter::Timelike) {
        throw Error(ErrorCode::NotTimelike, "same_timecone requires two timelike vectors");
    }
    return metric(v, w) < 0.0;
}

AngleResult angle_between(const LVec3& v, const LVec3& w, double eps) {
    const CausalCharacter cv = causal_character(v, eps);
    const CausalCharacter cw = causal_character(w, eps);
    if (cv == CausalCharacter::Null || cw == CausalCharacter::Null ||
        euclidean_dot(v, v) == 0.0 || euclidean_dot(w, w) == 0.0) {
        throw Error(ErrorCode::NullInput, "angle_between requires two nonzero, non-null vectors");
    }

    const double g = metric(v, w);
    const double scale = norm(v) * norm(w);

    if (cv == CausalCharacter::Timelike && cw == CausalCharacter::Timelike) {
        if (g >= 0.0) {
            throw Error(ErrorCode::OppositeTimecones, "timelike vectors lie in opposite time-cones");
        }
        return {std::acosh(std::max(1.0, -g / scale)), AngleKind::TimelikeTimelike};
    }

    if (cv == CausalCharacter::Spacelike && cw == CausalCharacter::Spacelike) {
        const double gram = metric(v, v) * metric(w, w) - g * g;
        const double band = eps * std::max(1.0, euclidean_dot(v, v) * euclidean_dot(w, w));
        if (std::abs(gram) <= band) {
            throw Error(ErrorCode::DegenerateSpan, "spacelike vectors span a degenerate plane");
        }
        if (gram > 0.0) {
            return {std::acos(std::clamp(g / scale, -1.0, 1.0)), AngleKind::SpacelikeSpacelikeEuclidean};
        }
        return {std::acosh(std::max(1.0, std::abs(g) / scale)), AngleKind::SpacelikeSpacelikeHyperbolic};
    }

    return {std::asinh(std::abs(g) / scale), AngleKind::SpacelikeTimelike};
}

}  // namespace lamarle
