#pragma once

#include <cmath>
#include <string_view>

namespace lamarle {

/// Three coordinates of R^3_1 over an arbitrary scalar type. The scalar is
/// `double` for points and vectors, and `Dual2` when derivatives along a
/// curve parameter ride along with the values.
template <class T>
struct BasicVec3 {
    T x1{};
    T x2{};
    T x3{};

    friend BasicVec3 operator+(const BasicVec3& a, const BasicVec3& b) {
        return {a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3};
    }
    friend BasicVec3 operator-(const BasicVec3& a, const BasicVec3& b) {
        return {a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3};
    }
    friend BasicVec3 operator-(const BasicVec3& a) { return {-a.x1, -a.x2, -a.x3}; }
    friend BasicVec3 operator*(const T& s, const BasicVec3& a) {
        return {s * a.x1, s * a.x2, s * a.x3};
    }
    friend BasicVec3 operator*(const BasicVec3& a, const T& s) { return s * a; }
    friend BasicVec3 operator/(const BasicVec3& a, const T& s) {
        return {a.x1 / s, a.x2 / s, a.x3 / s};
    }
    BasicVec3& operator+=(const BasicVec3& b) { return *this = *this + b; }
    BasicVec3& operator-=(const BasicVec3& b) { return *this = *this - b; }

    friend bool operator==(const BasicVec3&, const BasicVec3&) = default;
};

using LVec3 = BasicVec3<double>;

/// Indefinite metric dx1^2 + dx2^2 - dx3^2.
template <class T>
[[nodiscard]] T metric(const BasicVec3<T>& v, const BasicVec3<T>& w) {
    return v.x1 * w.x1 + v.x2 * w.x2 - v.x3 * w.x3;
}

/// Lorentzian product (v3 w2 - v2 w3, v1 w3 - v3 w1, v1 w2 - v2 w1).
/// The result is metric-orthogonal to both factors.
template <class T>
[[nodiscard]] BasicVec3<T> lorentz_cross(const BasicVec3<T>& v, const BasicVec3<T>& w) {
    return {v.x3 * w.x2 - v.x2 * w.x3,
            v.x1 * w.x3 - v.x3 * w.x1,
            v.x1 * w.x2 - v.x2 * w.x1};
}

/// Plain component determinant with the three vectors as rows.
template <class T>
[[nodiscard]] T det3(const BasicVec3<T>& a, const BasicVec3<T>& b, const BasicVec3<T>& c) {
    return a.x1 * (b.x2 * c.x3 - b.x3 * c.x2)
         - a.x2 * (b.x1 * c.x3 - b.x3 * c.x1)
         + a.x3 * (b.x1 * c.x2 - b.x2 * c.x1);
}

[[nodiscard]] inline double euclidean_dot(const LVec3& v, const LVec3& w) {
    return v.x1 * w.x1 + v.x2 * w.x2 + v.x3 * w.x3;
}
[[nodiscard]] inline double euclidean_norm(const LVec3& v) { return std::sqrt(euclidean_dot(v, v)); }

/// sqrt(|g(v, v)|)
[[nodiscard]] inline double norm(const LVec3& v) { return std::sqrt(std::abs(metric(v, v))); }

[[nodiscard]] inline bool is_finite(const LVec3& v) {
    return std::isfinite(v.x1) && std::isfinite(v.x2) && std::isfinite(v.x3);
}

/// Throws NonFinite when any component is NaN or infinite.
const LVec3& require_finite(const LVec3& v);

enum class CausalCharacter { Spacelike, Timelike, Null };

std::string_view to_string(CausalCharacter c) noexcept;

inline constexpr double kCausalEpsilon = 1e-9;

/// Null band is |g(v,v)| <= eps * max(1, |v|_E^2). The zero vector counts as
/// spacelike.
[[nodiscard]] CausalCharacter causal_character(const LVec3& v, double eps = kCausalEpsilon);

/// True iff g(v, w) < 0. Both inputs must be timelike.
[[nodiscard]] bool same_timecone(const LVec3& v, const LVec3& w, double eps = kCausalEpsilon);

enum class AngleKind {
    TimelikeTimelike,
    SpacelikeSpacelikeEuclidean,
    SpacelikeSpacelikeHyperbolic,
    SpacelikeTimelike,
};

std::string_view to_string(AngleKind k) noexcept;

struct AngleResult {
    double theta;
    AngleKind kind;
};

/// Angle between two non-null vectors, dispatched on their causal characters:
///   timelike/timelike        g = -|v||w| cosh(theta)   (same time-cone required)
///   spacelike, spacelike span g =  |v||w| cos(theta)
///   spacelike, timelike span |g| = |v||w| cosh(theta)
///   spacelike/timelike       |g| = |v||w| sinh(theta)
/// The span of two spacelike vectors is classified by the sign of the Gram
/// determinant g(v,v) g(w,w) - g(v,w)^2.
[[nodiscard]] AngleResult angle_between(const LVec3& v, const LVec3& w, double eps = kCausalEpsilon);

}  // namespace lamarle
