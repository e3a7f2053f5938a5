#pragma once

#include <cmath>

namespace lamarle {

/// Second-order forward-mode dual number: value plus first and second
/// derivative with respect to one parameter.
///
/// This is a nested dual number Dual<Dual<double>> with its two equal mixed
/// slots merged, so every operation is the second-order Leibniz / chain rule
/// written out. No truncation error is introduced.
struct Dual2 {
    double value = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;

    constexpr Dual2() = default;
    constexpr Dual2(double v) : value(v) {}  // NOLINT(google-explicit-constructor)
    constexpr Dual2(double v, double first, double second) : value(v), d1(first), d2(second) {}

    static constexpr Dual2 variable(double u) { return {u, 1.0, 0.0}; }

    friend constexpr Dual2 operator+(const Dual2& a, const Dual2& b) {
        return {a.value + b.value, a.d1 + b.d1, a.d2 + b.d2};
    }
    friend constexpr Dual2 operator-(const Dual2& a, const Dual2& b) {
        return {a.value - b.value, a.d1 - b.d1, a.d2 - b.d2};
    }
    friend constexpr Dual2 operator-(const Dual2& a) { return {-a.value, -a.d1, -a.d2}; }
    friend constexpr Dual2 operator*(const Dual2& a, const Dual2& b) {
        return {a.value * b.value,
                a.d1 * b.value + a.value * b.d1,
                a.d2 * b.value + 2.0 * a.d1 * b.d1 + a.value * b.d2};
    }
    friend constexpr Dual2 operator/(const Dual2& a, const Dual2& b) { return a * reciprocal(b); }

    Dual2& operator+=(const Dual2& b) { return *this = *this + b; }
    Dual2& operator-=(const Dual2& b) { return *this = *this - b; }
    Dual2& operator*=(const Dual2& b) { return *this = *this * b; }

    /// f(x) given f, f', f'' evaluated at x.value.
    static constexpr Dual2 chain(const Dual2& x, double f, double df, double d2f) {
        return {f, df * x.d1, d2f * x.d1 * x.d1 + df * x.d2};
    }

    friend constexpr Dual2 reciprocal(const Dual2& x) {
        const double r = 1.0 / x.value;
        return chain(x, r, -r * r, 2.0 * r * r * r);
    }
};

inline Dual2 sin(const Dual2& x) {
    const double s = std::sin(x.value), c = std::cos(x.value);
    return Dual2::chain(x, s, c, -s);
}
inline Dual2 cos(const Dual2& x) {
    const double s = std::sin(x.value), c = std::cos(x.value);
    return Dual2::chain(x, c, -s, -c);
}
inline Dual2 tan(const Dual2& x) {
    const double t = std::tan(x.value);
    const double sec2 = 1.0 + t * t;
    return Dual2::chain(x, t, sec2, 2.0 * t * sec2);
}
inline Dual2 sinh(const Dual2& x) {
    const double s = std::sinh(x.value), c = std::cosh(x.value);
    return Dual2::chain(x, s, c, s);
}
inline Dual2 cosh(const Dual2& x) {
    const double s = std::sinh(x.value), c = std::cosh(x.value);
    return Dual2::chain(x, c, s, c);
}
inline Dual2 tanh(const Dual2& x) {
    const double t = std::tanh(x.value);
    const double sech2 = 1.0 - t * t;
    return Dual2::chain(x, t, sech2, -2.0 * t * sech2);
}
inline Dual2 exp(const Dual2& x) {
    const double e = std::exp(x.value);
    return Dual2::chain(x, e, e, e);
}
inline Dual2 log(const Dual2& x) {
    const double r = 1.0 / x.value;
    return Dual2::chain(x, std::log(x.value), r, -r * r);
}
inline Dual2 sqrt(const Dual2& x) {
    const double s = std::sqrt(x.value);
    return Dual2::chain(x, s, 0.5 / s, -0.25 / (s * x.value));
}
/// Derivative taken as 0 at the kink.
inline Dual2 abs(const Dual2& x) {
    const double sign = x.value > 0.0 ? 1.0 : (x.value < 0.0 ? -1.0 : 0.0);
    return {std::abs(x.value), sign * x.d1, sign * x.d2};
}

inline bool isfinite(const Dual2& x) {
    return std::isfinite(x.value) && std::isfinite(x.d1) && std::isfinite(x.d2);
}

}  // namespace lamarle
