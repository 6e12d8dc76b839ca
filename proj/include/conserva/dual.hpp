/// @file dual.hpp
/// First-order dual number for exact directional derivatives of the scheme
/// residuals (used to assemble banded Jacobians).

#pragma once

namespace conserva {

struct Dual {
    double v = 0.0;  ///< value
    double d = 0.0;  ///< derivative

    Dual() = default;
    Dual(double value) : v(value) {}
    Dual(double value, double deriv) : v(value), d(deriv) {}
};

inline Dual operator+(Dual a, Dual b) { return {a.v + b.v, a.d + b.d}; }
inline Dual operator-(Dual a, Dual b) { return {a.v - b.v, a.d - b.d}; }
inline Dual operator-(Dual a) { return {-a.v, -a.d}; }
inline Dual operator*(Dual a, Dual b) { return {a.v * b.v, a.v * b.d + a.d * b.v}; }
inline Dual operator*(double c, Dual a) { return {c * a.v, c * a.d}; }
inline Dual operator*(Dual a, double c) { return {c * a.v, c * a.d}; }
inline Dual operator+(Dual a, double c) { return {a.v + c, a.d}; }
inline Dual operator+(double c, Dual a) { return {a.v + c, a.d}; }
inline Dual operator-(Dual a, double c) { return {a.v - c, a.d}; }
inline Dual operator-(double c, Dual a) { return {c - a.v, -a.d}; }
inline Dual operator/(Dual a, double c) { return {a.v / c, a.d / c}; }
inline Dual& operator+=(Dual& a, Dual b) { a = a + b; return a; }
inline Dual& operator-=(Dual& a, Dual b) { a = a - b; return a; }

}  // namespace conserva
