/// @file expr.hpp
/// Lattice expression combinators.  An expression is a callable
/// (int i, int j) -> Scalar giving its value with all subscripts shifted by
/// (i, j); operators act on expressions the way S_m, D_m, mu_m, D_n, mu_n act
/// on difference expressions, so scheme formulas transcribe one-to-one.

#pragma once

#include <utility>

namespace conserva::detail {

template <class E>
auto sh(E e, int di, int dj = 0) {
    return [=](int i, int j) { return e(i + di, j + dj); };
}

template <class E>
auto Dm(E e, double dx) {
    return [=](int i, int j) { return (e(i + 1, j) - e(i, j)) / dx; };
}

template <class E>
auto MUm(E e) {
    return [=](int i, int j) { return (e(i + 1, j) + e(i, j)) * 0.5; };
}

template <class E>
auto Dn(E e, double dt) {
    return [=](int i, int j) { return (e(i, j + 1) - e(i, j)) / dt; };
}

template <class E>
auto MUn(E e) {
    return [=](int i, int j) { return (e(i, j + 1) + e(i, j)) * 0.5; };
}

template <class E>
auto sq(E e) {
    return [=](int i, int j) { auto v = e(i, j); return v * v; };
}

template <class A, class B>
auto prod(A a, B b) {
    return [=](int i, int j) { return a(i, j) * b(i, j); };
}

}  // namespace conserva::detail
