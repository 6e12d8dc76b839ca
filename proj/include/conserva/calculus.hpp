/// @file calculus.hpp
/// Numeric verification of the discrete variational calculus: the difference
/// Euler operator (whose kernel is exactly the space of divergences), the
/// divergence identity Q*A = Dm(F) + Dn(G) at random field configurations,
/// and the summation-by-parts property behind the x^{i-1} characteristics of
/// schemes of the form Dn(g) + Dm^k(f) = 0.

#pragma once

#include <cstdint>

#include "conserva/stencil.hpp"

namespace conserva {

struct InsufficientHistoryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Difference Euler operator E = sum_{i,j} S_m^{-i} S_n^{-j} d/du_{i,j}
/// applied to `f`, evaluated at `(m, n)` with central finite differences of
/// step `h` for the partials.  Vanishes (up to differentiation error) iff the
/// values of f near the base node form a total divergence.
double discrete_euler(const StencilFunction& f, const FieldHistory& fields, int m, int n,
                      double h = 1e-6);

/// Max over `trials` random fields of |Q*A - Dm(F) - Dn(G)| at a base node,
/// normalized by the magnitude of the three terms.  Exact conservation laws
/// give round-off here.
double divergence_identity_check(const StencilFunction& Q, const StencilFunction& A,
                                 const StencilFunction& F, const StencilFunction& G, int trials,
                                 const GridSpec& grid, std::uint64_t seed);

/// For a scheme Dn(g) + Dm^k(f) = 0: checks that
/// dx * sum_m x_m^{i-1} (Dm^k f)_m vanishes for random compactly supported
/// fields (1 <= i <= k).  Returns the max |sum| over trials.
double theorem1_check(const StencilFunction& g_tilde, const StencilFunction& f_tilde, int k, int i,
                      int trials, std::uint64_t seed);

/// Default seed for reproducible verification runs.
inline constexpr std::uint64_t kVerifySeed = 0xC0FFEE;

}  // namespace conserva
