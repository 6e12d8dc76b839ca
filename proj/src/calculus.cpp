#include "conserva/calculus.hpp"

#include <cmath>
#include <random>

namespace conserva {

double discrete_euler(const StencilFunction& f, const FieldHistory& fields, int m, int n, double h) {
    const StencilWindow& w = f.window;
    const int levels = fields.levels();
    // Every shifted anchor (m - i, n - j), (i, j) in the window, must itself
    // fit its window into the stored levels.
    if (n - w.j_hi + w.j_lo < 0 || n - w.j_lo + w.j_hi > levels - 1)
        throw InsufficientHistoryError("discrete_euler: window exceeds available time levels");

    // All shifted partials are taken at the same lattice site (m, n):
    // E(f)(m,n) = d/du_{m,n} [ sum_{(i,j) in window} f anchored at (m-i, n-j) ].
    FieldHistory work = fields;
    const int mm = work.grid.wrap(m);
    auto total = [&](double val) {
        work.slices[static_cast<size_t>(n)][mm] = val;
        double s = 0.0;
        for (int i = w.i_lo; i <= w.i_hi; ++i)
            for (int j = w.j_lo; j <= w.j_hi; ++j)
                s += f(FieldView(work, m - i, n - j));
        return s;
    };
    const double u0 = fields.slices[static_cast<size_t>(n)][mm];
    const double plus = total(u0 + h);
    const double minus = total(u0 - h);
    work.slices[static_cast<size_t>(n)][mm] = u0;
    return (plus - minus) / (2.0 * h);
}

double divergence_identity_check(const StencilFunction& Q, const StencilFunction& A,
                                 const StencilFunction& F, const StencilFunction& G, int trials,
                                 const GridSpec& grid, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("divergence_identity_check: trials >= 1 required");
    StencilWindow w = Q.window.merged(A.window).merged(F.window).merged(G.window);
    const int n0 = std::max(0, -w.j_lo);
    const int levels = n0 + w.j_hi + 2;  // +1 for the Dn shift of G
    const int m0 = grid.M / 2;

    double worst = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
        FieldHistory h = random_history(grid, levels, seed, static_cast<std::uint64_t>(trial));
        FieldView v(h, m0, n0);
        const double qa = Q(v) * A(v);
        const double dmF = (F(v.shifted(1, 0)) - F(v)) / grid.dx;
        const double dnG = (G(v.shifted(0, 1)) - G(v)) / grid.dt;
        const double scale = std::max({1.0, std::abs(qa), std::abs(dmF), std::abs(dnG)});
        worst = std::max(worst, std::abs(qa - dmF - dnG) / scale);
    }
    return worst;
}

double theorem1_check(const StencilFunction& g_tilde, const StencilFunction& f_tilde, int k, int i,
                      int trials, std::uint64_t seed) {
    (void)g_tilde;  // the Dn(g) part telescopes trivially; the content is the Dm^k sum
    if (k < 1) throw std::invalid_argument("theorem1_check: k >= 1 required");
    if (i < 1 || i > k)
        throw std::invalid_argument("theorem1_check: requires 1 <= i <= k (theorem hypothesis i-1 < k)");

    const int support = 8;
    const int pad = k + 4 + std::max(std::abs(f_tilde.window.i_lo), std::abs(f_tilde.window.i_hi));
    const int M = support + 2 * pad;
    const double dx = 0.5, dt = 0.25;
    GridSpec grid = GridSpec::periodic(-0.5 * M * dx, 0.5 * M * dx, dx, dt, 2);
    const int levels = f_tilde.window.j_hi - std::min(0, f_tilde.window.j_lo) + 1;
    const int n0 = std::max(0, -f_tilde.window.j_lo);

    double worst = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
        FieldHistory h = random_history(grid, std::max(2, levels + n0), seed,
                                        static_cast<std::uint64_t>(trial));
        // keep the random values on the interior support only
        for (auto& s : h.slices)
            for (int m = 0; m < M; ++m)
                if (m < pad || m >= pad + support) s[m] = 0.0;

        std::vector<double> f(static_cast<size_t>(M), 0.0);
        for (int m = 0; m < M; ++m) f[m] = f_tilde(FieldView(h, m, n0));
        // k rounds of forward differencing (no wrap; support never reaches the edge)
        for (int r = 0; r < k; ++r)
            for (int m = 0; m + 1 < M; ++m) f[m] = (f[m + 1] - f[m]) / dx;
        double s = 0.0;
        for (int m = 0; m + k < M; ++m) s += std::pow(grid.x(m), i - 1) * f[m];
        worst = std::max(worst, std::abs(dx * s));
    }
    return worst;
}

}  // namespace conserva
