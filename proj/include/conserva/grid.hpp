/// @file grid.hpp
/// Uniform space-time lattice description and single time levels of the
/// discrete solution.

#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace conserva {

enum class Boundary { Periodic, Dirichlet };

/// Uniform lattice over [a,b] x [0,T].
///
/// Node x_i = a + i*dx, level t_j = j*dt.  For a periodic grid node M is
/// identified with node 0, so (b - a) = M*dx and the stored slices hold M
/// distinct values.  For a Dirichlet grid (b - a) = (M - 1)*dx and both
/// endpoints are stored.
struct GridSpec {
    double a = 0.0;
    double b = 1.0;
    double dx = 1.0;
    double dt = 1.0;
    int M = 4;              ///< spatial node count (distinct stored nodes)
    int N = 2;              ///< time level count
    Boundary boundary = Boundary::Periodic;

    double x(int i) const { return a + i * dx; }
    double t(int j) const { return j * dt; }

    /// Euclidean modulo: result always in [0, M).
    int wrap(int i) const {
        int r = i % M;
        return r < 0 ? r + M : r;
    }

    void validate() const;

    static GridSpec periodic(double a, double b, double dx, double dt, int N);
    static GridSpec dirichlet(double a, double b, double dx, double dt, int N);
};

inline void GridSpec::validate() const {
    if (!(dx > 0.0) || !(dt > 0.0))
        throw std::invalid_argument("GridSpec: step sizes must be positive");
    if (M < 4) throw std::invalid_argument("GridSpec: need at least 4 spatial nodes");
    if (N < 2) throw std::invalid_argument("GridSpec: need at least 2 time levels");
    const double span = b - a;
    const double want = boundary == Boundary::Periodic ? M * dx : (M - 1) * dx;
    if (std::abs(span - want) > 1e-9 * std::max(1.0, std::abs(span)))
        throw std::invalid_argument("GridSpec: (b - a) inconsistent with M and dx");
}

inline GridSpec GridSpec::periodic(double a, double b, double dx, double dt, int N) {
    GridSpec g;
    g.a = a; g.b = b; g.dx = dx; g.dt = dt; g.N = N;
    g.boundary = Boundary::Periodic;
    g.M = static_cast<int>(std::llround((b - a) / dx));
    g.validate();
    return g;
}

inline GridSpec GridSpec::dirichlet(double a, double b, double dx, double dt, int N) {
    GridSpec g;
    g.a = a; g.b = b; g.dx = dx; g.dt = dt; g.N = N;
    g.boundary = Boundary::Dirichlet;
    g.M = static_cast<int>(std::llround((b - a) / dx)) + 1;
    g.validate();
    return g;
}

/// One time level of the numerical solution.
struct TimeSlice {
    std::vector<double> values;
    int level = 0;

    TimeSlice() = default;
    TimeSlice(int m, int lvl, double fill = 0.0) : values(static_cast<size_t>(m), fill), level(lvl) {}

    int size() const { return static_cast<int>(values.size()); }
    double& operator[](int i) { return values[static_cast<size_t>(i)]; }
    double operator[](int i) const { return values[static_cast<size_t>(i)]; }
};

inline double max_abs(const TimeSlice& s) {
    double m = 0.0;
    for (double v : s.values) m = std::max(m, std::abs(v));
    return m;
}

/// Full discrete solution: ordered time levels over one grid.
struct FieldHistory {
    GridSpec grid;
    std::vector<TimeSlice> slices;
    std::string scheme_id;

    int levels() const { return static_cast<int>(slices.size()); }
    const TimeSlice& front() const { return slices.front(); }
    const TimeSlice& back() const { return slices.back(); }
};

}  // namespace conserva
