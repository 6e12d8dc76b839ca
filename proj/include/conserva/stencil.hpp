/// @file stencil.hpp
/// Stencil functions: real-valued maps over a window of field values around
/// a base lattice node, plus the anchored field view they are evaluated on.

#pragma once

#include <functional>
#include <string>

#include "conserva/grid.hpp"

namespace conserva {

/// Inclusive offset window a stencil function reads, relative to its base node.
struct StencilWindow {
    int i_lo = 0, i_hi = 0;
    int j_lo = 0, j_hi = 0;

    StencilWindow merged(const StencilWindow& o) const {
        return {std::min(i_lo, o.i_lo), std::max(i_hi, o.i_hi),
                std::min(j_lo, o.j_lo), std::max(j_hi, o.j_hi)};
    }
};

/// View of a FieldHistory anchored at lattice node (m, n).  Spatial offsets
/// wrap periodically; temporal offsets must stay inside the stored levels.
class FieldView {
public:
    FieldView(const FieldHistory& h, int m, int n) : h_(&h), m_(m), n_(n) {}

    double operator()(int di, int dj) const {
        const TimeSlice& s = h_->slices[static_cast<size_t>(n_ + dj)];
        return s[h_->grid.wrap(m_ + di)];
    }

    int base_m() const { return m_; }
    int base_n() const { return n_; }
    double x0() const { return h_->grid.x(m_); }
    double t0() const { return h_->grid.t(n_); }
    double dx() const { return h_->grid.dx; }
    double dt() const { return h_->grid.dt; }
    const GridSpec& grid() const { return h_->grid; }

    FieldView shifted(int di, int dj) const { return FieldView(*h_, m_ + di, n_ + dj); }

private:
    const FieldHistory* h_;
    int m_, n_;
};

/// A stencil function: window extents plus an evaluator over an anchored view.
struct StencilFunction {
    std::string name;
    StencilWindow window;
    std::function<double(const FieldView&)> eval;

    double operator()(const FieldView& v) const { return eval(v); }
};

/// One conservation law in characteristic form: Q*A = Dm(F) + Dn(G).
struct ConservationLaw {
    int index = 1;  ///< 1 = mass, 2 = momentum, 3 = energy
    StencilFunction characteristic;
    StencilFunction flux;
    StencilFunction density;
};

/// Grid functional H(j) = scale * dx * sum_i density(i, j).
struct HamiltonianDef {
    StencilFunction density;
    double scale = 1.0;
};

/// Fill a history with reproducible uniform [-1,1] values; per-trial streams
/// are derived deterministically from (seed, trial).
FieldHistory random_history(const GridSpec& grid, int levels, std::uint64_t seed, std::uint64_t trial);

}  // namespace conserva
