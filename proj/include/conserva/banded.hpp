/// @file banded.hpp
/// Banded matrices indexed by stencil offset, plain banded LU (LAPACK) and a
/// bordered block elimination for the cyclic (periodic wrap) case.

#pragma once

#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

namespace conserva {

/// Raised when a factorization meets a (numerically) singular pivot.
struct SingularMatrixError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Square matrix with half-bandwidth B, stored by diagonal offset.
/// Entry (row i, offset o) addresses column i+o, wrapped modulo n when
/// `cyclic` and silently out of range (must stay zero) otherwise.
class BandedMatrix {
public:
    BandedMatrix() = default;
    BandedMatrix(int n, int half_bandwidth, bool cyclic)
        : n_(n), bw_(half_bandwidth), cyclic_(cyclic),
          d_(static_cast<size_t>(n) * (2 * half_bandwidth + 1), 0.0) {}

    int size() const { return n_; }
    int half_bandwidth() const { return bw_; }
    bool cyclic() const { return cyclic_; }

    double& at(int row, int offset) { return d_[idx(row, offset)]; }
    double at(int row, int offset) const { return d_[idx(row, offset)]; }

    /// Column index addressed by (row, offset); -1 if outside a non-cyclic band.
    int col(int row, int offset) const {
        int c = row + offset;
        if (cyclic_) return ((c % n_) + n_) % n_;
        return (c < 0 || c >= n_) ? -1 : c;
    }

    /// Dense copy (tests and the bordered elimination use it for small blocks).
    std::vector<double> dense() const;

    void clear() { std::fill(d_.begin(), d_.end(), 0.0); }

private:
    size_t idx(int row, int offset) const {
        return static_cast<size_t>(row) * (2 * bw_ + 1) + static_cast<size_t>(offset + bw_);
    }
    int n_ = 0, bw_ = 0;
    bool cyclic_ = false;
    std::vector<double> d_;
};

/// Factorization of a BandedMatrix; plain band LU with partial pivoting for
/// the non-cyclic part, bordered block elimination of the wrap-around
/// columns for cyclic matrices.
class BandedSolver {
public:
    explicit BandedSolver(const BandedMatrix& a);
    ~BandedSolver();
    BandedSolver(BandedSolver&&) noexcept;
    BandedSolver& operator=(BandedSolver&&) noexcept;

    void solve(std::span<const double> rhs, std::span<double> x) const;
    std::vector<double> solve(const std::vector<double>& rhs) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// One-shot convenience: factor + solve.
std::vector<double> banded_solve(const BandedMatrix& a, const std::vector<double>& rhs);

}  // namespace conserva
