#include "conserva/banded.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>

namespace conserva {

std::vector<double> BandedMatrix::dense() const {
    std::vector<double> out(static_cast<size_t>(n_) * n_, 0.0);
    for (int i = 0; i < n_; ++i)
        for (int o = -bw_; o <= bw_; ++o) {
            int c = col(i, o);
            if (c >= 0) out[static_cast<size_t>(i) * n_ + c] += at(i, o);
        }
    return out;
}

namespace {

// Plain band LU with partial pivoting via LAPACK dgbtrf.  Column-major band
// storage with kl extra superdiagonals for pivoting fill-in.
struct BandLU {
    int n = 0, kl = 0, ku = 0, ldab = 0;
    std::vector<double> ab;
    std::vector<lapack_int> ipiv;

    void factor_from(const BandedMatrix& a, int row_begin, int row_count) {
        n = row_count;
        kl = ku = a.half_bandwidth();
        ldab = 2 * kl + ku + 1;
        ab.assign(static_cast<size_t>(ldab) * n, 0.0);
        ipiv.assign(static_cast<size_t>(n), 0);
        for (int i = 0; i < n; ++i) {
            for (int o = -kl; o <= ku; ++o) {
                int j = i + o;  // local column
                if (j < 0 || j >= n) continue;
                // dgbtrf layout: AB(kl + ku + 1 + i - j, j) = A(i, j), 1-based.
                ab[static_cast<size_t>(j) * ldab + (kl + ku + i - j)] = a.at(row_begin + i, o);
            }
        }
        lapack_int info = LAPACKE_dgbtrf(LAPACK_COL_MAJOR, n, n, kl, ku, ab.data(), ldab, ipiv.data());
        if (info != 0) throw SingularMatrixError("banded LU: singular factor at pivot " + std::to_string(info));
    }

    void solve_inplace(double* x, int nrhs = 1) const {
        lapack_int info = LAPACKE_dgbtrs(LAPACK_COL_MAJOR, 'N', n, kl, ku, nrhs, ab.data(), ldab,
                                         ipiv.data(), x, n);
        if (info != 0) throw SingularMatrixError("banded LU: solve failed");
    }
};

// Dense LU with partial pivoting for the small border block.
struct DenseLU {
    int n = 0;
    std::vector<double> a;
    std::vector<int> piv;

    void factor(std::vector<double> m, int dim) {
        n = dim;
        a = std::move(m);
        piv.resize(static_cast<size_t>(n));
        for (int k = 0; k < n; ++k) {
            int p = k;
            for (int i = k + 1; i < n; ++i)
                if (std::abs(a[i * n + k]) > std::abs(a[p * n + k])) p = i;
            piv[k] = p;
            if (p != k)
                for (int j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
            double pivot = a[k * n + k];
            if (std::abs(pivot) < 1e-300) throw SingularMatrixError("border block singular");
            for (int i = k + 1; i < n; ++i) {
                double f = a[i * n + k] / pivot;
                a[i * n + k] = f;
                for (int j = k + 1; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
            }
        }
    }

    void solve_inplace(double* x) const {
        for (int k = 0; k < n; ++k) {
            if (piv[k] != k) std::swap(x[k], x[piv[k]]);
            for (int i = k + 1; i < n; ++i) x[i] -= a[i * n + k] * x[k];
        }
        for (int i = n - 1; i >= 0; --i) {
            for (int j = i + 1; j < n; ++j) x[i] -= a[i * n + j] * x[j];
            x[i] /= a[i * n + i];
        }
    }
};

}  // namespace

struct BandedSolver::Impl {
    int n = 0, bw = 0;
    bool cyclic = false;

    BandLU core;       // leading block (all rows when not cyclic)
    int n1 = 0, p = 0; // block split for the cyclic case
    // Bordered elimination data: A = [[B, C], [D, E]], S = E - D B^-1 C.
    std::vector<double> Z;     // n1 x p, Z = B^-1 C
    std::vector<double> Drow;  // p x n1 (sparse rows stored dense)
    DenseLU S;
};

BandedSolver::BandedSolver(const BandedMatrix& a) : impl_(std::make_unique<Impl>()) {
    Impl& im = *impl_;
    im.n = a.size();
    im.bw = a.half_bandwidth();
    im.cyclic = a.cyclic();

    if (!im.cyclic) {
        im.core.factor_from(a, 0, im.n);
        return;
    }

    im.p = std::min(2 * im.bw, im.n);
    im.n1 = im.n - im.p;
    if (im.n1 <= im.bw)
        throw std::invalid_argument("cyclic banded solve: matrix too small for bandwidth");

    const int n1 = im.n1, p = im.p, bw = im.bw;

    // C: couplings of the leading rows into the border columns (band spill
    // plus periodic wrap); D: border rows into leading columns; E: border block.
    std::vector<double> C(static_cast<size_t>(n1) * p, 0.0);
    std::vector<double> E(static_cast<size_t>(p) * p, 0.0);
    im.Drow.assign(static_cast<size_t>(p) * n1, 0.0);

    for (int i = 0; i < im.n; ++i) {
        for (int o = -bw; o <= bw; ++o) {
            int c = a.col(i, o);
            double v = a.at(i, o);
            if (v == 0.0) continue;
            if (i < n1) {
                if (c >= n1) C[static_cast<size_t>(i) * p + (c - n1)] += v;
            } else {
                if (c >= n1)
                    E[static_cast<size_t>(i - n1) * p + (c - n1)] += v;
                else
                    im.Drow[static_cast<size_t>(i - n1) * n1 + c] += v;
            }
        }
    }

    im.core.factor_from(a, 0, n1);

    // Z = B^-1 C, column by column.
    im.Z.assign(static_cast<size_t>(n1) * p, 0.0);
    std::vector<double> colbuf(static_cast<size_t>(n1));
    for (int j = 0; j < p; ++j) {
        for (int i = 0; i < n1; ++i) colbuf[i] = C[static_cast<size_t>(i) * p + j];
        im.core.solve_inplace(colbuf.data());
        for (int i = 0; i < n1; ++i) im.Z[static_cast<size_t>(i) * p + j] = colbuf[i];
    }

    // S = E - D Z.
    std::vector<double> S = E;
    for (int r = 0; r < p; ++r)
        for (int k = 0; k < n1; ++k) {
            double d = im.Drow[static_cast<size_t>(r) * n1 + k];
            if (d == 0.0) continue;
            for (int j = 0; j < p; ++j)
                S[static_cast<size_t>(r) * p + j] -= d * im.Z[static_cast<size_t>(k) * p + j];
        }
    im.S.factor(std::move(S), p);
}

BandedSolver::~BandedSolver() = default;
BandedSolver::BandedSolver(BandedSolver&&) noexcept = default;
BandedSolver& BandedSolver::operator=(BandedSolver&&) noexcept = default;

void BandedSolver::solve(std::span<const double> rhs, std::span<double> x) const {
    const Impl& im = *impl_;
    if (static_cast<int>(rhs.size()) != im.n || static_cast<int>(x.size()) != im.n)
        throw std::invalid_argument("banded solve: size mismatch");
    std::copy(rhs.begin(), rhs.end(), x.begin());

    if (!im.cyclic) {
        im.core.solve_inplace(x.data());
        return;
    }

    const int n1 = im.n1, p = im.p;
    // y1 = B^-1 b1
    im.core.solve_inplace(x.data());
    // x2 = S^-1 (b2 - D y1)
    std::vector<double> x2(rhs.begin() + n1, rhs.end());
    for (int r = 0; r < p; ++r) {
        double acc = 0.0;
        for (int k = 0; k < n1; ++k) acc += im.Drow[static_cast<size_t>(r) * n1 + k] * x[k];
        x2[r] -= acc;
    }
    im.S.solve_inplace(x2.data());
    // x1 = y1 - Z x2
    for (int i = 0; i < n1; ++i) {
        double acc = 0.0;
        for (int j = 0; j < p; ++j) acc += im.Z[static_cast<size_t>(i) * p + j] * x2[j];
        x[i] -= acc;
    }
    std::copy(x2.begin(), x2.end(), x.begin() + n1);
}

std::vector<double> BandedSolver::solve(const std::vector<double>& rhs) const {
    std::vector<double> x(rhs.size());
    solve(std::span<const double>(rhs), std::span<double>(x));
    return x;
}

std::vector<double> banded_solve(const BandedMatrix& a, const std::vector<double>& rhs) {
    return BandedSolver(a).solve(rhs);
}

}  // namespace conserva
