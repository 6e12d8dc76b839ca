/// @file ops.hpp
/// Discrete operator algebra on time slices: shifts S_m, S_n, forward
/// differences D_m = (S_m - I)/dx, D_n = (S_n - I)/dt and forward averages
/// mu_m = (S_m + I)/2, mu_n = (S_n + I)/2.  All operators commute.

#pragma once

#include <vector>

#include "conserva/grid.hpp"

namespace conserva {

enum class OpAtom { Sm, SmInv, Sn, Dm, Dn, MUm, MUn };

struct OpFactor {
    OpAtom atom;
    int count = 1;
};

/// A product of operator atoms; the empty word is the identity.
using OperatorWord = std::vector<OpFactor>;

bool is_spatial(OpAtom a);

/// Apply a word of spatial atoms (Sm, SmInv, Dm, MUm) to one slice.
///
/// Periodic grids wrap indices with Euclidean modulo and return a slice of
/// length M.  Dirichlet grids return the shorter logical window that the
/// word reaches: entry p of the result corresponds to node p + max(0,-LO)
/// where [LO,HI] is the word's offset span.  A word whose window is empty
/// on the given slice throws std::out_of_range.
TimeSlice apply_spatial(const OperatorWord& word, const TimeSlice& slice, const GridSpec& grid);

/// Apply a word of temporal atoms (Sn, Dn, MUn) of degree <= 1 in S_n to a
/// pair of adjacent time levels.  Dn gives (upper - lower)/dt, MUn the mean,
/// Sn the upper level.  Words needing more than two levels throw
/// std::invalid_argument.
TimeSlice apply_temporal(const OperatorWord& word, const TimeSlice& lower, const TimeSlice& upper,
                         const GridSpec& grid);

/// dx * sum_i (D_m f)_i over a periodic slice; telescopes to zero up to
/// round-off for any f.
double telescoping_sum(const TimeSlice& flux_slice, const GridSpec& grid);

}  // namespace conserva
