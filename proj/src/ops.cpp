#include "conserva/ops.hpp"

#include <stdexcept>

namespace conserva {

bool is_spatial(OpAtom a) {
    switch (a) {
        case OpAtom::Sm:
        case OpAtom::SmInv:
        case OpAtom::Dm:
        case OpAtom::MUm:
            return true;
        default:
            return false;
    }
}

namespace {

// Offset span [lo, hi] reached by one atom.
void atom_span(OpAtom a, int& lo, int& hi) {
    switch (a) {
        case OpAtom::Sm: lo = 1; hi = 1; break;
        case OpAtom::SmInv: lo = -1; hi = -1; break;
        case OpAtom::Dm:
        case OpAtom::MUm: lo = 0; hi = 1; break;
        default: lo = 0; hi = 0; break;
    }
}

std::vector<double> apply_atom_periodic(OpAtom a, const std::vector<double>& v, const GridSpec& g) {
    const int M = static_cast<int>(v.size());
    std::vector<double> out(v.size());
    auto at = [&](int i) { return v[static_cast<size_t>(((i % M) + M) % M)]; };
    for (int i = 0; i < M; ++i) {
        switch (a) {
            case OpAtom::Sm: out[i] = at(i + 1); break;
            case OpAtom::SmInv: out[i] = at(i - 1); break;
            case OpAtom::Dm: out[i] = (at(i + 1) - at(i)) / g.dx; break;
            case OpAtom::MUm: out[i] = 0.5 * (at(i + 1) + at(i)); break;
            default: throw std::invalid_argument("apply_spatial: temporal atom in spatial word");
        }
    }
    return out;
}

// Dirichlet: input entry p corresponds to node p + base; output shrinks by the
// atom's forward/backward reach.
std::vector<double> apply_atom_window(OpAtom a, const std::vector<double>& v, const GridSpec& g,
                                      int& base) {
    const int n = static_cast<int>(v.size());
    std::vector<double> out;
    switch (a) {
        case OpAtom::Sm:
            if (n < 2) throw std::out_of_range("apply_spatial: window exhausted");
            out.assign(v.begin() + 1, v.end());
            break;
        case OpAtom::SmInv:
            if (n < 2) throw std::out_of_range("apply_spatial: window exhausted");
            out.assign(v.begin(), v.end() - 1);
            base += 1;
            break;
        case OpAtom::Dm:
            if (n < 2) throw std::out_of_range("apply_spatial: window exhausted");
            out.resize(static_cast<size_t>(n - 1));
            for (int i = 0; i + 1 < n; ++i) out[i] = (v[i + 1] - v[i]) / g.dx;
            break;
        case OpAtom::MUm:
            if (n < 2) throw std::out_of_range("apply_spatial: window exhausted");
            out.resize(static_cast<size_t>(n - 1));
            for (int i = 0; i + 1 < n; ++i) out[i] = 0.5 * (v[i + 1] + v[i]);
            break;
        default:
            throw std::invalid_argument("apply_spatial: temporal atom in spatial word");
    }
    return out;
}

}  // namespace

TimeSlice apply_spatial(const OperatorWord& word, const TimeSlice& slice, const GridSpec& grid) {
    for (const auto& f : word)
        if (!is_spatial(f.atom))
            throw std::invalid_argument("apply_spatial: word contains temporal atoms");
    if (slice.size() != grid.M)
        throw std::invalid_argument("apply_spatial: slice length does not match grid");

    std::vector<double> cur = slice.values;
    int base = 0;
    for (const auto& f : word) {
        for (int k = 0; k < f.count; ++k) {
            if (grid.boundary == Boundary::Periodic)
                cur = apply_atom_periodic(f.atom, cur, grid);
            else
                cur = apply_atom_window(f.atom, cur, grid, base);
        }
    }
    TimeSlice out(static_cast<int>(cur.size()), slice.level);
    out.values = std::move(cur);
    (void)base;
    return out;
}

TimeSlice apply_temporal(const OperatorWord& word, const TimeSlice& lower, const TimeSlice& upper,
                         const GridSpec& grid) {
    if (lower.level + 1 != upper.level)
        throw std::invalid_argument("apply_temporal: levels must be adjacent");
    if (lower.size() != upper.size())
        throw std::invalid_argument("apply_temporal: slice lengths differ");

    // Degree in S_n must stay <= 1: with two levels available each atom may be
    // applied at most once in total.
    int degree = 0;
    for (const auto& f : word) {
        if (is_spatial(f.atom))
            throw std::invalid_argument("apply_temporal: word contains spatial atoms");
        degree += f.count;
    }
    if (degree > 1)
        throw std::invalid_argument("apply_temporal: word needs more than two time levels");

    const int n = lower.size();
    TimeSlice out(n, lower.level);
    if (word.empty() || word.front().count == 0) {
        out.values = lower.values;
        return out;
    }
    switch (word.front().atom) {
        case OpAtom::Sn:
            out.values = upper.values;
            break;
        case OpAtom::Dn:
            for (int i = 0; i < n; ++i) out[i] = (upper[i] - lower[i]) / grid.dt;
            break;
        case OpAtom::MUn:
            for (int i = 0; i < n; ++i) out[i] = 0.5 * (upper[i] + lower[i]);
            break;
        default:
            throw std::invalid_argument("apply_temporal: unsupported atom");
    }
    return out;
}

double telescoping_sum(const TimeSlice& flux_slice, const GridSpec& grid) {
    if (grid.boundary != Boundary::Periodic)
        throw std::invalid_argument("telescoping_sum: periodic grid required");
    OperatorWord dm{{OpAtom::Dm, 1}};
    TimeSlice d = apply_spatial(dm, flux_slice, grid);
    double s = 0.0;
    for (double v : d.values) s += v;
    return grid.dx * s;
}

}  // namespace conserva
