#include "conserva/stencil.hpp"

#include <random>

namespace conserva {

FieldHistory random_history(const GridSpec& grid, int levels, std::uint64_t seed, std::uint64_t trial) {
    // splitmix-style mix keeps streams for different trials decorrelated.
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (trial + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    std::mt19937_64 gen(z ^ (z >> 31));
    std::uniform_real_distribution<double> dist(-1.0, 1.0);

    FieldHistory h;
    h.grid = grid;
    h.slices.reserve(static_cast<size_t>(levels));
    for (int j = 0; j < levels; ++j) {
        TimeSlice s(grid.M, j);
        for (int i = 0; i < grid.M; ++i) s[i] = dist(gen);
        h.slices.push_back(std::move(s));
    }
    return h;
}

}  // namespace conserva
