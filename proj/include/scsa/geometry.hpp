#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>

namespace scsa {

struct Coord {
    int x = 0;
    int y = 0;

    friend bool operator==(const Coord& a, const Coord& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Coord& a, const Coord& b) { return !(a == b); }
    friend Coord operator+(const Coord& a, const Coord& b) { return {a.x + b.x, a.y + b.y}; }
};

// Row-major tile order: (y, x). Used for every deterministic tile tie-break.
inline bool lex_less(const Coord& a, const Coord& b) {
    return a.y != b.y ? a.y < b.y : a.x < b.x;
}

// 4-connected step directions in scan order N, E, S, W (y grows downward).
inline constexpr std::array<Coord, 4> kDirs{{{0, -1}, {1, 0}, {0, 1}, {-1, 0}}};

// 8-neighbourhood in lexicographic (y, x) offset order; used for spawn placement.
inline constexpr std::array<Coord, 8> kNeighbours8{
    {{-1, -1}, {0, -1}, {1, -1}, {-1, 0}, {1, 0}, {-1, 1}, {0, 1}, {1, 1}}};

inline int manhattan(const Coord& a, const Coord& b) {
    return std::abs(a.x - b.x) + std::abs(a.y - b.y);
}

inline int chebyshev(const Coord& a, const Coord& b) {
    return std::max(std::abs(a.x - b.x), std::abs(a.y - b.y));
}

inline double euclid(const Coord& a, const Coord& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

}  // namespace scsa
