#pragma once

#include <cassert>
#include <string>
#include <vector>

#include "scsa/geometry.hpp"

namespace scsa {

enum class Terrain : unsigned char { Plain, Wall, Hole, GoldVein };

char terrain_char(Terrain t);
Terrain terrain_from_char(char c);

class GridMap {
public:
    GridMap() = default;
    GridMap(int width, int height, Terrain fill = Terrain::Plain)
        : width_(width), height_(height), cells_(static_cast<std::size_t>(width) * height, fill) {}

    int width() const { return width_; }
    int height() const { return height_; }

    bool in_bounds(const Coord& c) const {
        return c.x >= 0 && c.x < width_ && c.y >= 0 && c.y < height_;
    }

    Terrain at(const Coord& c) const {
        assert(in_bounds(c));
        return cells_[static_cast<std::size_t>(c.y) * width_ + c.x];
    }

    void set(const Coord& c, Terrain t) {
        assert(in_bounds(c));
        cells_[static_cast<std::size_t>(c.y) * width_ + c.x] = t;
    }

    // Tiles units may stand on. Holes remove units, so they are never walkable.
    bool walkable(const Coord& c) const { return in_bounds(c) && at(c) == Terrain::Plain; }

    // Per-unit Manhattan diameter, the normaliser for grid distance terms.
    int diameter() const { return width_ + height_ - 2; }
    double diagonal() const { return euclid({0, 0}, {width_ - 1, height_ - 1}); }

    std::vector<Coord> tiles_of(Terrain t) const;

    // Terrain-only rows ('.', '#', 'O', 'G'); unit letters are layered on by GameConfig.
    std::vector<std::string> to_rows() const;
    static GridMap from_rows(const std::vector<std::string>& rows);

    friend bool operator==(const GridMap& a, const GridMap& b) {
        return a.width_ == b.width_ && a.height_ == b.height_ && a.cells_ == b.cells_;
    }

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<Terrain> cells_;
};

}  // namespace scsa
