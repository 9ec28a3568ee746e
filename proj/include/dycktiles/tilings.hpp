#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "dycktiles/paths.hpp"
#include "dycktiles/poly.hpp"

namespace dycktiles {

struct Cell {
  int x = 0, y = 0;
  auto operator<=>(const Cell&) const = default;
};

// Ribbon tile whose cell centers trace a k-Dyck path.  Cells are stored in
// path order starting from the lowest-leftmost cell; consecutive centers
// differ by (0,1) or (1,0).
struct DyckTile {
  std::vector<Cell> cells;
  auto operator<=>(const DyckTile&) const = default;

  int area() const { return static_cast<int>(cells.size()); }
  bool contains(const Cell& c) const;
  // The word of center moves must be a complete k-Dyck path.
  bool is_valid(int k) const;
  DyckTile translated(int dx, int dy) const;
};

struct Tiling {
  LatticePath lower, upper;
  int k = 1;
  std::vector<DyckTile> tiles;  // sorted by first cell (y, then x)
  bool operator==(const Tiling&) const = default;
};

struct TilingStats {
  long long area = 0;
  long long tiles = 0;
  long long art = 0;    // (area + tiles)/2          (k = 1 statistic)
  long long art_k = 0;  // (k*area + tiles)/(k+1)
};

// Cells strictly between nested paths; throws when the paths are not nested
// or not compatible.
std::vector<Cell> region_cells(const LatticePath& lower, const LatticePath& upper);

bool paths_nested(const LatticePath& lower, const LatticePath& upper);

bool is_cover_inclusive(const Tiling& t);

// All cover-inclusive tilings of the region between nested k-Dyck paths,
// in a deterministic order.
std::vector<Tiling> enumerate_tilings(const LatticePath& lower,
                                      const LatticePath& upper, int k);

// Unions over all nested partners of the fixed path.
std::vector<Tiling> enumerate_fixed_lower(const LatticePath& lower, int k);
std::vector<Tiling> enumerate_fixed_upper(const LatticePath& upper, int k);

// All k-Dyck paths weakly above / below the given one (same n, k).
std::vector<LatticePath> paths_above(const LatticePath& lower);
std::vector<LatticePath> paths_below(const LatticePath& upper);

TilingStats stats(const Tiling& t);

// sum over D with fixed upper path of q^{tiles(D)}.
MultiPoly gf_fixed_upper(const LatticePath& upper, int k);
// sum over D with fixed lower path of q^{art or art_k(D)}.
MultiPoly gf_fixed_lower(const LatticePath& lower, int k);

}  // namespace dycktiles
