#include "dycktiles/tilings.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace dycktiles {

bool DyckTile::contains(const Cell& c) const {
  return std::find(cells.begin(), cells.end(), c) != cells.end();
}

bool DyckTile::is_valid(int k) const {
  if (cells.empty()) return false;
  long long u = 0, d = 0;
  for (size_t i = 1; i < cells.size(); ++i) {
    int dx = cells[i].x - cells[i - 1].x;
    int dy = cells[i].y - cells[i - 1].y;
    if (dx == 0 && dy == 1)
      ++u;
    else if (dx == 1 && dy == 0)
      ++d;
    else
      return false;
    if (d > k * u) return false;
  }
  return d == k * u;
}

DyckTile DyckTile::translated(int dx, int dy) const {
  DyckTile t;
  t.cells.reserve(cells.size());
  for (const Cell& c : cells) t.cells.push_back({c.x + dx, c.y + dy});
  return t;
}

bool paths_nested(const LatticePath& lower, const LatticePath& upper) {
  if (lower.k != upper.k || lower.semilength() != upper.semilength()) return false;
  auto hl = lower.heights(), hu = upper.heights();
  for (size_t x = 0; x < hl.size(); ++x)
    if (hu[x] < hl[x]) return false;
  return true;
}

std::vector<Cell> region_cells(const LatticePath& lower, const LatticePath& upper) {
  if (!is_k_dyck(lower) || !is_k_dyck(upper))
    throw std::invalid_argument("region_cells: invalid path");
  if (!paths_nested(lower, upper))
    throw std::invalid_argument("region_cells: not nested");
  auto hl = lower.heights(), hu = upper.heights();
  std::vector<Cell> cells;
  for (int x = 0; x < static_cast<int>(hl.size()); ++x)
    for (int y = hl[x]; y < hu[x]; ++y) cells.push_back({x, y});
  // Sorted by (y, x): the scan order of the enumerator.
  std::sort(cells.begin(), cells.end(),
            [](const Cell& a, const Cell& b) { return std::tie(a.y, a.x) < std::tie(b.y, b.x); });
  return cells;
}

namespace {

struct RegionIndex {
  std::vector<Cell> cells;  // sorted by (y, x)
  std::map<Cell, int> index;
  std::vector<int> hl;

  explicit RegionIndex(const LatticePath& lower, const LatticePath& upper)
      : cells(region_cells(lower, upper)), hl(lower.heights()) {
    for (int i = 0; i < static_cast<int>(cells.size()); ++i) index[cells[i]] = i;
  }

  bool below_lower(const Cell& c) const {
    if (c.x < 0 || c.x >= static_cast<int>(hl.size())) return false;
    return c.y + 1 <= hl[c.x];
  }
};

// Cover-inclusive check for one tile against already placed tiles.  The
// translate by (1,-1) must lie completely below the lower path, or inside a
// single other tile; any tile able to contain it is already placed because
// its cells start strictly earlier in (y, x) order.
bool tile_cover_ok(const DyckTile& tile, const RegionIndex& region,
                   const std::vector<DyckTile>& placed) {
  DyckTile tr = tile.translated(1, -1);
  bool all_below = true;
  for (const Cell& c : tr.cells)
    if (!region.below_lower(c)) all_below = false;
  if (all_below) return true;
  for (const DyckTile& other : placed) {
    if (other.contains(tr.cells.front())) {
      for (const Cell& c : tr.cells)
        if (!other.contains(c)) return false;
      return true;
    }
  }
  return false;
}

struct Enumerator {
  const RegionIndex& region;
  int k;
  std::vector<bool> occupied;
  std::vector<DyckTile> placed;
  std::vector<Tiling>& out;
  const LatticePath& lower;
  const LatticePath& upper;

  void run() {
    occupied.assign(region.cells.size(), false);
    next_tile(0);
  }

  void next_tile(int scan_from) {
    int first = -1;
    for (int i = scan_from; i < static_cast<int>(region.cells.size()); ++i)
      if (!occupied[i]) {
        first = i;
        break;
      }
    if (first < 0) {
      out.push_back({lower, upper, k, placed});
      return;
    }
    DyckTile tile;
    tile.cells.push_back(region.cells[first]);
    occupied[first] = true;
    grow(tile, 0, 0, first);
    occupied[first] = false;
  }

  // u/d: counts of up/down center moves of the tile so far.
  void grow(DyckTile& tile, long long u, long long d, int first_index) {
    if (d == k * u) {
      if (tile_cover_ok(tile, region, placed)) {
        placed.push_back(tile);
        next_tile(first_index + 1);
        placed.pop_back();
      }
    }
    const Cell last = tile.cells.back();
    // Extend with an up move, then a down move.
    Cell up{last.x, last.y + 1};
    auto it = region.index.find(up);
    if (it != region.index.end() && !occupied[it->second]) {
      occupied[it->second] = true;
      tile.cells.push_back(up);
      grow(tile, u + 1, d, first_index);
      tile.cells.pop_back();
      occupied[it->second] = false;
    }
    if (d + 1 <= k * u) {
      Cell dn{last.x + 1, last.y};
      auto jt = region.index.find(dn);
      if (jt != region.index.end() && !occupied[jt->second]) {
        occupied[jt->second] = true;
        tile.cells.push_back(dn);
        grow(tile, u, d + 1, first_index);
        tile.cells.pop_back();
        occupied[jt->second] = false;
      }
    }
  }
};

}  // namespace

bool is_cover_inclusive(const Tiling& t) {
  RegionIndex region(t.lower, t.upper);
  for (size_t i = 0; i < t.tiles.size(); ++i) {
    DyckTile tr = t.tiles[i].translated(1, -1);
    bool all_below = true;
    for (const Cell& c : tr.cells)
      if (!region.below_lower(c)) all_below = false;
    if (all_below) continue;
    bool ok = false;
    for (size_t j = 0; j < t.tiles.size() && !ok; ++j) {
      if (j == i) continue;
      if (!t.tiles[j].contains(tr.cells.front())) continue;
      ok = true;
      for (const Cell& c : tr.cells)
        if (!t.tiles[j].contains(c)) ok = false;
      break;
    }
    if (!ok) return false;
  }
  return true;
}

std::vector<Tiling> enumerate_tilings(const LatticePath& lower,
                                      const LatticePath& upper, int k) {
  if (lower.k != k || upper.k != k)
    throw std::invalid_argument("enumerate_tilings: slope mismatch");
  RegionIndex region(lower, upper);
  std::vector<Tiling> out;
  Enumerator e{region, k, {}, {}, out, lower, upper};
  e.run();
  return out;
}

std::vector<LatticePath> paths_above(const LatticePath& lower) {
  std::vector<LatticePath> out;
  for (auto& p : enumerate_k_dyck(lower.semilength(), lower.k))
    if (paths_nested(lower, p)) out.push_back(p);
  return out;
}

std::vector<LatticePath> paths_below(const LatticePath& upper) {
  std::vector<LatticePath> out;
  for (auto& p : enumerate_k_dyck(upper.semilength(), upper.k))
    if (paths_nested(p, upper)) out.push_back(p);
  return out;
}

std::vector<Tiling> enumerate_fixed_lower(const LatticePath& lower, int k) {
  std::vector<Tiling> out;
  for (const auto& mu : paths_above(lower))
    for (auto& t : enumerate_tilings(lower, mu, k)) out.push_back(std::move(t));
  return out;
}

std::vector<Tiling> enumerate_fixed_upper(const LatticePath& upper, int k) {
  std::vector<Tiling> out;
  for (const auto& la : paths_below(upper))
    for (auto& t : enumerate_tilings(la, upper, k)) out.push_back(std::move(t));
  return out;
}

TilingStats stats(const Tiling& t) {
  TilingStats s;
  for (const auto& tile : t.tiles) s.area += tile.area();
  s.tiles = static_cast<long long>(t.tiles.size());
  if ((s.area + s.tiles) % 2 != 0)
    throw std::logic_error("stats: art is not an integer");
  if ((t.k * s.area + s.tiles) % (t.k + 1) != 0)
    throw std::logic_error("stats: art_k is not an integer");
  s.art = (s.area + s.tiles) / 2;
  s.art_k = (t.k * s.area + s.tiles) / (t.k + 1);
  return s;
}

MultiPoly gf_fixed_upper(const LatticePath& upper, int k) {
  MultiPoly gf;
  for (const auto& t : enumerate_fixed_upper(upper, k))
    gf += MultiPoly::monomial(1, stats(t).tiles);
  return gf;
}

MultiPoly gf_fixed_lower(const LatticePath& lower, int k) {
  MultiPoly gf;
  for (const auto& t : enumerate_fixed_lower(lower, k))
    gf += MultiPoly::monomial(1, stats(t).art_k);
  return gf;
}

}  // namespace dycktiles
