#pragma once

#include <vector>

#include "dycktiles/orders.hpp"
#include "dycktiles/paths.hpp"
#include "dycktiles/tilings.hpp"

namespace dycktiles {

// k-Hermite history: a k-Dyck path with one label per up step, the i-th
// label in {0, ..., HT(u_i)-1}.
struct HermiteHistory {
  LatticePath path;
  std::vector<int> labels;  // one per up step, in path order
  bool operator==(const HermiteHistory&) const = default;

  long long weight() const;
};

bool is_valid_history(const HermiteHistory& h);
std::vector<HermiteHistory> enumerate_hermite(const LatticePath& path);

// Travel construction: label of an up step u of the upper path is the
// number of tiles traveled entering at u (entry = left side of the lowest
// cell, exit = right side of the rightmost cell).
HermiteHistory tiling_to_hermite(const Tiling& t);

// Recursive inverse; the result has upper path h.path.
Tiling hermite_to_tiling(const HermiteHistory& h);

// Cut-and-stretch machinery of the inverse construction: insert an up step
// and k down steps at the unique point of coordinate sum s.
LatticePath stretch_path(const LatticePath& p, int s, int k);
DyckTile stretch_tile(const DyckTile& t, int s, int k);

// Perfect matching on {1..2n} stored as 0-based partner array.
struct Matching {
  std::vector<int> partner;
  bool operator==(const Matching&) const = default;

  int size() const { return static_cast<int>(partner.size()); }
  LatticePath shape() const;  // openers become up steps (k = 1)
};

bool is_valid_matching(const Matching& m);
long long crossings(const Matching& m);
std::vector<Matching> enumerate_matchings(const LatticePath& shape);

// Crossing-preserving bijection with Hermite histories (k = 1 only).
Matching hermite_to_matching(const HermiteHistory& h);
HermiteHistory matching_to_hermite(const Matching& m);

// The dot construction: arc (i, j) places a dot in the row left of up step
// i and the column below down step j; read as a permutation.
Permutation matching_to_permutation(const Matching& m);

}  // namespace dycktiles
