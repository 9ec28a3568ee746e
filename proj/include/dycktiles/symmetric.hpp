#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dycktiles/hermite.hpp"
#include "dycktiles/paths.hpp"
#include "dycktiles/poly.hpp"
#include "dycktiles/tilings.hpp"

namespace dycktiles {

// Symmetric plane forest, stored as its left part (vertices on or left of
// the center line) plus a flag marking the center-line vertices.  Center
// vertices form a chain: the last root, then optionally the last child of
// the previous center vertex, and so on.
struct SymmetricForest {
  PlaneForest left;
  std::vector<bool> is_center;  // per left vertex
  bool operator==(const SymmetricForest&) const = default;

  int size() const { return left.size(); }
  int center_count() const;
};

bool is_valid_symmetric_forest(const SymmetricForest& f);
std::vector<SymmetricForest> enumerate_symmetric_forests(int n);

// Mirror-complete plane forest (center vertices kept single).
PlaneForest full_forest(const SymmetricForest& f);
// The symmetric Dyck path of the full forest.
LatticePath symmetric_forest_path(const SymmetricForest& f);

struct MarkedIncreasingLabeling {
  SymmetricForest forest;
  std::vector<int> label;    // labels 1..n on the left part, increasing
  std::vector<bool> marked;  // only non-center vertices may be marked
  bool operator==(const MarkedIncreasingLabeling&) const = default;
};

std::vector<MarkedIncreasingLabeling> enumerate_marked_labelings(const SymmetricForest& f);

// Inversions of the left-part labeling (same convention as unmarked ones).
long long marked_labeling_inversions(const MarkedIncreasingLabeling& l);
std::vector<int> mark_labels(const MarkedIncreasingLabeling& l);

bool is_symmetric_path(const LatticePath& p);
bool is_symmetric_tiling(const Tiling& t);
std::vector<LatticePath> enumerate_symmetric_paths(int n);

// All symmetric tilings with the given fixed lower path.
std::vector<Tiling> enumerate_symmetric_fixed_lower(const LatticePath& lower);
// All symmetric tilings with the given fixed upper path.
std::vector<Tiling> enumerate_symmetric_fixed_upper(const LatticePath& upper);

struct SymmetricStats {
  long long tiles_plus = 0, tiles_zero = 0;
  long long area_plus = 0, area_zero = 0;
  long long art_plus = 0, art_zero = 0;
};

SymmetricStats symmetric_stats(const Tiling& t);

// The staged-insertion bijection from marked increasing labelings onto
// symmetric tilings with fixed lower path.
Tiling phi(const MarkedIncreasingLabeling& l);

// Involutive sequences (counted by involution numbers).
bool is_involutive(const std::vector<int>& seq);
std::vector<std::vector<int>> enumerate_involutive(int k);

// Symmetric Hermite history: labels on the up steps among the first n
// steps of a symmetric Dyck path of semilength n.
struct SymmetricHermiteHistory {
  LatticePath mu;
  std::vector<int> labels;  // per up step of mu+, in path order
  bool operator==(const SymmetricHermiteHistory&) const = default;

  long long norm() const;  // sum of labels
  long long pos() const;   // positive labels on unmatched up steps
};

// Positions (path indices) of matched/unmatched up steps of mu+.
std::vector<int> matched_up_steps(const LatticePath& mu);
std::vector<int> unmatched_up_steps(const LatticePath& mu);

std::vector<SymmetricHermiteHistory> enumerate_symmetric_hermite(const LatticePath& mu);

// psi: symmetric histories <-> symmetric tilings with fixed upper path.
Tiling psi(const SymmetricHermiteHistory& h);
SymmetricHermiteHistory psi_inv(const Tiling& t);

// Symmetric matchings on [-n..-1, 1..n], closed under negating both arc
// endpoints; stored as matchings on positions 0..2n-1.
struct SymmetricMatchingStats {
  long long cro = 0;   // symmetric crossings
  long long sscr = 0;  // self-symmetric crossings
};

bool is_symmetric_matching(const Matching& m);
std::vector<Matching> enumerate_symmetric_matchings(const LatticePath& mu);
SymmetricMatchingStats symmetric_matching_stats(const Matching& m);

// f_k(q,t): f_0 = f_1 = 1, f_k = f_{k-1} + t q [k-1]_q f_{k-2}.
MultiPoly f_poly(int k);

// Trivariate generating function over all symmetric tilings of
// semilength-n shapes: q^{tiles_+ + tiles_0} t^{tiles_0} s^{#unmatched}.
MultiPoly grand_gf(int n);
// The closed-form right side, as an exact rational function.
RationalFn grand_gf_closed(int n);

}  // namespace dycktiles
