#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace dycktiles {

enum class Step : std::uint8_t { Up, Down };

// Lattice path over steps Up=(0,1), Down=(1,0) starting at the origin,
// with a slope parameter k.  A valid k-Dyck path of semilength n has n up
// steps, k*n down steps and never goes below the line y = x/k.
struct LatticePath {
  std::vector<Step> steps;
  int k = 1;

  int up_count() const;
  int down_count() const;
  int semilength() const { return up_count(); }
  bool operator==(const LatticePath& o) const = default;
  bool operator<(const LatticePath& o) const;

  // Start point of the i-th step (0-based) as (x, y).
  std::pair<int, int> point_before(int i) const;
  // Height profile: heights[x] is the y coordinate of the path over the
  // column [x, x+1], for x = 0 .. down_count()-1.
  std::vector<int> heights() const;
  // Indices of up steps, in path order.
  std::vector<int> up_step_indices() const;
};

bool is_k_dyck(const LatticePath& p);

// All k-Dyck paths of semilength n in lexicographic step order with D < U.
std::vector<LatticePath> enumerate_k_dyck(int n, int k);

// HT(u) for the i-th up step (1-based among up steps): squares between the
// step and y=x/k, plus 1.  Equals k*b - a + 1 for a step starting at (a,b).
int up_step_height(const LatticePath& p, int up_index);

// Plane forest with vertices 0..n-1; child order is significant.
struct PlaneForest {
  std::vector<int> roots;                 // in left-to-right order
  std::vector<std::vector<int>> children; // per vertex, left-to-right
  std::vector<int> parent;                // -1 for roots

  int size() const { return static_cast<int>(parent.size()); }
  bool operator==(const PlaneForest& o) const {
    return roots == o.roots && children == o.children;
  }

  std::vector<int> pre_order() const;
  std::vector<int> post_order() const;
  // Subtree sizes (hook lengths).
  std::vector<int> hooks() const;
  // true when u is a (weak) ancestor of v.
  bool is_ancestor(int u, int v) const;
};

// Dyck path (k=1) <-> plane forest: an up step opens a vertex, the matching
// down step closes it.
PlaneForest path_to_forest(const LatticePath& p);
LatticePath forest_to_path(const PlaneForest& f);

// All plane forests on n vertices (via Dyck paths).
std::vector<PlaneForest> enumerate_forests(int n);

// Increasing labeling: label[v] in 1..n, increasing from roots to leaves.
struct IncreasingLabeling {
  PlaneForest forest;
  std::vector<int> label;
};

std::vector<IncreasingLabeling> enumerate_increasing_labelings(const PlaneForest& f);

// Reading words: the permutation of labels in post-/pre-order.
std::vector<int> post_order_word(const IncreasingLabeling& l);
std::vector<int> pre_order_word(const IncreasingLabeling& l);

// Inversions of a labeling: pairs (i, j), i < j, where the vertex labeled j
// is to the left of (and incomparable to) the vertex labeled i.
std::set<std::pair<int, int>> labeling_inversions(const IncreasingLabeling& l);

// The unique labeling with pre-order word 1..n.
IncreasingLabeling minimal_labeling(const PlaneForest& f);

// u^{n1} d^{k n1} u^{n2} d^{k n2} ...
LatticePath zigzag_path(const std::vector<int>& composition, int k);

}  // namespace dycktiles
