#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "dycktiles/hermite.hpp"
#include "dycktiles/paths.hpp"
#include "dycktiles/poly.hpp"

namespace dycktiles {

// Word over the multiset {1^k, ..., n^k} such that anything strictly
// between two copies of i exceeds i.
struct StirlingPermutation {
  std::vector<int> word;
  int n = 0, k = 1;
  bool operator==(const StirlingPermutation&) const = default;
  bool operator<(const StirlingPermutation& o) const { return word < o.word; }
};

bool is_stirling_permutation(const StirlingPermutation& p);
std::vector<StirlingPermutation> enumerate_stirling(int n, int k);

// k-inversions: pairs (i, j) with p.word[j-1] > i and the first i after
// position j.  (row, column), both 1-based.
std::set<std::pair<int, int>> k_inversions(const StirlingPermutation& p);
long long inv_k(const StirlingPermutation& p);

// sum over S_n^(k) of q^{inv_k}.
MultiPoly inv_gf(int n, int k);

std::vector<StirlingPermutation> k_bruhat_covers(const StirlingPermutation& p);

// Comparability in the k-Bruhat order (transitive closure of covers,
// memoized per (n, k)).
bool k_bruhat_leq(const StirlingPermutation& a, const StirlingPermutation& b);

bool is_132_avoiding_stirling(const StirlingPermutation& p);

// 132-avoiding Stirling permutations <-> k-Dyck paths; the cells above the
// path are exactly the k-inversions.
LatticePath alpha_k(const StirlingPermutation& p);
StirlingPermutation alpha_k_inv(const LatticePath& path);

// Interval {pi >= sigma} -> k-Hermite histories of shape alpha_k(sigma);
// the label in row i counts the k-inversions of pi in that row below the
// path.  Weight = inv_k(pi) - inv_k(sigma).
HermiteHistory interval_to_hermite(const StirlingPermutation& base,
                                   const StirlingPermutation& member);

// Set partition of [kn] into k-element noncrossing blocks.
struct NoncrossingPartition {
  std::vector<std::vector<int>> blocks;  // each sorted; blocks sorted by min
  int n = 0, k = 1;
  bool operator==(const NoncrossingPartition&) const = default;
  bool operator<(const NoncrossingPartition& o) const { return blocks < o.blocks; }
};

bool is_noncrossing(const NoncrossingPartition& p);
std::vector<NoncrossingPartition> enumerate_ncp(int n, int k);

// Stirling permutation <-> (noncrossing partition, linear extension).
// The extension labels block b with the letter occupying b's positions.
std::pair<NoncrossingPartition, std::vector<int>> stirling_to_ncp(
    const StirlingPermutation& p);
StirlingPermutation ncp_to_stirling(const NoncrossingPartition& ncp,
                                    const std::vector<int>& labels);

// Nesting order on blocks as a plane forest (children ordered by position).
PlaneForest nesting_poset(const NoncrossingPartition& p);

struct HookFormulaReport {
  bool multifactorial_ok = false;     // prod (ik+1) = sum n!/prod h
  bool q_double_factorial_ok = false; // k = 2 refinement (independent of n,k args)
  std::string detail;
};

// (a) multifactorial hook length formula at (n, k);
// (b) q-double-factorial hook length formula at the same n (k = 2 form).
HookFormulaReport verify_hook_formulas(int n, int k);

}  // namespace dycktiles
