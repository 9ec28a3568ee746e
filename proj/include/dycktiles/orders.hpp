#pragma once

#include <set>
#include <utility>
#include <vector>

#include "dycktiles/paths.hpp"
#include "dycktiles/poly.hpp"

namespace dycktiles {

// One-line permutation of {1..n}.
using Permutation = std::vector<int>;

bool is_permutation(const Permutation& p);
int inv(const Permutation& p);
std::set<std::pair<int, int>> inversion_set(const Permutation& p);

std::vector<Permutation> enumerate_permutations(int n);

// Pattern avoidance for patterns 132 and 312 (exhaustive triple scan).
bool avoids(const Permutation& p, int pattern);

// alpha: 132-avoiding permutation <-> Dyck path whose above-path cells are
// the inversion cells of the permutation in the n x n diagram.
LatticePath alpha(const Permutation& p);
Permutation alpha_inv(const LatticePath& path);

// Bruhat order via the rank-matrix criterion.
bool bruhat_leq(const Permutation& a, const Permutation& b);
// Covers in Bruhat order (test oracle for the rank-matrix criterion).
std::vector<Permutation> bruhat_covers(const Permutation& a);

// Left weak order: b reachable from a by left multiplications by adjacent
// transpositions, each raising inv by one.  Criterion: containment of
// value-inversion sets.
bool weak_leq(const Permutation& a, const Permutation& b);

enum class OrderKind { Bruhat, Weak };

// sum over {pi >= base} of q^{inv(pi) - inv(base)}.
MultiPoly interval_gf(const Permutation& base, OrderKind order);

}  // namespace dycktiles
