#pragma once

#include <string>

#include "dycktiles/hermite.hpp"
#include "dycktiles/paths.hpp"
#include "dycktiles/stirling.hpp"
#include "dycktiles/symmetric.hpp"
#include "dycktiles/tilings.hpp"

namespace dycktiles {

// Path <-> string over {U, D}, e.g. "UUDDDD".
std::string path_str(const LatticePath& p);
LatticePath parse_path(const std::string& s, int k);

// Forest <-> balanced parenthesis string, e.g. "(()())()".
std::string forest_str(const PlaneForest& f);
PlaneForest parse_forest(const std::string& s);

// Permutation: comma-free one-line word for n <= 9, comma-separated above.
std::string permutation_str(const Permutation& p);
Permutation parse_permutation(const std::string& s);

// Stirling word: digits for n <= 9, comma-separated above.
std::string stirling_str(const StirlingPermutation& p);
StirlingPermutation parse_stirling(const std::string& s, int k);

// Matching: comma-separated 1-based arcs "1-5,2-3,...".
std::string matching_str(const Matching& m);
Matching parse_matching(const std::string& s);

// Hermite history: path string, colon, comma-separated labels.
std::string history_str(const HermiteHistory& h);
HermiteHistory parse_history(const std::string& s, int k);

// Noncrossing partition: blocks as "{1,5,9}{2,3,4}".
std::string ncp_str(const NoncrossingPartition& p);

// Marked labeling of a symmetric forest: "paren-string:labels with * marks",
// e.g. "(()):1*,2" (left part parens with center suffix flags handled by
// parse_symmetric_forest).
std::string marked_labeling_str(const MarkedIncreasingLabeling& l);

// Symmetric forest: left-part parenthesis string where the center chain is
// written with square brackets, e.g. "(()) [()]".
std::string symmetric_forest_str(const SymmetricForest& f);
SymmetricForest parse_symmetric_forest(const std::string& s);

// Tiling JSON: {"k":..,"lower":"..","upper":"..","tiles":[[[x,y],..],..]}.
std::string tiling_json(const Tiling& t);
Tiling parse_tiling_json(const std::string& s);

}  // namespace dycktiles
