#pragma once

#include <string>

#include "dycktiles/tilings.hpp"

namespace dycktiles {

// Deterministic SVG: unit grid, the line y = x/k, both paths and one
// outline per tile.
std::string render_tiling_svg(const Tiling& t);

// ASCII art, one character block per cell; letters identify tiles.
std::string render_tiling_ascii(const Tiling& t);

// Hasse diagram of the k-Bruhat order on Stirling permutations.
std::string render_stirling_hasse_svg(int n, int k);
std::string render_stirling_hasse_dot(int n, int k);

}  // namespace dycktiles
