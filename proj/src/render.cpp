#include "dycktiles/render.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "dycktiles/stirling.hpp"
#include "dycktiles/textio.hpp"

namespace dycktiles {

namespace {

constexpr int kUnit = 24;

// y grows upward in lattice coordinates; SVG y grows downward.
int sx(int x) { return kUnit + x * kUnit; }
int sy(int y, int n) { return kUnit + (n - y) * kUnit; }

void path_polyline(std::ostringstream& out, const LatticePath& p, int n,
                   const char* color, int width) {
  out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << width
      << "\" points=\"";
  int x = 0, y = 0;
  out << sx(x) << ',' << sy(y, n);
  for (Step s : p.steps) {
    if (s == Step::Up)
      ++y;
    else
      ++x;
    out << ' ' << sx(x) << ',' << sy(y, n);
  }
  out << "\"/>\n";
}

// Boundary of a ribbon tile as an SVG path: walk the outline of the cell set.
std::string tile_outline(const DyckTile& t, int n) {
  // Collect unit edges of all cells; edges used twice are interior.
  std::map<std::pair<std::pair<int, int>, std::pair<int, int>>, int> edges;
  auto add = [&edges](int x1, int y1, int x2, int y2) {
    auto a = std::make_pair(x1, y1), b = std::make_pair(x2, y2);
    if (b < a) std::swap(a, b);
    ++edges[{a, b}];
  };
  for (const Cell& c : t.cells) {
    add(c.x, c.y, c.x + 1, c.y);
    add(c.x, c.y + 1, c.x + 1, c.y + 1);
    add(c.x, c.y, c.x, c.y + 1);
    add(c.x + 1, c.y, c.x + 1, c.y + 1);
  }
  // Chain boundary edges into a loop.
  std::multimap<std::pair<int, int>, std::pair<int, int>> adj;
  for (auto& [e, cnt] : edges)
    if (cnt == 1) {
      adj.insert({e.first, e.second});
      adj.insert({e.second, e.first});
    }
  std::ostringstream out;
  if (adj.empty()) return "";
  std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> used;
  auto start = adj.begin()->first;
  auto cur = start;
  out << "M " << sx(cur.first) << ' ' << sy(cur.second, n);
  while (true) {
    auto range = adj.equal_range(cur);
    bool moved = false;
    for (auto it = range.first; it != range.second; ++it) {
      auto key = std::minmax(cur, it->second);
      if (used.count({key.first, key.second})) continue;
      used.insert({key.first, key.second});
      cur = it->second;
      out << " L " << sx(cur.first) << ' ' << sy(cur.second, n);
      moved = true;
      break;
    }
    if (!moved) break;
  }
  out << " Z";
  return out.str();
}

}  // namespace

std::string render_tiling_svg(const Tiling& t) {
  int n = t.upper.semilength();
  int w = t.k * n, h = n;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (w + 2) * kUnit
      << "\" height=\"" << (h + 2) * kUnit << "\">\n";
  // grid
  for (int x = 0; x <= w; ++x)
    out << "<line x1=\"" << sx(x) << "\" y1=\"" << sy(0, n) << "\" x2=\"" << sx(x)
        << "\" y2=\"" << sy(h, n) << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
  for (int y = 0; y <= h; ++y)
    out << "<line x1=\"" << sx(0) << "\" y1=\"" << sy(y, n) << "\" x2=\"" << sx(w)
        << "\" y2=\"" << sy(y, n) << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
  // the line y = x/k
  out << "<line x1=\"" << sx(0) << "\" y1=\"" << sy(0, n) << "\" x2=\"" << sx(w)
      << "\" y2=\"" << sy(h, n) << "\" stroke=\"#bbbbbb\" stroke-width=\"1\" "
      << "stroke-dasharray=\"4 3\"/>\n";
  for (const auto& tile : t.tiles) {
    std::string d = tile_outline(tile, n);
    if (!d.empty())
      out << "<path d=\"" << d
          << "\" fill=\"#f5deb3\" stroke=\"#8b4513\" stroke-width=\"2\"/>\n";
  }
  path_polyline(out, t.lower, n, "#1f77b4", 3);
  path_polyline(out, t.upper, n, "#d62728", 3);
  out << "</svg>\n";
  return out.str();
}

std::string render_tiling_ascii(const Tiling& t) {
  int n = t.upper.semilength();
  int w = t.k * n;
  std::vector<std::string> grid(n, std::string(w, ' '));
  auto hl = t.lower.heights();
  for (int x = 0; x < w; ++x)
    for (int y = 0; y < hl[x]; ++y) grid[y][x] = '.';
  const std::string letters = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
  for (size_t i = 0; i < t.tiles.size(); ++i)
    for (const Cell& c : t.tiles[i].cells)
      grid[c.y][c.x] = letters[i % letters.size()];
  std::ostringstream out;
  for (int y = n - 1; y >= 0; --y) out << grid[y] << '\n';
  return out.str();
}

std::string render_stirling_hasse_dot(int n, int k) {
  auto elems = enumerate_stirling(n, k);
  std::ostringstream out;
  out << "digraph hasse {\nrankdir=BT;\n";
  for (const auto& p : elems)
    out << "\"" << stirling_str(p) << "\";\n";
  for (const auto& p : elems)
    for (const auto& c : k_bruhat_covers(p))
      out << "\"" << stirling_str(p) << "\" -> \"" << stirling_str(c) << "\";\n";
  out << "}\n";
  return out.str();
}

std::string render_stirling_hasse_svg(int n, int k) {
  auto elems = enumerate_stirling(n, k);
  // Layout by rank; x spreads elements of equal rank.
  std::map<long long, std::vector<int>> by_rank;
  for (int i = 0; i < static_cast<int>(elems.size()); ++i)
    by_rank[inv_k(elems[i])].push_back(i);
  long long max_rank = by_rank.empty() ? 0 : by_rank.rbegin()->first;
  size_t max_width = 0;
  for (auto& [r, v] : by_rank) max_width = std::max(max_width, v.size());
  int cw = 110, ch = 70;
  int width = static_cast<int>(max_width + 1) * cw;
  int height = static_cast<int>(max_rank + 2) * ch;
  std::map<int, std::pair<int, int>> pos;
  for (auto& [r, v] : by_rank) {
    for (size_t i = 0; i < v.size(); ++i) {
      int x = static_cast<int>((i + 1) * width / (v.size() + 1));
      int y = height - static_cast<int>((r + 1) * ch);
      pos[v[i]] = {x, y};
    }
  }
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < static_cast<int>(elems.size()); ++i) index[elems[i].word] = i;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\">\n";
  for (int i = 0; i < static_cast<int>(elems.size()); ++i)
    for (const auto& c : k_bruhat_covers(elems[i])) {
      auto [x1, y1] = pos[i];
      auto [x2, y2] = pos[index.at(c.word)];
      out << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
          << "\" stroke=\"#555555\" stroke-width=\"1\"/>\n";
    }
  for (int i = 0; i < static_cast<int>(elems.size()); ++i) {
    auto [x, y] = pos[i];
    out << "<text x=\"" << x << "\" y=\"" << y
        << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"14\">"
        << stirling_str(elems[i]) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace dycktiles
