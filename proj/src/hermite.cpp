#include "dycktiles/hermite.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dycktiles {

long long HermiteHistory::weight() const {
  long long w = 0;
  for (int l : labels) w += l;
  return w;
}

bool is_valid_history(const HermiteHistory& h) {
  if (!is_k_dyck(h.path)) return false;
  auto ups = h.path.up_step_indices();
  if (h.labels.size() != ups.size()) return false;
  for (size_t i = 0; i < ups.size(); ++i) {
    int ht = up_step_height(h.path, static_cast<int>(i) + 1);
    if (h.labels[i] < 0 || h.labels[i] >= ht) return false;
  }
  return true;
}

std::vector<HermiteHistory> enumerate_hermite(const LatticePath& path) {
  if (!is_k_dyck(path)) throw std::invalid_argument("enumerate_hermite: invalid path");
  int m = path.semilength();
  std::vector<int> ht(m);
  for (int i = 0; i < m; ++i) ht[i] = up_step_height(path, i + 1);
  std::vector<HermiteHistory> out;
  std::vector<int> labels(m, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == m) {
      out.push_back({path, labels});
      return;
    }
    for (int v = 0; v < ht[i]; ++v) {
      labels[i] = v;
      rec(i + 1);
    }
    labels[i] = 0;
  };
  rec(0);
  return out;
}

namespace {

// Vertical unit edge keyed by its lower endpoint.
struct Edge {
  int x, y;
  auto operator<=>(const Edge&) const = default;
};

Edge entry_of(const DyckTile& t) { return {t.cells.front().x, t.cells.front().y}; }
Edge exit_of(const DyckTile& t) { return {t.cells.back().x + 1, t.cells.back().y}; }

}  // namespace

HermiteHistory tiling_to_hermite(const Tiling& t) {
  std::map<Edge, int> entry;  // entry edge -> tile index
  for (int i = 0; i < static_cast<int>(t.tiles.size()); ++i)
    entry[entry_of(t.tiles[i])] = i;
  HermiteHistory h;
  h.path = t.upper;
  for (int idx : t.upper.up_step_indices()) {
    auto [a, b] = t.upper.point_before(idx);
    Edge cur{a, b};
    int traveled = 0;
    auto it = entry.find(cur);
    while (it != entry.end()) {
      ++traveled;
      cur = exit_of(t.tiles[it->second]);
      it = entry.find(cur);
    }
    h.labels.push_back(traveled);
  }
  return h;
}

// Insert an up step and k down steps at the unique path point whose
// coordinate sum is s.
LatticePath stretch_path(const LatticePath& p, int s, int k) {
  LatticePath q;
  q.k = p.k;
  int x = 0, y = 0;
  bool inserted = false;
  auto insert_here = [&]() {
    q.steps.push_back(Step::Up);
    for (int i = 0; i < k; ++i) q.steps.push_back(Step::Down);
    inserted = true;
  };
  if (x + y == s) insert_here();
  for (Step st : p.steps) {
    q.steps.push_back(st);
    if (st == Step::Up)
      ++y;
    else
      ++x;
    if (!inserted && x + y == s) insert_here();
  }
  if (!inserted) throw std::logic_error("stretch_path: no point with the given sum");
  return q;
}

// Cut-and-stretch for one tile.  Cells with center sum below s stay, cells
// above move by (k, 1); a cell on the cut keeps its position and the word
// gains an up move and k down moves right after it.
DyckTile stretch_tile(const DyckTile& t, int s, int k) {
  int lo = t.cells.front().x + t.cells.front().y + 1;
  int hi = t.cells.back().x + t.cells.back().y + 1;
  if (hi < s) return t;
  if (lo > s) return t.translated(k, 1);
  DyckTile r;
  for (const Cell& c : t.cells) {
    int sum = c.x + c.y + 1;
    if (sum < s) {
      r.cells.push_back(c);
    } else if (sum == s) {
      r.cells.push_back(c);
      for (int i = 0; i <= k; ++i)
        r.cells.push_back({c.x + i, c.y + 1});
    } else {
      r.cells.push_back({c.x + k, c.y + 1});
    }
  }
  return r;
}

namespace {

void sort_tiles(std::vector<DyckTile>& tiles) {
  std::sort(tiles.begin(), tiles.end(), [](const DyckTile& a, const DyckTile& b) {
    return std::tie(a.cells.front().y, a.cells.front().x) <
           std::tie(b.cells.front().y, b.cells.front().x);
  });
}

}  // namespace

Tiling hermite_to_tiling(const HermiteHistory& h) {
  if (!is_valid_history(h)) throw std::invalid_argument("hermite_to_tiling: invalid history");
  const LatticePath& mu = h.path;
  int k = mu.k;
  int nsteps = static_cast<int>(mu.steps.size());

  // Case 1: an up step with positive label followed by a down step.
  auto ups = mu.up_step_indices();
  for (size_t ui = 0; ui < ups.size(); ++ui) {
    int i = ups[ui];
    if (h.labels[ui] >= 1 && i + 1 < nsteps && mu.steps[i + 1] == Step::Down) {
      HermiteHistory h2 = h;
      std::swap(h2.path.steps[i], h2.path.steps[i + 1]);
      --h2.labels[ui];
      auto [a, b] = mu.point_before(i);
      Tiling t = hermite_to_tiling(h2);
      t.upper = mu;
      t.tiles.push_back(DyckTile{{Cell{a, b}}});
      sort_tiles(t.tiles);
      return t;
    }
  }

  // Case 2: all labels on down-followed up steps are zero.  Remove the
  // leftmost up step followed by k down steps, recurse, then cut along the
  // slope -1 line through its start point and re-insert the steps.
  for (size_t ui = 0; ui < ups.size(); ++ui) {
    int i = ups[ui];
    bool k_downs = i + k < nsteps;
    for (int j = 1; j <= k && k_downs; ++j)
      if (mu.steps[i + j] != Step::Down) k_downs = false;
    if (!k_downs) continue;
    if (h.labels[ui] != 0)
      throw std::logic_error("hermite_to_tiling: up step before a down run has nonzero label");
    auto [a, b] = mu.point_before(i);
    int s = a + b;
    HermiteHistory h2;
    h2.path.k = k;
    h2.path.steps = mu.steps;
    h2.path.steps.erase(h2.path.steps.begin() + i, h2.path.steps.begin() + i + k + 1);
    h2.labels = h.labels;
    h2.labels.erase(h2.labels.begin() + ui);
    Tiling t2 = hermite_to_tiling(h2);
    Tiling t;
    t.k = k;
    t.upper = mu;
    t.lower = stretch_path(t2.lower, s, k);
    for (const DyckTile& tile : t2.tiles) t.tiles.push_back(stretch_tile(tile, s, k));
    sort_tiles(t.tiles);
    return t;
  }

  // No up step at all: the empty path.
  if (mu.steps.empty()) return Tiling{mu, mu, k, {}};
  throw std::logic_error("hermite_to_tiling: unreachable");
}

LatticePath Matching::shape() const {
  LatticePath p;
  p.k = 1;
  for (int i = 0; i < size(); ++i)
    p.steps.push_back(partner[i] > i ? Step::Up : Step::Down);
  return p;
}

bool is_valid_matching(const Matching& m) {
  int n = m.size();
  if (n % 2 != 0) return false;
  for (int i = 0; i < n; ++i) {
    int j = m.partner[i];
    if (j < 0 || j >= n || j == i || m.partner[j] != i) return false;
  }
  return true;
}

long long crossings(const Matching& m) {
  long long c = 0;
  for (int i = 0; i < m.size(); ++i) {
    int j = m.partner[i];
    if (j < i) continue;
    for (int k2 = i + 1; k2 < j; ++k2) {
      int l = m.partner[k2];
      if (k2 < l && l > j) ++c;  // i < k2 < j < l
    }
  }
  return c;
}

std::vector<Matching> enumerate_matchings(const LatticePath& shape) {
  if (shape.k != 1 || !is_k_dyck(shape))
    throw std::invalid_argument("enumerate_matchings: shape must be a Dyck path");
  int n2 = static_cast<int>(shape.steps.size());
  std::vector<Matching> out;
  Matching m;
  m.partner.assign(n2, -1);
  std::vector<int> open;
  std::function<void(int)> rec = [&](int i) {
    if (i == n2) {
      out.push_back(m);
      return;
    }
    if (shape.steps[i] == Step::Up) {
      open.push_back(i);
      rec(i + 1);
      open.pop_back();
    } else {
      for (size_t t = 0; t < open.size(); ++t) {
        int o = open[t];
        m.partner[o] = i;
        m.partner[i] = o;
        open.erase(open.begin() + t);
        rec(i + 1);
        open.insert(open.begin() + t, o);
        m.partner[o] = -1;
        m.partner[i] = -1;
      }
    }
  };
  rec(0);
  return out;
}

Matching hermite_to_matching(const HermiteHistory& h) {
  if (h.path.k != 1) throw std::invalid_argument("hermite_to_matching: k must be 1");
  if (!is_valid_history(h)) throw std::invalid_argument("hermite_to_matching: invalid history");
  int n2 = static_cast<int>(h.path.steps.size());
  Matching m;
  m.partner.assign(n2, -1);
  // Each open arc carries the remaining number of older arcs that must
  // close before it does.  A down step closes the newest open arc whose
  // counter is zero and decrements the counters of the arcs opened later.
  std::vector<std::pair<int, int>> open;  // (position, remaining counter)
  int ui = 0;
  for (int i = 0; i < n2; ++i) {
    if (h.path.steps[i] == Step::Up) {
      open.emplace_back(i, h.labels[ui++]);
    } else {
      int pick = -1;
      for (int t = static_cast<int>(open.size()) - 1; t >= 0; --t)
        if (open[t].second == 0) {
          pick = t;
          break;
        }
      if (pick < 0) throw std::logic_error("hermite_to_matching: stuck (invalid labels)");
      int o = open[pick].first;
      m.partner[o] = i;
      m.partner[i] = o;
      for (size_t t = pick + 1; t < open.size(); ++t) --open[t].second;
      open.erase(open.begin() + pick);
    }
  }
  return m;
}

HermiteHistory matching_to_hermite(const Matching& m) {
  if (!is_valid_matching(m)) throw std::invalid_argument("matching_to_hermite: invalid");
  HermiteHistory h;
  h.path = m.shape();
  // Label of the up step at position i: arcs opened earlier that close
  // strictly inside (i, partner(i)).
  for (int i = 0; i < m.size(); ++i) {
    if (m.partner[i] < i) continue;
    int j = m.partner[i];
    int label = 0;
    for (int o = 0; o < i; ++o) {
      int c = m.partner[o];
      if (c > o && c > i && c < j) ++label;
    }
    h.labels.push_back(label);
  }
  if (!is_valid_history(h)) throw std::logic_error("matching_to_hermite: produced invalid history");
  return h;
}

Permutation matching_to_permutation(const Matching& m) {
  if (!is_valid_matching(m)) throw std::invalid_argument("matching_to_permutation: invalid");
  LatticePath shape = m.shape();
  if (!is_k_dyck(shape)) throw std::invalid_argument("matching_to_permutation: bad shape");
  int n = shape.semilength();
  Permutation p(n, 0);
  // Arc (i, j): up step i starts at height b, down step j at x-offset c;
  // the dot lands at matrix position (row n-b, column c+1).
  std::vector<int> xoff(m.size()), yoff(m.size());
  int x = 0, y = 0;
  for (int i = 0; i < m.size(); ++i) {
    xoff[i] = x;
    yoff[i] = y;
    if (shape.steps[i] == Step::Up)
      ++y;
    else
      ++x;
  }
  for (int i = 0; i < m.size(); ++i) {
    int j = m.partner[i];
    if (j < i) continue;
    p[xoff[j]] = n - yoff[i];
  }
  return p;
}

}  // namespace dycktiles
