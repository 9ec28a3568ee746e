#include "dycktiles/paths.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace dycktiles {

int LatticePath::up_count() const {
  return static_cast<int>(std::count(steps.begin(), steps.end(), Step::Up));
}

int LatticePath::down_count() const {
  return static_cast<int>(steps.size()) - up_count();
}

bool LatticePath::operator<(const LatticePath& o) const {
  // Lexicographic with D < U, then by length, then by k.
  auto rank = [](Step s) { return s == Step::Down ? 0 : 1; };
  size_t n = std::min(steps.size(), o.steps.size());
  for (size_t i = 0; i < n; ++i)
    if (steps[i] != o.steps[i]) return rank(steps[i]) < rank(o.steps[i]);
  if (steps.size() != o.steps.size()) return steps.size() < o.steps.size();
  return k < o.k;
}

std::pair<int, int> LatticePath::point_before(int i) const {
  int x = 0, y = 0;
  for (int j = 0; j < i; ++j) {
    if (steps[j] == Step::Up)
      ++y;
    else
      ++x;
  }
  return {x, y};
}

std::vector<int> LatticePath::heights() const {
  std::vector<int> h;
  int y = 0;
  for (Step s : steps) {
    if (s == Step::Up)
      ++y;
    else
      h.push_back(y);
  }
  return h;
}

std::vector<int> LatticePath::up_step_indices() const {
  std::vector<int> idx;
  for (int i = 0; i < static_cast<int>(steps.size()); ++i)
    if (steps[i] == Step::Up) idx.push_back(i);
  return idx;
}

bool is_k_dyck(const LatticePath& p) {
  if (p.k < 1) return false;
  long long u = 0, d = 0;
  for (Step s : p.steps) {
    if (s == Step::Up)
      ++u;
    else if (++d > static_cast<long long>(p.k) * u)
      return false;
  }
  return d == static_cast<long long>(p.k) * u;
}

static void enum_paths_rec(int n, int k, int u, int d,
                           std::vector<Step>& cur,
                           std::vector<LatticePath>& out) {
  if (u == n && d == k * n) {
    out.push_back({cur, k});
    return;
  }
  // D < U lexicographically, so try Down first.
  if (d < k * u) {
    cur.push_back(Step::Down);
    enum_paths_rec(n, k, u, d + 1, cur, out);
    cur.pop_back();
  }
  if (u < n) {
    cur.push_back(Step::Up);
    enum_paths_rec(n, k, u + 1, d, cur, out);
    cur.pop_back();
  }
}

std::vector<LatticePath> enumerate_k_dyck(int n, int k) {
  if (n < 0 || k < 1) throw std::invalid_argument("enumerate_k_dyck: bad n or k");
  std::vector<LatticePath> out;
  std::vector<Step> cur;
  enum_paths_rec(n, k, 0, 0, cur, out);
  return out;
}

int up_step_height(const LatticePath& p, int up_index) {
  auto ups = p.up_step_indices();
  if (up_index < 1 || up_index > static_cast<int>(ups.size()))
    throw std::out_of_range("up_step_height: index out of range");
  auto [a, b] = p.point_before(ups[up_index - 1]);
  return p.k * b - a + 1;
}

PlaneForest path_to_forest(const LatticePath& p) {
  if (p.k != 1 || !is_k_dyck(p)) throw std::invalid_argument("path_to_forest: not a Dyck path");
  PlaneForest f;
  int n = p.semilength();
  f.children.resize(n);
  f.parent.assign(n, -1);
  std::vector<int> stack;
  int next = 0;
  for (Step s : p.steps) {
    if (s == Step::Up) {
      int v = next++;
      if (stack.empty())
        f.roots.push_back(v);
      else {
        f.parent[v] = stack.back();
        f.children[stack.back()].push_back(v);
      }
      stack.push_back(v);
    } else {
      stack.pop_back();
    }
  }
  return f;
}

static void forest_word(const PlaneForest& f, int v, std::vector<Step>& w) {
  w.push_back(Step::Up);
  for (int c : f.children[v]) forest_word(f, c, w);
  w.push_back(Step::Down);
}

LatticePath forest_to_path(const PlaneForest& f) {
  LatticePath p;
  p.k = 1;
  for (int r : f.roots) forest_word(f, r, p.steps);
  return p;
}

std::vector<PlaneForest> enumerate_forests(int n) {
  std::vector<PlaneForest> out;
  for (const auto& p : enumerate_k_dyck(n, 1)) out.push_back(path_to_forest(p));
  return out;
}

std::vector<int> PlaneForest::pre_order() const {
  std::vector<int> order;
  std::function<void(int)> walk = [&](int v) {
    order.push_back(v);
    for (int c : children[v]) walk(c);
  };
  for (int r : roots) walk(r);
  return order;
}

std::vector<int> PlaneForest::post_order() const {
  std::vector<int> order;
  std::function<void(int)> walk = [&](int v) {
    for (int c : children[v]) walk(c);
    order.push_back(v);
  };
  for (int r : roots) walk(r);
  return order;
}

std::vector<int> PlaneForest::hooks() const {
  std::vector<int> h(size(), 1);
  for (int v : post_order())
    for (int c : children[v]) h[v] += h[c];
  return h;
}

bool PlaneForest::is_ancestor(int u, int v) const {
  while (v != -1) {
    if (v == u) return true;
    v = parent[v];
  }
  return false;
}

std::vector<IncreasingLabeling> enumerate_increasing_labelings(const PlaneForest& f) {
  int n = f.size();
  std::vector<IncreasingLabeling> out;
  std::vector<int> label(n, 0);
  // Assign labels 1..n in increasing order; a vertex is eligible when its
  // parent is already labeled.  This prunes early and yields a
  // deterministic output order.
  std::function<void(int)> rec = [&](int next) {
    if (next > n) {
      out.push_back({f, label});
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (label[v] != 0) continue;
      if (f.parent[v] != -1 && label[f.parent[v]] == 0) continue;
      label[v] = next;
      rec(next + 1);
      label[v] = 0;
    }
  };
  rec(1);
  return out;
}

std::vector<int> post_order_word(const IncreasingLabeling& l) {
  std::vector<int> w;
  for (int v : l.forest.post_order()) w.push_back(l.label[v]);
  return w;
}

std::vector<int> pre_order_word(const IncreasingLabeling& l) {
  std::vector<int> w;
  for (int v : l.forest.pre_order()) w.push_back(l.label[v]);
  return w;
}

std::set<std::pair<int, int>> labeling_inversions(const IncreasingLabeling& l) {
  // (i, j), i < j, vertex labeled j strictly left of the vertex labeled i
  // and incomparable to it.  "Left" is pre-order position for incomparable
  // vertices.
  const PlaneForest& f = l.forest;
  int n = f.size();
  std::vector<int> pos(n);  // pre-order position per vertex
  auto pre = f.pre_order();
  for (int i = 0; i < n; ++i) pos[pre[i]] = i;
  std::vector<int> vertex_of(n + 1);
  for (int v = 0; v < n; ++v) vertex_of[l.label[v]] = v;
  std::set<std::pair<int, int>> inv;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      int vi = vertex_of[i], vj = vertex_of[j];
      if (f.is_ancestor(vi, vj) || f.is_ancestor(vj, vi)) continue;
      if (pos[vj] < pos[vi]) inv.insert({i, j});
    }
  return inv;
}

IncreasingLabeling minimal_labeling(const PlaneForest& f) {
  IncreasingLabeling l{f, std::vector<int>(f.size())};
  auto pre = f.pre_order();
  for (int i = 0; i < f.size(); ++i) l.label[pre[i]] = i + 1;
  return l;
}

LatticePath zigzag_path(const std::vector<int>& composition, int k) {
  LatticePath p;
  p.k = k;
  for (int ni : composition) {
    if (ni < 1) throw std::invalid_argument("zigzag_path: parts must be >= 1");
    for (int i = 0; i < ni; ++i) p.steps.push_back(Step::Up);
    for (int i = 0; i < k * ni; ++i) p.steps.push_back(Step::Down);
  }
  return p;
}

}  // namespace dycktiles
