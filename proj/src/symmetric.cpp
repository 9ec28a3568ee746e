#include "dycktiles/symmetric.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>

namespace dycktiles {

int SymmetricForest::center_count() const {
  return static_cast<int>(std::count(is_center.begin(), is_center.end(), true));
}

bool is_valid_symmetric_forest(const SymmetricForest& f) {
  if (static_cast<int>(f.is_center.size()) != f.left.size()) return false;
  // Center vertices form a chain: last root, then last child of the
  // previous center vertex, and so on.
  std::vector<int> centers;
  for (int v = 0; v < f.left.size(); ++v)
    if (f.is_center[v]) centers.push_back(v);
  if (centers.empty()) return true;
  int expected = f.left.roots.empty() ? -1 : f.left.roots.back();
  int at = expected;
  size_t seen = 0;
  while (at != -1 && f.is_center[at]) {
    ++seen;
    at = f.left.children[at].empty() ? -1 : f.left.children[at].back();
  }
  return seen == centers.size() &&
         std::all_of(centers.begin(), centers.end(), [&](int v) { return f.is_center[v]; });
}

namespace {

// Append forest g's vertices into f, remapping ids; returns new root ids.
std::vector<int> splice_forest(PlaneForest& f, const PlaneForest& g) {
  int base = f.size();
  for (int v = 0; v < g.size(); ++v) {
    f.children.emplace_back();
    f.parent.push_back(-1);
  }
  for (int v = 0; v < g.size(); ++v) {
    f.parent[base + v] = g.parent[v] == -1 ? -1 : base + g.parent[v];
    for (int c : g.children[v]) f.children[base + v].push_back(base + c);
  }
  std::vector<int> roots;
  for (int r : g.roots) roots.push_back(base + r);
  return roots;
}

}  // namespace

std::vector<SymmetricForest> enumerate_symmetric_forests(int n) {
  std::vector<SymmetricForest> out;
  // Pre-enumerate ordinary forests by size.
  std::vector<std::vector<PlaneForest>> forests(n + 1);
  for (int m = 0; m <= n; ++m) forests[m] = enumerate_forests(m);

  // c = number of center vertices; the left part is: forest F0 of non-center
  // trees, then a center chain v1..vc, with a forest Fi hanging left of vi.
  for (int c = 0; c <= n; ++c) {
    int rest = n - c;
    if (rest < 0) break;
    // all (c+1)-part compositions of rest (sizes of F0..Fc)
    std::vector<int> sizes(c + 1, 0);
    std::function<void(int, int)> go = [&](int idx, int left) {
      if (idx == c) {
        sizes[idx] = left;
        std::function<void(int, SymmetricForest)> pick = [&](int part, SymmetricForest acc) {
          if (part == c + 1) {
            out.push_back(std::move(acc));
            return;
          }
          for (const auto& g : forests[sizes[part]]) {
            SymmetricForest next = acc;
            auto roots = splice_forest(next.left, g);
            next.is_center.resize(next.left.size(), false);
            if (part == 0) {
              if (c == 0) {
                next.left.roots = roots;
                pick(part + 1, std::move(next));
              } else {
                // add center root after the F0 trees
                next.left.roots = roots;
                next.left.children.emplace_back();
                next.left.parent.push_back(-1);
                next.is_center.push_back(true);
                next.left.roots.push_back(next.left.size() - 1);
                pick(part + 1, std::move(next));
              }
            } else {
              // attach Fi's trees, then the next center vertex, under the
              // current deepest center vertex
              int cur_center = -1;
              for (int v = 0; v < next.left.size(); ++v)
                if (next.is_center[v] && next.left.children[v].empty()) cur_center = v;
              for (int r : roots) {
                next.left.parent[r] = cur_center;
                next.left.children[cur_center].push_back(r);
              }
              if (part < c) {
                next.left.children.emplace_back();
                next.left.parent.push_back(cur_center);
                next.is_center.push_back(true);
                next.left.children[cur_center].push_back(next.left.size() - 1);
              }
              pick(part + 1, std::move(next));
            }
          }
        };
        pick(0, SymmetricForest{});
        return;
      }
      for (int v = 0; v <= left; ++v) {
        sizes[idx] = v;
        go(idx + 1, left - v);
      }
    };
    go(0, rest);
  }
  return out;
}

namespace {

// Recursive mirrored copy of the subtree at v (children reversed).
int build_mirror(const PlaneForest& left, int v, PlaneForest& out, int parent) {
  int id = out.size();
  out.children.emplace_back();
  out.parent.push_back(parent);
  if (parent != -1) out.children[parent].push_back(id);
  auto kids = left.children[v];
  std::reverse(kids.begin(), kids.end());
  for (int c : kids) build_mirror(left, c, out, id);
  return id;
}

int build_copy(const PlaneForest& left, int v, PlaneForest& out, int parent,
               const SymmetricForest& f) {
  int id = out.size();
  out.children.emplace_back();
  out.parent.push_back(parent);
  if (parent != -1) out.children[parent].push_back(id);
  if (f.is_center[v]) {
    // left children in order, then the center child expanded, then the
    // mirror images of the left children in reverse order.
    std::vector<int> non_center;
    int center_child = -1;
    for (int c : left.children[v]) {
      if (f.is_center[c])
        center_child = c;
      else
        non_center.push_back(c);
    }
    for (int c : non_center) build_copy(left, c, out, id, f);
    if (center_child != -1) build_copy(left, center_child, out, id, f);
    for (auto it = non_center.rbegin(); it != non_center.rend(); ++it)
      build_mirror(left, *it, out, id);
  } else {
    for (int c : left.children[v]) build_copy(left, c, out, id, f);
  }
  return id;
}

}  // namespace

PlaneForest full_forest(const SymmetricForest& f) {
  if (!is_valid_symmetric_forest(f))
    throw std::invalid_argument("full_forest: invalid symmetric forest");
  PlaneForest out;
  std::vector<int> non_center_roots;
  int center_root = -1;
  for (int r : f.left.roots) {
    if (f.is_center[r])
      center_root = r;
    else
      non_center_roots.push_back(r);
  }
  for (int r : non_center_roots) {
    int id = build_copy(f.left, r, out, -1, f);
    out.roots.push_back(id);
  }
  if (center_root != -1) {
    int id = build_copy(f.left, center_root, out, -1, f);
    out.roots.push_back(id);
  }
  for (auto it = non_center_roots.rbegin(); it != non_center_roots.rend(); ++it) {
    int id = build_mirror(f.left, *it, out, -1);
    out.roots.push_back(id);
  }
  return out;
}

LatticePath symmetric_forest_path(const SymmetricForest& f) {
  return forest_to_path(full_forest(f));
}

std::vector<MarkedIncreasingLabeling> enumerate_marked_labelings(const SymmetricForest& f) {
  std::vector<MarkedIncreasingLabeling> out;
  std::vector<int> non_center;
  for (int v = 0; v < f.size(); ++v)
    if (!f.is_center[v]) non_center.push_back(v);
  for (const auto& lab : enumerate_increasing_labelings(f.left)) {
    std::vector<bool> marked(f.size(), false);
    std::function<void(size_t)> rec = [&](size_t i) {
      if (i == non_center.size()) {
        out.push_back({f, lab.label, marked});
        return;
      }
      marked[non_center[i]] = false;
      rec(i + 1);
      marked[non_center[i]] = true;
      rec(i + 1);
      marked[non_center[i]] = false;
    };
    rec(0);
  }
  return out;
}

long long marked_labeling_inversions(const MarkedIncreasingLabeling& l) {
  IncreasingLabeling il{l.forest.left, l.label};
  return static_cast<long long>(labeling_inversions(il).size());
}

std::vector<int> mark_labels(const MarkedIncreasingLabeling& l) {
  std::vector<int> m;
  for (int v = 0; v < l.forest.size(); ++v)
    if (l.marked[v]) m.push_back(l.label[v]);
  std::sort(m.begin(), m.end());
  return m;
}

bool is_symmetric_path(const LatticePath& p) {
  if (p.k != 1) return false;
  size_t len = p.steps.size();
  for (size_t i = 0; i < len; ++i) {
    Step mirrored = p.steps[len - 1 - i] == Step::Up ? Step::Down : Step::Up;
    if (p.steps[i] != mirrored) return false;
  }
  return true;
}

std::vector<LatticePath> enumerate_symmetric_paths(int n) {
  std::vector<LatticePath> out;
  for (auto& p : enumerate_k_dyck(n, 1))
    if (is_symmetric_path(p)) out.push_back(p);
  return out;
}

namespace {

Cell reflect_cell(const Cell& c, int n) { return {n - 1 - c.y, n - 1 - c.x}; }

DyckTile reflect_tile(const DyckTile& t, int n) {
  DyckTile r;
  for (auto it = t.cells.rbegin(); it != t.cells.rend(); ++it)
    r.cells.push_back(reflect_cell(*it, n));
  return r;
}

}  // namespace

bool is_symmetric_tiling(const Tiling& t) {
  if (t.k != 1) return false;
  int n = t.upper.semilength();
  if (!is_symmetric_path(t.lower) || !is_symmetric_path(t.upper)) return false;
  std::set<DyckTile> tiles(t.tiles.begin(), t.tiles.end());
  for (const auto& tile : t.tiles)
    if (!tiles.count(reflect_tile(tile, n))) return false;
  return true;
}

std::vector<Tiling> enumerate_symmetric_fixed_lower(const LatticePath& lower) {
  if (!is_symmetric_path(lower))
    throw std::invalid_argument("enumerate_symmetric_fixed_lower: lower not symmetric");
  std::vector<Tiling> out;
  for (const auto& mu : paths_above(lower)) {
    if (!is_symmetric_path(mu)) continue;
    for (auto& t : enumerate_tilings(lower, mu, 1))
      if (is_symmetric_tiling(t)) out.push_back(std::move(t));
  }
  return out;
}

std::vector<Tiling> enumerate_symmetric_fixed_upper(const LatticePath& upper) {
  if (!is_symmetric_path(upper))
    throw std::invalid_argument("enumerate_symmetric_fixed_upper: upper not symmetric");
  std::vector<Tiling> out;
  for (const auto& la : paths_below(upper)) {
    if (!is_symmetric_path(la)) continue;
    for (auto& t : enumerate_tilings(la, upper, 1))
      if (is_symmetric_tiling(t)) out.push_back(std::move(t));
  }
  return out;
}

SymmetricStats symmetric_stats(const Tiling& t) {
  int n = t.upper.semilength();
  SymmetricStats s;
  for (const auto& tile : t.tiles) {
    bool zero = false, positive = true;
    for (const Cell& c : tile.cells) {
      int sum = c.x + c.y + 1;
      if (sum == n) zero = true;
      if (sum >= n) positive = false;
    }
    if (zero) {
      ++s.tiles_zero;
      s.area_zero += tile.area();
    } else if (positive) {
      ++s.tiles_plus;
      s.area_plus += tile.area();
    }
  }
  if ((s.area_plus + s.tiles_plus) % 2 != 0 || (s.area_zero + s.tiles_zero) % 2 != 0)
    throw std::logic_error("symmetric_stats: art_+ or art_0 is not an integer");
  s.art_plus = (s.area_plus + s.tiles_plus) / 2;
  s.art_zero = (s.area_zero + s.tiles_zero) / 2;
  return s;
}

// ---------------------------------------------------------------------------
// phi: staged insertion, one label at a time.

namespace {

struct PhiState {
  LatticePath lower, upper;        // both symmetric at step boundaries
  std::vector<DyckTile> tiles;

  int semilength() const { return lower.semilength(); }

  long long art_plus_zero() const {
    Tiling t{lower, upper, 1, tiles};
    auto s = symmetric_stats(t);
    return s.art_plus + s.art_zero;
  }

  void stretch_all(int s) {
    lower = stretch_path(lower, s, 1);
    upper = stretch_path(upper, s, 1);
    for (auto& t : tiles) t = stretch_tile(t, s, 1);
  }

  // Raise the upper path over column x by one cell and place that cell as a
  // new single tile.  Returns the cell.
  Cell flip(int x) {
    auto h = upper.heights();
    int n = semilength();
    int hx = h[x];
    bool valley = (x + 1 < n ? hx < h[x + 1] : hx < n);
    if (!valley) throw std::logic_error("phi: flip at a non-valley column");
    Cell c{x, hx};
    h[x] += 1;
    LatticePath np;
    np.k = 1;
    int y = 0;
    for (int col = 0; col < n; ++col) {
      while (y < h[col]) {
        np.steps.push_back(Step::Up);
        ++y;
      }
      np.steps.push_back(Step::Down);
    }
    while (y < n) {
      np.steps.push_back(Step::Up);
      ++y;
    }
    upper = np;
    tiles.push_back(DyckTile{{c}});
    return c;
  }
};

}  // namespace

namespace {

struct TaggedStep {
  Step s;
  int label;  // label of the owning left-part vertex
  int side;   // 0 = left/center copy, 1 = mirror copy
  int owner;  // left-part vertex id
};

void tag_mirror(const SymmetricForest& f, const std::vector<int>& label, int v,
                std::vector<TaggedStep>& w) {
  w.push_back({Step::Up, label[v], 1, v});
  auto kids = f.left.children[v];
  std::reverse(kids.begin(), kids.end());
  for (int c : kids) tag_mirror(f, label, c, w);
  w.push_back({Step::Down, label[v], 1, v});
}

void tag_copy(const SymmetricForest& f, const std::vector<int>& label, int v,
              std::vector<TaggedStep>& w) {
  w.push_back({Step::Up, label[v], 0, v});
  if (f.is_center[v]) {
    std::vector<int> non_center;
    int center_child = -1;
    for (int c : f.left.children[v]) {
      if (f.is_center[c])
        center_child = c;
      else
        non_center.push_back(c);
    }
    for (int c : non_center) tag_copy(f, label, c, w);
    if (center_child != -1) tag_copy(f, label, center_child, w);
    for (auto it = non_center.rbegin(); it != non_center.rend(); ++it)
      tag_mirror(f, label, *it, w);
  } else {
    for (int c : f.left.children[v]) tag_copy(f, label, c, w);
  }
  w.push_back({Step::Down, label[v], 0, v});
}

// Word of the full symmetric forest with each step tagged by the left-part
// vertex it belongs to and which copy it is.
std::vector<TaggedStep> tagged_word(const SymmetricForest& f, const std::vector<int>& label) {
  std::vector<TaggedStep> w;
  std::vector<int> non_center_roots;
  int center_root = -1;
  for (int r : f.left.roots) {
    if (f.is_center[r])
      center_root = r;
    else
      non_center_roots.push_back(r);
  }
  for (int r : non_center_roots) tag_copy(f, label, r, w);
  if (center_root != -1) tag_copy(f, label, center_root, w);
  for (auto it = non_center_roots.rbegin(); it != non_center_roots.rend(); ++it)
    tag_mirror(f, label, *it, w);
  return w;
}

}  // namespace

Tiling phi(const MarkedIncreasingLabeling& l) {
  const SymmetricForest& f = l.forest;
  if (!is_valid_symmetric_forest(f)) throw std::invalid_argument("phi: invalid forest");
  int n = f.size();
  std::vector<int> vertex_of(n + 1, -1);
  for (int v = 0; v < n; ++v) vertex_of[l.label[v]] = v;

  auto pre = f.left.pre_order();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[pre[i]] = i;

  std::vector<TaggedStep> word = tagged_word(f, l.label);

  PhiState st;
  st.lower.k = st.upper.k = 1;

  long long inv_so_far = 0;
  std::vector<int> marks_so_far;

  for (int m = 1; m <= n; ++m) {
    int v = vertex_of[m];
    bool center = f.is_center[v];
    bool flag = l.marked[v];

    // New inversions: existing vertices to the right of v, incomparable.
    long long r = 0;
    for (int w = 0; w < n; ++w) {
      if (w == v || l.label[w] > m) continue;
      if (f.left.is_ancestor(v, w) || f.left.is_ancestor(w, v)) continue;
      if (pos[w] > pos[v]) ++r;
    }
    inv_so_far += r;

    // Insertion gaps, from the tagged word restricted to labels <= m: the
    // coordinate sum of an insertion point equals the number of
    // previously-present steps before it.
    int before_left = 0, before_mirror = 0, own_before_mirror = 0;
    for (const auto& ts : word) {
      if (ts.label > m) continue;
      if (ts.owner == v && ts.side == 0 && ts.s == Step::Up) break;
      if (ts.label < m) ++before_left;
    }
    if (!center) {
      for (const auto& ts : word) {
        if (ts.label > m) continue;
        if (ts.owner == v && ts.side == 1 && ts.s == Step::Up) break;
        if (ts.label < m)
          ++before_mirror;
        else if (ts.owner == v && ts.side == 0)
          ++own_before_mirror;
      }
    }

    if (center) {
      st.stretch_all(before_left);
    } else {
      st.stretch_all(before_left);
      st.stretch_all(before_mirror + own_before_mirror);
    }
    // The lower path after this insertion.
    LatticePath lower_m;
    lower_m.k = 1;
    for (const auto& ts : word)
      if (ts.label <= m) lower_m.steps.push_back(ts.s);
    st.lower = lower_m;

    // Budget: target art minus current art (and the center mark square).
    long long target = inv_so_far;
    for (int lab : marks_so_far) target += (m + 1 - lab);
    long long have = st.art_plus_zero();
    long long flips = target - have;
    if (flips < 0) throw std::logic_error("phi: negative flip budget");

    int nn = st.semilength();
    int pointer = 0;
    for (long long i = 0; i < flips; ++i) {
      auto h = st.upper.heights();
      int pick = -1;
      for (int x = pointer; x < nn; ++x) {
        bool valley = (x + 1 < nn ? h[x] < h[x + 1] : h[x] < nn);
        if (!valley) continue;
        if (x + h[x] + 1 < nn) {  // strictly left of the center line
          pick = x;
          break;
        }
      }
      if (pick < 0) throw std::logic_error("phi: no valley available");
      Cell c = st.flip(pick);
      st.flip(nn - 1 - c.y);  // mirror flip
      pointer = pick;
    }
    if (flag) {
      auto h = st.upper.heights();
      int pick = -1;
      for (int x = 0; x < nn; ++x) {
        bool valley = (x + 1 < nn ? h[x] < h[x + 1] : h[x] < nn);
        if (valley && x + h[x] + 1 == nn) pick = x;
      }
      if (pick < 0) throw std::logic_error("phi: no center valley for a mark");
      st.flip(pick);
      marks_so_far.push_back(m);
    }
  }

  Tiling out{st.lower, st.upper, 1, st.tiles};
  std::sort(out.tiles.begin(), out.tiles.end(), [](const DyckTile& a, const DyckTile& b) {
    return std::tie(a.cells.front().y, a.cells.front().x) <
           std::tie(b.cells.front().y, b.cells.front().x);
  });
  // Sanity: the tiles exactly cover the region.
  auto cells = region_cells(out.lower, out.upper);
  size_t covered = 0;
  for (const auto& t : out.tiles) covered += t.cells.size();
  if (covered != cells.size()) throw std::logic_error("phi: region not exactly covered");
  return out;
}

// ---------------------------------------------------------------------------
// Involutive sequences.

bool is_involutive(const std::vector<int>& seq) {
  for (const auto& s : enumerate_involutive(static_cast<int>(seq.size())))
    if (s == seq) return true;
  return false;
}

std::vector<std::vector<int>> enumerate_involutive(int k) {
  static std::map<int, std::vector<std::vector<int>>> cache{{0, {{}}}, {1, {{0}}}};
  if (k < 0) throw std::invalid_argument("enumerate_involutive: negative length");
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  std::vector<std::vector<int>> out;
  for (auto s : enumerate_involutive(k - 1)) {
    s.push_back(0);
    out.push_back(std::move(s));
  }
  for (const auto& s : enumerate_involutive(k - 2)) {
    for (int r = 1; r <= k - 1; ++r) {
      // append r, then insert a 0 before the last r entries
      std::vector<int> t = s;
      t.push_back(r);
      t.insert(t.end() - r, 0);
      out.push_back(std::move(t));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  cache[k] = out;
  return out;
}

// ---------------------------------------------------------------------------
// Symmetric Hermite histories.

long long SymmetricHermiteHistory::norm() const {
  long long s = 0;
  for (int l : labels) s += l;
  return s;
}

long long SymmetricHermiteHistory::pos() const {
  auto unmatched = unmatched_up_steps(mu);
  std::set<int> um(unmatched.begin(), unmatched.end());
  auto ups = mu.up_step_indices();
  long long c = 0;
  int half = mu.semilength();
  for (size_t i = 0; i < ups.size(); ++i) {
    if (ups[i] >= half) break;
    if (um.count(ups[i]) && labels[i] > 0) ++c;
  }
  return c;
}

static std::vector<int> paren_partner(const LatticePath& mu) {
  std::vector<int> partner(mu.steps.size(), -1);
  std::vector<int> stack;
  for (int i = 0; i < static_cast<int>(mu.steps.size()); ++i) {
    if (mu.steps[i] == Step::Up) {
      stack.push_back(i);
    } else {
      partner[i] = stack.back();
      partner[stack.back()] = i;
      stack.pop_back();
    }
  }
  return partner;
}

std::vector<int> matched_up_steps(const LatticePath& mu) {
  auto partner = paren_partner(mu);
  int half = mu.semilength();
  std::vector<int> out;
  for (int i = 0; i < half; ++i)
    if (mu.steps[i] == Step::Up && partner[i] < half) out.push_back(i);
  return out;
}

std::vector<int> unmatched_up_steps(const LatticePath& mu) {
  auto partner = paren_partner(mu);
  int half = mu.semilength();
  std::vector<int> out;
  for (int i = 0; i < half; ++i)
    if (mu.steps[i] == Step::Up && partner[i] >= half) out.push_back(i);
  return out;
}

namespace {

// Reconstruct the full Hermite history on mu from labels on mu+.  Returns
// nothing when the labels are not realizable.
std::optional<HermiteHistory> reconstruct_full(const SymmetricHermiteHistory& h) {
  const LatticePath& mu = h.mu;
  int n2 = static_cast<int>(mu.steps.size());
  int half = mu.semilength();
  if (!is_symmetric_path(mu)) return std::nullopt;

  // First half simulation with the deterministic closing rule.
  std::vector<std::pair<int, int>> open;  // (position, remaining counter)
  std::vector<std::pair<int, int>> arcs;  // arcs closed inside the first half
  size_t ui = 0;
  for (int i = 0; i < half; ++i) {
    if (mu.steps[i] == Step::Up) {
      if (ui >= h.labels.size()) return std::nullopt;
      open.emplace_back(i, h.labels[ui++]);
    } else {
      int pick = -1;
      for (int t = static_cast<int>(open.size()) - 1; t >= 0; --t)
        if (open[t].second == 0) {
          pick = t;
          break;
        }
      if (pick < 0) return std::nullopt;
      arcs.emplace_back(open[pick].first, i);
      for (size_t t = pick + 1; t < open.size(); ++t) --open[t].second;
      open.erase(open.begin() + pick);
    }
  }
  if (ui != h.labels.size()) return std::nullopt;

  // Straddling arcs: close the remaining openers at the mirrors of the
  // openers, processed in time order; same deterministic rule.
  int m = static_cast<int>(open.size());
  std::vector<int> close_to(m, -1);  // index j: arc opened at open[t] closes at mirror of open[j]
  std::vector<bool> closed(m, false);
  std::vector<std::pair<int, int>> rem = open;
  for (int j = m - 1; j >= 0; --j) {
    // closer at position 2n-1 - open[j].first
    int pick = -1;
    for (int t = static_cast<int>(rem.size()) - 1; t >= 0; --t)
      if (!closed[t] && rem[t].second == 0) {
        pick = t;
        break;
      }
    if (pick < 0) return std::nullopt;
    closed[pick] = true;
    close_to[pick] = j;
    for (int t = pick + 1; t < m; ++t)
      if (!closed[t]) --rem[t].second;
  }
  // Involution check: arc set must be closed under mirroring.
  for (int t = 0; t < m; ++t) {
    int j = close_to[t];
    if (close_to[j] != t) return std::nullopt;
  }

  // Assemble the full matching.
  Matching M;
  M.partner.assign(n2, -1);
  auto add_arc = [&M](int a, int b) {
    if (M.partner[a] != -1 || M.partner[b] != -1)
      throw std::logic_error("reconstruct_full: arc conflict");
    M.partner[a] = b;
    M.partner[b] = a;
  };
  for (auto& [o, c] : arcs) {
    add_arc(o, c);
    add_arc(n2 - 1 - c, n2 - 1 - o);
  }
  for (int t = 0; t < m; ++t) add_arc(rem[t].first, n2 - 1 - rem[close_to[t]].first);
  if (!is_valid_matching(M)) return std::nullopt;
  if (M.shape().steps != mu.steps) return std::nullopt;

  HermiteHistory full = matching_to_hermite(M);
  // The first-half labels must reproduce the inputs.
  auto ups = mu.up_step_indices();
  for (size_t i = 0; i < ups.size(); ++i) {
    if (ups[i] >= half) break;
    if (full.labels[i] != h.labels[i]) return std::nullopt;
  }
  return full;
}

}  // namespace

std::vector<SymmetricHermiteHistory> enumerate_symmetric_hermite(const LatticePath& mu) {
  if (!is_symmetric_path(mu))
    throw std::invalid_argument("enumerate_symmetric_hermite: path not symmetric");
  int half = mu.semilength();
  auto ups = mu.up_step_indices();
  std::vector<int> plus_ups;  // up steps of mu+, as indices into ups
  for (size_t i = 0; i < ups.size(); ++i)
    if (ups[i] < half) plus_ups.push_back(static_cast<int>(i));
  auto matched = matched_up_steps(mu);
  std::set<int> matched_set(matched.begin(), matched.end());

  std::vector<int> unmatched_slots, matched_slots;
  for (int i : plus_ups) {
    if (matched_set.count(ups[i]))
      matched_slots.push_back(i);
    else
      unmatched_slots.push_back(i);
  }
  int kk = static_cast<int>(unmatched_slots.size());
  auto invol = enumerate_involutive(kk);

  std::vector<SymmetricHermiteHistory> out;
  std::vector<int> labels(plus_ups.size(), 0);
  std::function<void(size_t)> rec = [&](size_t idx) {
    if (idx == matched_slots.size()) {
      for (const auto& seq : invol) {
        bool ok = true;
        for (int i = 0; i < kk && ok; ++i) {
          labels[unmatched_slots[i]] = seq[i];
          if (seq[i] >= up_step_height(mu, unmatched_slots[i] + 1)) ok = false;
        }
        if (!ok) continue;
        SymmetricHermiteHistory h{mu, labels};
        if (reconstruct_full(h).has_value()) out.push_back(h);
      }
      return;
    }
    int slot = matched_slots[idx];
    int ht = up_step_height(mu, slot + 1);
    for (int v = 0; v < ht; ++v) {
      labels[slot] = v;
      rec(idx + 1);
    }
    labels[slot] = 0;
  };
  rec(0);
  return out;
}

Tiling psi(const SymmetricHermiteHistory& h) {
  auto full = reconstruct_full(h);
  if (!full) throw std::invalid_argument("psi: invalid symmetric history");
  Tiling t = hermite_to_tiling(*full);
  if (!is_symmetric_tiling(t)) throw std::logic_error("psi: produced an asymmetric tiling");
  return t;
}

SymmetricHermiteHistory psi_inv(const Tiling& t) {
  if (!is_symmetric_tiling(t)) throw std::invalid_argument("psi_inv: tiling not symmetric");
  HermiteHistory full = tiling_to_hermite(t);
  int half = t.upper.semilength();
  auto ups = t.upper.up_step_indices();
  SymmetricHermiteHistory h;
  h.mu = t.upper;
  for (size_t i = 0; i < ups.size(); ++i) {
    if (ups[i] >= half) break;
    h.labels.push_back(full.labels[i]);
  }
  return h;
}

// ---------------------------------------------------------------------------
// Symmetric matchings.

bool is_symmetric_matching(const Matching& m) {
  if (!is_valid_matching(m)) return false;
  int n2 = m.size();
  for (int i = 0; i < n2; ++i)
    if (m.partner[n2 - 1 - i] != n2 - 1 - m.partner[i]) return false;
  return true;
}

std::vector<Matching> enumerate_symmetric_matchings(const LatticePath& mu) {
  if (!is_symmetric_path(mu))
    throw std::invalid_argument("enumerate_symmetric_matchings: path not symmetric");
  std::vector<Matching> out;
  for (auto& m : enumerate_matchings(mu))
    if (is_symmetric_matching(m)) out.push_back(std::move(m));
  return out;
}

SymmetricMatchingStats symmetric_matching_stats(const Matching& m) {
  int n2 = m.size();
  int n = n2 / 2;
  auto value = [&](int p) { return p < n ? p - n : p - n + 1; };
  // arcs as (min value, max value)
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i < n2; ++i)
    if (m.partner[i] > i)
      arcs.push_back({std::min(value(i), value(m.partner[i])),
                      std::max(value(i), value(m.partner[i]))});
  SymmetricMatchingStats s;
  for (size_t i = 0; i < arcs.size(); ++i)
    for (size_t j = 0; j < arcs.size(); ++j) {
      if (i == j) continue;
      auto [a, b] = arcs[i];
      auto [c, d] = arcs[j];
      if (a < c && c < b && b < d && b > 0 && d > 0) {
        ++s.cro;
        if (c == -b && d == -a) ++s.sscr;
      }
    }
  return s;
}

MultiPoly f_poly(int k) {
  if (k <= 1) return MultiPoly(1);
  MultiPoly f0(1), f1(1);
  for (int i = 2; i <= k; ++i) {
    MultiPoly f2 = f1 + MultiPoly::monomial(1, 1, 1) * qint(i - 1) * f0;
    f0 = f1;
    f1 = f2;
  }
  return f1;
}

MultiPoly grand_gf(int n) {
  MultiPoly total;
  for (const auto& mu : enumerate_symmetric_paths(n)) {
    long long unmatched = static_cast<long long>(unmatched_up_steps(mu).size());
    for (const auto& t : enumerate_symmetric_fixed_upper(mu)) {
      auto s = symmetric_stats(t);
      total += MultiPoly::monomial(1, s.tiles_plus + s.tiles_zero, s.tiles_zero, unmatched);
    }
  }
  return total;
}

RationalFn grand_gf_closed(int n) {
  RationalFn total(MultiPoly(0), MultiPoly(1));
  MultiPoly one_minus_q = MultiPoly(1) - MultiPoly::q();
  for (int m = 0; m <= n; ++m) {
    if ((n - m) % 2 != 0) continue;
    MultiPoly inner;
    for (int k = m; k <= n; k += 2) {
      BigInt ballot = binomial(n, (n - k) / 2) - binomial(n, (n - k) / 2 - 1);
      if (ballot == 0) continue;
      int e = (k - m) / 2;
      BigInt sign = (e % 2 == 0) ? 1 : -1;
      MultiPoly term = (ballot * sign) *
                       (MultiPoly::monomial(1, static_cast<std::int64_t>(e) * (e + 1) / 2) *
                        qbinom((k + m) / 2, (k - m) / 2));
      inner += term;
    }
    MultiPoly den(1);
    for (int i = 0; i < (n - m) / 2; ++i) den = den * one_minus_q;
    MultiPoly num = MultiPoly::monomial(1, 0, 0, m) * f_poly(m) * inner;
    total = total + RationalFn(num, den);
  }
  return total;
}

}  // namespace dycktiles
