#include "dycktiles/stirling.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace dycktiles {

bool is_stirling_permutation(const StirlingPermutation& p) {
  if (p.n < 0 || p.k < 1) return false;
  if (static_cast<int>(p.word.size()) != p.n * p.k) return false;
  std::vector<int> count(p.n + 1, 0);
  for (int v : p.word) {
    if (v < 1 || v > p.n) return false;
    ++count[v];
  }
  for (int v = 1; v <= p.n; ++v)
    if (count[v] != p.k) return false;
  // Anything between two copies of i is smaller than i.
  std::vector<int> first(p.n + 1, -1), last(p.n + 1, -1);
  for (int j = 0; j < static_cast<int>(p.word.size()); ++j) {
    if (first[p.word[j]] < 0) first[p.word[j]] = j;
    last[p.word[j]] = j;
  }
  for (int v = 1; v <= p.n; ++v)
    for (int j = first[v]; j <= last[v]; ++j)
      if (p.word[j] > v) return false;
  return true;
}

std::vector<StirlingPermutation> enumerate_stirling(int n, int k) {
  if (n < 0 || k < 1) throw std::invalid_argument("enumerate_stirling: bad n or k");
  // Insertion construction: shift letters up and place the block 1^k in any
  // of the k(n-1)+1 gaps.
  std::vector<std::vector<int>> words = {{}};
  for (int m = 1; m <= n; ++m) {
    std::vector<std::vector<int>> next;
    for (const auto& w : words) {
      std::vector<int> up(w.size());
      for (size_t i = 0; i < w.size(); ++i) up[i] = w[i] + 1;
      for (size_t pos = 0; pos <= up.size(); ++pos) {
        std::vector<int> nw(up.begin(), up.begin() + pos);
        nw.insert(nw.end(), k, 1);
        nw.insert(nw.end(), up.begin() + pos, up.end());
        next.push_back(std::move(nw));
      }
    }
    words = std::move(next);
  }
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  std::vector<StirlingPermutation> out;
  out.reserve(words.size());
  for (auto& w : words) out.push_back({std::move(w), n, k});
  return out;
}

std::set<std::pair<int, int>> k_inversions(const StirlingPermutation& p) {
  std::set<std::pair<int, int>> inv;
  std::vector<int> first(p.n + 1, -1);
  for (int j = static_cast<int>(p.word.size()) - 1; j >= 0; --j) first[p.word[j]] = j;
  for (int i = 1; i <= p.n; ++i)
    for (int j = 0; j < first[i]; ++j)
      if (p.word[j] > i) inv.insert({i, j + 1});
  return inv;
}

long long inv_k(const StirlingPermutation& p) {
  return static_cast<long long>(k_inversions(p).size());
}

MultiPoly inv_gf(int n, int k) {
  MultiPoly gf;
  for (const auto& p : enumerate_stirling(n, k))
    gf += MultiPoly::monomial(1, inv_k(p));
  return gf;
}

std::vector<StirlingPermutation> k_bruhat_covers(const StirlingPermutation& p) {
  std::vector<StirlingPermutation> out;
  int len = static_cast<int>(p.word.size());
  // Occurrence positions per letter.
  std::vector<std::vector<int>> occ(p.n + 1);
  for (int j = 0; j < len; ++j) occ[p.word[j]].push_back(j);
  for (int v = 1; v <= p.n; ++v) {
    int a1 = occ[v].front(), ak = occ[v].back();
    for (int b = ak + 1; b < len; ++b) {
      int w = p.word[b];
      if (w <= v) continue;
      bool ok = true;
      for (int i = ak + 1; i < b && ok; ++i)
        if (p.word[i] >= v && p.word[i] <= w) ok = false;
      if (!ok) continue;
      StirlingPermutation q = p;
      std::swap(q.word[a1], q.word[b]);
      if (is_stirling_permutation(q)) out.push_back(std::move(q));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Per (n, k) comparability closure of k-Bruhat covers.
struct Poset {
  std::vector<StirlingPermutation> elems;
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<bool>> leq;
};

const Poset& poset_for(int n, int k) {
  static std::map<std::pair<int, int>, Poset> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, k);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  Poset ps;
  ps.elems = enumerate_stirling(n, k);
  int m = static_cast<int>(ps.elems.size());
  for (int i = 0; i < m; ++i) ps.index[ps.elems[i].word] = i;
  ps.leq.assign(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i) ps.leq[i][i] = true;
  // Covers, then closure by rank sweep (each cover raises inv_k by one).
  std::vector<std::vector<int>> up(m);
  std::vector<std::pair<long long, int>> by_rank(m);
  for (int i = 0; i < m; ++i) {
    for (const auto& c : k_bruhat_covers(ps.elems[i]))
      up[i].push_back(ps.index.at(c.word));
    by_rank[i] = {inv_k(ps.elems[i]), i};
  }
  std::sort(by_rank.rbegin(), by_rank.rend());
  for (auto& [r, i] : by_rank)
    for (int j : up[i])
      for (int t = 0; t < m; ++t)
        if (ps.leq[j][t]) ps.leq[i][t] = true;
  return cache.emplace(key, std::move(ps)).first->second;
}

}  // namespace

bool k_bruhat_leq(const StirlingPermutation& a, const StirlingPermutation& b) {
  if (a.n != b.n || a.k != b.k)
    throw std::invalid_argument("k_bruhat_leq: size mismatch");
  const Poset& ps = poset_for(a.n, a.k);
  return ps.leq[ps.index.at(a.word)][ps.index.at(b.word)];
}

bool is_132_avoiding_stirling(const StirlingPermutation& p) {
  int len = static_cast<int>(p.word.size());
  for (int i = 0; i < len; ++i)
    for (int j = i + 1; j < len; ++j)
      for (int l = j + 1; l < len; ++l)
        if (p.word[i] < p.word[l] && p.word[l] < p.word[j]) return false;
  return true;
}

LatticePath alpha_k(const StirlingPermutation& p) {
  if (!is_132_avoiding_stirling(p))
    throw std::invalid_argument("alpha_k: permutation contains 132");
  int n = p.n, k = p.k;
  auto inv = k_inversions(p);
  // Column lengths of the inversion diagram (rows counted from the top).
  std::vector<int> col(n * k, 0);
  for (auto& [r, c] : inv) ++col[c - 1];
  LatticePath path;
  path.k = k;
  int y = 0;
  for (int x = 0; x < n * k; ++x) {
    int h = n - col[x];
    if (h < y) throw std::logic_error("alpha_k: inversions not top-left justified");
    while (y < h) {
      path.steps.push_back(Step::Up);
      ++y;
    }
    path.steps.push_back(Step::Down);
  }
  while (y < n) {
    path.steps.push_back(Step::Up);
    ++y;
  }
  if (!is_k_dyck(path)) throw std::logic_error("alpha_k: produced an invalid path");
  return path;
}

StirlingPermutation alpha_k_inv(const LatticePath& path) {
  if (!is_k_dyck(path)) throw std::invalid_argument("alpha_k_inv: invalid path");
  int n = path.semilength(), k = path.k;
  // Fill rows top to bottom: in row i the k copies of letter i go into the
  // first k free positions at or after the column where the path leaves
  // row i (everything above the path in that row is an inversion cell).
  auto h = path.heights();
  StirlingPermutation p;
  p.n = n;
  p.k = k;
  p.word.assign(n * k, 0);
  for (int i = 1; i <= n; ++i) {
    int y = n - i;  // cells of row i have this y coordinate
    int start = 0;
    while (start < n * k && h[start] > y) ++start;
    int placed = 0;
    for (int j = start; j < n * k && placed < k; ++j)
      if (p.word[j] == 0) {
        p.word[j] = i;
        ++placed;
      }
    if (placed < k) throw std::logic_error("alpha_k_inv: could not place letters");
  }
  if (!is_stirling_permutation(p)) throw std::logic_error("alpha_k_inv: invalid word");
  return p;
}

HermiteHistory interval_to_hermite(const StirlingPermutation& base,
                                   const StirlingPermutation& member) {
  if (!is_132_avoiding_stirling(base))
    throw std::invalid_argument("interval_to_hermite: base must avoid 132");
  auto ib = k_inversions(base);
  auto im = k_inversions(member);
  if (!std::includes(im.begin(), im.end(), ib.begin(), ib.end()))
    throw std::invalid_argument("interval_to_hermite: member not above base");
  LatticePath mu = alpha_k(base);
  auto h = mu.heights();
  int n = base.n;
  // Row i (from the top) labels the up step at height n-i..n-i+1; count the
  // member's inversion cells in that row lying below the path.
  std::vector<int> labels(n, 0);
  for (auto& [r, c] : im) {
    int x = c - 1, y = n - r;
    if (y < h[x]) ++labels[n - r];  // up step index from the bottom
  }
  HermiteHistory hist{mu, labels};
  if (!is_valid_history(hist))
    throw std::logic_error("interval_to_hermite: label out of range");
  return hist;
}

bool is_noncrossing(const NoncrossingPartition& p) {
  if (p.n < 0 || p.k < 1) return false;
  int kn = p.n * p.k;
  std::vector<int> block_of(kn + 1, -1);
  if (static_cast<int>(p.blocks.size()) != p.n) return false;
  for (int b = 0; b < p.n; ++b) {
    if (static_cast<int>(p.blocks[b].size()) != p.k) return false;
    for (int v : p.blocks[b]) {
      if (v < 1 || v > kn || block_of[v] != -1) return false;
      block_of[v] = b;
    }
  }
  for (int a = 1; a <= kn; ++a)
    for (int b = a + 1; b <= kn; ++b)
      for (int c = b + 1; c <= kn; ++c)
        for (int d = c + 1; d <= kn; ++d)
          if (block_of[a] == block_of[c] && block_of[b] == block_of[d] &&
              block_of[a] != block_of[b])
            return false;
  return true;
}

std::vector<NoncrossingPartition> enumerate_ncp(int n, int k) {
  // Recursive: the block of the least unused element takes k elements such
  // that the gaps it creates have sizes divisible by k; gaps fill
  // independently.
  std::vector<std::vector<std::vector<int>>> results;
  std::function<std::vector<std::vector<std::vector<int>>>(std::vector<int>)> solve =
      [&](std::vector<int> elems) -> std::vector<std::vector<std::vector<int>>> {
    std::vector<std::vector<std::vector<int>>> out;
    if (elems.empty()) {
      out.push_back({});
      return out;
    }
    int m = static_cast<int>(elems.size());
    // Choose the k-element block of elems[0]: indices 0 = i_1 < ... < i_k
    // with each gap length divisible by k.
    std::vector<int> idx{0};
    std::function<void()> choose = [&]() {
      if (static_cast<int>(idx.size()) == k) {
        if ((m - 1 - idx.back()) % k != 0) return;
        std::vector<int> block;
        for (int i : idx) block.push_back(elems[i]);
        // Solve each gap and the tail independently, then combine.
        std::vector<std::vector<std::vector<std::vector<int>>>> parts;
        for (int t = 0; t + 1 < static_cast<int>(idx.size()); ++t) {
          std::vector<int> gap(elems.begin() + idx[t] + 1, elems.begin() + idx[t + 1]);
          parts.push_back(solve(gap));
        }
        std::vector<int> tail(elems.begin() + idx.back() + 1, elems.end());
        parts.push_back(solve(tail));
        std::vector<std::vector<std::vector<int>>> combos = {{block}};
        for (auto& ps : parts) {
          std::vector<std::vector<std::vector<int>>> next;
          for (auto& c : combos)
            for (auto& q : ps) {
              auto merged = c;
              merged.insert(merged.end(), q.begin(), q.end());
              next.push_back(std::move(merged));
            }
          combos = std::move(next);
        }
        for (auto& c : combos) out.push_back(std::move(c));
        return;
      }
      int last = idx.back();
      for (int nx = last + 1; nx < m; ++nx) {
        if ((nx - last - 1) % k != 0) continue;
        idx.push_back(nx);
        choose();
        idx.pop_back();
      }
    };
    choose();
    return out;
  };
  std::vector<int> all(n * k);
  for (int i = 0; i < n * k; ++i) all[i] = i + 1;
  std::vector<NoncrossingPartition> out;
  for (auto& blocks : solve(all)) {
    NoncrossingPartition p;
    p.n = n;
    p.k = k;
    p.blocks = std::move(blocks);
    for (auto& b : p.blocks) std::sort(b.begin(), b.end());
    std::sort(p.blocks.begin(), p.blocks.end());
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::pair<NoncrossingPartition, std::vector<int>> stirling_to_ncp(
    const StirlingPermutation& p) {
  NoncrossingPartition ncp;
  ncp.n = p.n;
  ncp.k = p.k;
  std::vector<std::vector<int>> occ(p.n + 1);
  for (int j = 0; j < static_cast<int>(p.word.size()); ++j)
    occ[p.word[j]].push_back(j + 1);
  // Blocks sorted by min position; label = the letter.
  std::vector<std::pair<std::vector<int>, int>> tmp;
  for (int v = 1; v <= p.n; ++v) tmp.push_back({occ[v], v});
  std::sort(tmp.begin(), tmp.end());
  std::vector<int> labels;
  for (auto& [b, v] : tmp) {
    ncp.blocks.push_back(b);
    labels.push_back(v);
  }
  return {ncp, labels};
}

StirlingPermutation ncp_to_stirling(const NoncrossingPartition& ncp,
                                    const std::vector<int>& labels) {
  StirlingPermutation p;
  p.n = ncp.n;
  p.k = ncp.k;
  p.word.assign(ncp.n * ncp.k, 0);
  for (size_t b = 0; b < ncp.blocks.size(); ++b)
    for (int pos : ncp.blocks[b]) p.word[pos - 1] = labels[b];
  if (!is_stirling_permutation(p))
    throw std::invalid_argument("ncp_to_stirling: not a linear extension");
  return p;
}

PlaneForest nesting_poset(const NoncrossingPartition& p) {
  int n = p.n;
  PlaneForest f;
  f.children.resize(n);
  f.parent.assign(n, -1);
  // Blocks are sorted by min element.  Parent = innermost enclosing block.
  for (int b = 0; b < n; ++b) {
    int best = -1;
    for (int c = 0; c < n; ++c) {
      if (c == b) continue;
      if (p.blocks[c].front() < p.blocks[b].front() &&
          p.blocks[b].back() < p.blocks[c].back()) {
        if (best == -1 || p.blocks[best].front() < p.blocks[c].front()) best = c;
      }
    }
    f.parent[b] = best;
  }
  for (int b = 0; b < n; ++b) {
    if (f.parent[b] == -1)
      f.roots.push_back(b);
    else
      f.children[f.parent[b]].push_back(b);
  }
  // Children and roots are ordered by block min (blocks are pre-sorted).
  return f;
}

HookFormulaReport verify_hook_formulas(int n, int k) {
  HookFormulaReport rep;
  std::ostringstream detail;

  BigInt lhs = 1;
  for (int i = 1; i < n; ++i) lhs *= (static_cast<long long>(i) * k + 1);
  BigInt rhs = 0;
  for (const auto& ncp : enumerate_ncp(n, k)) {
    auto f = nesting_poset(ncp);
    BigInt prod = 1;
    for (int h : f.hooks()) prod *= h;
    rhs += factorial(n) / prod;
  }
  rep.multifactorial_ok = (lhs == rhs);
  detail << "multifactorial n=" << n << " k=" << k << ": " << lhs.str()
         << (rep.multifactorial_ok ? " == " : " != ") << rhs.str() << "\n";

  // q-double factorial hook length formula (the k = 2 refinement):
  // [1]_q [3]_q ... [2n-1]_q = sum over plane forests F of
  //   [n]_{q^2}! prod_v q^{h_v - 1} / [h_v]_{q^2}.
  MultiPoly odd(1);
  for (int i = 1; i <= n; ++i) odd = odd * qint(2 * i - 1);
  MultiPoly total;
  for (const auto& f : enumerate_forests(n)) {
    auto hooks = f.hooks();
    MultiPoly den(1);
    std::int64_t shift = 0;
    for (int h : hooks) {
      den = den * qint_base(h, 2);
      shift += h - 1;
    }
    MultiPoly num = qfact_base(n, 2) * MultiPoly::monomial(1, shift);
    total += num.divide_exact(den);
  }
  rep.q_double_factorial_ok = (total == odd);
  detail << "q-double-factorial n=" << n << ": "
         << (rep.q_double_factorial_ok ? "match" : "MISMATCH");
  rep.detail = detail.str();
  return rep;
}

}  // namespace dycktiles
