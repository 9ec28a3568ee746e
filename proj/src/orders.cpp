#include "dycktiles/orders.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dycktiles {

bool is_permutation(const Permutation& p) {
  int n = static_cast<int>(p.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : p) {
    if (v < 1 || v > n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

int inv(const Permutation& p) {
  int c = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++c;
  return c;
}

std::set<std::pair<int, int>> inversion_set(const Permutation& p) {
  std::set<std::pair<int, int>> s;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s.insert({static_cast<int>(i + 1), static_cast<int>(j + 1)});
  return s;
}

std::vector<Permutation> enumerate_permutations(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool avoids(const Permutation& p, int pattern) {
  if (pattern != 132 && pattern != 312)
    throw std::invalid_argument("avoids: unsupported pattern");
  int n = static_cast<int>(p.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        if (pattern == 132 && p[i] < p[k] && p[k] < p[j]) return false;
        if (pattern == 312 && p[j] < p[k] && p[k] < p[i]) return false;
      }
  return true;
}

LatticePath alpha(const Permutation& p) {
  if (!is_permutation(p)) throw std::invalid_argument("alpha: not a permutation");
  if (!avoids(p, 132)) throw std::invalid_argument("alpha: permutation contains 132");
  int n = static_cast<int>(p.size());
  // Inversion cells in the matrix diagram: cross at (row r from top, col c)
  // iff p(c) > r and p^{-1}(r) > c.  For a 132-avoiding permutation they are
  // top-left justified; crosses_in_col[c] is then the length of column c.
  std::vector<int> pinv(n + 1);
  for (int c = 1; c <= n; ++c) pinv[p[c - 1]] = c;
  std::vector<int> col(n, 0);
  for (int c = 1; c <= n; ++c)
    for (int r = 1; r <= n; ++r)
      if (p[c - 1] > r && pinv[r] > c) ++col[c - 1];
  // Path heights: column x (0-based) has crosses in rows 1..col[x], i.e.
  // cells y >= n - col[x]; so the path runs at height n - col[x] there.
  LatticePath q;
  q.k = 1;
  int y = 0;
  for (int x = 0; x < n; ++x) {
    int h = n - col[x];
    if (h < y) throw std::logic_error("alpha: inversion cells not a Young diagram");
    while (y < h) {
      q.steps.push_back(Step::Up);
      ++y;
    }
    q.steps.push_back(Step::Down);
  }
  while (y < n) {
    q.steps.push_back(Step::Up);
    ++y;
  }
  if (!is_k_dyck(q)) throw std::logic_error("alpha: produced an invalid path");
  return q;
}

Permutation alpha_inv(const LatticePath& path) {
  if (path.k != 1 || !is_k_dyck(path))
    throw std::invalid_argument("alpha_inv: not a Dyck path");
  int n = path.semilength();
  // Dots of the minimal permutation: stack-match the path; an arc from up
  // step starting at height b to the down step at x-offset c places the
  // value n-b at position c+1.
  Permutation p(n, 0);
  std::vector<int> stack;  // heights of open up steps
  int x = 0, y = 0;
  for (Step s : path.steps) {
    if (s == Step::Up) {
      stack.push_back(y);
      ++y;
    } else {
      int b = stack.back();
      stack.pop_back();
      p[x] = n - b;
      ++x;
    }
  }
  return p;
}

bool bruhat_leq(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("bruhat_leq: size mismatch");
  int n = static_cast<int>(a.size());
  // a <= b iff for all i,j: #{l<=i : a(l) <= j} >= #{l<=i : b(l) <= j}.
  for (int i = 1; i <= n; ++i) {
    int ca = 0, cb = 0;
    std::vector<int> da(n + 1, 0), db(n + 1, 0);
    for (int l = 1; l <= i; ++l) {
      da[a[l - 1]] = 1;
      db[b[l - 1]] = 1;
    }
    for (int j = 1; j <= n; ++j) {
      ca += da[j];
      cb += db[j];
      if (ca < cb) return false;
    }
  }
  return true;
}

std::vector<Permutation> bruhat_covers(const Permutation& a) {
  // Transpositions (i, j) that raise inv by exactly one:
  // a[i] < a[j] and no position between them holds an intermediate value.
  std::vector<Permutation> out;
  int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (a[i] >= a[j]) continue;
      bool blocked = false;
      for (int m = i + 1; m < j && !blocked; ++m)
        if (a[i] < a[m] && a[m] < a[j]) blocked = true;
      if (blocked) continue;
      Permutation b = a;
      std::swap(b[i], b[j]);
      out.push_back(b);
    }
  return out;
}

static std::set<std::pair<int, int>> value_inversions(const Permutation& p) {
  // Pairs of values (i, j), i < j, with j appearing before i.
  int n = static_cast<int>(p.size());
  std::vector<int> pos(n + 1);
  for (int c = 0; c < n; ++c) pos[p[c]] = c;
  std::set<std::pair<int, int>> s;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (pos[j] < pos[i]) s.insert({i, j});
  return s;
}

bool weak_leq(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("weak_leq: size mismatch");
  auto va = value_inversions(a), vb = value_inversions(b);
  return std::includes(vb.begin(), vb.end(), va.begin(), va.end());
}

MultiPoly interval_gf(const Permutation& base, OrderKind order) {
  int n = static_cast<int>(base.size());
  int ib = inv(base);
  MultiPoly gf;
  for (const auto& p : enumerate_permutations(n)) {
    bool in = order == OrderKind::Bruhat ? bruhat_leq(base, p) : weak_leq(base, p);
    if (in) gf += MultiPoly::monomial(1, inv(p) - ib);
  }
  return gf;
}

}  // namespace dycktiles
