#include "dycktiles/textio.hpp"

#include <nlohmann/json.hpp>

#include <functional>
#include <sstream>
#include <stdexcept>

namespace dycktiles {

using nlohmann::json;

std::string path_str(const LatticePath& p) {
  std::string s;
  for (Step st : p.steps) s += (st == Step::Up ? 'U' : 'D');
  return s;
}

LatticePath parse_path(const std::string& s, int k) {
  LatticePath p;
  p.k = k;
  for (char c : s) {
    if (c == 'U' || c == 'u')
      p.steps.push_back(Step::Up);
    else if (c == 'D' || c == 'd')
      p.steps.push_back(Step::Down);
    else if (c != ' ')
      throw std::invalid_argument("parse_path: unexpected character");
  }
  return p;
}

static void forest_str_rec(const PlaneForest& f, int v, std::string& out) {
  out += '(';
  for (int c : f.children[v]) forest_str_rec(f, c, out);
  out += ')';
}

std::string forest_str(const PlaneForest& f) {
  std::string out;
  for (int r : f.roots) forest_str_rec(f, r, out);
  return out;
}

PlaneForest parse_forest(const std::string& s) {
  PlaneForest f;
  std::vector<int> stack;
  for (char c : s) {
    if (c == '(') {
      int v = f.size();
      f.children.emplace_back();
      f.parent.push_back(stack.empty() ? -1 : stack.back());
      if (stack.empty())
        f.roots.push_back(v);
      else
        f.children[stack.back()].push_back(v);
      stack.push_back(v);
    } else if (c == ')') {
      if (stack.empty()) throw std::invalid_argument("parse_forest: unbalanced");
      stack.pop_back();
    } else if (c != ' ') {
      throw std::invalid_argument("parse_forest: unexpected character");
    }
  }
  if (!stack.empty()) throw std::invalid_argument("parse_forest: unbalanced");
  return f;
}

static std::string word_str(const std::vector<int>& w, int n) {
  std::ostringstream out;
  bool commas = n > 9;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i && commas) out << ',';
    out << w[i];
  }
  return out.str();
}

static std::vector<int> parse_word(const std::string& s) {
  std::vector<int> w;
  if (s.find(',') != std::string::npos) {
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) w.push_back(std::stoi(tok));
  } else {
    for (char c : s) {
      if (c == ' ') continue;
      if (c < '1' || c > '9') throw std::invalid_argument("parse_word: bad digit");
      w.push_back(c - '0');
    }
  }
  return w;
}

std::string permutation_str(const Permutation& p) {
  return word_str(p, static_cast<int>(p.size()));
}

Permutation parse_permutation(const std::string& s) {
  Permutation p = parse_word(s);
  if (!is_permutation(p)) throw std::invalid_argument("parse_permutation: not a permutation");
  return p;
}

std::string stirling_str(const StirlingPermutation& p) { return word_str(p.word, p.n); }

StirlingPermutation parse_stirling(const std::string& s, int k) {
  StirlingPermutation p;
  p.word = parse_word(s);
  p.k = k;
  int mx = 0;
  for (int v : p.word) mx = std::max(mx, v);
  p.n = mx;
  if (!is_stirling_permutation(p))
    throw std::invalid_argument("parse_stirling: not a k-Stirling permutation");
  return p;
}

std::string matching_str(const Matching& m) {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < m.size(); ++i) {
    if (m.partner[i] < i) continue;
    if (!first) out << ',';
    first = false;
    out << (i + 1) << '-' << (m.partner[i] + 1);
  }
  return out.str();
}

Matching parse_matching(const std::string& s) {
  std::vector<std::pair<int, int>> arcs;
  std::istringstream in(s);
  std::string tok;
  int mx = 0;
  while (std::getline(in, tok, ',')) {
    auto dash = tok.find('-');
    if (dash == std::string::npos) throw std::invalid_argument("parse_matching: missing dash");
    int a = std::stoi(tok.substr(0, dash)), b = std::stoi(tok.substr(dash + 1));
    arcs.push_back({a, b});
    mx = std::max({mx, a, b});
  }
  Matching m;
  m.partner.assign(mx, -1);
  for (auto [a, b] : arcs) {
    if (a < 1 || b < 1 || a > mx || b > mx || a == b)
      throw std::invalid_argument("parse_matching: bad arc");
    m.partner[a - 1] = b - 1;
    m.partner[b - 1] = a - 1;
  }
  if (!is_valid_matching(m)) throw std::invalid_argument("parse_matching: not a perfect matching");
  return m;
}

std::string history_str(const HermiteHistory& h) {
  std::ostringstream out;
  out << path_str(h.path) << ':';
  for (size_t i = 0; i < h.labels.size(); ++i) {
    if (i) out << ',';
    out << h.labels[i];
  }
  return out.str();
}

HermiteHistory parse_history(const std::string& s, int k) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("parse_history: missing ':'");
  HermiteHistory h;
  h.path = parse_path(s.substr(0, colon), k);
  std::istringstream in(s.substr(colon + 1));
  std::string tok;
  while (std::getline(in, tok, ',')) h.labels.push_back(std::stoi(tok));
  return h;
}

std::string ncp_str(const NoncrossingPartition& p) {
  std::ostringstream out;
  for (const auto& b : p.blocks) {
    out << '{';
    for (size_t i = 0; i < b.size(); ++i) {
      if (i) out << ',';
      out << b[i];
    }
    out << '}';
  }
  return out.str();
}

std::string symmetric_forest_str(const SymmetricForest& f) {
  // Walk the left part; center vertices use square brackets.
  std::string out;
  std::function<void(int)> rec = [&](int v) {
    out += f.is_center[v] ? '[' : '(';
    for (int c : f.left.children[v]) rec(c);
    out += f.is_center[v] ? ']' : ')';
  };
  for (int r : f.left.roots) rec(r);
  return out;
}

SymmetricForest parse_symmetric_forest(const std::string& s) {
  SymmetricForest f;
  std::vector<int> stack;
  for (char c : s) {
    if (c == '(' || c == '[') {
      int v = f.left.size();
      f.left.children.emplace_back();
      f.left.parent.push_back(stack.empty() ? -1 : stack.back());
      f.is_center.push_back(c == '[');
      if (stack.empty())
        f.left.roots.push_back(v);
      else
        f.left.children[stack.back()].push_back(v);
      stack.push_back(v);
    } else if (c == ')' || c == ']') {
      if (stack.empty()) throw std::invalid_argument("parse_symmetric_forest: unbalanced");
      stack.pop_back();
    } else if (c != ' ') {
      throw std::invalid_argument("parse_symmetric_forest: unexpected character");
    }
  }
  if (!stack.empty() || !is_valid_symmetric_forest(f))
    throw std::invalid_argument("parse_symmetric_forest: invalid");
  return f;
}

std::string marked_labeling_str(const MarkedIncreasingLabeling& l) {
  std::ostringstream out;
  out << symmetric_forest_str(l.forest) << ':';
  for (int v = 0; v < l.forest.size(); ++v) {
    if (v) out << ',';
    out << l.label[v];
    if (l.marked[v]) out << '*';
  }
  return out.str();
}

std::string tiling_json(const Tiling& t) {
  json j;
  j["k"] = t.k;
  j["lower"] = path_str(t.lower);
  j["upper"] = path_str(t.upper);
  json tiles = json::array();
  for (const auto& tile : t.tiles) {
    json cells = json::array();
    for (const auto& c : tile.cells) cells.push_back({c.x, c.y});
    tiles.push_back(cells);
  }
  j["tiles"] = tiles;
  return j.dump();
}

Tiling parse_tiling_json(const std::string& s) {
  json j = json::parse(s);
  Tiling t;
  t.k = j.at("k").get<int>();
  t.lower = parse_path(j.at("lower").get<std::string>(), t.k);
  t.upper = parse_path(j.at("upper").get<std::string>(), t.k);
  for (const auto& cells : j.at("tiles")) {
    DyckTile tile;
    for (const auto& c : cells) tile.cells.push_back({c.at(0).get<int>(), c.at(1).get<int>()});
    t.tiles.push_back(tile);
  }
  return t;
}

}  // namespace dycktiles
