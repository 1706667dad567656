#include "caw/poset.hpp"

#include <algorithm>

namespace caw::poset {

int Poset::index_of(const std::string& name) const {
  for (int i = 0; i < n(); ++i)
    if (elements[i] == name) return i;
  fail("UnknownElement", "no such element: " + name);
}

std::vector<int> Poset::covers_of(int x) const {
  std::vector<int> cov;
  for (int y = 0; y < n(); ++y) {
    if (!lt(x, y)) continue;
    bool is_cover = true;
    for (int z = 0; z < n() && is_cover; ++z)
      if (lt(x, z) && lt(z, y)) is_cover = false;
    if (is_cover) cov.push_back(y);
  }
  return cov;
}

std::vector<int> Poset::incomparables(int x) const {
  std::vector<int> inc;
  for (int y = 0; y < n(); ++y)
    if (incomparable(x, y)) inc.push_back(y);
  return inc;
}

std::vector<int> Poset::minimal_elements() const {
  std::vector<int> m;
  for (int x = 0; x < n(); ++x) {
    bool minimal = true;
    for (int y = 0; y < n(); ++y)
      if (lt(y, x)) minimal = false;
    if (minimal) m.push_back(x);
  }
  return m;
}

std::vector<int> Poset::maximal_elements() const {
  std::vector<int> m;
  for (int x = 0; x < n(); ++x) {
    bool maximal = true;
    for (int y = 0; y < n(); ++y)
      if (lt(x, y)) maximal = false;
    if (maximal) m.push_back(x);
  }
  return m;
}

int Poset::height() const {
  std::vector<int> h(n(), -1);
  // longest chain ending at x, by repeated relaxation (n is small)
  bool changed = true;
  for (int x = 0; x < n(); ++x) h[x] = 1;
  while (changed) {
    changed = false;
    for (int x = 0; x < n(); ++x)
      for (int y = 0; y < n(); ++y)
        if (lt(y, x) && h[y] + 1 > h[x]) {
          h[x] = h[y] + 1;
          changed = true;
        }
  }
  int best = 0;
  for (int x = 0; x < n(); ++x) best = std::max(best, h[x]);
  return best;
}

int Poset::width() const {
  // brute-force maximum antichain (n <= 12)
  int best = 0;
  for (uint32_t s = 0; s < (1u << n()); ++s) {
    bool anti = true;
    for (int i = 0; i < n() && anti; ++i)
      if (s >> i & 1u)
        for (int j = i + 1; j < n() && anti; ++j)
          if ((s >> j & 1u) && comparable(i, j)) anti = false;
    if (anti) best = std::max(best, __builtin_popcount(s));
  }
  return best;
}

Poset Poset::restricted(const std::vector<int>& keep) const {
  Poset r;
  for (int i : keep) r.elements.push_back(elements[i]);
  const int m = static_cast<int>(keep.size());
  r.less.assign(m, std::vector<char>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) r.less[i][j] = less[keep[i]][keep[j]];
  if (weights) {
    std::vector<Rat> w;
    for (int i : keep) w.push_back((*weights)[i]);
    r.weights = std::move(w);
  }
  return r;
}

Poset build_poset(std::vector<std::string> elements,
                  const std::vector<std::pair<std::string, std::string>>& relations,
                  std::optional<std::vector<Rat>> weights) {
  Poset p;
  p.elements = std::move(elements);
  const int n = p.n();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p.elements[i] == p.elements[j])
        fail("BadParams", "duplicate element: " + p.elements[i]);
  p.less.assign(n, std::vector<char>(n, 0));
  for (const auto& [a, b] : relations) {
    int i = p.index_of(a), j = p.index_of(b);
    if (i == j) fail("CycleDetected", "relation " + a + " < " + a);
    p.less[i][j] = 1;
  }
  // Warshall transitive closure
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (p.less[i][k])
        for (int j = 0; j < n; ++j)
          if (p.less[k][j]) p.less[i][j] = 1;
  for (int i = 0; i < n; ++i)
    if (p.less[i][i])
      fail("CycleDetected", "cycle through " + p.elements[i]);
  if (weights) {
    if (static_cast<int>(weights->size()) != n)
      fail("BadParams", "weight count does not match element count");
    for (const Rat& w : *weights)
      if (!(w > 0)) fail("NonPositiveWeight", "weights must be positive");
    p.weights = std::move(weights);
  }
  return p;
}

namespace {

void extend_rec(const Poset& p, std::vector<char>& used, std::vector<int>& word,
                std::vector<std::vector<int>>& out) {
  const int n = p.n();
  if (static_cast<int>(word.size()) == n) {
    out.push_back(word);
    return;
  }
  for (int x = 0; x < n; ++x) {
    if (used[x]) continue;
    bool minimal = true;
    for (int y = 0; y < n && minimal; ++y)
      if (!used[y] && p.lt(y, x)) minimal = false;
    if (!minimal) continue;
    used[x] = 1;
    word.push_back(x);
    extend_rec(p, used, word, out);
    word.pop_back();
    used[x] = 0;
  }
}

}  // namespace

std::vector<std::vector<int>> linear_extensions(const Poset& p, int cap) {
  if (p.n() > cap)
    fail("TooLarge", "poset has " + std::to_string(p.n()) +
                         " elements, cap is " + std::to_string(cap));
  std::vector<std::vector<int>> out;
  std::vector<char> used(p.n(), 0);
  std::vector<int> word;
  extend_rec(p, used, word, out);
  return out;
}

std::pair<int, int> ideal_sizes(const Poset& p, int x) {
  if (x < 0 || x >= p.n()) fail("UnknownElement", "element index out of range");
  int f = 0, g = 0;
  for (int y = 0; y < p.n(); ++y) {
    if (p.lt(y, x)) ++f;
    if (p.lt(x, y)) ++g;
  }
  return {f, g};
}

WeightPredicates weight_predicates(const Poset& p) {
  if (!p.weights) fail("MissingWeights", "poset carries no weights");
  const std::vector<Rat>& w = *p.weights;
  WeightPredicates r;
  r.order_reversing = true;
  r.cover_monotone = true;
  r.cover_monotone_equality = true;
  for (int x = 0; x < p.n() && r.order_reversing; ++x)
    for (int y = 0; y < p.n(); ++y)
      if (p.lt(x, y) && w[x] < w[y]) {
        r.order_reversing = false;
        r.witness = p.elements[x] + " < " + p.elements[y];
        break;
      }
  for (int x = 0; x < p.n(); ++x) {
    const std::vector<int> cov = p.covers_of(x);
    if (cov.empty()) continue;
    Rat sum(0);
    for (int y : cov) sum += w[y];
    if (w[x] < sum) {
      r.cover_monotone = false;
      r.cover_monotone_equality = false;
      if (r.witness.empty()) r.witness = p.elements[x];
    } else if (w[x] != sum) {
      r.cover_monotone_equality = false;
    }
  }
  return r;
}

std::vector<Rat> canonical_chain_weights(const Poset& p) {
  // number of maximal chains starting at x: 1 for maximal x, else the sum
  // over covers
  std::vector<Rat> w(p.n(), Rat(0));
  std::vector<int> order(p.n());
  for (int i = 0; i < p.n(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return ideal_sizes(p, a).second < ideal_sizes(p, b).second;
  });
  for (int x : order) {
    const std::vector<int> cov = p.covers_of(x);
    if (cov.empty()) {
      w[x] = 1;
    } else {
      for (int y : cov) w[x] += w[y];
    }
  }
  return w;
}

Poset chain(int n) {
  std::vector<std::string> e;
  std::vector<std::pair<std::string, std::string>> rel;
  for (int i = 1; i <= n; ++i) e.push_back("x" + std::to_string(i));
  for (int i = 1; i < n; ++i) rel.emplace_back("x" + std::to_string(i), "x" + std::to_string(i + 1));
  return build_poset(std::move(e), rel);
}

Poset antichain(int n) {
  std::vector<std::string> e;
  for (int i = 1; i <= n; ++i) e.push_back("x" + std::to_string(i));
  return build_poset(std::move(e), {});
}

Poset permutation_poset(const std::vector<int>& sigma) {
  const int n = static_cast<int>(sigma.size());
  std::vector<char> seen(n + 1, 0);
  for (int v : sigma) {
    if (v < 1 || v > n || seen[v]) fail("BadParams", "not a permutation");
    seen[v] = 1;
  }
  std::vector<std::string> e;
  for (int i = 1; i <= n; ++i) e.push_back(std::to_string(i));
  std::vector<std::pair<std::string, std::string>> rel;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (sigma[i] < sigma[j]) rel.emplace_back(e[i], e[j]);
  return build_poset(std::move(e), rel);
}

Poset skew_shape_poset(const std::vector<int>& lambda, const std::vector<int>& mu) {
  const int rows = static_cast<int>(lambda.size());
  for (int r = 0; r + 1 < rows; ++r)
    if (lambda[r] < lambda[r + 1]) fail("BadParams", "lambda not a partition");
  std::vector<int> mu_full(rows, 0);
  for (size_t r = 0; r < mu.size(); ++r) {
    if (static_cast<int>(r) >= rows || mu[r] > lambda[r])
      fail("BadParams", "mu not contained in lambda");
    mu_full[r] = mu[r];
  }
  std::vector<std::pair<int, int>> cells;  // 1-based (row, col)
  for (int r = 0; r < rows; ++r)
    for (int c = mu_full[r]; c < lambda[r]; ++c) cells.emplace_back(r + 1, c + 1);
  if (cells.empty()) fail("BadParams", "empty shape");
  std::vector<std::string> e;
  for (auto [r, c] : cells)
    e.push_back("c" + std::to_string(r) + "_" + std::to_string(c));
  std::vector<std::pair<std::string, std::string>> rel;
  for (size_t i = 0; i < cells.size(); ++i)
    for (size_t j = 0; j < cells.size(); ++j)
      if (i != j && cells[i].first >= cells[j].first &&
          cells[i].second >= cells[j].second)
        rel.emplace_back(e[i], e[j]);
  return build_poset(std::move(e), rel);
}

Poset tree_poset(const std::vector<std::string>& names, const std::vector<int>& parent) {
  const int n = static_cast<int>(names.size());
  int roots = 0;
  std::vector<std::pair<std::string, std::string>> rel;
  for (int i = 0; i < n; ++i) {
    if (parent[i] < 0) {
      ++roots;
    } else if (parent[i] >= n || parent[i] == i) {
      fail("BadParams", "bad parent pointer");
    } else {
      rel.emplace_back(names[parent[i]], names[i]);
    }
  }
  if (roots != 1) fail("BadParams", "tree needs exactly one root");
  return build_poset(names, rel);
}

Poset grid_poset(int a, int b) {
  if (a < 1 || b < 1) fail("BadParams", "grid dimensions must be positive");
  std::vector<int> lambda(a, b);
  return skew_shape_poset(lambda, {});
}

bool has_belt(const Poset& p, int z) {
  if (z < 0 || z >= p.n()) fail("UnknownElement", "element index out of range");
  const std::vector<int> inc = p.incomparables(z);
  for (size_t i = 0; i < inc.size(); ++i)
    for (size_t j = i + 1; j < inc.size(); ++j)
      if (p.incomparable(inc[i], inc[j])) return false;
  return true;
}

std::vector<int> adjacent_transposition(const Poset& p, const std::vector<int>& word, int i) {
  const int n = p.n();
  if (static_cast<int>(word.size()) != n || i < 1 || i >= n)
    fail("NotAnExtension", "bad word length or position");
  std::vector<char> used(n, 0);
  for (int pos = 0; pos < n; ++pos) {
    int x = word[pos];
    if (x < 0 || x >= n || used[x]) fail("NotAnExtension", "word is not a permutation");
    used[x] = 1;
    for (int q = 0; q < pos; ++q)
      if (p.lt(x, word[q])) fail("NotAnExtension", "word violates the order");
  }
  std::vector<int> out = word;
  if (p.incomparable(out[i - 1], out[i])) std::swap(out[i - 1], out[i]);
  return out;
}

bool is_tree_poset_with_bottom(const Poset& p) {
  // After adding a bottom element, the Hasse diagram is a rooted tree iff
  // every element of P covers exactly one element of (P + bottom), i.e.
  // every non-minimal element of P covers exactly one element of P.
  const int n = p.n();
  std::vector<int> depth(n, -1);
  for (int x = 0; x < n; ++x) {
    int covered = 0;
    for (int y = 0; y < n; ++y) {
      if (!p.lt(y, x)) continue;
      bool is_cover = true;
      for (int z = 0; z < n && is_cover; ++z)
        if (p.lt(y, z) && p.lt(z, x)) is_cover = false;
      if (is_cover) ++covered;
    }
    if (covered > 1) return false;
  }
  // all maximal chains of equal length: every maximal element at the same
  // depth, and depth is well defined along the unique tree paths
  int expected = -1;
  for (int x : p.maximal_elements()) {
    int d = ideal_sizes(p, x).first;
    if (expected == -1) expected = d;
    if (d != expected) return false;
  }
  // in a tree with a bottom, minimal elements all live at depth 0 already;
  // chains have equal length iff all maximal elements share their lower
  // ideal size AND lower ideals are chains (guaranteed by the tree shape)
  for (int x = 0; x < n; ++x) {
    std::vector<int> below;
    for (int y = 0; y < n; ++y)
      if (p.lt(y, x)) below.push_back(y);
    for (size_t i = 0; i < below.size(); ++i)
      for (size_t j = i + 1; j < below.size(); ++j)
        if (p.incomparable(below[i], below[j])) return false;
  }
  return true;
}

}  // namespace caw::poset
