#include "caw/structures.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace caw::structures {

namespace {

constexpr int kGroundCap = 10;

int popcount(Mask m) { return __builtin_popcount(m); }

}  // namespace

std::string subset_str(const std::vector<std::string>& ground, Mask s) {
  std::string out = "{";
  bool first = true;
  for (size_t i = 0; i < ground.size(); ++i) {
    if (!(s >> i & 1u)) continue;
    if (!first) out += ",";
    out += ground[i];
    first = false;
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// Matroids

bool Matroid::independent(Mask s) const {
  return std::binary_search(independents.begin(), independents.end(), s);
}

int Matroid::rank() const {
  int r = 0;
  for (Mask s : independents) r = std::max(r, popcount(s));
  return r;
}

long long Matroid::count(int k) const {
  long long c = 0;
  for (Mask s : independents)
    if (popcount(s) == k) ++c;
  return c;
}

std::vector<Mask> Matroid::of_size(int k) const {
  std::vector<Mask> out;
  for (Mask s : independents)
    if (popcount(s) == k) out.push_back(s);
  return out;
}

int Matroid::index_of(const std::string& name) const {
  for (int i = 0; i < n(); ++i)
    if (ground[i] == name) return i;
  fail("UnknownElement", "no such ground element: " + name);
}

std::vector<int> Matroid::rank_table() const {
  const Mask full = (n() == 32) ? ~0u : ((1u << n()) - 1);
  std::vector<int> r(static_cast<size_t>(full) + 1, 0);
  for (Mask s = 1; s <= full; ++s) {
    if (independent(s)) {
      r[s] = popcount(s);
      continue;
    }
    int best = 0;
    for (int i = 0; i < n(); ++i)
      if (s >> i & 1u) best = std::max(best, r[s & ~(1u << i)]);
    r[s] = best;
  }
  return r;
}

MatroidAxiomReport check_matroid_axioms(const std::vector<std::string>& ground,
                                        const std::vector<Mask>& family) {
  MatroidAxiomReport rep;
  std::set<Mask> fam(family.begin(), family.end());
  rep.nonempty = !fam.empty();
  for (Mask s : fam) {
    for (int i = 0; i < static_cast<int>(ground.size()) && rep.hereditary; ++i) {
      if ((s >> i & 1u) && !fam.count(s & ~(1u << i))) {
        rep.hereditary = false;
        rep.hereditary_witness = subset_str(ground, s);
      }
    }
    if (!rep.hereditary) break;
  }
  for (Mask s : fam) {
    if (!rep.exchange) break;
    for (Mask t : fam) {
      if (popcount(s) >= popcount(t)) continue;
      bool found = false;
      for (int i = 0; i < static_cast<int>(ground.size()) && !found; ++i)
        if ((t >> i & 1u) && !(s >> i & 1u) && fam.count(s | (1u << i))) found = true;
      if (!found) {
        rep.exchange = false;
        rep.exchange_witness =
            subset_str(ground, s) + " vs " + subset_str(ground, t);
        break;
      }
    }
  }
  return rep;
}

Matroid make_explicit(std::vector<std::string> ground, std::vector<Mask> family) {
  if (static_cast<int>(ground.size()) > kGroundCap)
    fail("TooLarge", "ground set exceeds the cap of " + std::to_string(kGroundCap));
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  const MatroidAxiomReport rep = check_matroid_axioms(ground, family);
  if (!rep.ok())
    fail("AxiomViolation",
         !rep.nonempty ? "empty family"
         : !rep.hereditary
             ? "hereditary fails at " + rep.hereditary_witness
             : "exchange fails at " + rep.exchange_witness);
  Matroid m;
  m.ground = std::move(ground);
  m.independents = std::move(family);
  return m;
}

Matroid make_free(int n) { return make_uniform(n, n); }

Matroid make_uniform(int n, int r) {
  if (n < 0 || r < 0 || r > n) fail("BadParams", "uniform matroid needs 0 <= r <= n");
  std::vector<std::string> ground;
  for (int i = 1; i <= n; ++i) ground.push_back("x" + std::to_string(i));
  std::vector<Mask> fam;
  for (Mask s = 0; s < (1u << n); ++s)
    if (popcount(s) <= r) fam.push_back(s);
  return make_explicit(std::move(ground), std::move(fam));
}

bool Graph::connected() const {
  if (vertices.empty()) return true;
  std::vector<char> seen(vertices.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& [a, b] : edges) {
      int o = -1;
      if (a == v) o = b;
      if (b == v) o = a;
      if (o >= 0 && !seen[o]) {
        seen[o] = 1;
        stack.push_back(o);
      }
    }
  }
  for (char s : seen)
    if (!s) return false;
  return true;
}

namespace {

bool is_forest(const Graph& g, Mask edge_set) {
  std::vector<int> parent(g.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (size_t e = 0; e < g.edges.size(); ++e) {
    if (!(edge_set >> e & 1u)) continue;
    int a = find(g.edges[e].first), b = find(g.edges[e].second);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

}  // namespace

Matroid make_graphic(const Graph& g) {
  const int m = static_cast<int>(g.edges.size());
  if (m > kGroundCap) fail("TooLarge", "too many edges");
  std::vector<std::string> ground = g.edge_names;
  if (ground.empty())
    for (int e = 1; e <= m; ++e) ground.push_back("e" + std::to_string(e));
  std::vector<Mask> fam;
  for (Mask s = 0; s < (1u << m); ++s)
    if (is_forest(g, s)) fam.push_back(s);
  return make_explicit(std::move(ground), std::move(fam));
}

namespace {

bool gf_independent(int q, int mdim, const std::vector<std::vector<int>>& vecs,
                    const std::vector<int>& idx) {
  // Gaussian elimination mod q
  std::vector<std::vector<int>> rows;
  for (int i : idx) rows.push_back(vecs[i]);
  int r = 0;
  for (int c = 0; c < mdim && r < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][c] % q != 0) {
        piv = i;
        break;
      }
    if (piv == -1) continue;
    std::swap(rows[r], rows[piv]);
    // scale pivot row to make the pivot 1
    int inv = 1;
    for (int t = 1; t < q; ++t)
      if (rows[r][c] * t % q == 1) inv = t;
    for (int& x : rows[r]) x = x * inv % q;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][c] % q == 0) continue;
      int f = rows[i][c];
      for (int c2 = 0; c2 < mdim; ++c2)
        rows[i][c2] = ((rows[i][c2] - f * rows[r][c2]) % q + q * q) % q;
    }
    ++r;
  }
  return r == static_cast<int>(rows.size());
}

}  // namespace

Matroid make_vector_gf(int q, const std::vector<std::vector<int>>& vectors) {
  if (q < 2) fail("BadParams", "q must be a prime");
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) fail("BadParams", "q must be a prime");
  if (vectors.empty() || static_cast<int>(vectors.size()) > kGroundCap)
    fail("TooLarge", "vector count out of range");
  const int mdim = static_cast<int>(vectors[0].size());
  std::vector<std::vector<int>> vecs = vectors;
  for (auto& v : vecs) {
    if (static_cast<int>(v.size()) != mdim) fail("BadParams", "ragged vectors");
    for (int& x : v) x = (x % q + q) % q;
  }
  std::vector<std::string> ground;
  for (size_t i = 0; i < vecs.size(); ++i) {
    std::string name = "v";
    for (int x : vecs[i]) name += std::to_string(x);
    // disambiguate duplicated vectors by position
    for (size_t j = 0; j < i; ++j)
      if (vecs[j] == vecs[i]) {
        name += "_" + std::to_string(i);
        break;
      }
    ground.push_back(name);
  }
  const int n = static_cast<int>(vecs.size());
  std::vector<Mask> fam;
  for (Mask s = 0; s < (1u << n); ++s) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (s >> i & 1u) idx.push_back(i);
    if (gf_independent(q, mdim, vecs, idx)) fam.push_back(s);
  }
  return make_explicit(std::move(ground), std::move(fam));
}

Matroid make_steiner(int t, int m, int n, const std::vector<std::vector<int>>& blocks) {
  if (!(0 < t && t < m && m < n)) fail("BadParams", "need t < m < n");
  if (n > kGroundCap) fail("TooLarge", "ground set exceeds cap");
  std::vector<Mask> block_masks;
  for (const auto& b : blocks) {
    Mask mask = 0;
    for (int x : b) {
      if (x < 1 || x > n) fail("BadParams", "block element out of range");
      mask |= 1u << (x - 1);
    }
    if (popcount(mask) != m) fail("AxiomViolation", "block of wrong size");
    block_masks.push_back(mask);
  }
  // each t-subset lies in exactly one block
  for (Mask s = 0; s < (1u << n); ++s) {
    if (popcount(s) != t) continue;
    int hits = 0;
    for (Mask b : block_masks)
      if ((s & b) == s) ++hits;
    if (hits != 1)
      fail("AxiomViolation", "t-subset covered " + std::to_string(hits) + " times");
  }
  std::vector<std::string> ground;
  for (int i = 1; i <= n; ++i) ground.push_back("p" + std::to_string(i));
  std::vector<Mask> fam;
  for (Mask s = 0; s < (1u << n); ++s) {
    const int sz = popcount(s);
    if (sz <= t) {
      fam.push_back(s);
    } else if (sz == t + 1) {
      bool inside = false;
      for (Mask b : block_masks)
        if ((s & b) == s) inside = true;
      if (!inside) fam.push_back(s);
    }
  }
  return make_explicit(std::move(ground), std::move(fam));
}

std::vector<int> matroid_cnt(const Matroid& m, Mask s) {
  std::vector<int> out;
  for (int x = 0; x < m.n(); ++x)
    if (!(s >> x & 1u) && m.independent(s | (1u << x))) out.push_back(x);
  return out;
}

std::vector<std::vector<int>> matroid_par(const Matroid& m, Mask s) {
  const std::vector<int> cnt = matroid_cnt(m, s);
  std::vector<std::vector<int>> classes;
  std::vector<char> placed(m.n(), 0);
  for (int x : cnt) {
    if (placed[x]) continue;
    std::vector<int> cls{x};
    placed[x] = 1;
    for (int y : cnt)
      if (!placed[y] && !m.independent(s | (1u << x) | (1u << y))) {
        cls.push_back(y);
        placed[y] = 1;
      }
    classes.push_back(std::move(cls));
  }
  return classes;
}

int continuation_number(const Matroid& m, int k) {
  if (k < 0 || k >= m.rank()) fail("RankOutOfRange", "need 0 <= k < rk");
  int best = 0;
  for (Mask s : m.of_size(k))
    best = std::max(best, static_cast<int>(matroid_par(m, s).size()));
  return best;
}

int girth(const Matroid& m) {
  for (int k = 1; k <= m.n(); ++k)
    if (BigInt(m.count(k)) < binomial(m.n(), k)) return k;
  return m.n() + 1;
}

// ---------------------------------------------------------------------------
// Discrete polymatroids

bool DiscretePolymatroid::contains(const std::vector<int>& a) const {
  return std::binary_search(independents.begin(), independents.end(), a);
}

int DiscretePolymatroid::rank() const {
  int r = 0;
  for (const auto& a : independents)
    r = std::max(r, std::accumulate(a.begin(), a.end(), 0));
  return r;
}

long long DiscretePolymatroid::count(int k) const {
  long long c = 0;
  for (const auto& a : independents)
    if (std::accumulate(a.begin(), a.end(), 0) == k) ++c;
  return c;
}

std::vector<std::vector<int>> DiscretePolymatroid::of_size(int k) const {
  std::vector<std::vector<int>> out;
  for (const auto& a : independents)
    if (std::accumulate(a.begin(), a.end(), 0) == k) out.push_back(a);
  return out;
}

bool DiscretePolymatroid::nondegenerate() const {
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    if (!contains(e)) return false;
  }
  return true;
}

namespace {

std::string vec_str(const std::vector<int>& a) {
  std::string s = "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + ")";
}

}  // namespace

PolymatroidAxiomReport check_polymatroid_axioms(int n,
                                                const std::vector<std::vector<int>>& family) {
  PolymatroidAxiomReport rep;
  std::set<std::vector<int>> fam(family.begin(), family.end());
  rep.nonempty = !fam.empty();
  for (const auto& a : fam) {
    for (int i = 0; i < n && rep.hereditary; ++i) {
      if (a[i] == 0) continue;
      std::vector<int> b = a;
      --b[i];
      if (!fam.count(b)) {
        rep.hereditary = false;
        rep.witness = vec_str(a);
      }
    }
    if (!rep.hereditary) return rep;
  }
  for (const auto& a : fam) {
    const int asz = std::accumulate(a.begin(), a.end(), 0);
    for (const auto& b : fam) {
      if (asz >= std::accumulate(b.begin(), b.end(), 0)) continue;
      bool found = false;
      for (int i = 0; i < n && !found; ++i) {
        if (a[i] >= b[i]) continue;
        std::vector<int> c = a;
        ++c[i];
        if (fam.count(c)) found = true;
      }
      if (!found) {
        rep.exchange = false;
        rep.witness = vec_str(a) + " vs " + vec_str(b);
        return rep;
      }
    }
  }
  return rep;
}

DiscretePolymatroid make_polymatroid(int n, std::vector<std::vector<int>> family) {
  if (n < 1 || n > kGroundCap) fail("TooLarge", "polymatroid ground out of range");
  for (const auto& a : family) {
    if (static_cast<int>(a.size()) != n) fail("BadParams", "vector of wrong length");
    for (int x : a)
      if (x < 0) fail("BadParams", "negative multiplicity");
  }
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  const PolymatroidAxiomReport rep = check_polymatroid_axioms(n, family);
  if (!rep.ok()) fail("AxiomViolation", "polymatroid axioms fail at " + rep.witness);
  DiscretePolymatroid d;
  d.n = n;
  d.independents = std::move(family);
  return d;
}

DiscretePolymatroid make_full_polymatroid(int n, int r) {
  std::vector<std::vector<int>> fam;
  std::vector<int> a(n, 0);
  while (true) {
    if (std::accumulate(a.begin(), a.end(), 0) <= r) fam.push_back(a);
    int i = n - 1;
    while (i >= 0 && a[i] == r) a[i--] = 0;
    if (i < 0) break;
    ++a[i];
  }
  return make_polymatroid(n, std::move(fam));
}

DiscretePolymatroid polymatroid_of_matroid(const Matroid& m) {
  std::vector<std::vector<int>> fam;
  for (Mask s : m.independents) {
    std::vector<int> a(m.n(), 0);
    for (int i = 0; i < m.n(); ++i) a[i] = (s >> i) & 1;
    fam.push_back(std::move(a));
  }
  return make_polymatroid(m.n(), std::move(fam));
}

std::vector<int> polymatroid_cnt(const DiscretePolymatroid& d, const std::vector<int>& a) {
  std::vector<int> out;
  for (int i = 0; i < d.n; ++i) {
    std::vector<int> b = a;
    ++b[i];
    if (d.contains(b)) out.push_back(i);
  }
  return out;
}

std::vector<std::vector<int>> polymatroid_par(const DiscretePolymatroid& d,
                                              const std::vector<int>& a) {
  const std::vector<int> cnt = polymatroid_cnt(d, a);
  std::vector<std::vector<int>> classes;
  std::vector<char> placed(d.n, 0);
  for (int i : cnt) {
    if (placed[i]) continue;
    std::vector<int> cls{i};
    placed[i] = 1;
    for (int j : cnt) {
      if (placed[j] || j == i) continue;
      std::vector<int> b = a;
      ++b[i];
      ++b[j];
      if (!d.contains(b)) {
        cls.push_back(j);
        placed[j] = 1;
      }
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

int continuation_number(const DiscretePolymatroid& d, int k) {
  if (k < 0 || k >= d.rank()) fail("RankOutOfRange", "need 0 <= k < rk");
  int best = 0;
  for (const auto& a : d.of_size(k))
    best = std::max(best, static_cast<int>(polymatroid_par(d, a).size()));
  return best;
}

int polygirth(const DiscretePolymatroid& d) {
  if (!d.nondegenerate()) fail("Degenerate", "polymatroid misses a unit vector");
  for (int k = 1;; ++k) {
    // number of multisets of size k from n kinds
    if (BigInt(d.count(k)) < binomial(d.n + k - 1, k)) return k;
  }
}

// pi(a) = sum binom(a_i, 2): zero exactly on 0/1 vectors, so t^pi reduces
// the polymatroid series to the matroid one at t = 0.
long long pi_exponent(const std::vector<int>& a) {
  long long s = 0;
  for (int x : a) s += static_cast<long long>(x) * (x - 1) / 2;
  return s;
}

// ---------------------------------------------------------------------------
// Greedoid languages

bool GreedoidLanguage::contains(const Word& w) const {
  const int len = static_cast<int>(w.size());
  if (len >= static_cast<int>(by_length.size())) return false;
  const auto& bucket = by_length[len];
  return std::binary_search(bucket.begin(), bucket.end(), w);
}

long long GreedoidLanguage::count(int k) const {
  if (k < 0 || k >= static_cast<int>(by_length.size())) return 0;
  return static_cast<long long>(by_length[k].size());
}

const std::vector<Word>& GreedoidLanguage::of_length(int k) const {
  static const std::vector<Word> empty;
  if (k < 0 || k >= static_cast<int>(by_length.size())) return empty;
  return by_length[k];
}

long long GreedoidLanguage::total_words() const {
  long long t = 0;
  for (const auto& b : by_length) t += static_cast<long long>(b.size());
  return t;
}

std::vector<int> GreedoidLanguage::cnt(const Word& alpha) const {
  std::vector<int> out;
  Word w = alpha;
  w.push_back(0);
  for (int x = 0; x < n_letters(); ++x) {
    w.back() = x;
    if (contains(w)) out.push_back(x);
  }
  return out;
}

std::vector<Word> GreedoidLanguage::cnt_k(const Word& alpha, int k) const {
  std::vector<Word> out;
  if (k < 0) return out;
  const int len = static_cast<int>(alpha.size()) + k;
  if (len >= static_cast<int>(by_length.size())) return out;
  const auto& bucket = by_length[len];
  const size_t a = alpha.size();
  auto cmp = [a](const Word& w, const Word& p) {
    return std::lexicographical_compare(w.begin(), w.begin() + std::min(w.size(), a),
                                        p.begin(), p.end());
  };
  auto lo = std::lower_bound(bucket.begin(), bucket.end(), alpha, cmp);
  for (auto it = lo; it != bucket.end(); ++it) {
    if (!std::equal(alpha.begin(), alpha.end(), it->begin())) break;
    out.emplace_back(it->begin() + a, it->end());
  }
  return out;
}

std::vector<std::vector<int>> GreedoidLanguage::par(const Word& alpha, bool* equiv) const {
  if (!contains(alpha)) fail("WordNotInLanguage", "word not in language");
  const std::vector<int> c = cnt(alpha);
  auto related = [&](int x, int y) {
    if (x == y) return true;
    Word w = alpha;
    w.push_back(x);
    w.push_back(y);
    return !contains(w);
  };
  if (equiv) {
    *equiv = true;
    for (int x : c)
      for (int y : c) {
        if (related(x, y) != related(y, x)) *equiv = false;
        for (int z : c)
          if (related(x, y) && related(y, z) && !related(x, z)) *equiv = false;
      }
  }
  std::vector<std::vector<int>> classes;
  std::vector<char> placed(n_letters(), 0);
  for (int x : c) {
    if (placed[x]) continue;
    std::vector<int> cls{x};
    placed[x] = 1;
    for (int y : c)
      if (!placed[y] && related(x, y)) {
        cls.push_back(y);
        placed[y] = 1;
      }
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<int> GreedoidLanguage::des(const Word& alpha, int x) const {
  std::vector<int> out;
  Word ax = alpha;
  ax.push_back(x);
  if (!contains(ax)) return out;
  Word ay = alpha;
  ay.push_back(0);
  Word axy = ax;
  axy.push_back(0);
  for (int y = 0; y < n_letters(); ++y) {
    axy.back() = y;
    ay.back() = y;
    if (contains(axy) && !contains(ay)) out.push_back(y);
  }
  return out;
}

std::vector<int> GreedoidLanguage::passive(const Word& alpha, int x, int y) const {
  std::vector<int> out;
  for (int z = 0; z < n_letters(); ++z) {
    Word az = alpha;
    az.push_back(z);
    if (contains(az)) continue;
    Word axz = alpha;
    axz.push_back(x);
    axz.push_back(z);
    if (contains(axz)) continue;
    Word ayz = alpha;
    ayz.push_back(y);
    ayz.push_back(z);
    if (contains(ayz)) continue;
    Word axyz = alpha;
    axyz.push_back(x);
    axyz.push_back(y);
    axyz.push_back(z);
    if (contains(axyz)) out.push_back(z);
  }
  return out;
}

std::vector<int> GreedoidLanguage::active(const Word& alpha, int x, int y) const {
  std::vector<int> out;
  for (int z = 0; z < n_letters(); ++z) {
    Word az = alpha;
    az.push_back(z);
    if (contains(az)) continue;
    Word axz = alpha;
    axz.push_back(x);
    axz.push_back(z);
    if (!contains(axz)) continue;
    Word ayz = alpha;
    ayz.push_back(y);
    ayz.push_back(z);
    if (!contains(ayz)) continue;
    Word axyz = alpha;
    axyz.push_back(x);
    axyz.push_back(y);
    axyz.push_back(z);
    if (contains(axyz)) out.push_back(z);
  }
  return out;
}

std::string GreedoidLanguage::word_str(const Word& w) const {
  if (w.empty()) return "()";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ".";
    s += alphabet[w[i]];
  }
  return s;
}

namespace {

struct WordSet {
  std::vector<std::vector<Word>> by_length;

  explicit WordSet(std::vector<Word> words) {
    for (auto& w : words) {
      if (w.size() >= by_length.size()) by_length.resize(w.size() + 1);
      by_length[w.size()].push_back(std::move(w));
    }
    for (auto& b : by_length) {
      std::sort(b.begin(), b.end());
      b.erase(std::unique(b.begin(), b.end()), b.end());
    }
  }

  bool contains(const Word& w) const {
    if (w.size() >= by_length.size()) return false;
    const auto& b = by_length[w.size()];
    return std::binary_search(b.begin(), b.end(), w);
  }
};

}  // namespace

GreedoidFlags check_greedoid_axioms(int n_letters, const std::vector<Word>& words) {
  GreedoidFlags f;
  WordSet set(words);

  auto word_text = [&](const Word& w) {
    std::string s = "[";
    for (size_t i = 0; i < w.size(); ++i) {
      if (i) s += " ";
      s += std::to_string(w[i]);
    }
    return s + "]";
  };
  auto note = [&](bool& flag, const std::string& msg) {
    if (f.witness.empty()) f.witness = msg;
    flag = false;
  };

  f.contains_empty = set.contains({});
  if (!f.contains_empty) note(f.contains_empty, "empty word missing");

  std::vector<char> used(n_letters, 0);
  for (const auto& bucket : set.by_length)
    for (const Word& w : bucket) {
      std::vector<char> seen(n_letters, 0);
      for (int x : w) {
        if (x < 0 || x >= n_letters) fail("BadParams", "letter out of range");
        if (seen[x] && f.normal) note(f.normal, "non-simple word " + word_text(w));
        seen[x] = 1;
        used[x] = 1;
      }
      if (!w.empty() && f.hereditary) {
        Word prefix(w.begin(), w.end() - 1);
        if (!set.contains(prefix))
          note(f.hereditary, "prefix of " + word_text(w) + " missing");
      }
    }
  for (int x = 0; x < n_letters && f.nondegenerate_letters; ++x)
    if (!used[x]) note(f.nondegenerate_letters, "unused letter " + std::to_string(x));

  // exchange: by the hereditary property it suffices to test |alpha|=|beta|+1
  for (size_t len = 0; len + 1 < set.by_length.size() && f.exchange; ++len) {
    for (const Word& beta : set.by_length[len]) {
      if (!f.exchange) break;
      for (const Word& alpha : set.by_length[len + 1]) {
        bool found = false;
        Word bx = beta;
        bx.push_back(0);
        for (int x : alpha) {
          bx.back() = x;
          if (set.contains(bx)) {
            found = true;
            break;
          }
        }
        if (!found) {
          note(f.exchange,
               "exchange fails for " + word_text(alpha) + " vs " + word_text(beta));
          break;
        }
      }
    }
  }

  // interval property
  for (const auto& bucket : set.by_length) {
    if (!f.interval) break;
    for (const Word& w : bucket) {
      if (w.empty()) continue;
      const int x = w.back();
      const Word core(w.begin(), w.end() - 1);
      for (size_t a = 0; a <= core.size() && f.interval; ++a) {
        Word ax(core.begin(), core.begin() + a);
        ax.push_back(x);
        if (!set.contains(ax)) continue;
        for (size_t b = a; b <= core.size(); ++b) {
          Word abx(core.begin(), core.begin() + b);
          abx.push_back(x);
          if (!set.contains(abx)) {
            note(f.interval, "interval property fails inside " + word_text(w));
            break;
          }
        }
      }
      if (!f.interval) break;
    }
  }

  // weak local property
  for (const auto& bucket : set.by_length) {
    if (!f.weak_local) break;
    for (const Word& alpha : bucket) {
      for (int x = 0; x < n_letters && f.weak_local; ++x) {
        Word ax = alpha;
        ax.push_back(x);
        if (!set.contains(ax)) continue;
        for (int y = 0; y < n_letters && f.weak_local; ++y) {
          Word axy = ax;
          axy.push_back(y);
          if (!set.contains(axy)) continue;
          for (int z = 0; z < n_letters; ++z) {
            Word axyz = axy;
            axyz.push_back(z);
            if (!set.contains(axyz)) continue;
            Word axz = ax;
            axz.push_back(z);
            if (!set.contains(axz)) continue;
            Word ayz = alpha;
            ayz.push_back(y);
            ayz.push_back(z);
            if (!set.contains(ayz)) continue;
            Word az = alpha;
            az.push_back(z);
            if (!set.contains(az)) {
              note(f.weak_local, "weak locality fails after " + word_text(alpha));
              break;
            }
          }
        }
      }
      if (!f.weak_local) break;
    }
  }

  // antimatroid exchange, reduced to supports: for words alpha, beta with a
  // letter of alpha missing from beta, some letter of alpha must continue beta
  {
    std::map<Mask, std::vector<const Word*>> groups;
    for (const auto& bucket : set.by_length)
      for (const Word& w : bucket) {
        Mask m = 0;
        for (int x : w) m |= 1u << x;
        groups[m].push_back(&w);
      }
    for (const auto& [bmask, bwords] : groups) {
      if (!f.antimatroid_exchange) break;
      for (const Word* beta : bwords) {
        Mask cont = 0;
        Word by = *beta;
        by.push_back(0);
        for (int y = 0; y < n_letters; ++y) {
          by.back() = y;
          if (set.contains(by)) cont |= 1u << y;
        }
        for (const auto& [amask, awords] : groups) {
          if ((amask & ~bmask) == 0) continue;  // every letter of alpha in beta
          if ((amask & cont) == 0) {
            note(f.antimatroid_exchange,
                 "antimatroid exchange fails for " + word_text(*awords[0]) +
                     " vs " + word_text(*beta));
            break;
          }
        }
        if (!f.antimatroid_exchange) break;
      }
    }
  }
  return f;
}

GreedoidLanguage make_language(std::vector<std::string> alphabet,
                               std::vector<Word> words) {
  GreedoidLanguage g;
  g.alphabet = std::move(alphabet);
  WordSet set(std::move(words));
  // type invariant: prefix-closed with the empty word present
  if (set.by_length.empty() || !set.contains({}))
    fail("NotPrefixClosed", "language must contain the empty word");
  for (const auto& bucket : set.by_length)
    for (const Word& w : bucket) {
      if (w.empty()) continue;
      Word prefix(w.begin(), w.end() - 1);
      if (!set.contains(prefix))
        fail("NotPrefixClosed", "missing prefix of a stored word");
    }
  std::vector<Word> all;
  for (const auto& bucket : set.by_length)
    for (const Word& w : bucket) all.push_back(w);
  g.flags = check_greedoid_axioms(g.n_letters(), all);
  g.by_length = std::move(set.by_length);
  return g;
}

namespace {

constexpr long long kWordCap = 2000000;

template <typename CanAppend>
std::vector<Word> grow_words(int n_letters, CanAppend can_append) {
  std::vector<Word> out{{}};
  size_t head = 0;
  while (head < out.size()) {
    const Word w = out[head++];
    if (w.size() >= 10) continue;  // words of length <= 10 by design
    for (int x = 0; x < n_letters; ++x) {
      if (std::find(w.begin(), w.end(), x) != w.end()) continue;
      if (!can_append(w, x)) continue;
      Word next = w;
      next.push_back(x);
      out.push_back(std::move(next));
      if (static_cast<long long>(out.size()) > kWordCap)
        fail("TooLarge", "lifted language exceeds the word cap");
    }
  }
  return out;
}

}  // namespace

GreedoidLanguage lift_matroid(const Matroid& m) {
  auto words = grow_words(m.n(), [&](const Word& w, int x) {
    Mask s = 0;
    for (int y : w) s |= 1u << y;
    return m.independent(s | (1u << x));
  });
  return make_language(m.ground, std::move(words));
}

PolymatroidAlphabet polymatroid_alphabet(const DiscretePolymatroid& d) {
  PolymatroidAlphabet pa;
  pa.n = d.n;
  std::vector<int> maxdeg(d.n, 0);
  for (const auto& a : d.independents)
    for (int i = 0; i < d.n; ++i) maxdeg[i] = std::max(maxdeg[i], a[i]);
  for (int i = 0; i < d.n; ++i)
    for (int j = 1; j <= maxdeg[i]; ++j) pa.letter_coord.emplace_back(i, j);
  return pa;
}

std::vector<int> PolymatroidAlphabet::count_vector(const Word& w) const {
  std::vector<int> a(n, 0);
  for (int letter : w) ++a[letter_coord[letter].first];
  return a;
}

GreedoidLanguage lift_polymatroid(const DiscretePolymatroid& d) {
  const PolymatroidAlphabet pa = polymatroid_alphabet(d);
  std::vector<std::string> alphabet;
  for (auto [i, j] : pa.letter_coord)
    alphabet.push_back("x" + std::to_string(i + 1) + "_" + std::to_string(j));
  auto letter_of = [&](int i, int j) {
    for (size_t l = 0; l < pa.letter_coord.size(); ++l)
      if (pa.letter_coord[l] == std::make_pair(i, j)) return static_cast<int>(l);
    return -1;
  };
  auto words = grow_words(static_cast<int>(alphabet.size()), [&](const Word& w, int x) {
    auto [i, j] = pa.letter_coord[x];
    if (j > 1) {
      const int prev = letter_of(i, j - 1);
      if (std::find(w.begin(), w.end(), prev) == w.end()) return false;  // well-ordered
    }
    std::vector<int> a = pa.count_vector(w);
    ++a[i];
    return d.contains(a);
  });
  return make_language(std::move(alphabet), std::move(words));
}

GreedoidLanguage lift_poset_antimatroid(const poset::Poset& p) {
  auto words = grow_words(p.n(), [&](const Word& w, int x) {
    for (int y = 0; y < p.n(); ++y) {
      if (!p.lt(y, x)) continue;
      if (std::find(w.begin(), w.end(), y) == w.end()) return false;
    }
    return true;
  });
  return make_language(p.elements, std::move(words));
}

GreedoidLanguage lift_branching(const Digraph& g) {
  const int ne = static_cast<int>(g.edges.size());
  if (ne > kGroundCap) fail("TooLarge", "too many edges");
  std::vector<std::string> alphabet = g.edge_names;
  if (alphabet.empty())
    for (int e = 1; e <= ne; ++e) alphabet.push_back("e" + std::to_string(e));
  auto words = grow_words(ne, [&](const Word& w, int e) {
    auto [u, v] = g.edges[e];
    if (u == g.root) return false;
    bool v_in_tree = (v == g.root);
    bool u_in_tree = (u == g.root);
    for (int f : w) {
      auto [a, b] = g.edges[f];
      if (a == v || b == v) v_in_tree = true;
      if (a == u || b == u) u_in_tree = true;
    }
    return v_in_tree && !u_in_tree;
  });
  return make_language(std::move(alphabet), std::move(words));
}

int continuation_number(const GreedoidLanguage& g, int k) {
  if (k < 0 || k >= g.rank()) fail("RankOutOfRange", "need 0 <= k < rk");
  int best = 0;
  for (const Word& alpha : g.of_length(k))
    best = std::max(best, static_cast<int>(g.par(alpha).size()));
  return best;
}

// ---------------------------------------------------------------------------
// Morphisms

Mask MatroidMorphism::image(Mask s) const {
  Mask out = 0;
  for (int i = 0; i < source.n(); ++i)
    if (s >> i & 1u) out |= 1u << phi[i];
  return out;
}

MorphismReport validate_morphism(const MatroidMorphism& mm) {
  MorphismReport rep;
  const std::vector<int> f = mm.source.rank_table();
  const std::vector<int> gtab = mm.target.rank_table();
  const Mask full = (1u << mm.source.n()) - 1;
  for (Mask t = 0; t <= full; ++t) {
    const int ft = f[t], gt = gtab[mm.image(t)];
    // enumerate subsets s of t
    for (Mask s = t;; s = (s - 1) & t) {
      if (gt - gtab[mm.image(s)] > ft - f[s]) {
        rep.valid = false;
        rep.witness = subset_str(mm.source.ground, s) + " within " +
                      subset_str(mm.source.ground, t);
        return rep;
      }
      if (s == 0) break;
    }
  }
  return rep;
}

std::vector<Mask> morphism_bases(const MatroidMorphism& mm, int k) {
  const std::vector<int> gtab = mm.target.rank_table();
  const int rk_n = mm.target.rank();
  std::vector<Mask> out;
  for (Mask s : mm.source.of_size(k))
    if (gtab[mm.image(s)] == rk_n) out.push_back(s);
  return out;
}

MorphismExchangeReport morphism_exchange_witnesses(const MatroidMorphism& mm) {
  MorphismExchangeReport rep;
  const std::vector<int> gtab = mm.target.rank_table();
  const int rk_n = mm.target.rank();
  auto is_basis = [&](Mask s) {
    return mm.source.independent(s) && gtab[mm.image(s)] == rk_n;
  };
  for (int k = 0; k <= mm.source.rank(); ++k) {
    const std::vector<Mask> bases = morphism_bases(mm, k);
    for (Mask s : bases)
      for (Mask t : bases) {
        if (s == t) continue;
        bool found = false;
        for (int z = 0; z < mm.source.n() && !found; ++z) {
          if (!((s >> z & 1u) && !(t >> z & 1u))) continue;
          for (int w = 0; w < mm.source.n() && !found; ++w) {
            if (!((t >> w & 1u) && !(s >> w & 1u))) continue;
            if (is_basis((s & ~(1u << z)) | (1u << w))) found = true;
          }
        }
        if (!found) {
          rep.ok = false;
          rep.witness = subset_str(mm.source.ground, s) + " vs " +
                        subset_str(mm.source.ground, t);
          return rep;
        }
      }
  }
  return rep;
}

int morphism_continuation_number(const MatroidMorphism& mm, int k) {
  int best = 0;
  for (Mask s : morphism_bases(mm, k))
    best = std::max(best, static_cast<int>(matroid_par(mm.source, s).size()));
  return best;
}

}  // namespace caw::structures
