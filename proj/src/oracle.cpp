#include "caw/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace caw::oracle {

using counting::WeightedLanguage;
using linalg::LabeledSymMatrix;
using structures::Mask;
using structures::Word;

std::vector<Rat> brute_I_weighted(const structures::Matroid& m,
                                  const std::vector<Rat>& omega) {
  std::vector<Rat> out(m.n() + 1, Rat(0));
  for (Mask s = 0; s < (1u << m.n()); ++s) {
    if (!m.independent(s)) continue;
    Rat v(1);
    for (int i = 0; i < m.n(); ++i)
      if (s >> i & 1u) v *= omega[i];
    out[__builtin_popcount(s)] += v;
  }
  while (out.size() > 1 && out.back().is_zero()) out.pop_back();
  return out;
}

std::vector<Rat> brute_J(const structures::DiscretePolymatroid& d,
                         const std::vector<Rat>& omega, const Rat& t) {
  std::vector<int> maxdeg(d.n, 0);
  for (const auto& a : d.independents)
    for (int i = 0; i < d.n; ++i) maxdeg[i] = std::max(maxdeg[i], a[i]);
  std::vector<Rat> out(d.rank() + 1, Rat(0));
  std::vector<int> a(d.n, 0);
  while (true) {
    if (d.contains(a)) {
      const int sz = std::accumulate(a.begin(), a.end(), 0);
      Rat v(1);
      const long long pi = structures::pi_exponent(a);
      bool skip = false;
      if (t.is_zero()) {
        if (pi > 0) skip = true;
      } else {
        v *= rat_pow(t, static_cast<unsigned>(pi));
      }
      if (!skip) {
        BigInt afact = 1;
        for (int i = 0; i < d.n; ++i) {
          v *= rat_pow(omega[i], a[i]);
          afact *= factorial(a[i]);
        }
        out[sz] += v / Rat(afact);
      }
    }
    int i = d.n - 1;
    while (i >= 0 && a[i] == maxdeg[i]) a[i--] = 0;
    if (i < 0) break;
    ++a[i];
  }
  return out;
}

std::vector<Rat> brute_N(const poset::Poset& p, const std::vector<Rat>& omega, int z) {
  const int n = p.n();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Rat> out(n + 1, Rat(0));
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j)
        if (p.lt(perm[j], perm[i])) ok = false;
    if (!ok) continue;
    Rat v(1);
    int pos = 0;
    for (int i = 0; i < n; ++i) {
      if (perm[i] == z) {
        pos = i + 1;
        break;
      }
      v *= omega[perm[i]];
    }
    out[pos] += v;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<Rat> brute_B(const structures::MatroidMorphism& mm,
                         const std::vector<Rat>& omega) {
  const int n = mm.source.n();
  const int rk_target = mm.target.rank();
  std::vector<Rat> out(mm.source.rank() + 1, Rat(0));
  for (Mask s = 0; s < (1u << n); ++s) {
    if (!mm.source.independent(s)) continue;
    // brute target rank of the image: largest independent subset
    const Mask img = mm.image(s);
    int best = 0;
    for (Mask u = 0; u < (1u << mm.target.n()); ++u)
      if ((u & img) == u && mm.target.independent(u))
        best = std::max(best, __builtin_popcount(u));
    if (best != rk_target) continue;
    Rat v(1);
    for (int i = 0; i < n; ++i)
      if (s >> i & 1u) v *= omega[i];
    out[__builtin_popcount(s)] += v;
  }
  return out;
}

namespace {

void brute_words_rec(const WeightedLanguage& w, Word& word, std::vector<Rat>& out) {
  out[word.size()] += w.q_of(word);
  if (static_cast<int>(word.size()) == w.lang.rank()) return;
  for (int x = 0; x < w.lang.n_letters(); ++x) {
    if (std::find(word.begin(), word.end(), x) != word.end()) continue;
    word.push_back(x);
    if (w.lang.contains(word)) brute_words_rec(w, word, out);
    word.pop_back();
  }
}

}  // namespace

std::vector<Rat> brute_L(const WeightedLanguage& w) {
  std::vector<Rat> out(w.lang.rank() + 1, Rat(0));
  Word word;
  brute_words_rec(w, word, out);
  return out;
}

int brute_continuation_number_matroid(const structures::Matroid& m, int k) {
  int best = 0;
  for (Mask s = 0; s < (1u << m.n()); ++s) {
    if (__builtin_popcount(s) != k || !m.independent(s)) continue;
    // relation matrix + explicit class count
    std::vector<int> cont;
    for (int x = 0; x < m.n(); ++x)
      if (!(s >> x & 1u) && m.independent(s | (1u << x))) cont.push_back(x);
    const int c = static_cast<int>(cont.size());
    std::vector<std::vector<char>> rel(c, std::vector<char>(c, 0));
    for (int i = 0; i < c; ++i)
      for (int j = 0; j < c; ++j)
        rel[i][j] = (i == j) ||
                    !m.independent(s | (1u << cont[i]) | (1u << cont[j]));
    int classes = 0;
    std::vector<char> seen(c, 0);
    for (int i = 0; i < c; ++i) {
      if (seen[i]) continue;
      ++classes;
      for (int j = 0; j < c; ++j)
        if (rel[i][j]) seen[j] = 1;
    }
    best = std::max(best, classes);
  }
  return best;
}

int brute_continuation_number_polymatroid(const structures::DiscretePolymatroid& d,
                                          int k) {
  int best = 0;
  for (const auto& a : d.independents) {
    if (std::accumulate(a.begin(), a.end(), 0) != k) continue;
    std::vector<int> cont;
    for (int i = 0; i < d.n; ++i) {
      std::vector<int> b = a;
      ++b[i];
      if (d.contains(b)) cont.push_back(i);
    }
    const int c = static_cast<int>(cont.size());
    std::vector<std::vector<char>> rel(c, std::vector<char>(c, 0));
    for (int i = 0; i < c; ++i)
      for (int j = 0; j < c; ++j) {
        if (i == j) {
          rel[i][j] = 1;
          continue;
        }
        std::vector<int> b = a;
        ++b[cont[i]];
        ++b[cont[j]];
        rel[i][j] = !d.contains(b);
      }
    int classes = 0;
    std::vector<char> seen(c, 0);
    for (int i = 0; i < c; ++i) {
      if (seen[i]) continue;
      ++classes;
      for (int j = 0; j < c; ++j)
        if (rel[i][j]) seen[j] = 1;
    }
    best = std::max(best, classes);
  }
  return best;
}

int brute_girth(const structures::Matroid& m) {
  for (int k = 1; k <= m.n(); ++k) {
    bool dependent_found = false;
    for (Mask s = 0; s < (1u << m.n()); ++s)
      if (__builtin_popcount(s) == k && !m.independent(s)) dependent_found = true;
    if (dependent_found) return k;
  }
  return m.n() + 1;
}

namespace {

// all compositions of k into n nonnegative parts, recursively
bool all_multisets_independent(const structures::DiscretePolymatroid& d,
                               std::vector<int>& comp, int pos, int left) {
  if (pos == d.n - 1) {
    comp[pos] = left;
    return d.contains(comp);
  }
  for (int v = 0; v <= left; ++v) {
    comp[pos] = v;
    if (!all_multisets_independent(d, comp, pos + 1, left - v)) return false;
  }
  return true;
}

}  // namespace

int brute_polygirth(const structures::DiscretePolymatroid& d) {
  for (int k = 1;; ++k) {
    std::vector<int> comp(d.n, 0);
    if (!all_multisets_independent(d, comp, 0, k)) return k;
  }
}

LabeledSymMatrix brute_greedoid_matrix(const WeightedLanguage& w, const Word& alpha,
                                       int m) {
  const structures::GreedoidLanguage& g = w.lang;
  std::vector<std::string> labels = g.alphabet;
  labels.push_back("*");
  LabeledSymMatrix a(labels);
  const int star = g.n_letters();
  if (!g.contains(alpha)) return a;
  auto prefix_sum = [&](const Word& prefix) {
    Rat s(0);
    const int len = static_cast<int>(prefix.size()) + m - 1;
    for (const Word& word : g.of_length(len)) {
      if (word.size() < prefix.size()) continue;
      if (std::equal(prefix.begin(), prefix.end(), word.begin())) s += w.q_of(word);
    }
    return s;
  };
  Word ax = alpha, ay = alpha, axy = alpha;
  ax.push_back(0);
  for (int x = 0; x < g.n_letters(); ++x) {
    ax.back() = x;
    if (!g.contains(ax)) continue;
    for (int y = 0; y < g.n_letters(); ++y) {
      if (y == x) continue;
      axy = ax;
      axy.push_back(y);
      if (!g.contains(axy)) continue;
      ay = alpha;
      ay.push_back(y);
      if (g.contains(ay)) {
        if (x < y) a.set(x, y, prefix_sum(axy));
      } else {
        a.add(x, x, prefix_sum(axy));  // y is a descendant of x
      }
    }
    a.set(x, star, prefix_sum(ax));
  }
  a.set(star, star, prefix_sum(alpha));
  return a;
}

LabeledSymMatrix brute_stanley_matrix(const poset::Poset& p,
                                      const std::vector<Rat>& omega, int z,
                                      const Word& alpha, const Word& beta, int k) {
  const int n = p.n();
  std::vector<std::string> labels;
  for (int e = 0; e < n; ++e)
    if (e != z) labels.push_back(p.elements[e] + "_down");
  for (int e = 0; e < n; ++e)
    if (e != z) labels.push_back(p.elements[e] + "_up");
  LabeledSymMatrix c(labels);
  auto coord = [&](int elem, bool up) {
    int pos = 0;
    for (int e = 0; e < n; ++e) {
      if (e == z) continue;
      if (e == elem) return up ? pos + n - 1 : pos;
      ++pos;
    }
    fail("UnknownElement", "bad coordinate");
  };

  const int a_len = static_cast<int>(alpha.size());
  const int b_len = static_cast<int>(beta.size());
  const int mid = n - a_len - b_len;
  if (k <= 1 || k >= mid) fail("RankOutOfRange", "position out of range");

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j)
        if (p.lt(perm[j], perm[i])) ok = false;
    if (!ok) continue;
    bool frame = true;
    for (int i = 0; i < a_len && frame; ++i)
      if (perm[i] != alpha[i]) frame = false;
    for (int i = 0; i < b_len && frame; ++i)
      if (perm[a_len + mid + i] != beta[i]) frame = false;
    if (!frame) continue;
    int zpos = 0;
    for (int i = 0; i < n; ++i)
      if (perm[i] == z) zpos = i + 1;
    const int local = zpos - a_len;  // position of z within the middle
    if (local < k - 1 || local > k + 1) continue;
    Rat wt(1);
    for (int i = 0; i < n && perm[i] != z; ++i) wt *= omega[perm[i]];
    const int first = perm[a_len];
    const int second = perm[a_len + 1];
    const int last = perm[a_len + mid - 1];
    const int forelast = perm[a_len + mid - 2];
    if (local == k) {
      c.add(coord(first, false), coord(last, true), wt);
    } else if (local == k + 1) {
      if (p.incomparable(first, second))
        c.add(coord(first, false), coord(second, false), wt / 2);
      else
        c.add(coord(first, false), coord(first, false), wt);
    } else {
      if (p.incomparable(last, forelast))
        c.add(coord(forelast, true), coord(last, true), wt / 2);
      else
        c.add(coord(last, true), coord(last, true), wt);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return c;
}

// ---------------------------------------------------------------------------
// Random generators

poset::Poset random_poset(Rng& rng, int n) {
  std::vector<std::string> elems;
  for (int i = 1; i <= n; ++i) elems.push_back("p" + std::to_string(i));
  const int density = 2 + static_cast<int>(rng.below(4));  // edge prob density/12
  std::vector<std::pair<std::string, std::string>> rel;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.below(12) < static_cast<uint64_t>(density))
        rel.emplace_back(elems[i], elems[j]);
  return poset::build_poset(elems, rel);
}

std::vector<Rat> random_order_reversing_weights(Rng& rng, const poset::Poset& p) {
  const int n = p.n();
  // process from the top down; omega(x) = max over upper covers + delta
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return poset::ideal_sizes(p, a).second < poset::ideal_sizes(p, b).second;
  });
  const Rat deltas[4] = {Rat(0), Rat(0), rat(1, 2), Rat(1)};
  std::vector<Rat> w(n, Rat(0));
  for (int x : order) {
    Rat base(1);
    for (int y = 0; y < n; ++y)
      if (p.lt(x, y)) base = std::max(base, w[y]);
    w[x] = base + deltas[rng.below(4)];
  }
  return w;
}

std::vector<Rat> random_cm_weights(Rng& rng, const poset::Poset& p) {
  const int n = p.n();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return poset::ideal_sizes(p, a).second < poset::ideal_sizes(p, b).second;
  });
  const Rat slacks[5] = {Rat(0), Rat(0), Rat(0), rat(1, 2), Rat(1)};
  std::vector<Rat> w(n, Rat(0));
  for (int x : order) {
    Rat sum(0);
    const auto cov = p.covers_of(x);
    for (int y : cov) sum += w[y];
    if (cov.empty()) sum = 1;
    w[x] = sum + slacks[rng.below(5)];
  }
  return w;
}

std::vector<structures::Graph> all_connected_graphs(int nv) {
  std::vector<std::pair<int, int>> all_edges;
  for (int i = 0; i < nv; ++i)
    for (int j = i + 1; j < nv; ++j) all_edges.emplace_back(i, j);
  const int ne = static_cast<int>(all_edges.size());
  std::vector<structures::Graph> out;
  for (Mask s = 0; s < (1u << ne); ++s) {
    structures::Graph g;
    for (int v = 1; v <= nv; ++v) g.vertices.push_back(std::to_string(v));
    for (int e = 0; e < ne; ++e)
      if (s >> e & 1u) g.edges.push_back(all_edges[e]);
    if (static_cast<int>(g.edges.size()) < nv - 1) continue;
    if (g.connected()) out.push_back(std::move(g));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Corpus and crosscheck

namespace {

poset::Poset running_example_poset() {
  return poset::build_poset({"a", "b", "c", "d", "z"},
                            {{"a", "b"}, {"b", "c"}, {"a", "z"}, {"d", "c"}});
}

structures::Graph k4_minus_edge() {
  // vertices 1..4, edge {1,2} missing; the shared triangle edge is e = {3,4}
  structures::Graph g;
  g.vertices = {"1", "2", "3", "4"};
  g.edges = {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  g.edge_names = {"a", "b", "c", "d", "e"};
  return g;
}

structures::Graph cycle_graph(int n) {
  structures::Graph g;
  for (int i = 1; i <= n; ++i) g.vertices.push_back(std::to_string(i));
  for (int i = 0; i < n; ++i) g.edges.emplace_back(i, (i + 1) % n);
  return g;
}

}  // namespace

Corpus default_corpus(uint64_t seed, int n_random_posets) {
  Corpus corpus;
  corpus.seed = seed;
  Rng rng(seed);

  auto add_matroid = [&](std::string name, structures::Matroid m,
                         std::vector<Rat> w = {}, bool atlas = false) {
    Instance in;
    in.kind = Instance::Kind::matroid;
    in.name = std::move(name);
    if (w.empty()) w.assign(m.n(), Rat(1));
    in.weights = std::move(w);
    in.matroid = std::move(m);
    in.atlas_check = atlas;
    corpus.instances.push_back(std::move(in));
  };

  add_matroid("free4", structures::make_free(4), {}, true);
  add_matroid("u42", structures::make_uniform(4, 2), {}, true);
  add_matroid("u53", structures::make_uniform(5, 3));
  add_matroid("k4-minus-edge", structures::make_graphic(k4_minus_edge()), {}, true);
  add_matroid("c5", structures::make_graphic(cycle_graph(5)));
  add_matroid("gf2-2", structures::make_vector_gf(2, {{0, 1}, {1, 0}, {1, 1}}), {},
              true);
  {
    std::vector<std::vector<int>> vecs;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        if (a || b) vecs.push_back({a, b});
    add_matroid("gf3-2", structures::make_vector_gf(3, vecs));
  }
  add_matroid("fano-steiner",
              structures::make_steiner(2, 3, 7,
                                       {{1, 2, 3},
                                        {1, 4, 5},
                                        {1, 6, 7},
                                        {2, 4, 6},
                                        {2, 5, 7},
                                        {3, 4, 7},
                                        {3, 5, 6}}));
  add_matroid("free4-weighted", structures::make_free(4),
              {rat(1, 2), rat(1, 2), rat(1, 2), rat(1, 2)}, false);
  add_matroid("u42-nonuniform", structures::make_uniform(4, 2),
              {Rat(1), Rat(2), Rat(1), rat(3, 2)});

  {
    Instance in;
    in.kind = Instance::Kind::polymatroid;
    in.name = "poly-full-2-3";
    in.poly = structures::make_full_polymatroid(2, 3);
    in.weights = {Rat(1), Rat(1)};
    in.t = Rat(1);
    in.atlas_check = true;
    corpus.instances.push_back(in);
    in.name = "poly-full-2-3-t-half";
    in.t = rat(1, 2);
    corpus.instances.push_back(in);
    in.name = "poly-full-2-3-t0";
    in.t = Rat(0);
    in.atlas_check = false;
    corpus.instances.push_back(in);
    Instance hyper;
    hyper.kind = Instance::Kind::polymatroid;
    hyper.name = "poly-hypergraph";
    hyper.poly = structures::make_polymatroid(
        2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}, {2, 1}});
    hyper.weights = {Rat(1), Rat(2)};
    hyper.t = rat(1, 2);
    corpus.instances.push_back(std::move(hyper));
  }

  auto add_poset = [&](std::string name, poset::Poset p, std::vector<Rat> w, int z,
                       Instance::Kind kind, bool atlas = false, bool negative = false) {
    Instance in;
    in.kind = kind;
    in.name = std::move(name);
    in.weights = std::move(w);
    in.z = z;
    in.pos = std::move(p);
    in.atlas_check = atlas;
    in.negative_control = negative;
    corpus.instances.push_back(std::move(in));
  };

  {
    poset::Poset p = running_example_poset();
    std::vector<Rat> uw(p.n(), Rat(1));
    add_poset("running-example", p, uw, p.index_of("z"),
              Instance::Kind::stanley_poset, true);
    add_poset("running-example-antimatroid", p, poset::canonical_chain_weights(p), -1,
              Instance::Kind::antimatroid_poset);
  }
  {
    poset::Poset p = poset::antichain(5);
    add_poset("antichain5", p, std::vector<Rat>(5, Rat(1)), 2,
              Instance::Kind::stanley_poset, true);
  }
  {
    poset::Poset p = poset::chain(5);
    add_poset("chain5", p, std::vector<Rat>(5, Rat(1)), 2,
              Instance::Kind::stanley_poset);
  }
  {
    // rooted binary tree of depth 2 as a tree poset
    poset::Poset p = poset::tree_poset({"r", "u", "v", "l1", "l2", "l3", "l4"},
                                       {-1, 0, 0, 1, 1, 2, 2});
    add_poset("binary-tree", p, poset::canonical_chain_weights(p), -1,
              Instance::Kind::antimatroid_poset, true);
  }
  {
    poset::Poset p = poset::skew_shape_poset({2, 1}, {});
    add_poset("shape-21", p, poset::canonical_chain_weights(p), -1,
              Instance::Kind::antimatroid_poset);
  }
  {
    poset::Poset p = poset::skew_shape_poset({3, 2, 1}, {1});
    std::vector<Rat> uw(p.n(), Rat(1));
    add_poset("entringer-q3", p, uw, 0, Instance::Kind::stanley_poset);
  }
  {
    poset::Poset p = poset::grid_poset(4, 4);
    add_poset("square4", p, std::vector<Rat>(16, Rat(1)), -1,
              Instance::Kind::antimatroid_poset, false, true);
  }
  {
    // width-2 poset: two incomparable chains
    poset::Poset p = poset::build_poset(
        {"a1", "a2", "a3", "b1", "b2"},
        {{"a1", "a2"}, {"a2", "a3"}, {"b1", "b2"}});
    std::vector<Rat> w = {Rat(3), Rat(2), Rat(1), Rat(2), Rat(1)};
    add_poset("width2", p, w, p.index_of("a2"), Instance::Kind::stanley_poset);
  }

  {
    Instance in;
    in.kind = Instance::Kind::greedoid;
    in.name = "branching";
    structures::Digraph dg;
    dg.vertices = {"r", "u", "v", "w"};
    dg.root = 0;
    dg.edges = {{1, 0}, {2, 0}, {2, 1}, {3, 1}, {3, 2}};
    structures::GreedoidLanguage lift = structures::lift_branching(dg);
    // admissible weights: each edge dominates the in-edges of its source
    in.weights = {Rat(2), Rat(1), Rat(1), Rat(1), Rat(1)};
    in.wlang = counting::product_weight(lift, in.weights,
                                        counting::uniform_scale(lift.rank()));
    in.atlas_check = true;
    corpus.instances.push_back(std::move(in));
  }

  auto add_morphism = [&](std::string name, structures::Matroid src,
                          structures::Matroid dst, std::vector<int> phi,
                          std::vector<Rat> w = {}) {
    Instance in;
    in.kind = Instance::Kind::morphism;
    in.name = std::move(name);
    if (w.empty()) w.assign(src.n(), Rat(1));
    in.weights = std::move(w);
    in.morphism = structures::MatroidMorphism{std::move(src), std::move(dst),
                                              std::move(phi)};
    corpus.instances.push_back(std::move(in));
  };
  add_morphism("free4-to-u41", structures::make_free(4), structures::make_uniform(4, 1),
               {0, 1, 2, 3});
  add_morphism("u42-identity", structures::make_uniform(4, 2),
               structures::make_uniform(4, 2), {0, 1, 2, 3});
  add_morphism("free4-to-point", structures::make_free(4),
               structures::make_uniform(1, 0), {0, 0, 0, 0});
  add_morphism("k4e-to-u21", structures::make_graphic(k4_minus_edge()),
               structures::make_uniform(2, 1), {0, 0, 1, 1, 0});

  // the seeded random poset family (weights order-reversing; every fifth
  // one also carries CM weights as an antimatroid instance)
  for (int i = 0; i < n_random_posets; ++i) {
    const int n = 4 + static_cast<int>(rng.below(4));
    poset::Poset p = random_poset(rng, n);
    std::vector<Rat> w = random_order_reversing_weights(rng, p);
    const int z = static_cast<int>(rng.below(n));
    Instance in;
    in.kind = Instance::Kind::stanley_poset;
    in.name = "random-poset-" + std::to_string(i);
    in.weights = std::move(w);
    in.z = z;
    in.pos = p;
    in.atlas_check = (i < 8);
    corpus.instances.push_back(std::move(in));
    if (i % 5 == 0) {
      Instance am;
      am.kind = Instance::Kind::antimatroid_poset;
      am.name = "random-antimatroid-" + std::to_string(i);
      am.weights = random_cm_weights(rng, p);
      am.pos = std::move(p);
      am.atlas_check = (i < 8);
      corpus.instances.push_back(std::move(am));
    }
  }
  return corpus;
}

namespace {

void compare_series(CrosscheckReport& rep, const std::string& name,
                    const std::vector<Rat>& got, const std::vector<Rat>& want) {
  ++rep.comparisons;
  const size_t n = std::max(got.size(), want.size());
  for (size_t i = 0; i < n; ++i) {
    const Rat g = i < got.size() ? got[i] : Rat(0);
    const Rat w = i < want.size() ? want[i] : Rat(0);
    if (g != w) {
      ++rep.mismatches;
      rep.details.push_back(name + " index " + std::to_string(i) + ": " + rat_str(g) +
                            " vs " + rat_str(w));
      return;
    }
  }
}

void compare_matrix(CrosscheckReport& rep, const std::string& name,
                    const LabeledSymMatrix& got, const LabeledSymMatrix& want) {
  ++rep.comparisons;
  if (got.dim() != want.dim()) {
    ++rep.mismatches;
    rep.details.push_back(name + ": dimension mismatch");
    return;
  }
  for (int i = 0; i < got.dim(); ++i)
    for (int j = 0; j < got.dim(); ++j)
      if (got.at(i, j) != want.at(i, j)) {
        ++rep.mismatches;
        rep.details.push_back(name + ": entry (" + got.labels()[i] + "," +
                              got.labels()[j] + ")");
        return;
      }
}

}  // namespace

CrosscheckReport crosscheck(const Corpus& corpus) {
  CrosscheckReport rep;
  for (const Instance& in : corpus.instances) {
    ++rep.instances;
    switch (in.kind) {
      case Instance::Kind::matroid: {
        const structures::Matroid& m = *in.matroid;
        compare_series(rep, in.name + "/I_w",
                       counting::count_I_weighted(m, in.weights).values,
                       brute_I_weighted(m, in.weights));
        ++rep.comparisons;
        if (structures::girth(m) != brute_girth(m)) {
          ++rep.mismatches;
          rep.details.push_back(in.name + "/girth");
        }
        for (int k = 0; k < m.rank(); ++k) {
          ++rep.comparisons;
          if (structures::continuation_number(m, k) !=
              brute_continuation_number_matroid(m, k)) {
            ++rep.mismatches;
            rep.details.push_back(in.name + "/p(" + std::to_string(k) + ")");
          }
        }
        // lifted language series against the brute word walk
        const structures::GreedoidLanguage lift = structures::lift_matroid(m);
        const WeightedLanguage w = counting::product_weight(
            lift, in.weights, counting::uniform_scale(lift.rank()));
        compare_series(rep, in.name + "/L_q", counting::count_L(w).values, brute_L(w));
        for (int k = 0; k <= lift.rank(); ++k) {
          ++rep.comparisons;
          if (BigInt(lift.count(k)) != BigInt(m.count(k)) * factorial(k)) {
            ++rep.mismatches;
            rep.details.push_back(in.name + "/|L_k| = k! I(k)");
          }
        }
        break;
      }
      case Instance::Kind::polymatroid: {
        const structures::DiscretePolymatroid& d = *in.poly;
        compare_series(rep, in.name + "/J", counting::count_J(d, in.weights, in.t).values,
                       brute_J(d, in.weights, in.t));
        ++rep.comparisons;
        if (structures::polygirth(d) != brute_polygirth(d)) {
          ++rep.mismatches;
          rep.details.push_back(in.name + "/polygirth");
        }
        for (int k = 0; k < d.rank(); ++k) {
          ++rep.comparisons;
          if (structures::continuation_number(d, k) !=
              brute_continuation_number_polymatroid(d, k)) {
            ++rep.mismatches;
            rep.details.push_back(in.name + "/p(" + std::to_string(k) + ")");
          }
        }
        const structures::GreedoidLanguage lift = structures::lift_polymatroid(d);
        const structures::PolymatroidAlphabet pa = structures::polymatroid_alphabet(d);
        const WeightedLanguage w = counting::polymatroid_weight(
            lift, pa, in.weights, in.t, counting::uniform_scale(lift.rank()));
        compare_series(rep, in.name + "/L_q", counting::count_L(w).values, brute_L(w));
        break;
      }
      case Instance::Kind::stanley_poset: {
        const poset::Poset& p = *in.pos;
        for (int z = 0; z < p.n(); ++z)
          compare_series(rep, in.name + "/N(z=" + std::to_string(z) + ")",
                         counting::count_N(p, in.weights, z).values,
                         brute_N(p, in.weights, z));
        // one stanley matrix at the root frame per valid k
        for (int k = 2; k <= p.n() - 1; ++k)
          compare_matrix(rep, in.name + "/C(0,0," + std::to_string(k) + ")",
                         atlas::stanley_matrix(p, in.weights, in.z, {}, {}, k),
                         brute_stanley_matrix(p, in.weights, in.z, {}, {}, k));
        break;
      }
      case Instance::Kind::antimatroid_poset: {
        const poset::Poset& p = *in.pos;
        const structures::GreedoidLanguage lift = structures::lift_poset_antimatroid(p);
        const WeightedLanguage w = counting::product_weight(
            lift, in.weights, counting::uniform_scale(lift.rank()));
        compare_series(rep, in.name + "/L", counting::count_L(w).values, brute_L(w));
        // weighted extension identity: L(n) = sum over extensions of prod
        // omega (within the word-length cap)
        if (p.n() <= 10) {
          ++rep.comparisons;
          Rat total(0);
          for (const auto& word : poset::linear_extensions(p)) {
            Rat v(1);
            for (int x : word) v *= in.weights[x];
            total += v;
          }
          if (total != w.series(p.n())) {
            ++rep.mismatches;
            rep.details.push_back(in.name + "/L(n) vs weighted extensions");
          }
        }
        break;
      }
      case Instance::Kind::greedoid: {
        const WeightedLanguage& w = *in.wlang;
        compare_series(rep, in.name + "/L_q", counting::count_L(w).values, brute_L(w));
        for (int m = 1; m <= std::min(2, w.lang.rank() - 1); ++m) {
          compare_matrix(rep, in.name + "/A(0," + std::to_string(m) + ")",
                         atlas::greedoid_matrix(w, {}, m),
                         brute_greedoid_matrix(w, {}, m));
          for (const Word& alpha : w.lang.of_length(1))
            compare_matrix(rep,
                           in.name + "/A(" + w.lang.word_str(alpha) + "," +
                               std::to_string(m) + ")",
                           atlas::greedoid_matrix(w, alpha, m),
                           brute_greedoid_matrix(w, alpha, m));
        }
        break;
      }
      case Instance::Kind::morphism: {
        compare_series(rep, in.name + "/B", counting::count_B(*in.morphism, in.weights).values,
                       brute_B(*in.morphism, in.weights));
        break;
      }
    }
  }
  return rep;
}

}  // namespace caw::oracle
