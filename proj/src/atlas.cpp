#include "caw/atlas.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace caw::atlas {

using structures::GreedoidLanguage;

std::vector<Rat> default_t_grid() {
  return {Rat(0), rat(1, 4), rat(1, 2), rat(3, 4), Rat(1)};
}

namespace {

std::vector<Rat> normalize_grid(std::vector<Rat> grid) {
  for (const Rat& t : grid)
    if (t < 0 || t > 1) fail("BadParams", "t-grid values must lie in [0,1]");
  grid.push_back(Rat(0));
  grid.push_back(Rat(1));
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

Vec basis_vector(int d, int i) {
  Vec e(d, Rat(0));
  e[i] = 1;
  return e;
}

}  // namespace

// ---------------------------------------------------------------------------
// Greedoid atlas

LabeledSymMatrix greedoid_matrix(const WeightedLanguage& w, const Word& alpha, int m) {
  const GreedoidLanguage& g = w.lang;
  std::vector<std::string> labels = g.alphabet;
  labels.push_back("*");
  LabeledSymMatrix a(labels);
  if (!g.contains(alpha)) return a;
  const int star = g.n_letters();
  const std::vector<int> cnt = g.cnt(alpha);
  for (size_t xi = 0; xi < cnt.size(); ++xi) {
    const int x = cnt[xi];
    Word ax = alpha;
    ax.push_back(x);
    // off-diagonal entries over continuations
    for (size_t yi = xi + 1; yi < cnt.size(); ++yi) {
      const int y = cnt[yi];
      Word axy = ax;
      axy.push_back(y);
      if (!g.contains(axy)) continue;
      a.set(x, y, w.local_series(axy, m - 1));
    }
    // diagonal: descendant sums
    Rat diag(0);
    for (int y : g.des(alpha, x)) {
      Word axy = ax;
      axy.push_back(y);
      diag += w.local_series(axy, m - 1);
    }
    a.set(x, x, diag);
    a.set(x, star, w.local_series(ax, m - 1));
  }
  a.set(star, star, w.local_series(alpha, m - 1));
  return a;
}

AtlasSlice build_greedoid_atlas(const WeightedLanguage& w, int k,
                                std::vector<Rat> t_grid) {
  const GreedoidLanguage& g = w.lang;
  if (!g.flags.is_interval()) fail("NotInterval", "language is not an interval greedoid");
  if (k < 1 || k >= g.rank()) fail("RankOutOfRange", "need 1 <= k < rk");
  const std::vector<Rat> grid = normalize_grid(std::move(t_grid));

  AtlasSlice slice;
  slice.kind = AtlasSlice::Kind::greedoid;
  slice.k = k;
  slice.coord_labels = g.alphabet;
  slice.coord_labels.push_back("*");
  slice.weighted = w;
  const int d = slice.dim();
  const int star = d - 1;

  // cache of A(alpha, m) matrices
  std::map<std::pair<Word, int>, LabeledSymMatrix> amats;
  auto amat = [&](const Word& alpha, int m) -> const LabeledSymMatrix& {
    auto key = std::make_pair(alpha, m);
    auto it = amats.find(key);
    if (it == amats.end())
      it = amats.emplace(key, greedoid_matrix(w, alpha, m)).first;
    return it->second;
  };

  auto add_vertex = [&](const VertexId& id) -> int {
    auto it = slice.index.find(id);
    if (it != slice.index.end()) return it->second;
    AtlasVertex v;
    v.id = id;
    v.sink = (id.level == 0);
    const LabeledSymMatrix& hi = amat(id.alpha, id.level + 1);
    if (id.t == 1) {
      v.M = hi;
    } else {
      const LabeledSymMatrix& lo = amat(id.alpha, id.level);
      LabeledSymMatrix m(slice.coord_labels);
      for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j)
          m.set(i, j, id.t * hi.at(i, j) + (Rat(1) - id.t) * lo.at(i, j));
      v.M = std::move(m);
    }
    v.vacuous = v.M.is_zero();
    v.h.assign(d, id.t);
    v.h[star] = Rat(1) - id.t;
    v.targets.assign(d, -1);
    const int idx = static_cast<int>(slice.vertices.size());
    slice.vertices.push_back(std::move(v));
    slice.index.emplace(id, idx);
    return idx;
  };

  // words in the language, by level; boundary (non-language) children are
  // kept one layer deep and short-circuit to vacuous vertices
  for (int m = k - 1; m >= 0; --m) {
    const int max_len = k - 1 - m;
    for (int len = 0; len <= max_len; ++len) {
      for (const Word& alpha : g.of_length(len)) {
        if (m == 0) {
          add_vertex({alpha, {}, 0, Rat(1)});
        } else {
          for (const Rat& t : grid) add_vertex({alpha, {}, m, t});
        }
      }
    }
  }
  // edges (and vacuous boundary targets)
  const size_t n_core = slice.vertices.size();
  for (size_t vi = 0; vi < n_core; ++vi) {
    const VertexId id = slice.vertices[vi].id;
    if (id.level == 0) continue;
    for (int x = 0; x < d; ++x) {
      VertexId tid;
      tid.level = id.level - 1;
      tid.t = Rat(1);
      tid.alpha = id.alpha;
      if (x != star) tid.alpha.push_back(x);
      if (tid.level == 0) tid.t = Rat(1);
      const int target = add_vertex(tid);
      slice.vertices[vi].targets[x] = target;
    }
  }
  slice.root = slice.index.at({Word{}, {}, k - 1, Rat(1)});

  // the strictly-positive continuation entries promised by the construction
  if (w.strictly_positive) {
    for (const AtlasVertex& v : slice.vertices) {
      if (v.vacuous || !g.contains(v.id.alpha)) continue;
      for (int x : g.cnt(v.id.alpha))
        if (!(v.M.at(x, star) > 0))
          fail("AssertionFailed", "A_{x*} vanished at a feasible continuation");
    }
  }
  return slice;
}

// ---------------------------------------------------------------------------
// Stanley atlas

namespace {

struct StanleyContext {
  const poset::Poset& p;
  const std::vector<Rat>& omega;
  int z;

  int n() const { return p.n(); }
  int coord(int elem, bool up) const {
    // elements except z, downs first; element order preserved
    int pos = 0;
    for (int e = 0; e < p.n(); ++e) {
      if (e == z) continue;
      if (e == elem) return up ? pos + p.n() - 1 : pos;
      ++pos;
    }
    fail("UnknownElement", "z has no coordinate");
  }

  /// True iff some extension factors as alpha . middle . beta: alpha must
  /// be a linear extension of a lower ideal, beta of an upper ideal (read
  /// in order), both avoiding z and each other.
  bool prefix_ok(const Word& alpha, const Word& beta) const {
    std::vector<char> used(p.n(), 0);
    for (int x : alpha) {
      if (used[x] || x == z) return false;
      used[x] = 1;
    }
    for (int x : beta) {
      if (used[x] || x == z) return false;
      used[x] = 1;
    }
    for (size_t i = 0; i < alpha.size(); ++i)
      for (int y = 0; y < p.n(); ++y) {
        if (!p.lt(y, alpha[i])) continue;
        bool before = false;
        for (size_t j = 0; j < i; ++j)
          if (alpha[j] == y) before = true;
        if (!before) return false;
      }
    for (size_t i = 0; i < beta.size(); ++i)
      for (int y = 0; y < p.n(); ++y) {
        if (!p.lt(beta[i], y)) continue;
        bool after = false;
        for (size_t j = i + 1; j < beta.size(); ++j)
          if (beta[j] == y) after = true;
        if (!after) return false;
      }
    return true;
  }
};

}  // namespace

LabeledSymMatrix stanley_matrix(const poset::Poset& p, const std::vector<Rat>& omega,
                                int z, const Word& alpha, const Word& beta, int k) {
  StanleyContext ctx{p, omega, z};
  const int n = p.n();
  std::vector<std::string> labels;
  for (int e = 0; e < n; ++e)
    if (e != z) labels.push_back(p.elements[e] + "_down");
  for (int e = 0; e < n; ++e)
    if (e != z) labels.push_back(p.elements[e] + "_up");
  const int d = static_cast<int>(labels.size());
  LabeledSymMatrix c(labels);

  const int middle = n - static_cast<int>(alpha.size() + beta.size());
  if (k <= 1 || k >= middle) fail("RankOutOfRange", "position out of range");
  if (!ctx.prefix_ok(alpha, beta)) return c;

  std::vector<char> taken(n, 0);
  for (int x : alpha) taken[x] = 1;
  for (int x : beta) taken[x] = 1;
  std::vector<int> rest;
  for (int e = 0; e < n; ++e)
    if (!taken[e]) rest.push_back(e);

  Rat w_alpha(1);
  for (int x : alpha) w_alpha *= omega[x];

  // directional accumulation; symmetry of the result re-proves the swap
  // bijection on this instance
  std::vector<std::vector<Rat>> acc(d, std::vector<Rat>(d, Rat(0)));
  const poset::Poset sub = p.restricted(rest);
  for (const auto& mid_local : poset::linear_extensions(sub)) {
    Word gamma;
    gamma.reserve(mid_local.size());
    for (int li : mid_local) gamma.push_back(rest[li]);
    int zpos = 0;
    while (gamma[zpos] != z) ++zpos;
    ++zpos;  // 1-based
    Rat wt = w_alpha;
    for (int i = 0; gamma[i] != z; ++i) wt *= omega[gamma[i]];
    const int last = middle - 1;
    if (zpos == k) {
      acc[ctx.coord(gamma[0], false)][ctx.coord(gamma[last], true)] += wt;
      acc[ctx.coord(gamma[last], true)][ctx.coord(gamma[0], false)] += wt;
    } else if (zpos == k + 1) {
      const int a = gamma[0], b = gamma[1];
      if (p.incomparable(a, b))
        acc[ctx.coord(a, false)][ctx.coord(b, false)] += wt;
      else  // a < b in any extension
        acc[ctx.coord(a, false)][ctx.coord(a, false)] += wt;
    } else if (zpos == k - 1) {
      const int a = gamma[last - 1], b = gamma[last];
      if (p.incomparable(a, b))
        acc[ctx.coord(a, true)][ctx.coord(b, true)] += wt;
      else
        acc[ctx.coord(b, true)][ctx.coord(b, true)] += wt;
    }
  }
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      if (acc[i][j] != acc[j][i])
        fail("AssertionFailed", "directional sums of C disagree");
      c.set(i, j, acc[i][j]);
    }
  return c;
}

AtlasSlice build_stanley_atlas(const poset::Poset& p, const std::vector<Rat>& omega,
                               int z, int k, std::vector<Rat> t_grid) {
  const int n = p.n();
  if (static_cast<int>(omega.size()) != n)
    fail("WeightDomainMismatch", "weight count != poset size");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (p.lt(x, y) && omega[x] < omega[y])
        fail("NotOrderReversing", "weights are not order-reversing");
  if (k < 2 || k > n - 1) fail("RankOutOfRange", "need 2 <= k <= n-1");
  if (n < 3) fail("TooLarge", "stanley atlas needs at least 3 elements");
  const std::vector<Rat> grid = normalize_grid(std::move(t_grid));

  AtlasSlice slice;
  slice.kind = AtlasSlice::Kind::stanley;
  slice.k = k;
  slice.pos = p;
  slice.omega = omega;
  slice.z = z;
  StanleyContext ctx{p, omega, z};
  for (int e = 0; e < n; ++e)
    if (e != z) slice.coord_labels.push_back(p.elements[e] + "_down");
  for (int e = 0; e < n; ++e)
    if (e != z) slice.coord_labels.push_back(p.elements[e] + "_up");
  const int d = slice.dim();
  const int half = d / 2;

  const int k0 = std::max(k - 1, 2);
  const Rat root_t = (k > 2) ? Rat(1) : Rat(0);

  std::map<std::pair<Word, Word>, bool> feasible;
  auto shape_ok = [&](const Word& a, const Word& b) {
    auto key = std::make_pair(a, b);
    auto it = feasible.find(key);
    if (it == feasible.end()) it = feasible.emplace(key, ctx.prefix_ok(a, b)).first;
    return it->second;
  };

  std::map<std::pair<Word, int>, LabeledSymMatrix> cmats;
  auto cmat = [&](const Word& a, const Word& b, int pos) -> const LabeledSymMatrix& {
    auto key = std::make_pair(a, pos);
    // beta folded into the key by concatenation with a sentinel
    Word folded = a;
    folded.push_back(-1);
    folded.insert(folded.end(), b.begin(), b.end());
    key.first = folded;
    auto it = cmats.find(key);
    if (it == cmats.end())
      it = cmats.emplace(key, stanley_matrix(p, omega, z, a, b, pos)).first;
    return it->second;
  };

  auto add_vertex = [&](const Word& a, const Word& b, int pos, const Rat& t) -> int {
    VertexId id{a, b, pos, t};
    auto it = slice.index.find(id);
    if (it != slice.index.end()) return it->second;
    AtlasVertex v;
    v.id = id;
    const int level = n - 3 - static_cast<int>(a.size() + b.size());
    v.sink = (level == 0);
    LabeledSymMatrix m(slice.coord_labels);
    if (shape_ok(a, b)) {
      if (t == 0) {
        m = cmat(a, b, pos);
      } else if (t == 1) {
        m = cmat(a, b, pos + 1);
      } else {
        const LabeledSymMatrix& hi = cmat(a, b, pos + 1);
        const LabeledSymMatrix& lo = cmat(a, b, pos);
        for (int i = 0; i < d; ++i)
          for (int j = i; j < d; ++j)
            m.set(i, j, t * hi.at(i, j) + (Rat(1) - t) * lo.at(i, j));
      }
    }
    v.M = std::move(m);
    v.vacuous = v.M.is_zero();
    v.h.assign(d, t);
    for (int i = half; i < d; ++i) v.h[i] = Rat(1) - t;
    v.targets.assign(d, -1);
    const int idx = static_cast<int>(slice.vertices.size());
    slice.vertices.push_back(std::move(v));
    slice.index.emplace(id, idx);
    return idx;
  };

  // breadth-first materialization from the root shape; infeasible shapes
  // are kept one layer deep as vacuous vertices
  struct Shape {
    Word a, b;
    int pos;
  };
  std::vector<Shape> frontier{{{}, {}, k0}};
  slice.root = add_vertex({}, {}, k0, root_t);
  std::set<std::pair<Word, Word>> seen{{Word{}, Word{}}};
  while (!frontier.empty()) {
    std::vector<Shape> next;
    for (const Shape& s : frontier) {
      const int level = n - 3 - static_cast<int>(s.a.size() + s.b.size());
      if (level == 0) continue;
      // vertices at every grid t for this shape
      std::vector<int> parents;
      for (const Rat& t : grid) parents.push_back(add_vertex(s.a, s.b, s.pos, t));
      const int tpos = std::max(s.pos - 1, 2);
      const Rat tt = (s.pos > 2) ? Rat(1) : Rat(0);
      for (int c = 0; c < d; ++c) {
        Word a2 = s.a, b2 = s.b;
        int elem = 0, pos = 0;
        for (int e = 0; e < n; ++e) {
          if (e == z) continue;
          if (pos == (c % half)) {
            elem = e;
            break;
          }
          ++pos;
        }
        if (c < half)
          a2.push_back(elem);
        else
          b2.insert(b2.begin(), elem);
        const int target = add_vertex(a2, b2, tpos, tt);
        for (int pi : parents) slice.vertices[pi].targets[c] = target;
        if (shape_ok(a2, b2) && !seen.count({a2, b2})) {
          seen.insert({a2, b2});
          next.push_back({a2, b2, tpos});
        }
      }
    }
    frontier = std::move(next);
  }
  return slice;
}

// ---------------------------------------------------------------------------
// Projection and per-vertex properties

namespace {

Vec apply_T(const AtlasSlice& slice, int vidx, const Vec& v, int coord) {
  const AtlasVertex& vert = slice.vertices[vidx];
  const std::vector<int> supp = vert.M.support();
  std::vector<char> in_supp(slice.dim(), 0);
  for (int i : supp) in_supp[i] = 1;
  Vec out(slice.dim());
  for (int y = 0; y < slice.dim(); ++y) out[y] = in_supp[y] ? v[y] : v[coord];
  return out;
}

}  // namespace

Vec project(const AtlasSlice& slice, int vidx, const std::string& x, const Vec& v) {
  const AtlasVertex& vert = slice.vertices[vidx];
  int coord = -1;
  for (int i = 0; i < slice.dim(); ++i)
    if (slice.coord_labels[i] == x) coord = i;
  if (coord < 0 || vert.sink || vert.targets[coord] < 0)
    fail("NoSuchEdge", "vertex has no out-edge labeled " + x);
  if (static_cast<int>(v.size()) != slice.dim())
    fail("BadParams", "vector dimension mismatch");
  return apply_T(slice, vidx, v, coord);
}

VertexReport check_vertex_properties(const AtlasSlice& slice, int vidx) {
  const AtlasVertex& v = slice.vertices[vidx];
  const int d = slice.dim();
  VertexReport rep;
  rep.vacuous = v.vacuous;
  rep.sink = v.sink;
  rep.t = v.id.t;
  if (v.vacuous) {
    rep.hyp.applicable = true;  // zero matrix trivially hyperbolic
    return rep;
  }

  rep.hyp.applicable = true;
  rep.hyp.pass = linalg::check_OPE(v.M);

  const bool interior_t = (v.id.t > 0 && v.id.t < 1);
  rep.irr.applicable = interior_t;
  rep.irr.pass = linalg::is_irreducible_on_support(v.M);
  if (!rep.irr.applicable && !rep.irr.pass) rep.irr.note = "reducible at endpoint t";
  const std::vector<int> supp = v.M.support();
  rep.hpos.applicable = interior_t;
  rep.hpos.pass = true;
  for (int i : supp)
    if (!(v.h[i] > 0)) rep.hpos.pass = false;

  if (v.sink) return rep;

  // Greedoid supports do not move with t, so the edge identities hold at
  // every vertex. Stanley supports can shrink at the endpoints of the
  // t-interval (degenerate frames where z cannot reach some positions), and
  // there the projection must broadcast the wrong h-half; the local-global
  // induction only ever runs at interior t, with the endpoints covered by
  // limits, so the checks gate the same way (Irr)/(h-Pos) do.
  const bool edge_gate =
      (slice.kind == AtlasSlice::Kind::greedoid) ? true : interior_t;
  rep.proj.applicable = true;
  rep.inh.applicable = rep.tinv.applicable = edge_gate;
  rep.knon.applicable = rep.ksym.applicable = rep.pull.applicable = edge_gate;

  std::vector<char> in_supp(d, 0);
  for (int i : supp) in_supp[i] = 1;

  // (Proj) on basis vectors, straight from the definition
  for (int i : supp) {
    const AtlasVertex& child = slice.vertices[v.targets[i]];
    const std::vector<int> csupp = child.M.support();
    for (int y = 0; y < d && rep.proj.pass; ++y) {
      const Vec te = apply_T(slice, vidx, basis_vector(d, y), i);
      for (int j : csupp) {
        const Rat want = in_supp[j] ? Rat(y == j ? 1 : 0) : Rat(y == i ? 1 : 0);
        if (te[j] != want) {
          rep.proj.pass = false;
          rep.proj.note = "projection mismatch at " + slice.coord_labels[j];
          break;
        }
      }
    }
  }

  // (Inh): (M e_y)_i = <T e_y, M' T h> for every i in supp and basis e_y
  for (int i : supp) {
    const AtlasVertex& child = slice.vertices[v.targets[i]];
    const Vec th = apply_T(slice, vidx, v.h, i);
    const Vec mth = linalg::mat_vec(child.M, th);
    for (int y = 0; y < d && rep.inh.pass; ++y) {
      const Vec te = apply_T(slice, vidx, basis_vector(d, y), i);
      Rat rhs(0);
      for (int j = 0; j < d; ++j)
        if (!te[j].is_zero()) rhs += te[j] * mth[j];
      if (v.M.at(i, y) != rhs) {
        rep.inh.pass = false;
        rep.inh.note = "inheritance fails at (" + slice.coord_labels[i] + "," +
                       slice.coord_labels[y] + ")";
      }
    }
    if (!rep.inh.pass) break;
  }

  // (T-Inv) on distinct support triples
  for (size_t a = 0; a < supp.size() && rep.tinv.pass; ++a)
    for (size_t b = 0; b < supp.size() && rep.tinv.pass; ++b)
      for (size_t c = 0; c < supp.size(); ++c) {
        if (a == b || b == c || a == c) continue;
        const int i = supp[a], j = supp[b], kk = supp[c];
        const Rat m1 = slice.vertices[v.targets[i]].M.at(j, kk);
        const Rat m2 = slice.vertices[v.targets[j]].M.at(kk, i);
        const Rat m3 = slice.vertices[v.targets[kk]].M.at(i, j);
        if (m1 != m2 || m2 != m3) {
          rep.tinv.pass = false;
          rep.tinv.note = "transposition invariance fails at triple (" +
                          slice.coord_labels[i] + "," + slice.coord_labels[j] + "," +
                          slice.coord_labels[kk] + ")";
          break;
        }
      }

  // K-matrix: K_ij = h_j (M<i>_jj - sum_{k in Fam<j>} M<j>_ik)
  const int ns = static_cast<int>(supp.size());
  std::vector<std::vector<Rat>> K(ns, std::vector<Rat>(ns, Rat(0)));
  for (int a = 0; a < ns; ++a) {
    for (int b = 0; b < ns; ++b) {
      if (a == b) continue;
      const int i = supp[a], j = supp[b];
      const AtlasVertex& ci = slice.vertices[v.targets[i]];
      const AtlasVertex& cj = slice.vertices[v.targets[j]];
      Rat fam_sum(0);
      for (int kk : cj.M.support())
        if (!in_supp[kk] || kk == j) fam_sum += cj.M.at(i, kk);
      K[a][b] = v.h[j] * (ci.M.at(j, j) - fam_sum);
      if (K[a][b] < 0 && rep.knon.pass) {
        rep.knon.pass = false;
        rep.knon.note = "K(" + slice.coord_labels[i] + "," + slice.coord_labels[j] +
                        ") = " + rat_str(K[a][b]);
      }
    }
  }
  for (int a = 0; a < ns && rep.ksym.pass; ++a)
    for (int b = a + 1; b < ns; ++b)
      if (K[a][b] != K[b][a]) {
        rep.ksym.pass = false;
        rep.ksym.note = "K symmetry fails at (" + slice.coord_labels[supp[a]] + "," +
                        slice.coord_labels[supp[b]] + ")";
        break;
      }

  // (Pull) as exact PSD-ness of Q = sum_i h_i T^t M<i> T - M
  {
    LabeledSymMatrix q(slice.coord_labels);
    for (int i = 0; i < d; ++i)
      for (int j = i; j < d; ++j) q.set(i, j, -v.M.at(i, j));
    for (int i : supp) {
      if (v.h[i].is_zero()) continue;
      const AtlasVertex& child = slice.vertices[v.targets[i]];
      // columns of T: T e_y
      std::vector<Vec> tcols;
      tcols.reserve(d);
      for (int y = 0; y < d; ++y)
        tcols.push_back(apply_T(slice, vidx, basis_vector(d, y), i));
      std::vector<Vec> mtcols;
      mtcols.reserve(d);
      for (int y = 0; y < d; ++y) mtcols.push_back(linalg::mat_vec(child.M, tcols[y]));
      for (int a = 0; a < d; ++a)
        for (int b = a; b < d; ++b) {
          Rat s(0);
          for (int r = 0; r < d; ++r)
            if (!tcols[a][r].is_zero()) s += tcols[a][r] * mtcols[b][r];
          if (!s.is_zero()) q.add(a, b, v.h[i] * s);
        }
    }
    rep.pull.pass = linalg::is_psd(q);
    if (!rep.pull.pass) rep.pull.note = "pullback difference form not PSD";
  }
  return rep;
}

LocalGlobalReport check_local_global(const AtlasSlice& slice) {
  LocalGlobalReport rep;
  const int nv = static_cast<int>(slice.vertices.size());
  std::vector<signed char> hyp(nv, -1);
  auto is_hyp = [&](int i) {
    if (hyp[i] < 0) hyp[i] = linalg::check_OPE(slice.vertices[i].M) ? 1 : 0;
    return hyp[i] == 1;
  };
  for (int i = 0; i < nv; ++i) {
    const AtlasVertex& v = slice.vertices[i];
    if (v.sink || v.vacuous) continue;
    bool regular = linalg::is_irreducible_on_support(v.M);
    for (int s : v.M.support())
      if (!(v.h[s] > 0)) regular = false;
    if (regular) {
      bool children_hyp = true;
      for (int c : v.targets)
        if (c >= 0 && !is_hyp(c)) children_hyp = false;
      if (children_hyp && !is_hyp(i) && rep.hyp_implication_ok) {
        rep.hyp_implication_ok = false;
        rep.witness = "hyperbolicity not inherited at a regular vertex";
      }
    }
    const VertexReport vr = check_vertex_properties(slice, i);
    if (vr.inh.pass && vr.proj.pass && vr.tinv.pass && vr.knon.pass && !vr.pull.pass &&
        rep.pull_implication_ok) {
      rep.pull_implication_ok = false;
      if (rep.witness.empty()) rep.witness = "(Pull) fails despite Inh/Proj/TInv/KNon";
    }
  }
  return rep;
}

SinkNormalFormResult sink_normal_form(const AtlasSlice& slice, int vidx) {
  if (slice.kind != AtlasSlice::Kind::greedoid || !slice.weighted)
    fail("NotASink", "normal form applies to greedoid sinks");
  const AtlasVertex& v = slice.vertices[vidx];
  if (!v.sink) fail("NotASink", "vertex is not a sink");
  const WeightedLanguage& w = *slice.weighted;
  const GreedoidLanguage& g = w.lang;
  SinkNormalFormResult out;
  if (v.vacuous || !g.contains(v.id.alpha)) {
    out.vacuous = true;
    return out;
  }
  const Word& alpha = v.id.alpha;
  const int len = static_cast<int>(alpha.size());
  const int d = slice.dim();
  const int star = d - 1;

  std::vector<std::vector<Rat>> a(d, std::vector<Rat>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a[i][j] = v.M.at(i, j);

  const auto classes = g.par(alpha);
  std::vector<int> reps;
  for (const auto& cls : classes) {
    const int x = cls[0];
    reps.push_back(x);
    Word ax = alpha;
    ax.push_back(x);
    const Rat omx = w.omega(ax);
    for (size_t yi = 1; yi < cls.size(); ++yi) {
      const int y = cls[yi];
      Word ay = alpha;
      ay.push_back(y);
      const Rat r = w.omega(ay) / omx;
      for (int j = 0; j < d; ++j) a[y][j] -= r * a[x][j];
      for (int i = 0; i < d; ++i) a[i][y] -= r * a[i][x];
      for (int j = 0; j < d; ++j)
        if (!a[y][j].is_zero()) {
          out.shape_ok = false;
          out.note = "parallel elimination left a nonzero row";
        }
    }
  }

  // rational rescaling: rows x_i by omega(alpha)/(c_{l+2} omega(alpha x_i)),
  // the * row by 1/c_{l+1}, then the whole matrix by c_{l+2}/omega(alpha)
  const Rat om_alpha = w.omega(alpha);
  const Rat c_l = w.scale[len];
  const Rat c_l1 = w.scale[len + 1];
  const Rat c_l2 = w.scale[len + 2];
  std::vector<Rat> dscale(d, Rat(0));
  for (int x : reps) {
    Word ax = alpha;
    ax.push_back(x);
    dscale[x] = om_alpha / (c_l2 * w.omega(ax));
  }
  dscale[star] = Rat(1) / c_l1;
  const Rat s0 = om_alpha / c_l2;

  std::vector<int> keep = reps;
  keep.push_back(star);
  const int m = static_cast<int>(reps.size());
  std::vector<std::string> labels;
  for (int x : reps) labels.push_back(slice.coord_labels[x]);
  labels.push_back("*");
  LabeledSymMatrix nf(labels);
  for (int i = 0; i <= m; ++i)
    for (int j = i; j <= m; ++j)
      nf.set(i, j, dscale[keep[i]] * dscale[keep[j]] * a[keep[i]][keep[j]] / s0);

  for (int i = 0; i <= m && out.shape_ok; ++i)
    for (int j = i + 1; j <= m; ++j)
      if (nf.at(i, j) != 1) {
        out.shape_ok = false;
        out.note = "off-diagonal entry != 1 (log-modularity defect)";
      }
  for (int i = 0; i < m; ++i) {
    const Rat b = counting::b_alpha(w, alpha, classes[i]);
    if (nf.at(i, i) != b) {
      out.shape_ok = false;
      out.note = "diagonal does not match b_alpha";
    }
    out.diagonal.push_back(nf.at(i, i));
  }
  const Rat ratio = c_l * c_l2 / (c_l1 * c_l1);
  if (nf.at(m, m) != ratio) {
    out.shape_ok = false;
    out.note = "corner entry does not match the scale ratio";
  }
  out.diagonal.push_back(nf.at(m, m));

  // condition (*) of the interlacing lemma, with the limit convention when
  // some diagonal entry equals 1
  const Rat big = nf.at(m, m);
  bool has_one = false;
  bool all_le_one = true;
  Rat sum(0);
  for (int i = 0; i < m; ++i) {
    const Rat b = nf.at(i, i);
    if (b > 1) all_le_one = false;
    if (b == 1)
      has_one = true;
    else
      sum += (big - 1) / (Rat(1) - b);
  }
  if (!all_le_one) {
    out.condition_star = false;
  } else if (big <= 1) {
    out.condition_star = true;
  } else {
    out.condition_star = !has_one && big >= sum;
  }

  out.ope_agrees = (linalg::check_OPE(v.M) == linalg::check_OPE(nf));
  out.normal_form = std::move(nf);
  return out;
}

SEquReport check_sEqu_propagation(const AtlasSlice& slice, const Vec& f, const Vec& g,
                                  const Rat& s) {
  const int d = slice.dim();
  if (static_cast<int>(f.size()) != d || static_cast<int>(g.size()) != d)
    fail("NotAGlobalPair", "vector dimension mismatch");
  for (int i = 0; i < d; ++i) {
    if (f[i] < 0 || g[i] < 0 || !(f[i] + g[i] > 0))
      fail("NotAGlobalPair", "f + g must be strictly positive, f,g nonnegative");
  }
  if (!(s > 0)) fail("BadParams", "s must be positive");

  SEquReport rep;
  const int nv = static_cast<int>(slice.vertices.size());
  std::vector<char> sequ(nv, 0);
  for (int i = 0; i < nv; ++i) {
    const AtlasVertex& v = slice.vertices[i];
    const Rat a = linalg::quad_form(f, v.M, f);
    const Rat b = linalg::quad_form(g, v.M, f);
    const Rat c = linalg::quad_form(g, v.M, g);
    sequ[i] = (a == s * b && b == s * c) ? 1 : 0;
    if (sequ[i]) {
      ++rep.sequ_vertices;
      // kernel lemma: <z,Mz> = 0 here, so Mz must vanish exactly
      Vec zvec(d);
      for (int j = 0; j < d; ++j) zvec[j] = s * g[j] - f[j];
      if (!linalg::quad_form(zvec, v.M, zvec).is_zero()) {
        rep.kernel_ok = false;
        rep.witness = "computed <z,Mz> nonzero at an (s-Equ) vertex";
      }
      for (const Rat& e : linalg::mat_vec(v.M, zvec))
        if (!e.is_zero()) {
          rep.kernel_ok = false;
          if (rep.witness.empty()) rep.witness = "Mz != 0 at an (s-Equ) vertex";
          break;
        }
    }
  }
  rep.root_sequ = sequ[slice.root] != 0;
  if (!rep.root_sequ) return rep;

  auto functional_source = [&](int vi) {
    const AtlasVertex& v = slice.vertices[vi];
    if (v.sink || v.vacuous) return false;
    if (v.h != f) return false;  // (h-Glob)
    for (int i : v.M.support()) {
      const AtlasVertex& child = slice.vertices[v.targets[i]];
      const Vec tf = apply_T(slice, vi, f, i);
      const Vec tg = apply_T(slice, vi, g, i);
      for (int j : child.M.support())
        if (tf[j] != f[j] || tg[j] != g[j]) return false;  // (Glob-Proj)
    }
    return true;
  };

  std::vector<char> target(nv, 0);
  std::vector<int> stack{slice.root};
  std::vector<char> visited(nv, 0);
  visited[slice.root] = 1;
  while (!stack.empty()) {
    const int vi = stack.back();
    stack.pop_back();
    if (!functional_source(vi)) continue;
    const AtlasVertex& v = slice.vertices[vi];
    std::vector<char> in_supp(d, 0);
    for (int i : v.M.support()) in_supp[i] = 1;
    for (int i = 0; i < d; ++i) {
      if (!in_supp[i] || v.h[i].is_zero()) continue;  // functional edges only
      const int c = v.targets[i];
      if (c < 0) continue;
      target[c] = 1;
      if (!visited[c]) {
        visited[c] = 1;
        stack.push_back(c);
      }
    }
  }
  for (int i = 0; i < nv; ++i) {
    if (!target[i]) continue;
    ++rep.functional_targets;
    if (!sequ[i]) {
      rep.propagation_ok = false;
      if (rep.witness.empty()) rep.witness = "functional target misses (s-Equ)";
    }
  }
  return rep;
}

LineGraphReport line_graph_connectivity(const poset::Poset& p,
                                        const std::vector<Rat>& omega, int z, int k) {
  const int n = p.n();
  if (k < 2 || k > n - 1) fail("RankOutOfRange", "need 2 <= k <= n-1");
  LineGraphReport rep;
  StanleyContext ctx{p, omega, z};
  const int d = 2 * (n - 1);

  struct Edge {
    int a, b;  // coordinates; a == b for loops
  };
  std::vector<Edge> edges;
  for (const auto& word : poset::linear_extensions(p)) {
    int zpos = 0;
    while (word[zpos] != z) ++zpos;
    ++zpos;
    if (zpos < k - 1 || zpos > k + 1) continue;
    Edge e{};
    if (zpos == k + 1) {
      const int x = word[0], y = word[1];
      if (p.incomparable(x, y))
        e = {ctx.coord(x, false), ctx.coord(y, false)};
      else
        e = {ctx.coord(x, false), ctx.coord(x, false)};
    } else if (zpos == k) {
      e = {ctx.coord(word[0], false), ctx.coord(word[n - 1], true)};
    } else {
      const int x = word[n - 1], y = word[n - 2];
      if (p.incomparable(x, y))
        e = {ctx.coord(x, true), ctx.coord(y, true)};
      else
        e = {ctx.coord(x, true), ctx.coord(x, true)};
    }
    edges.push_back(e);
  }
  rep.edge_count = static_cast<long long>(edges.size());
  if (edges.empty()) fail("EmptyEdgeSet", "no extension places z near position k");

  // line graph connectivity == one component after merging edges that share
  // an endpoint
  std::vector<int> parent(edges.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> first_at(d, -1);
  for (size_t i = 0; i < edges.size(); ++i)
    for (int c : {edges[i].a, edges[i].b}) {
      if (first_at[c] < 0)
        first_at[c] = static_cast<int>(i);
      else
        parent[find(static_cast<int>(i))] = find(first_at[c]);
    }
  int components = 0;
  for (size_t i = 0; i < edges.size(); ++i)
    if (find(static_cast<int>(i)) == static_cast<int>(i)) ++components;
  rep.connected = (components == 1);

  // adjacency in the nonsimple graph agrees with positivity of C(0,0,k)
  const LabeledSymMatrix c = stanley_matrix(p, omega, z, {}, {}, k);
  std::vector<std::vector<char>> adj(d, std::vector<char>(d, 0));
  for (const Edge& e : edges) adj[e.a][e.b] = adj[e.b][e.a] = 1;
  rep.adjacency_matches_matrix = true;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if ((c.at(i, j) > 0) != (adj[i][j] != 0)) rep.adjacency_matches_matrix = false;
  return rep;
}

}  // namespace caw::atlas
