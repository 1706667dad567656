#include "caw/inequalities.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <numeric>

namespace caw::ineq {

using counting::WeightedLanguage;
using structures::Mask;
using structures::Word;

namespace {

IneqReport make_report(std::string name, int k, const Rat& mid, const Rat& lo,
                       const Rat& hi, Rat factor) {
  IneqReport r;
  r.name = std::move(name);
  r.k = k;
  r.factor = std::move(factor);
  r.lhs = mid * mid;
  r.rhs = r.factor * lo * hi;
  r.holds = r.lhs >= r.rhs;
  r.equality = r.lhs == r.rhs;
  return r;
}

void finish_conditions(IneqReport& r) {
  bool all = true;
  for (const Condition& c : r.conditions)
    if (!c.pass) all = false;
  r.conditions_pass = all;
  r.consistent = (r.equality == all);
}

bool weights_uniform(const std::vector<Rat>& w) {
  for (const Rat& x : w)
    if (x != w[0]) return false;
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// Matroids

MatroidSuite matroid_suite(const structures::Matroid& m, const std::vector<Rat>& omega,
                           int k) {
  if (k < 1 || k >= m.rank()) fail("RankOutOfRange", "need 1 <= k < rk");
  const counting::CountSeries iw = counting::count_I_weighted(m, omega);
  const Rat mid = iw.values[k], lo = iw.values[k - 1], hi = iw.values[k + 1];
  const int n = m.n();

  MatroidSuite suite;
  suite.girth = structures::girth(m);
  suite.p_km1 = structures::continuation_number(m, k - 1);
  suite.uniform_weights = weights_uniform(omega);

  suite.plain = make_report("matroid-log-concavity", k, mid, lo, hi, Rat(1));
  suite.one_sided = make_report("matroid-one-sided-ulc", k, mid, lo, hi,
                                Rat(1) + rat(1, k));
  suite.ultra = make_report("matroid-ulc", k, mid, lo, hi,
                            (Rat(1) + rat(1, k)) * (Rat(1) + rat(1, n - k)));
  {
    Condition g{"girth>k+1", suite.girth > k + 1, false, ""};
    if (!g.pass) g.witness = "girth = " + std::to_string(suite.girth);
    Condition u{"omega-uniform", suite.uniform_weights, false, ""};
    suite.ultra.conditions = {g, u};
    finish_conditions(suite.ultra);
  }

  if (suite.p_km1 < 2) {
    suite.refined.name = "matroid-refined";
    suite.refined.k = k;
    suite.refined.applicable = false;
    suite.refined.note = "p(k-1) = " + std::to_string(suite.p_km1) +
                         "; refined factor undefined, strong form governs";
    suite.refined.lhs = suite.ultra.lhs;
    suite.refined.rhs = suite.ultra.rhs;
    suite.refined.holds = suite.ultra.holds;
    suite.refined.equality = suite.ultra.equality;
  } else {
    suite.refined =
        make_report("matroid-refined", k, mid, lo, hi,
                    (Rat(1) + rat(1, k)) * (Rat(1) + rat(1, suite.p_km1 - 1)));
    // (ME1) and (ME2) over every S in I_{k-1}
    Condition me1{"ME1", true, false, ""};
    Condition me2{"ME2", true, false, ""};
    bool have_s = false;
    Rat s_val;
    for (Mask s : m.of_size(k - 1)) {
      const auto classes = structures::matroid_par(m, s);
      if (static_cast<int>(classes.size()) != suite.p_km1 && me1.pass) {
        me1.pass = false;
        me1.witness = structures::subset_str(m.ground, s) + " has " +
                      std::to_string(classes.size()) + " classes";
      }
      for (const auto& cls : classes) {
        Rat sum(0);
        for (int x : cls) sum += omega[x];
        if (!have_s) {
          have_s = true;
          s_val = sum;
        } else if (sum != s_val && me2.pass) {
          me2.pass = false;
          me2.witness = "class sum " + rat_str(sum) + " != s = " + rat_str(s_val);
        }
      }
    }
    if (have_s) me2.witness = me2.pass ? "s(k-1) = " + rat_str(s_val) : me2.witness;
    suite.refined.conditions = {me1, me2};
    finish_conditions(suite.refined);
  }
  return suite;
}

GraphicalSpecial graphical_special(const structures::Graph& g) {
  if (!g.connected()) fail("Disconnected", "graph must be connected");
  const int nv = static_cast<int>(g.vertices.size());
  const int ne = static_cast<int>(g.edges.size());
  if (ne > 22) fail("TooLarge", "graphical special cases capped at 22 edges");
  for (int i = 0; i < ne; ++i) {
    if (g.edges[i].first == g.edges[i].second) fail("BadParams", "loop edge");
    for (int j = i + 1; j < ne; ++j) {
      auto norm = [](std::pair<int, int> e) {
        return std::make_pair(std::min(e.first, e.second), std::max(e.first, e.second));
      };
      if (norm(g.edges[i]) == norm(g.edges[j])) fail("BadParams", "multi-edge");
    }
  }
  // forest counts by direct enumeration (K7 exceeds the explicit-matroid cap)
  std::vector<Rat> is(nv + 1, Rat(0));
  for (uint32_t s = 0; s < (1u << ne); ++s) {
    std::vector<int> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool forest = true;
    int edges_used = 0;
    for (int e = 0; e < ne && forest; ++e) {
      if (!(s >> e & 1u)) continue;
      ++edges_used;
      const int a = find(g.edges[e].first), b = find(g.edges[e].second);
      if (a == b)
        forest = false;
      else
        parent[a] = b;
    }
    if (forest) is[edges_used] += 1;
  }

  GraphicalSpecial out;
  const int k = nv - 2;
  if (k < 1) fail("BadParams", "graph too small for the cycle ratio");
  out.cycle_ratio =
      make_report("graphical-cycle-ratio", k, is[k], is[k - 1], is[k + 1],
                  rat(3, 2) * (Rat(1) + rat(1, nv - 2)));
  std::vector<int> deg(nv, 0);
  for (auto [a, b] : g.edges) {
    ++deg[a];
    ++deg[b];
  }
  out.is_cycle = true;
  for (int v = 0; v < nv; ++v)
    if (deg[v] != 2) out.is_cycle = false;
  Condition c{"is-n-cycle", out.is_cycle, false, ""};
  out.cycle_ratio.conditions = {c};
  finish_conditions(out.cycle_ratio);

  for (int kk = 2; kk < nv - 2; ++kk) {
    const Rat denom = Rat(binomial(nv - kk + 1, 2)) - 1;
    IneqReport r = make_report("graphical-strict", kk, is[kk], is[kk - 1], is[kk + 1],
                               (Rat(1) + rat(1, kk)) * (Rat(1) + Rat(1) / denom));
    // the theorem asserts strictness on this whole range
    r.consistent = r.holds && !r.equality;
    out.strict.push_back(std::move(r));
  }
  return out;
}

std::vector<IneqReport> gf_field_bound(int q, const std::vector<std::vector<int>>& vectors) {
  const structures::Matroid m = structures::make_vector_gf(q, vectors);
  const int rank = m.rank();
  const int mdim = static_cast<int>(vectors[0].size());
  if (rank != mdim) fail("BadParams", "vectors must span F_q^m");
  const counting::CountSeries is = counting::count_I(m);
  std::vector<IneqReport> out;
  for (int k = 1; k < rank; ++k) {
    BigInt denom = 1;
    for (int i = 0; i < mdim - k + 1; ++i) denom *= q;
    denom -= 2;
    out.push_back(make_report("gf-field-bound", k, is.values[k], is.values[k - 1],
                              is.values[k + 1],
                              (Rat(1) + rat(1, k)) * (Rat(1) + Rat(1) / Rat(denom))));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Polymatroids

PolymatroidSuite polymatroid_suite(const structures::DiscretePolymatroid& d,
                                   const std::vector<Rat>& omega, const Rat& t, int k) {
  if (k < 1 || k >= d.rank()) fail("RankOutOfRange", "need 1 <= k < rk");
  if (t < 0 || t > 1) fail("BadParams", "t must lie in [0,1]");
  PolymatroidSuite suite;
  suite.polygirth = structures::polygirth(d);  // Degenerate on bad input
  suite.p_km1 = structures::continuation_number(d, k - 1);
  const counting::CountSeries j = counting::count_J(d, omega, t);
  const Rat mid = j.values[k], lo = j.values[k - 1], hi = j.values[k + 1];
  const Rat pfac = Rat(1) + (Rat(1) - t) / (Rat(suite.p_km1 - 1) + t);
  suite.refined = make_report("polymatroid-refined", k, mid, lo, hi,
                              (Rat(1) + rat(1, k)) * pfac);
  if (t == 1) {
    Condition c{"polygirth>k+1", suite.polygirth > k + 1, false,
                "polygirth = " + std::to_string(suite.polygirth)};
    suite.refined.conditions = {c};
    finish_conditions(suite.refined);
  } else if (t > 0) {
    Condition c1{"k=1", k == 1, false, ""};
    Condition c2{"polygirth>2", suite.polygirth > 2, false,
                 "polygirth = " + std::to_string(suite.polygirth)};
    Condition c3{"omega-uniform", weights_uniform(omega), false, ""};
    suite.refined.conditions = {c1, c2, c3};
    finish_conditions(suite.refined);
  } else {
    // t = 0 collapses J to the 0/1 part; equality is governed by the
    // matroid conditions when the continuation numbers agree
    std::vector<Mask> fam;
    for (const auto& a : d.independents) {
      bool zero_one = true;
      Mask mask = 0;
      for (int i = 0; i < d.n; ++i) {
        if (a[i] > 1) zero_one = false;
        if (a[i] == 1) mask |= 1u << i;
      }
      if (zero_one) fam.push_back(mask);
    }
    std::vector<std::string> ground;
    for (int i = 1; i <= d.n; ++i) ground.push_back("x" + std::to_string(i));
    const structures::Matroid m01 = structures::make_explicit(ground, fam);
    const int pm = structures::continuation_number(m01, k - 1);
    if (pm == suite.p_km1 && k < m01.rank()) {
      MatroidSuite ms = matroid_suite(m01, omega, k);
      suite.refined.conditions = ms.refined.conditions;
      finish_conditions(suite.refined);
    } else {
      Condition c{"matroid-reduction", true, true,
                  "continuation numbers differ between D and its 0/1 part"};
      suite.refined.conditions = {c};
      suite.refined.conditions_pass = std::nullopt;
      suite.refined.consistent = true;
    }
  }
  return suite;
}

// ---------------------------------------------------------------------------
// Poset antimatroids

AntimatroidSuite antimatroid_suite(const poset::Poset& p, const std::vector<Rat>& omega,
                                   int k) {
  const int n = p.n();
  if (static_cast<int>(omega.size()) != n)
    fail("WeightDomainMismatch", "weight count != poset size");
  for (int x = 0; x < n; ++x) {
    Rat sum(0);
    const auto cov = p.covers_of(x);
    if (cov.empty()) continue;
    for (int y : cov) sum += omega[y];
    if (omega[x] < sum)
      fail("CMViolated", "cover monotonicity fails at " + p.elements[x]);
  }
  if (k < 1 || k >= n) fail("RankOutOfRange", "need 1 <= k < n");

  const structures::GreedoidLanguage lang = structures::lift_poset_antimatroid(p);
  // the lift stores words up to length 10; beyond that the series would
  // silently read zero
  if (lang.rank() < n && k + 1 > lang.rank())
    fail("TooLarge", "series index exceeds the stored word length");
  const WeightedLanguage w =
      counting::product_weight(lang, omega, counting::uniform_scale(lang.rank()));

  AntimatroidSuite suite;
  suite.main = make_report("antimatroid-log-concavity", k, w.series(k),
                           w.series(k - 1), w.series(k + 1), Rat(1));

  // (AE1)-(AE3) over every word of length k-1
  Condition ae1{"AE1", true, false, ""};
  Condition ae2{"AE2", true, false, ""};
  Condition ae3{"AE3", true, false, ""};
  bool have_s = false;
  Rat s_val;
  for (const Word& alpha : w.lang.of_length(k - 1)) {
    const std::vector<int> cnt = w.lang.cnt(alpha);
    Rat sum(0);
    for (int x : cnt) sum += omega[x];
    if (!have_s) {
      have_s = true;
      s_val = sum;
    } else if (sum != s_val && ae1.pass) {
      ae1.pass = false;
      ae1.witness = "continuation sum " + rat_str(sum) + " != " + rat_str(s_val) +
                    " at " + w.lang.word_str(alpha);
    }
    for (int x : cnt) {
      std::vector<int> des = w.lang.des(alpha, x);
      std::vector<int> cov = p.covers_of(x);
      std::sort(des.begin(), des.end());
      std::sort(cov.begin(), cov.end());
      if (des != cov && ae2.pass) {
        ae2.pass = false;
        ae2.witness = "Des != Cov at " + w.lang.word_str(alpha) + " letter " +
                      p.elements[x];
      }
      Rat cov_sum(0);
      for (int y : cov) cov_sum += omega[y];
      if (cov_sum != omega[x] && ae3.pass) {
        ae3.pass = false;
        ae3.witness = "cover sum != omega at " + p.elements[x];
      }
    }
  }
  if (ae1.pass && have_s) ae1.witness = "s(k-1) = " + rat_str(s_val);
  suite.main.conditions = {ae1, ae2, ae3};
  finish_conditions(suite.main);

  // total equality across all 1 <= k < height(P)
  suite.total.equal_everywhere = true;
  if (lang.rank() < n && p.height() > lang.rank())
    fail("TooLarge", "height exceeds the stored word length");
  for (int kk = 1; kk < p.height(); ++kk) {
    const Rat l = w.series(kk), a = w.series(kk - 1), b = w.series(kk + 1);
    if (l * l != a * b) suite.total.equal_everywhere = false;
  }
  bool canonical = false;
  {
    const std::vector<Rat> chain_w = poset::canonical_chain_weights(p);
    // c * omega matches chain counts for some c > 0
    const Rat c = omega[0] / chain_w[0];
    canonical = true;
    for (int x = 0; x < n; ++x)
      if (omega[x] != c * chain_w[x]) canonical = false;
  }
  suite.total.recognizer = poset::is_tree_poset_with_bottom(p) && canonical;
  // Only the recognizer => equality direction is asserted. The converse
  // fails already on a claw with cover-tight but non-uniform leaf weights:
  // equality holds at every k < height while c*omega is not the
  // chain-count weight.
  suite.total.consistent = !suite.total.recognizer || suite.total.equal_everywhere;
  return suite;
}

// ---------------------------------------------------------------------------
// Interval greedoids

GreedoidSuite greedoid_suite_impl(const WeightedLanguage& w, int k) {
  GreedoidSuite suite;
  suite.main = make_report("greedoid-log-concavity", k, w.series(k), w.series(k - 1),
                           w.series(k + 1), Rat(1));
  const bool ge_a = suite.main.equality;

  const auto& level = w.lang.of_length(k - 1);
  // (GE-b): L_{q,a}(2) = s L_{q,a}(1) = s^2 L_{q,a}(0) with one global s
  Condition bcond{"GE-b", true, false, ""};
  bool have_s = false;
  Rat s_val;
  for (const Word& alpha : level) {
    const Rat l0 = w.local_series(alpha, 0);
    const Rat l1 = w.local_series(alpha, 1);
    const Rat l2 = w.local_series(alpha, 2);
    if (l0.is_zero()) continue;  // zero-weight words carry no information
    if (!have_s) {
      if (l1.is_zero()) {
        bcond.pass = false;
        bcond.witness = "no positive s at " + w.lang.word_str(alpha);
        break;
      }
      have_s = true;
      s_val = l1 / l0;
    }
    if (l1 != s_val * l0 || l2 != s_val * l1) {
      bcond.pass = false;
      bcond.witness = "local series not geometric at " + w.lang.word_str(alpha);
      break;
    }
  }
  if (!have_s) bcond.pass = false;
  suite.ge_b = bcond.pass;

  // (GE-c1) and (GE-c2) with the same global s
  Condition c1{"GE-c1", true, false, ""};
  Condition c2{"GE-c2", true, false, ""};
  bool have_cs = false;
  Rat cs;
  const Rat ratio = Rat(1) - (w.scale[k] * w.scale[k]) / (w.scale[k - 1] * w.scale[k + 1]);
  for (const Word& alpha : level) {
    const Rat qa = w.q_of(alpha);
    if (qa.is_zero()) continue;
    Rat contsum(0);
    for (int x : w.lang.cnt(alpha)) {
      Word ax = alpha;
      ax.push_back(x);
      contsum += w.q_of(ax);
    }
    const Rat s_here = contsum / qa;
    if (!have_cs) {
      have_cs = true;
      cs = s_here;
    } else if (s_here != cs && c1.pass) {
      c1.pass = false;
      c1.witness = "continuation ratio differs at " + w.lang.word_str(alpha);
    }
    for (const auto& cls : w.lang.par(alpha)) {
      const Rat b = counting::b_alpha(w, alpha, cls);
      Rat csum(0);
      for (int x : cls) {
        Word ax = alpha;
        ax.push_back(x);
        csum += w.q_of(ax);
      }
      if ((Rat(1) - b) * csum / qa != cs * ratio && c2.pass) {
        c2.pass = false;
        c2.witness = "(GE-c2) fails at " + w.lang.word_str(alpha);
      }
    }
  }
  if (!have_cs || !(cs > 0)) c1.pass = false;
  suite.ge_c = c1.pass && c2.pass;

  suite.main.conditions = {bcond, c1, c2};
  suite.main.conditions_pass = suite.ge_b && suite.ge_c;
  suite.main.consistent = (ge_a == suite.ge_b) && (suite.ge_b == suite.ge_c);
  suite.triple_consistent = suite.main.consistent;
  return suite;
}

GreedoidSuite greedoid_suite(const WeightedLanguage& w, int k, bool fast) {
  if (!w.lang.flags.is_interval())
    fail("NotInterval", "language is not an interval greedoid");
  if (k < 1 || k >= w.lang.rank()) fail("RankOutOfRange", "need 1 <= k < rk");
  const counting::AdmissibilityReport adm = counting::check_k_admissible(w, k, fast);
  if (!adm.admissible()) {
    std::string why;
    for (const counting::PropertyCheck* c :
         {&adm.cont_inv, &adm.pa_mon, &adm.log_mod, &adm.few_des, &adm.syn_mon,
          &adm.scale_mon})
      if (!c->pass && why.empty()) why = c->witness;
    fail("NotAdmissible", why);
  }
  return greedoid_suite_impl(w, k);
}

// ---------------------------------------------------------------------------
// Morphisms of matroids

MorphismSuite morphism_suite(const structures::MatroidMorphism& mm,
                             const std::vector<Rat>& omega, int k) {
  const structures::MorphismReport valid = structures::validate_morphism(mm);
  if (!valid.valid) fail("NotAMorphism", "rank inequality fails at " + valid.witness);
  const int rk = mm.source.rank();
  if (k < 1 || k >= rk) fail("RankOutOfRange", "need 1 <= k < rk");
  const counting::CountSeries b = counting::count_B(mm, omega);
  if (b.values[k].is_zero()) fail("ZeroMiddleTerm", "B(k) = 0");
  const Rat mid = b.values[k], lo = b.values[k - 1], hi = b.values[k + 1];
  const int n = mm.source.n();

  MorphismSuite suite;
  suite.p_km1 = structures::morphism_continuation_number(mm, k - 1);

  // full-rank image condition shared by both equality statements
  Condition full{"MME3", true, false, ""};
  {
    const std::vector<int> gtab = mm.target.rank_table();
    const int rk_n = mm.target.rank();
    for (Mask s : mm.source.of_size(k - 1))
      if (gtab[mm.image(s)] != rk_n) {
        full.pass = false;
        full.witness = structures::subset_str(mm.source.ground, s);
        break;
      }
  }

  suite.eh = make_report("morphism-eh", k, mid, lo, hi,
                         (Rat(1) + rat(1, k)) * (Rat(1) + rat(1, n - k)));
  {
    Condition g{"girth>k+1", structures::girth(mm.source) > k + 1, false, ""};
    Condition u{"omega-uniform", weights_uniform(omega), false, ""};
    suite.eh.conditions = {g, u, full};
    finish_conditions(suite.eh);
  }

  if (suite.p_km1 < 2) {
    suite.refined.name = "morphism-refined";
    suite.refined.k = k;
    suite.refined.applicable = false;
    suite.refined.note = "p(k-1) < 2; refined factor undefined";
  } else {
    suite.refined =
        make_report("morphism-refined", k, mid, lo, hi,
                    (Rat(1) + rat(1, k)) * (Rat(1) + rat(1, suite.p_km1 - 1)));
    Condition mme1{"MME1", true, false, ""};
    Condition mme2{"MME2", true, false, ""};
    bool have_s = false;
    Rat s_val;
    for (Mask s : mm.source.of_size(k - 1)) {
      const auto classes = structures::matroid_par(mm.source, s);
      if (static_cast<int>(classes.size()) != suite.p_km1 && mme1.pass) {
        mme1.pass = false;
        mme1.witness = structures::subset_str(mm.source.ground, s);
      }
      for (const auto& cls : classes) {
        Rat sum(0);
        for (int x : cls) sum += omega[x];
        if (!have_s) {
          have_s = true;
          s_val = sum;
        } else if (sum != s_val && mme2.pass) {
          mme2.pass = false;
          mme2.witness = "class sum differs at " +
                         structures::subset_str(mm.source.ground, s);
        }
      }
    }
    suite.refined.conditions = {mme1, mme2, full};
    finish_conditions(suite.refined);
  }
  return suite;
}

// ---------------------------------------------------------------------------
// Stanley

namespace {

struct StanleyLocal {
  // N(alpha, beta, j) for the three local positions j = 1,2,3
  Rat n1, n2, n3;
};

}  // namespace

StanleySuite stanley_suite(const poset::Poset& p, const std::vector<Rat>& omega, int z,
                           int k) {
  const int n = p.n();
  if (static_cast<int>(omega.size()) != n)
    fail("WeightDomainMismatch", "weight count != poset size");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (p.lt(x, y) && omega[x] < omega[y])
        fail("NotOrderReversing", p.elements[x] + " < " + p.elements[y]);
  if (k <= 1 || k >= n) fail("RankOutOfRange", "need 1 < k < n");

  const auto extensions = poset::linear_extensions(p);
  std::vector<Rat> nw(n + 2, Rat(0));
  for (const auto& word : extensions) {
    int pos = 0;
    while (word[pos] != z) ++pos;
    nw[pos + 1] += counting::extension_weight(word, omega, z);
  }
  if (nw[k].is_zero()) fail("ZeroMiddleTerm", "N(k) = 0");

  StanleySuite suite;
  suite.main =
      make_report("stanley-log-concavity", k, nw[k], nw[k - 1], nw[k + 1], Rat(1));
  suite.item_a = suite.main.equality;
  suite.s = nw[k + 1] / nw[k];

  // (b): three-term geometric with one s
  suite.item_b = (nw[k + 1] == suite.s * nw[k]) && (nw[k] == suite.s * nw[k - 1]) &&
                 suite.s > 0;

  // (c): local versions on all (alpha, beta) frames with N(alpha,beta,2) > 0
  {
    std::map<std::pair<Word, Word>, StanleyLocal> frames;
    for (const auto& word : extensions) {
      int pos = 0;
      while (word[pos] != z) ++pos;
      ++pos;  // 1-based position of z
      if (pos < k - 1 || pos > k + 1) continue;
      // the frame drops the first k-2 and last n-k-1 letters
      const Word alpha(word.begin(), word.begin() + (k - 2));
      const Word beta(word.begin() + (k + 1), word.end());
      const Rat wt = counting::extension_weight(word, omega, z);
      StanleyLocal& f = frames[{alpha, beta}];
      if (pos == k - 1)
        f.n1 += wt;
      else if (pos == k)
        f.n2 += wt;
      else
        f.n3 += wt;
    }
    suite.item_c = true;
    bool have_s = false;
    Rat s_val;
    for (const auto& [key, f] : frames) {
      if (f.n2.is_zero()) continue;
      if (!have_s) {
        have_s = true;
        s_val = f.n3 / f.n2;
        if (!(s_val > 0)) suite.item_c = false;
      }
      if (f.n3 != s_val * f.n2 || f.n2 != s_val * f.n1) suite.item_c = false;
    }
    if (!have_s) suite.item_c = false;
    // the global s of items (b)-(e) when equality holds must agree with the
    // local one; when both exist they coincide by summation
  }

  // shared weight clause (Coh): omega at the k-1 and k+1 entries of every
  // extension with z at k equals one constant s
  bool coh = true;
  bool coh_any = false;
  bool have_coh_s = false;
  Rat coh_s;
  bool incomp = true;  // z incomparable to the k-1 and k+1 entries
  for (const auto& word : extensions) {
    if (word[k - 1] != z) continue;  // z at 1-based position k
    coh_any = true;
    const int before = word[k - 2], after = word[k];
    if (!have_coh_s) {
      have_coh_s = true;
      coh_s = omega[before];
    }
    if (omega[before] != coh_s || omega[after] != coh_s) coh = false;
    if (p.comparable(z, before) || p.comparable(z, after)) incomp = false;
  }
  suite.coh_vacuous = !coh_any;
  if (!coh_any) coh = true;

  // ideal-size clause of item (e) / the lemma
  bool ideals = true;
  for (int x = 0; x < n; ++x) {
    if (p.lt(z, x) && poset::ideal_sizes(p, x).first <= k) ideals = false;
    if (p.lt(x, z) && poset::ideal_sizes(p, x).second <= n - k + 1) ideals = false;
  }

  suite.item_d = coh && incomp;
  suite.item_e = coh && ideals;
  suite.lemma_equivalence = (incomp == ideals);
  suite.items_agree = (suite.item_a == suite.item_b) &&
                      (suite.item_b == suite.item_c) &&
                      (suite.item_c == suite.item_d) && (suite.item_d == suite.item_e);

  Condition a{"(a) value equality", suite.item_a, false, ""};
  Condition bb{"(b) geometric", suite.item_b, false, ""};
  Condition cc{"(c) local geometric", suite.item_c, false, ""};
  Condition dd{"(d) Coh + incomparability", suite.item_d, suite.coh_vacuous, ""};
  Condition ee{"(e) Coh + ideal sizes", suite.item_e, suite.coh_vacuous, ""};
  suite.main.conditions = {a, bb, cc, dd, ee};
  suite.main.conditions_pass = suite.item_b && suite.item_c && suite.item_d && suite.item_e;
  suite.main.consistent = suite.items_agree;
  return suite;
}

BeltSuite stanley_belt_suite(const poset::Poset& p, int z, int k, BeltMode mode,
                             const std::vector<Rat>& omega,
                             const std::vector<Rat>* ideal_weights_by_mask) {
  const int n = p.n();
  if (!poset::has_belt(p, z)) fail("NoBelt", "inc(z) is not a chain");
  if (k <= 1 || k >= n) fail("RankOutOfRange", "need 1 < k < n");

  // lower-ideal weight table indexed by mask
  std::vector<Rat> ideal_w;
  if (mode == BeltMode::tropical) {
    if (static_cast<int>(omega.size()) != n)
      fail("WeightDomainMismatch", "weight count != poset size");
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (p.lt(x, y) && omega[x] < omega[y])
          fail("NotOrderReversing", "tropical weights must be order-reversing");
    ideal_w.assign(1u << n, Rat(0));
    for (Mask s = 0; s < (1u << n); ++s) {
      Rat best(0);
      for (int x = 0; x < n; ++x)
        if ((s >> x & 1u) && omega[x] > best) best = omega[x];
      ideal_w[s] = best;
    }
  } else {
    if (!ideal_weights_by_mask ||
        static_cast<int>(ideal_weights_by_mask->size()) != (1 << n))
      fail("BadParams", "submodular mode needs ideal weights for all masks");
    ideal_w = *ideal_weights_by_mask;
  }

  auto is_lower_ideal = [&](Mask s) {
    for (int x = 0; x < n; ++x)
      if (s >> x & 1u)
        for (int y = 0; y < n; ++y)
          if (p.lt(y, x) && !(s >> y & 1u)) return false;
    return true;
  };

  BeltSuite suite;
  // (Submod) over applicable triples
  const std::vector<int> inc = p.incomparables(z);
  for (Mask s = 0; s < (1u << n) && suite.submod_ok; ++s) {
    if (!is_lower_ideal(s)) continue;
    for (int x : inc) {
      if (s >> x & 1u) continue;
      const Mask sx = s | (1u << x);
      if (!is_lower_ideal(sx)) continue;
      for (int y : inc) {
        if (!p.lt(x, y) || (sx >> y & 1u)) continue;
        const Mask sxy = sx | (1u << y);
        if (!is_lower_ideal(sxy)) continue;
        if (ideal_w[sxy] * ideal_w[s] > ideal_w[sx] * ideal_w[sx]) {
          suite.submod_ok = false;
          suite.submod_witness = "S = " + structures::subset_str(p.elements, s) +
                                 ", x = " + p.elements[x] + ", y = " + p.elements[y];
          break;
        }
      }
      if (!suite.submod_ok) break;
    }
  }
  if (!suite.submod_ok)
    fail("SubmodViolated", "submodularity fails at " + suite.submod_witness);

  std::vector<Rat> nq(n + 2, Rat(0));
  for (const auto& word : poset::linear_extensions(p)) {
    int pos = 0;
    Mask below = 0;
    while (word[pos] != z) {
      below |= 1u << word[pos];
      ++pos;
    }
    nq[pos + 1] += ideal_w[below];
  }
  suite.main = make_report(mode == BeltMode::tropical ? "stanley-belt-tropical"
                                                      : "stanley-belt-submodular",
                           k, nq[k], nq[k - 1], nq[k + 1], Rat(1));
  return suite;
}

}  // namespace caw::ineq
