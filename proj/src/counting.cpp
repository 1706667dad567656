#include "caw/counting.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace caw::counting {

using structures::GreedoidLanguage;
using structures::Mask;

namespace {

// c_{l+1}^2 / (c_l c_{l+2}), the ratio appearing in (ScaleMon)
Rat scale_ratio(const WeightedLanguage& w, int len) {
  return (w.scale[len + 1] * w.scale[len + 1]) / (w.scale[len] * w.scale[len + 2]);
}

// b_alpha without the Par-membership validation (classes come from par())
Rat b_alpha_unchecked(const WeightedLanguage& w, const Word& alpha,
                      const std::vector<int>& cls) {
  if (cls.size() >= 2) return Rat(0);
  const int x = cls[0];
  Word ax = alpha;
  ax.push_back(x);
  const Rat oma = w.omega(alpha);
  const Rat omax = w.omega(ax);
  Rat sum(0);
  for (int y : w.lang.des(alpha, x)) {
    Word axy = ax;
    axy.push_back(y);
    sum += oma * w.omega(axy);
  }
  if (sum.is_zero()) return sum;
  if (omax.is_zero()) fail("WeightDomainMismatch", "b_alpha with omega(alpha x) = 0");
  return sum / (omax * omax);
}

}  // namespace

Rat WeightedLanguage::q_of(const Word& w) const {
  const int len = static_cast<int>(w.size());
  if (len >= static_cast<int>(lang.by_length.size())) return Rat(0);
  const auto& bucket = lang.by_length[len];
  auto it = std::lower_bound(bucket.begin(), bucket.end(), w);
  if (it == bucket.end() || *it != w) return Rat(0);
  return q_by_length[len][it - bucket.begin()];
}

Rat WeightedLanguage::omega(const Word& w) const {
  return q_of(w) / scale[w.size()];
}

Rat WeightedLanguage::series(int k) const {
  if (k < 0 || k >= static_cast<int>(q_by_length.size())) return Rat(0);
  Rat s(0);
  for (const Rat& v : q_by_length[k]) s += v;
  return s;
}

Rat WeightedLanguage::local_series(const Word& alpha, int k) const {
  if (!lang.contains(alpha)) fail("WordNotInLanguage", lang.word_str(alpha));
  if (k < 0) return Rat(0);
  const int len = static_cast<int>(alpha.size()) + k;
  if (len >= static_cast<int>(lang.by_length.size())) return Rat(0);
  const auto& bucket = lang.by_length[len];
  const size_t a = alpha.size();
  auto cmp = [a](const Word& w, const Word& p) {
    return std::lexicographical_compare(w.begin(), w.begin() + std::min(w.size(), a),
                                        p.begin(), p.end());
  };
  auto lo = std::lower_bound(bucket.begin(), bucket.end(), alpha, cmp);
  Rat s(0);
  for (auto it = lo; it != bucket.end(); ++it) {
    if (!std::equal(alpha.begin(), alpha.end(), it->begin())) break;
    s += q_by_length[len][it - bucket.begin()];
  }
  return s;
}

namespace {

void check_scale(const std::vector<Rat>& scale, int rank) {
  if (static_cast<int>(scale.size()) < rank + 1)
    fail("BadParams", "scale sequence shorter than rank+1");
  for (const Rat& c : scale)
    if (!(c > 0)) fail("BadParams", "scale sequence must be positive");
}

WeightedLanguage assemble(structures::GreedoidLanguage lang, std::vector<Rat> scale,
                          const std::function<Rat(const Word&, const std::vector<Rat>&)>& q) {
  WeightedLanguage w;
  check_scale(scale, lang.rank());
  w.scale = std::move(scale);
  w.q_by_length.resize(lang.by_length.size());
  w.strictly_positive = true;
  for (size_t len = 0; len < lang.by_length.size(); ++len) {
    w.q_by_length[len].reserve(lang.by_length[len].size());
    for (const Word& word : lang.by_length[len]) {
      Rat v = q(word, w.scale);
      if (v < 0) fail("BadParams", "negative word weight");
      if (v.is_zero()) w.strictly_positive = false;
      w.q_by_length[len].push_back(std::move(v));
    }
  }
  w.lang = std::move(lang);
  return w;
}

}  // namespace

WeightedLanguage product_weight(structures::GreedoidLanguage lang,
                                const std::vector<Rat>& elem_weights,
                                std::vector<Rat> scale) {
  if (static_cast<int>(elem_weights.size()) != lang.n_letters())
    fail("WeightDomainMismatch", "element weight count != alphabet size");
  for (const Rat& x : elem_weights)
    if (!(x > 0)) fail("NonPositiveWeight", "element weights must be positive");
  return assemble(std::move(lang), std::move(scale),
                  [&](const Word& word, const std::vector<Rat>& c) {
                    Rat v = c[word.size()];
                    for (int x : word) v *= elem_weights[x];
                    return v;
                  });
}

WeightedLanguage polymatroid_weight(structures::GreedoidLanguage lift,
                                    const structures::PolymatroidAlphabet& pa,
                                    const std::vector<Rat>& elem_weights, const Rat& t,
                                    std::vector<Rat> scale) {
  if (static_cast<int>(elem_weights.size()) != pa.n)
    fail("WeightDomainMismatch", "element weight count != polymatroid ground size");
  if (t < 0 || t > 1) fail("BadParams", "t must lie in [0,1]");
  return assemble(std::move(lift), std::move(scale),
                  [&](const Word& word, const std::vector<Rat>& c) {
    const std::vector<int> a = pa.count_vector(word);
    Rat v = c[word.size()];
    const long long pi = structures::pi_exponent(a);
    if (t.is_zero()) {
      if (pi > 0) return Rat(0);
    } else {
      v *= rat_pow(t, static_cast<unsigned>(pi));
    }
    for (int i = 0; i < pa.n; ++i) v *= rat_pow(elem_weights[i], a[i]);
    return v;
  });
}

WeightedLanguage morphism_weight(structures::GreedoidLanguage lift,
                                 const structures::MatroidMorphism& mm,
                                 const std::vector<Rat>& elem_weights,
                                 std::vector<Rat> scale) {
  if (static_cast<int>(elem_weights.size()) != lift.n_letters())
    fail("WeightDomainMismatch", "element weight count != alphabet size");
  const std::vector<int> gtab = mm.target.rank_table();
  const int rk_n = mm.target.rank();
  return assemble(std::move(lift), std::move(scale),
                  [&](const Word& word, const std::vector<Rat>& c) {
    Mask s = 0;
    for (int x : word) s |= 1u << x;
    if (gtab[mm.image(s)] != rk_n) return Rat(0);
    Rat v = c[word.size()];
    for (int x : word) v *= elem_weights[x];
    return v;
  });
}

std::vector<Rat> uniform_scale(int rank) { return std::vector<Rat>(rank + 1, Rat(1)); }

std::vector<Rat> refined_scale(int rank, int k, int p_km1) {
  std::vector<Rat> c(rank + 1, Rat(1));
  if (p_km1 < 2) fail("BadParams", "refined scale needs p(k-1) >= 2");
  if (k + 1 <= rank) c[k + 1] = Rat(1) + Rat(BigInt(1), BigInt(p_km1 - 1));
  return c;
}

std::vector<Rat> refined_scale_polymatroid(int rank, int k, int p_km1, const Rat& t) {
  std::vector<Rat> c(rank + 1, Rat(1));
  const Rat den = Rat(p_km1 - 1) + t;
  if (!(den > 0)) fail("BadParams", "refined scale needs p(k-1) - 1 + t > 0");
  if (k + 1 <= rank) c[k + 1] = Rat(1) + (Rat(1) - t) / den;
  return c;
}

Rat b_alpha(const WeightedLanguage& w, const Word& alpha, const std::vector<int>& cls) {
  const auto classes = w.lang.par(alpha);
  if (std::find(classes.begin(), classes.end(), cls) == classes.end())
    fail("NotAParallelClass", "class is not a parallel class of the word");
  if (cls.size() >= 2) return Rat(0);
  const int x = cls[0];
  Word ax = alpha;
  ax.push_back(x);
  const Rat oma = w.omega(alpha);
  const Rat omax = w.omega(ax);
  Rat sum(0);
  for (int y : w.lang.des(alpha, x)) {
    Word axy = ax;
    axy.push_back(y);
    sum += oma * w.omega(axy);
  }
  if (sum.is_zero()) return sum;
  if (omax.is_zero()) fail("WeightDomainMismatch", "b_alpha with omega(alpha x) = 0");
  return sum / (omax * omax);
}

AdmissibilityReport check_k_admissible(const WeightedLanguage& w, int k, bool fast) {
  const GreedoidLanguage& g = w.lang;
  if (k < 0 || k >= g.rank()) fail("RankOutOfRange", "need 0 <= k < rk");
  AdmissibilityReport rep;
  rep.weak_local = g.flags.is_weak_local();

  auto blame = [&](PropertyCheck& c, const std::string& msg) {
    if (c.pass) {
      c.pass = false;
      c.witness = msg;
    }
  };

  for (int len = 0; len < k; ++len) {
    for (const Word& alpha : g.of_length(len)) {
      const std::vector<int> cnt = g.cnt(alpha);
      const auto classes = g.par(alpha);
      const Rat om_alpha = w.omega(alpha);

      // (ContInv): q(alpha x y beta) = q(alpha y x beta); restricted to
      // positive-weight words when q has zeros (morphism case). Ordered
      // pairs so that one-sided membership is caught from the other side.
      for (size_t xi = 0; xi < cnt.size() && rep.cont_inv.pass; ++xi) {
        for (size_t yi = 0; yi < cnt.size(); ++yi) {
          if (yi == xi) continue;
          Word axy = alpha;
          axy.push_back(cnt[xi]);
          axy.push_back(cnt[yi]);
          if (!g.contains(axy)) continue;
          const int rest = g.rank() - static_cast<int>(axy.size());
          for (int m = 0; m <= rest && rep.cont_inv.pass; ++m) {
            for (const Word& beta : g.cnt_k(axy, m)) {
              Word word1 = axy;
              word1.insert(word1.end(), beta.begin(), beta.end());
              Word word2 = word1;
              std::swap(word2[len], word2[len + 1]);
              const Rat q1 = w.q_of(word1), q2 = w.q_of(word2);
              if (!w.strictly_positive && (q1.is_zero() || q2.is_zero())) continue;
              if (q1 != q2) {
                blame(rep.cont_inv, "q(" + g.word_str(word1) + ") != q(" +
                                        g.word_str(word2) + ")");
                break;
              }
            }
          }
        }
      }

      // (PAMon), directly by summation unless the weak-local shortcut is
      // both allowed and available
      if (!(fast && rep.weak_local)) {
        for (size_t xi = 0; xi < cnt.size() && rep.pa_mon.pass; ++xi) {
          for (size_t yi = 0; yi < cnt.size() && rep.pa_mon.pass; ++yi) {
            if (xi == yi) continue;
            const int x = cnt[xi], y = cnt[yi];
            const std::vector<int> pas = g.passive(alpha, x, y);
            const std::vector<int> act = g.active(alpha, x, y);
            if (pas.empty() && act.empty()) continue;
            const int base = len + 3;
            for (int m = 0; m <= g.rank() - base; ++m) {
              Rat lhs(0), rhs(0);
              for (int z : pas) {
                Word word = alpha;
                word.push_back(x);
                word.push_back(y);
                word.push_back(z);
                lhs += w.local_series(word, m);
              }
              for (int z : act) {
                Word word = alpha;
                word.push_back(x);
                word.push_back(y);
                word.push_back(z);
                rhs += w.local_series(word, m);
              }
              if (lhs < rhs) {
                blame(rep.pa_mon, "passive sum " + rat_str(lhs) + " < active sum " +
                                      rat_str(rhs) + " after " + g.word_str(alpha));
                break;
              }
            }
          }
        }
      }

      // (LogMod)
      for (size_t xi = 0; xi < cnt.size() && rep.log_mod.pass; ++xi) {
        for (size_t yi = xi + 1; yi < cnt.size(); ++yi) {
          Word axy = alpha;
          axy.push_back(cnt[xi]);
          axy.push_back(cnt[yi]);
          if (!g.contains(axy)) continue;
          Word ax = alpha;
          ax.push_back(cnt[xi]);
          Word ay = alpha;
          ay.push_back(cnt[yi]);
          if (!w.strictly_positive) {
            if (w.q_of(alpha).is_zero() || w.q_of(ax).is_zero() ||
                w.q_of(ay).is_zero() || w.q_of(axy).is_zero())
              continue;
          }
          if (w.omega(ax) * w.omega(ay) != om_alpha * w.omega(axy)) {
            blame(rep.log_mod, "log-modularity fails at " + g.word_str(axy));
            break;
          }
        }
      }

      // (FewDes)
      for (const auto& cls : classes) {
        if (cls.size() < 2) continue;
        for (int x : cls)
          if (!g.des(alpha, x).empty()) {
            blame(rep.few_des, "descendants inside a fat class at " +
                                   g.word_str(alpha) + " letter " + g.alphabet[x]);
            break;
          }
      }

      // (SynMon)
      for (int x : cnt) {
        Word ax = alpha;
        ax.push_back(x);
        const Rat omax = w.omega(ax);
        Rat sum(0);
        for (int y : g.des(alpha, x)) {
          Word axy = ax;
          axy.push_back(y);
          sum += om_alpha * w.omega(axy);
        }
        if (omax * omax < sum) {
          blame(rep.syn_mon, "syntactic monotonicity fails at " + g.word_str(ax));
          break;
        }
      }

      // (ScaleMon): terms with b = 1 follow the limit convention
      {
        const Rat factor =
            Rat(1) - scale_ratio(w, len);
        bool has_b_one = false;
        Rat sum(0);
        for (const auto& cls : classes) {
          const Rat b = b_alpha_unchecked(w, alpha, cls);
          if (b == 1)
            has_b_one = true;
          else
            sum += Rat(1) / (Rat(1) - b);
        }
        bool ok;
        if (factor.is_zero()) {
          ok = true;
        } else if (factor > 0) {
          ok = !has_b_one && factor * sum <= 1;
        } else {
          ok = has_b_one ? true : factor * sum <= 1;
        }
        if (!ok)
          blame(rep.scale_mon, "scale monotonicity fails at " + g.word_str(alpha));
      }
    }
  }
  return rep;
}

CountSeries count_I(const structures::Matroid& m) {
  CountSeries s;
  s.kind = "I";
  s.values.assign(m.rank() + 1, Rat(0));
  for (Mask mask : m.independents) s.values[__builtin_popcount(mask)] += 1;
  return s;
}

CountSeries count_I_weighted(const structures::Matroid& m,
                             const std::vector<Rat>& omega) {
  if (static_cast<int>(omega.size()) != m.n())
    fail("WeightDomainMismatch", "weight count != ground size");
  CountSeries s;
  s.kind = "I_w";
  s.values.assign(m.rank() + 1, Rat(0));
  for (Mask mask : m.independents) {
    Rat v(1);
    for (int i = 0; i < m.n(); ++i)
      if (mask >> i & 1u) v *= omega[i];
    s.values[__builtin_popcount(mask)] += v;
  }
  return s;
}

CountSeries count_J(const structures::DiscretePolymatroid& d,
                    const std::vector<Rat>& omega, const Rat& t) {
  if (static_cast<int>(omega.size()) != d.n)
    fail("WeightDomainMismatch", "weight count != polymatroid ground size");
  if (t < 0 || t > 1) fail("BadParams", "t must lie in [0,1]");
  CountSeries s;
  s.kind = "J_wt";
  s.values.assign(d.rank() + 1, Rat(0));
  for (const auto& a : d.independents) {
    const int sz = std::accumulate(a.begin(), a.end(), 0);
    Rat v(1);
    const long long pi = structures::pi_exponent(a);
    if (t.is_zero()) {
      if (pi > 0) continue;
    } else {
      v *= rat_pow(t, static_cast<unsigned>(pi));
    }
    BigInt afact = 1;
    for (int i = 0; i < d.n; ++i) {
      v *= rat_pow(omega[i], a[i]);
      afact *= factorial(a[i]);
    }
    s.values[sz] += v / Rat(afact);
  }
  return s;
}

CountSeries count_L(const WeightedLanguage& w) {
  CountSeries s;
  s.kind = "L_q";
  s.values.assign(w.lang.rank() + 1, Rat(0));
  for (int k = 0; k <= w.lang.rank(); ++k) s.values[k] = w.series(k);
  return s;
}

Rat extension_weight(const std::vector<int>& word, const std::vector<Rat>& omega,
                     int z) {
  Rat v(1);
  for (int x : word) {
    if (x == z) break;
    v *= omega[x];
  }
  return v;
}

CountSeries count_N(const poset::Poset& p, const std::vector<Rat>& omega, int z) {
  if (static_cast<int>(omega.size()) != p.n())
    fail("WeightDomainMismatch", "weight count != poset size");
  for (int x = 0; x < p.n(); ++x)
    for (int y = 0; y < p.n(); ++y)
      if (p.lt(x, y) && omega[x] < omega[y])
        fail("WeightDomainMismatch", "weights are not order-reversing");
  CountSeries s;
  s.kind = "N_w";
  s.values.assign(p.n() + 1, Rat(0));
  for (const auto& word : poset::linear_extensions(p)) {
    const int pos =
        static_cast<int>(std::find(word.begin(), word.end(), z) - word.begin()) + 1;
    s.values[pos] += extension_weight(word, omega, z);
  }
  return s;
}

CountSeries count_B(const structures::MatroidMorphism& mm,
                    const std::vector<Rat>& omega) {
  if (static_cast<int>(omega.size()) != mm.source.n())
    fail("WeightDomainMismatch", "weight count != source ground size");
  CountSeries s;
  s.kind = "B_w";
  s.values.assign(mm.source.rank() + 1, Rat(0));
  for (int k = 0; k <= mm.source.rank(); ++k)
    for (Mask mask : structures::morphism_bases(mm, k)) {
      Rat v(1);
      for (int i = 0; i < mm.source.n(); ++i)
        if (mask >> i & 1u) v *= omega[i];
      s.values[k] += v;
    }
  return s;
}

}  // namespace caw::counting
