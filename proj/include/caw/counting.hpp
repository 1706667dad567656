#pragma once

#include <string>
#include <vector>

#include "caw/poset.hpp"
#include "caw/rational.hpp"
#include "caw/structures.hpp"

namespace caw::counting {

using structures::Word;

/// Greedoid language together with a word weight q >= 0 and a positive
/// scale sequence c_0..c_m; the scaled weight is omega = q / c_{|word|}.
struct WeightedLanguage {
  structures::GreedoidLanguage lang;
  std::vector<std::vector<Rat>> q_by_length;  // aligned with lang.by_length
  std::vector<Rat> scale;                     // c_0..c_rank
  bool strictly_positive = true;

  Rat q_of(const Word& w) const;  // 0 outside the language
  Rat omega(const Word& w) const;
  /// L_q(k): total weight of the words of length k.
  Rat series(int k) const;
  /// L_{q,alpha}(k): weight of length-k continuations of alpha.
  Rat local_series(const Word& alpha, int k) const;
};

/// q(x_1..x_l) = c_l * prod omega(x_i).
WeightedLanguage product_weight(structures::GreedoidLanguage lang,
                                const std::vector<Rat>& elem_weights,
                                std::vector<Rat> scale);

/// Polymatroid lift: q(alpha) = c_l * t^{pi(a_alpha)} * omega(a_alpha).
WeightedLanguage polymatroid_weight(structures::GreedoidLanguage lift,
                                    const structures::PolymatroidAlphabet& pa,
                                    const std::vector<Rat>& elem_weights, const Rat& t,
                                    std::vector<Rat> scale);

/// Morphism weighting: the product weight zeroed outside Phi-bases.
WeightedLanguage morphism_weight(structures::GreedoidLanguage lift,
                                 const structures::MatroidMorphism& mm,
                                 const std::vector<Rat>& elem_weights,
                                 std::vector<Rat> scale);

std::vector<Rat> uniform_scale(int rank);
/// c == 1 except c_{k+1} = 1 + 1/(p-1); p = p(k-1) of the structure.
std::vector<Rat> refined_scale(int rank, int k, int p_km1);
/// c == 1 except c_{k+1} = 1 + (1-t)/(p-1+t).
std::vector<Rat> refined_scale_polymatroid(int rank, int k, int p_km1, const Rat& t);

/// b_alpha(C) per the descendant-ratio definition; 0 when |C| >= 2.
Rat b_alpha(const WeightedLanguage& w, const Word& alpha, const std::vector<int>& cls);

struct PropertyCheck {
  bool pass = true;
  std::string witness;
};

struct AdmissibilityReport {
  PropertyCheck cont_inv;   // (ContInv)
  PropertyCheck pa_mon;     // (PAMon)
  PropertyCheck log_mod;    // (LogMod)
  PropertyCheck few_des;    // (FewDes)
  PropertyCheck syn_mon;    // (SynMon)
  PropertyCheck scale_mon;  // (ScaleMon)
  bool weak_local = false;  // language-level shortcut actually used?
  bool admissible() const {
    return cont_inv.pass && pa_mon.pass && log_mod.pass && few_des.pass &&
           syn_mon.pass && scale_mon.pass;
  }
};

/// Checks the six properties for every word of length < k. When `fast` and
/// the language is weak-local, (PAMon) is accepted via the shortcut instead
/// of direct summation.
AdmissibilityReport check_k_admissible(const WeightedLanguage& w, int k,
                                       bool fast = false);

struct CountSeries {
  std::string kind;
  std::vector<Rat> values;
};

CountSeries count_I(const structures::Matroid& m);
CountSeries count_I_weighted(const structures::Matroid& m, const std::vector<Rat>& omega);
CountSeries count_J(const structures::DiscretePolymatroid& d,
                    const std::vector<Rat>& omega, const Rat& t);
CountSeries count_L(const WeightedLanguage& w);
/// N_omega(k) for k = 1..n (index 0 unused, kept 0); requires z and an
/// order-reversing omega.
CountSeries count_N(const poset::Poset& p, const std::vector<Rat>& omega, int z);
CountSeries count_B(const structures::MatroidMorphism& mm, const std::vector<Rat>& omega);

/// Weight of one linear extension: product of omega over elements before z.
Rat extension_weight(const std::vector<int>& word, const std::vector<Rat>& omega, int z);

}  // namespace caw::counting
