#pragma once

#include <optional>
#include <string>
#include <vector>

#include "caw/counting.hpp"
#include "caw/poset.hpp"
#include "caw/rational.hpp"
#include "caw/structures.hpp"

namespace caw::ineq {

struct Condition {
  std::string name;
  bool pass = true;
  bool vacuous = false;
  std::string witness;
};

/// One log-concavity verdict: lhs = middle term squared, rhs includes the
/// multiplicative factor. Equality means exact rational equality. When the
/// governing theorem has equality conditions, `consistent` asserts that
/// value-equality and condition-satisfaction agree on this instance.
struct IneqReport {
  std::string name;
  int k = 0;
  Rat lhs;
  Rat rhs;
  Rat factor = Rat(1);
  bool applicable = true;
  bool holds = false;
  bool equality = false;
  std::vector<Condition> conditions;
  std::optional<bool> conditions_pass;
  bool consistent = true;
  std::string note;
};

struct MatroidSuite {
  IneqReport plain;      // I(k)^2 >= I(k-1) I(k+1)
  IneqReport one_sided;  // factor (1+1/k)
  IneqReport ultra;      // factor (1+1/k)(1+1/(n-k)), equality: girth & uniform
  IneqReport refined;    // factor (1+1/k)(1+1/(p-1)), equality: ME1 & ME2
  int p_km1 = 0;
  int girth = 0;
  bool uniform_weights = true;
};

MatroidSuite matroid_suite(const structures::Matroid& m, const std::vector<Rat>& omega,
                           int k);

struct GraphicalSpecial {
  IneqReport cycle_ratio;          // k = N-2 against (3/2)(1+1/(N-2))
  bool is_cycle = false;
  std::vector<IneqReport> strict;  // 1 < k < N-2 with the clique bound, all strict
};

GraphicalSpecial graphical_special(const structures::Graph& g);

/// Finite-field bound for spanning vector sets: denominator q^{m-k+1} - 2.
std::vector<IneqReport> gf_field_bound(int q, const std::vector<std::vector<int>>& vectors);

struct PolymatroidSuite {
  IneqReport refined;  // factor (1+1/k)(1 + (1-t)/(p-1+t))
  int p_km1 = 0;
  int polygirth = 0;
};

PolymatroidSuite polymatroid_suite(const structures::DiscretePolymatroid& d,
                                   const std::vector<Rat>& omega, const Rat& t, int k);

struct AntimatroidSuite {
  IneqReport main;  // L(k)^2 >= L(k-1) L(k+1), equality: AE1-AE3
  struct TotalEquality {
    bool equal_everywhere = false;  // equality for all 1 <= k < height
    bool recognizer = false;        // P + bottom is a tree poset, c*omega canonical
    bool consistent = true;
  } total;
};

/// Throws CMViolated unless omega satisfies cover monotonicity.
AntimatroidSuite antimatroid_suite(const poset::Poset& p, const std::vector<Rat>& omega,
                                   int k);

struct GreedoidSuite {
  IneqReport main;    // GE-a; conditions carry GE-b / GE-c1 / GE-c2
  bool ge_b = false;  // each of the three characterizations, independently
  bool ge_c = false;
  bool triple_consistent = false;  // GE-a == GE-b == GE-c
};

GreedoidSuite greedoid_suite(const counting::WeightedLanguage& w, int k,
                             bool fast = false);

struct MorphismSuite {
  IneqReport eh;       // (1+1/k)(1+1/(n-k)); girth + uniform + full-rank images
  IneqReport refined;  // (1+1/k)(1+1/(p-1)); MME1-MME3
  int p_km1 = 0;
};

MorphismSuite morphism_suite(const structures::MatroidMorphism& mm,
                             const std::vector<Rat>& omega, int k);

struct StanleySuite {
  IneqReport main;  // N(k)^2 >= N(k-1) N(k+1)
  bool item_a = false, item_b = false, item_c = false, item_d = false, item_e = false;
  bool items_agree = false;
  bool lemma_equivalence = false;  // the (1)<=>(2) combinatorial lemma
  bool coh_vacuous = false;
  Rat s;  // N(k+1)/N(k) when defined
};

StanleySuite stanley_suite(const poset::Poset& p, const std::vector<Rat>& omega, int z,
                           int k);

enum class BeltMode { tropical, submodular };

struct BeltSuite {
  IneqReport main;
  bool submod_ok = true;
  std::string submod_witness;
};

/// Tropical mode derives ideal weights as max omega over the ideal; the
/// submodular mode takes explicit lower-ideal weights indexed by mask.
BeltSuite stanley_belt_suite(const poset::Poset& p, int z, int k, BeltMode mode,
                             const std::vector<Rat>& omega,
                             const std::vector<Rat>* ideal_weights_by_mask = nullptr);

}  // namespace caw::ineq
