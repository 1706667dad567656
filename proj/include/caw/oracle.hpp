#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "caw/atlas.hpp"
#include "caw/counting.hpp"
#include "caw/linalg.hpp"
#include "caw/poset.hpp"
#include "caw/rational.hpp"
#include "caw/structures.hpp"

namespace caw::oracle {

/// Deterministic generator independent of the standard library's
/// distribution implementations (reports must be byte-identical).
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed ^ 0x9e3779b97f4a7c15ull) {}
  uint64_t next() {
    // splitmix64
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  uint64_t below(uint64_t n) { return next() % n; }
};

// Brute-force recomputation, deliberately naive: full subset, box, and
// permutation enumeration; membership tests only on the instance data.

std::vector<Rat> brute_I_weighted(const structures::Matroid& m,
                                  const std::vector<Rat>& omega);
std::vector<Rat> brute_J(const structures::DiscretePolymatroid& d,
                         const std::vector<Rat>& omega, const Rat& t);
std::vector<Rat> brute_N(const poset::Poset& p, const std::vector<Rat>& omega, int z);
std::vector<Rat> brute_B(const structures::MatroidMorphism& mm,
                         const std::vector<Rat>& omega);
/// Word series of a weighted language by alphabet DFS with prefix pruning.
std::vector<Rat> brute_L(const counting::WeightedLanguage& w);
int brute_continuation_number_matroid(const structures::Matroid& m, int k);
int brute_continuation_number_polymatroid(const structures::DiscretePolymatroid& d,
                                          int k);
int brute_girth(const structures::Matroid& m);
int brute_polygirth(const structures::DiscretePolymatroid& d);

/// A(alpha, m) recomputed entrywise by scanning stored words.
linalg::LabeledSymMatrix brute_greedoid_matrix(const counting::WeightedLanguage& w,
                                               const structures::Word& alpha, int m);
/// C(alpha, beta, k) recomputed from all n! permutations.
linalg::LabeledSymMatrix brute_stanley_matrix(const poset::Poset& p,
                                              const std::vector<Rat>& omega, int z,
                                              const structures::Word& alpha,
                                              const structures::Word& beta, int k);

// ---------------------------------------------------------------------------
// Corpus

struct Instance {
  enum class Kind { matroid, polymatroid, stanley_poset, antimatroid_poset, greedoid, morphism };
  Kind kind;
  std::string name;

  std::optional<structures::Matroid> matroid;
  std::optional<structures::DiscretePolymatroid> poly;
  std::optional<poset::Poset> pos;
  std::optional<structures::MatroidMorphism> morphism;
  std::optional<counting::WeightedLanguage> wlang;
  std::vector<Rat> weights;  // element weights where applicable
  Rat t = Rat(1);
  int z = -1;
  bool atlas_check = false;      // include in the slice property suite
  bool negative_control = false;
};

struct Corpus {
  uint64_t seed = 0;
  std::vector<Instance> instances;
};

/// Seeded fixtures plus the random poset family; `n_random_posets` of them
/// are poset instances on <= 7 elements with random order-reversing weights.
Corpus default_corpus(uint64_t seed, int n_random_posets = 210);

poset::Poset random_poset(Rng& rng, int n);
std::vector<Rat> random_order_reversing_weights(Rng& rng, const poset::Poset& p);
/// Cover-monotone weights: canonical chain counts plus random slack.
std::vector<Rat> random_cm_weights(Rng& rng, const poset::Poset& p);
/// All connected labeled graphs on exactly nv vertices.
std::vector<structures::Graph> all_connected_graphs(int nv);

struct CrosscheckReport {
  int instances = 0;
  int comparisons = 0;
  int mismatches = 0;
  std::vector<std::string> details;
};

/// Exact agreement of counting/atlas outputs with the brute recomputation
/// on every corpus instance.
CrosscheckReport crosscheck(const Corpus& corpus);

}  // namespace caw::oracle
