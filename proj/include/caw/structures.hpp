#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "caw/error.hpp"
#include "caw/poset.hpp"
#include "caw/rational.hpp"

namespace caw::structures {

using Mask = uint32_t;
using Word = std::vector<int>;  // letter indices into an alphabet

// ---------------------------------------------------------------------------
// Matroids

/// Matroid with an explicit independent-set family (ground sets are capped
/// at desk scale, so enumeration beats oracles).
struct Matroid {
  std::vector<std::string> ground;
  std::vector<Mask> independents;  // sorted ascending

  int n() const { return static_cast<int>(ground.size()); }
  bool independent(Mask s) const;
  int rank() const;
  long long count(int k) const;
  std::vector<Mask> of_size(int k) const;
  int index_of(const std::string& name) const;
  /// rank of every subset, indexed by mask (2^n entries).
  std::vector<int> rank_table() const;
};

struct MatroidAxiomReport {
  bool nonempty = true;
  bool hereditary = true;
  bool exchange = true;
  std::string hereditary_witness;
  std::string exchange_witness;
  bool ok() const { return nonempty && hereditary && exchange; }
};

MatroidAxiomReport check_matroid_axioms(const std::vector<std::string>& ground,
                                        const std::vector<Mask>& family);

struct Graph {
  std::vector<std::string> vertices;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> edge_names;
  bool connected() const;
};

Matroid make_free(int n);
Matroid make_uniform(int n, int r);
Matroid make_graphic(const Graph& g);
/// q must be prime; vectors live in F_q^m.
Matroid make_vector_gf(int q, const std::vector<std::vector<int>>& vectors);
/// Steiner system S(t,m,n): bases are the (t+1)-subsets not inside a block.
Matroid make_steiner(int t, int m, int n, const std::vector<std::vector<int>>& blocks);
Matroid make_explicit(std::vector<std::string> ground, std::vector<Mask> family);

/// Continuations of an independent set.
std::vector<int> matroid_cnt(const Matroid& m, Mask s);
/// Parallel classes of ~_S on Cnt(S); each class sorted, classes sorted.
std::vector<std::vector<int>> matroid_par(const Matroid& m, Mask s);
/// p(k) = max |Par(S)| over S in I_k.
int continuation_number(const Matroid& m, int k);
/// min{k : I(k) < C(n,k)}; n+1 when the matroid is free of circuits.
int girth(const Matroid& m);

// ---------------------------------------------------------------------------
// Discrete polymatroids

struct DiscretePolymatroid {
  int n = 0;
  std::vector<std::vector<int>> independents;  // sorted lexicographically

  bool contains(const std::vector<int>& a) const;
  int rank() const;
  long long count(int k) const;
  std::vector<std::vector<int>> of_size(int k) const;
  bool nondegenerate() const;
};

struct PolymatroidAxiomReport {
  bool nonempty = true;
  bool hereditary = true;
  bool exchange = true;
  std::string witness;
  bool ok() const { return nonempty && hereditary && exchange; }
};

PolymatroidAxiomReport check_polymatroid_axioms(int n,
                                                const std::vector<std::vector<int>>& family);
DiscretePolymatroid make_polymatroid(int n, std::vector<std::vector<int>> family);
/// All a in N^n with |a| <= r.
DiscretePolymatroid make_full_polymatroid(int n, int r);
/// A matroid viewed as a discrete polymatroid on 0/1 vectors.
DiscretePolymatroid polymatroid_of_matroid(const Matroid& m);

std::vector<int> polymatroid_cnt(const DiscretePolymatroid& d, const std::vector<int>& a);
std::vector<std::vector<int>> polymatroid_par(const DiscretePolymatroid& d,
                                              const std::vector<int>& a);
int continuation_number(const DiscretePolymatroid& d, int k);
/// min{k : J(k) < #multisets of size k}. Degenerate when some e_i is absent.
int polygirth(const DiscretePolymatroid& d);
/// pi(a) = sum_i binom(a_i + 1, 2).
long long pi_exponent(const std::vector<int>& a);

// ---------------------------------------------------------------------------
// Greedoid languages

struct GreedoidFlags {
  bool contains_empty = true;
  bool normal = true;
  bool hereditary = true;
  bool exchange = true;
  bool interval = true;
  bool weak_local = true;
  bool antimatroid_exchange = true;
  bool nondegenerate_letters = true;  // every letter occurs in some word
  std::string witness;                // first failure found, if any

  bool is_greedoid() const {
    return contains_empty && normal && hereditary && exchange;
  }
  bool is_interval() const { return is_greedoid() && interval; }
  bool is_weak_local() const { return is_greedoid() && weak_local; }
  bool is_antimatroid() const {
    return is_greedoid() && nondegenerate_letters && antimatroid_exchange;
  }
};

/// Finite set of simple words, prefix-closed, with recomputed axiom flags.
struct GreedoidLanguage {
  std::vector<std::string> alphabet;
  std::vector<std::vector<Word>> by_length;  // each bucket sorted
  GreedoidFlags flags;

  int n_letters() const { return static_cast<int>(alphabet.size()); }
  int rank() const { return static_cast<int>(by_length.size()) - 1; }
  bool contains(const Word& w) const;
  long long count(int k) const;
  const std::vector<Word>& of_length(int k) const;
  long long total_words() const;

  std::vector<int> cnt(const Word& alpha) const;
  /// Continuation suffixes beta with |beta| = k and alpha beta in L.
  std::vector<Word> cnt_k(const Word& alpha, int k) const;
  /// Parallel classes of ~_alpha; *equiv reports whether the relation is an
  /// equivalence on this instance.
  std::vector<std::vector<int>> par(const Word& alpha, bool* equiv = nullptr) const;
  std::vector<int> des(const Word& alpha, int x) const;
  std::vector<int> passive(const Word& alpha, int x, int y) const;
  std::vector<int> active(const Word& alpha, int x, int y) const;

  std::string word_str(const Word& w) const;
};

GreedoidFlags check_greedoid_axioms(int n_letters, const std::vector<Word>& words);

/// Validates prefix-closure (NotPrefixClosed otherwise) and recomputes flags.
GreedoidLanguage make_language(std::vector<std::string> alphabet,
                               std::vector<Word> words);

GreedoidLanguage lift_matroid(const Matroid& m);
/// Alphabet x_{i,1} < x_{i,2} < ... grouped by i; simple well-ordered words
/// whose count vector lies in J.
GreedoidLanguage lift_polymatroid(const DiscretePolymatroid& d);
GreedoidLanguage lift_poset_antimatroid(const poset::Poset& p);

struct Digraph {
  std::vector<std::string> vertices;
  int root = 0;
  std::vector<std::pair<int, int>> edges;  // (u, v): directed u -> v
  std::vector<std::string> edge_names;
};

/// Words of edges whose every prefix is an arborescence toward the root.
GreedoidLanguage lift_branching(const Digraph& g);

int continuation_number(const GreedoidLanguage& g, int k);

/// For a polymatroid lift, maps letter index back to (i, j) (1-based j).
struct PolymatroidAlphabet {
  std::vector<std::pair<int, int>> letter_coord;
  int n = 0;
  std::vector<int> count_vector(const Word& w) const;
};
PolymatroidAlphabet polymatroid_alphabet(const DiscretePolymatroid& d);

// ---------------------------------------------------------------------------
// Morphisms of matroids

struct MatroidMorphism {
  Matroid source;
  Matroid target;
  std::vector<int> phi;  // source ground index -> target ground index

  Mask image(Mask s) const;
};

struct MorphismReport {
  bool valid = true;
  std::string witness;  // failing (S, T) pair
};

/// Exhaustive check of g(Phi(T)) - g(Phi(S)) <= f(T) - f(S) for S subset T.
MorphismReport validate_morphism(const MatroidMorphism& mm);
/// B_k = {S in I_k : g(Phi(S)) = rk(N)}.
std::vector<Mask> morphism_bases(const MatroidMorphism& mm, int k);
struct MorphismExchangeReport {
  bool ok = true;
  std::string witness;
};
/// Basis exchange between every pair of same-size bases (Prop. verified).
MorphismExchangeReport morphism_exchange_witnesses(const MatroidMorphism& mm);
/// p(k) = max |Par(S)| over S in B_k (parallel classes taken in the source).
int morphism_continuation_number(const MatroidMorphism& mm, int k);

std::string subset_str(const std::vector<std::string>& ground, Mask s);

}  // namespace caw::structures
