#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "caw/error.hpp"
#include "caw/rational.hpp"

namespace caw::poset {

/// Finite poset with opaque string elements. The strict order is stored
/// transitively closed; covers are derived. Weights, when present, are
/// strictly positive.
struct Poset {
  std::vector<std::string> elements;
  std::vector<std::vector<char>> less;  // less[i][j] == 1 iff e_i < e_j
  std::optional<std::vector<Rat>> weights;

  int n() const { return static_cast<int>(elements.size()); }
  int index_of(const std::string& name) const;
  bool lt(int i, int j) const { return less[i][j] != 0; }
  bool comparable(int i, int j) const { return i != j && (lt(i, j) || lt(j, i)); }
  bool incomparable(int i, int j) const { return i != j && !comparable(i, j); }

  /// Cov(x): elements covering x.
  std::vector<int> covers_of(int x) const;
  /// inc(x): elements incomparable to x.
  std::vector<int> incomparables(int x) const;
  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;
  /// Maximum number of elements in a chain.
  int height() const;
  int width() const;

  /// Induced subposet on the given element indices (in the given order).
  Poset restricted(const std::vector<int>& keep) const;
};

Poset build_poset(std::vector<std::string> elements,
                  const std::vector<std::pair<std::string, std::string>>& relations,
                  std::optional<std::vector<Rat>> weights = std::nullopt);

/// All linear extensions as index words, lexicographic in element order.
std::vector<std::vector<int>> linear_extensions(const Poset& p, int cap = 12);

/// (f, g): sizes of the strict lower and upper ideals of x.
std::pair<int, int> ideal_sizes(const Poset& p, int x);

struct WeightPredicates {
  bool order_reversing = false;
  bool cover_monotone = false;
  bool cover_monotone_equality = false;  // equality at every non-maximal x
  std::string witness;
};

WeightPredicates weight_predicates(const Poset& p);

/// omega(x) = number of maximal chains starting at x; satisfies (CM) with
/// equality at every non-maximal element.
std::vector<Rat> canonical_chain_weights(const Poset& p);

Poset chain(int n);
Poset antichain(int n);
/// i < j in the poset iff i <= j and sigma(i) <= sigma(j) (sigma one-line,
/// 1-based values).
Poset permutation_poset(const std::vector<int>& sigma);
/// Cells of lambda/mu ordered toward the top-left corner: (r,c) < (r',c')
/// iff r >= r', c >= c' (so extensions fill the shape outward-in and the
/// canonical weights are the binomials of the paper's running example).
Poset skew_shape_poset(const std::vector<int>& lambda, const std::vector<int>& mu);
/// parent[i] is the parent of element i, -1 for the root; root is minimum.
Poset tree_poset(const std::vector<std::string>& names, const std::vector<int>& parent);
Poset grid_poset(int a, int b);

/// Belt at z: the elements incomparable to z form the empty set or a chain.
bool has_belt(const Poset& p, int z);

/// Swaps positions i,i+1 (1-based i) iff incomparable; identity otherwise.
std::vector<int> adjacent_transposition(const Poset& p, const std::vector<int>& word, int i);

/// True iff P with a fresh bottom element has a Hasse diagram that is a
/// rooted tree with all maximal chains of equal length.
bool is_tree_poset_with_bottom(const Poset& p);

}  // namespace caw::poset
