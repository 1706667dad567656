#pragma once

#include <string>
#include <vector>

#include "caw/error.hpp"
#include "caw/rational.hpp"

namespace caw::linalg {

using Vec = std::vector<Rat>;

/// Dense symmetric matrix whose rows/columns are indexed by a finite ordered
/// label set (letters plus the sink symbol "*", or the doubled alphabet).
/// Absent entries are zero; mutation keeps the matrix symmetric.
class LabeledSymMatrix {
 public:
  LabeledSymMatrix() = default;
  explicit LabeledSymMatrix(std::vector<std::string> labels)
      : labels_(std::move(labels)), a_(labels_.size() * labels_.size(), Rat(0)) {}

  int dim() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  int index_of(const std::string& label) const;

  const Rat& at(int i, int j) const { return a_[i * dim() + j]; }
  void set(int i, int j, const Rat& v) {
    a_[i * dim() + j] = v;
    a_[j * dim() + i] = v;
  }
  void add(int i, int j, const Rat& v) {
    a_[i * dim() + j] += v;
    if (i != j) a_[j * dim() + i] += v;
  }

  bool is_zero() const;
  /// Indices whose row (equivalently column) is nonzero.
  std::vector<int> support() const;
  LabeledSymMatrix restricted(const std::vector<int>& keep) const;

  bool operator==(const LabeledSymMatrix& o) const {
    return labels_ == o.labels_ && a_ == o.a_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Rat> a_;
};

/// Inertia of a symmetric matrix. The signature is certified exactly by
/// congruence elimination; the floating eigenvalues are diagnostics only.
struct Spectrum {
  std::vector<double> eigenvalues;  // descending
  int n_pos = 0;
  int n_zero = 0;
  int n_neg = 0;
  double tolerance = 1e-10;
};

struct HypResult {
  Rat lhs;  // <v,Mw>^2
  Rat rhs;  // <v,Mv><w,Mw>
  bool holds = false;
  bool equality = false;
};

Spectrum signature(const LabeledSymMatrix& m);

/// (OPE): at most one positive eigenvalue, counting multiplicity.
bool check_OPE(const LabeledSymMatrix& m);

/// (Hyp) instance check for one vector pair; requires <w,Mw> > 0.
HypResult check_hyp_pair(const LabeledSymMatrix& m, const Vec& v, const Vec& w);

/// (Irr): the graph on supp(M) with edges {x,y : M_xy != 0} is connected.
/// Empty support counts as irreducible.
bool is_irreducible_on_support(const LabeledSymMatrix& m);

bool is_psd(const LabeledSymMatrix& m);

Vec mat_vec(const LabeledSymMatrix& m, const Vec& v);
Rat quad_form(const Vec& v, const LabeledSymMatrix& m, const Vec& w);

/// Floating spectrum by cyclic Jacobi sweeps; diagnostics only.
std::vector<double> jacobi_eigenvalues(const LabeledSymMatrix& m);

}  // namespace caw::linalg
