#include "caw/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace caw::linalg {

int LabeledSymMatrix::index_of(const std::string& label) const {
  for (int i = 0; i < dim(); ++i)
    if (labels_[i] == label) return i;
  fail("UnknownElement", "no such label: " + label);
}

bool LabeledSymMatrix::is_zero() const {
  for (const Rat& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<int> LabeledSymMatrix::support() const {
  std::vector<int> s;
  for (int i = 0; i < dim(); ++i) {
    for (int j = 0; j < dim(); ++j) {
      if (!at(i, j).is_zero()) {
        s.push_back(i);
        break;
      }
    }
  }
  return s;
}

LabeledSymMatrix LabeledSymMatrix::restricted(const std::vector<int>& keep) const {
  std::vector<std::string> labels;
  labels.reserve(keep.size());
  for (int i : keep) labels.push_back(labels_[i]);
  LabeledSymMatrix r(std::move(labels));
  for (size_t i = 0; i < keep.size(); ++i)
    for (size_t j = i; j < keep.size(); ++j)
      r.set(static_cast<int>(i), static_cast<int>(j), at(keep[i], keep[j]));
  return r;
}

namespace {

// Exact inertia by symmetric congruence elimination (Sylvester's law).
// Diagonal pivots are chosen by largest absolute value, ties by smallest
// index; when no diagonal pivot exists a symmetric row/column addition
// creates one.
struct InertiaResult {
  int pos = 0, zero = 0, neg = 0;
};

InertiaResult exact_inertia(const LabeledSymMatrix& m) {
  const int d = m.dim();
  std::vector<std::vector<Rat>> a(d, std::vector<Rat>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a[i][j] = m.at(i, j);
  std::vector<int> active(d);
  std::iota(active.begin(), active.end(), 0);

  InertiaResult res;
  while (!active.empty()) {
    int pivot = -1;
    for (int i : active) {
      if (a[i][i].is_zero()) continue;
      if (pivot == -1 || abs(a[i][i]) > abs(a[pivot][pivot])) pivot = i;
    }
    if (pivot == -1) {
      // all active diagonal entries vanish; look for an off-diagonal entry
      int pi = -1, pj = -1;
      for (size_t s = 0; s < active.size() && pi == -1; ++s)
        for (size_t t = s + 1; t < active.size(); ++t)
          if (!a[active[s]][active[t]].is_zero()) {
            pi = active[s];
            pj = active[t];
            break;
          }
      if (pi == -1) {
        res.zero += static_cast<int>(active.size());
        break;
      }
      // congruence by E = I + e_pi e_pj^T: row/col pi += row/col pj.
      // New (pi,pi) entry is 2*a[pi][pj] != 0.
      for (int k : active) {
        if (k == pi) continue;
        a[pi][k] += a[pj][k];
        a[k][pi] = a[pi][k];
      }
      a[pi][pi] = Rat(2) * a[pi][pj];  // since a[pi][pi] = a[pj][pj] = 0
      pivot = pi;
    }
    const Rat p = a[pivot][pivot];
    if (p > 0)
      ++res.pos;
    else
      ++res.neg;
    active.erase(std::find(active.begin(), active.end(), pivot));
    for (size_t s = 0; s < active.size(); ++s) {
      int i = active[s];
      if (a[i][pivot].is_zero()) continue;
      const Rat f = a[i][pivot] / p;
      for (size_t t = s; t < active.size(); ++t) {
        int j = active[t];
        a[i][j] -= f * a[j][pivot];
        a[j][i] = a[i][j];
      }
    }
  }
  return res;
}

}  // namespace

std::vector<double> jacobi_eigenvalues(const LabeledSymMatrix& m) {
  const int d = m.dim();
  std::vector<std::vector<double>> a(d, std::vector<double>(d));
  double scale = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      a[i][j] = rat_double(m.at(i, j));
      scale = std::max(scale, std::fabs(a[i][j]));
    }
  if (scale == 0.0) return std::vector<double>(d, 0.0);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) off += a[i][j] * a[i][j];
    if (std::sqrt(off) < 1e-14 * scale * d) break;
    for (int p = 0; p < d; ++p) {
      for (int q = p + 1; q < d; ++q) {
        if (std::fabs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < d; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < d; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(d);
  for (int i = 0; i < d; ++i) ev[i] = a[i][i];
  std::sort(ev.rbegin(), ev.rend());
  return ev;
}

Spectrum signature(const LabeledSymMatrix& m) {
  Spectrum s;
  const InertiaResult r = exact_inertia(m);
  s.n_pos = r.pos;
  s.n_zero = r.zero;
  s.n_neg = r.neg;
  s.eigenvalues = jacobi_eigenvalues(m);
  return s;
}

bool check_OPE(const LabeledSymMatrix& m) { return signature(m).n_pos <= 1; }

HypResult check_hyp_pair(const LabeledSymMatrix& m, const Vec& v, const Vec& w) {
  const Rat wmw = quad_form(w, m, w);
  if (!(wmw > 0))
    fail("SideConditionViolated", "<w,Mw> = " + rat_str(wmw) + " is not positive");
  HypResult r;
  const Rat vmw = quad_form(v, m, w);
  r.lhs = vmw * vmw;
  r.rhs = quad_form(v, m, v) * wmw;
  r.holds = r.lhs >= r.rhs;
  r.equality = r.lhs == r.rhs;
  return r;
}

bool is_irreducible_on_support(const LabeledSymMatrix& m) {
  const std::vector<int> supp = m.support();
  if (supp.empty()) return true;
  std::vector<char> seen(m.dim(), 0);
  std::vector<int> stack{supp[0]};
  seen[supp[0]] = 1;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j : supp)
      if (!seen[j] && !m.at(i, j).is_zero()) {
        seen[j] = 1;
        stack.push_back(j);
      }
  }
  for (int j : supp)
    if (!seen[j]) return false;
  return true;
}

bool is_psd(const LabeledSymMatrix& m) { return signature(m).n_neg == 0; }

Vec mat_vec(const LabeledSymMatrix& m, const Vec& v) {
  const int d = m.dim();
  Vec r(d, Rat(0));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (!m.at(i, j).is_zero() && !v[j].is_zero()) r[i] += m.at(i, j) * v[j];
  return r;
}

Rat quad_form(const Vec& v, const LabeledSymMatrix& m, const Vec& w) {
  const Vec mw = mat_vec(m, w);
  Rat r(0);
  for (size_t i = 0; i < mw.size(); ++i)
    if (!v[i].is_zero()) r += v[i] * mw[i];
  return r;
}

}  // namespace caw::linalg
