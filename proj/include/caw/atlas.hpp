#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "caw/counting.hpp"
#include "caw/linalg.hpp"
#include "caw/poset.hpp"
#include "caw/rational.hpp"

namespace caw::atlas {

using counting::WeightedLanguage;
using linalg::LabeledSymMatrix;
using linalg::Vec;
using structures::Word;

struct VertexId {
  Word alpha;
  Word beta;  // Stanley only
  int level = 0;  // greedoid: m; Stanley: the position parameter k'
  Rat t;

  auto tie() const { return std::tie(alpha, beta, level, t); }
  bool operator<(const VertexId& o) const { return tie() < o.tie(); }
  bool operator==(const VertexId& o) const { return tie() == o.tie(); }
};

struct AtlasVertex {
  VertexId id;
  LabeledSymMatrix M;
  Vec h;
  bool sink = false;
  bool vacuous = false;          // zero matrix (word context infeasible)
  std::vector<int> targets;      // per coordinate; -1 when the vertex is a sink
};

/// Finite slice of the (continuum) atlas on a t-grid with mandatory
/// endpoints. Greedoid slices keep the weighted language, Stanley slices
/// the poset data, so the per-vertex checks can recompute everything.
struct AtlasSlice {
  enum class Kind { greedoid, stanley } kind = Kind::greedoid;
  int k = 0;  // the log-concavity index the slice was built for
  std::vector<std::string> coord_labels;
  std::vector<AtlasVertex> vertices;
  std::map<VertexId, int> index;
  int root = -1;

  // greedoid payload
  std::optional<WeightedLanguage> weighted;
  // Stanley payload
  std::optional<poset::Poset> pos;
  std::vector<Rat> omega;
  int z = -1;

  int dim() const { return static_cast<int>(coord_labels.size()); }
};

std::vector<Rat> default_t_grid();

AtlasSlice build_greedoid_atlas(const WeightedLanguage& w, int k,
                                std::vector<Rat> t_grid = default_t_grid());

AtlasSlice build_stanley_atlas(const poset::Poset& p, const std::vector<Rat>& omega,
                               int z, int k,
                               std::vector<Rat> t_grid = default_t_grid());

/// The greedoid matrix A(alpha, m); rows/columns over X + "*".
LabeledSymMatrix greedoid_matrix(const WeightedLanguage& w, const Word& alpha, int m);

/// The Stanley matrix C(alpha, beta, k) over the doubled alphabet Z.
LabeledSymMatrix stanley_matrix(const poset::Poset& p, const std::vector<Rat>& omega,
                                int z, const Word& alpha, const Word& beta, int k);

/// Applies the projection T<x> of the edge leaving `vidx` with label x.
Vec project(const AtlasSlice& slice, int vidx, const std::string& x, const Vec& v);

struct PropCheck {
  bool applicable = false;
  bool pass = true;
  std::string note;
};

struct VertexReport {
  bool vacuous = false;
  bool sink = false;
  Rat t;
  PropCheck inh, proj, tinv, knon, ksym, irr, hpos, pull, hyp;

  bool all_pass() const {
    for (const PropCheck* c : {&inh, &proj, &tinv, &knon, &ksym, &irr, &hpos, &pull, &hyp})
      if (c->applicable && !c->pass) return false;
    return true;
  }
};

VertexReport check_vertex_properties(const AtlasSlice& slice, int vidx);

struct LocalGlobalReport {
  bool hyp_implication_ok = true;   // regular + hyperbolic children => hyperbolic
  bool pull_implication_ok = true;  // Inh+Proj+TInv+KNon => Pull
  std::string witness;
};

LocalGlobalReport check_local_global(const AtlasSlice& slice);

struct SinkNormalFormResult {
  LabeledSymMatrix normal_form;
  std::vector<Rat> diagonal;  // b-values then the scale ratio
  bool shape_ok = true;       // elimination zeroed duplicates, off-diagonal all 1
  bool condition_star = true;
  bool ope_agrees = true;
  bool vacuous = false;
  std::string note;
};

SinkNormalFormResult sink_normal_form(const AtlasSlice& slice, int vidx);

struct SEquReport {
  bool root_sequ = false;
  bool propagation_ok = true;  // every functional target satisfies (s-Equ)
  bool kernel_ok = true;       // Mz = 0 wherever <z,Mz> = 0 arises
  int functional_targets = 0;
  int sequ_vertices = 0;
  std::string witness;
};

SEquReport check_sEqu_propagation(const AtlasSlice& slice, const Vec& f, const Vec& g,
                                  const Rat& s);

struct LineGraphReport {
  bool connected = false;
  bool adjacency_matches_matrix = false;
  long long edge_count = 0;
};

/// Builds the nonsimple graph on Z from extensions with z in positions
/// k-1, k, k+1, forms its line graph, and checks connectivity plus the
/// agreement of adjacency with positivity of C(empty, empty, k).
LineGraphReport line_graph_connectivity(const poset::Poset& p,
                                        const std::vector<Rat>& omega, int z, int k);

}  // namespace caw::atlas
