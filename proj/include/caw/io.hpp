#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "caw/atlas.hpp"
#include "caw/inequalities.hpp"
#include "caw/oracle.hpp"
#include "caw/poset.hpp"
#include "caw/structures.hpp"

namespace caw::io {

using json = nlohmann::json;

/// Rationals render as reduced "p/q" strings; integer values as bare
/// JSON integers when they fit.
json rat_json(const Rat& r);
Rat rat_from_json(const json& j);

poset::Poset parse_poset(const json& j);
structures::Matroid parse_matroid(const json& j);
/// Element weights for a parsed structure: "uniform", "canonical" (posets
/// only), or the structure's own weights when present.
std::vector<Rat> weights_for(const json& j, const std::vector<std::string>& names,
                             const std::string& mode, const poset::Poset* p);
structures::Graph parse_graph(const json& j);
structures::DiscretePolymatroid parse_polymatroid(const json& j);
structures::GreedoidLanguage parse_greedoid(const json& j);
structures::MatroidMorphism parse_morphism(const json& j);

json condition_json(const ineq::Condition& c);
json report_json(const ineq::IneqReport& r);
std::string report_text(const ineq::IneqReport& r);

json matrix_json(const linalg::LabeledSymMatrix& m);

json load_file(const std::string& path);

}  // namespace caw::io
