#include "caw/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace caw::io {

json rat_json(const Rat& r) {
  if (denominator(r) == 1) {
    const BigInt num = numerator(r);
    if (num >= std::numeric_limits<int64_t>::min() &&
        num <= std::numeric_limits<int64_t>::max())
      return json(num.convert_to<int64_t>());
  }
  return json(rat_str(r));
}

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<int64_t>());
  if (j.is_string()) {
    try {
      return rat_parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail("BadInput", e.what());
    }
  }
  fail("BadInput", "expected a rational (integer or \"p/q\" string)");
}

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("BadInput", "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail("BadInput", "malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

poset::Poset parse_poset(const json& j) {
  if (!j.contains("elements")) fail("BadInput", "poset JSON needs \"elements\"");
  std::vector<std::string> elements = j.at("elements").get<std::vector<std::string>>();
  std::vector<std::pair<std::string, std::string>> relations;
  if (j.contains("relations"))
    for (const auto& r : j.at("relations")) {
      if (!r.is_array() || r.size() != 2) fail("BadInput", "relation must be a pair");
      relations.emplace_back(r[0].get<std::string>(), r[1].get<std::string>());
    }
  std::optional<std::vector<Rat>> weights;
  if (j.contains("weights")) {
    std::vector<Rat> w(elements.size(), Rat(1));
    for (const auto& [name, val] : j.at("weights").items()) {
      bool found = false;
      for (size_t i = 0; i < elements.size(); ++i)
        if (elements[i] == name) {
          w[i] = rat_from_json(val);
          found = true;
        }
      if (!found) fail("BadInput", "weight for unknown element " + name);
    }
    weights = std::move(w);
  }
  return poset::build_poset(std::move(elements), relations, std::move(weights));
}

structures::Graph parse_graph(const json& j) {
  structures::Graph g;
  g.vertices = j.at("vertices").get<std::vector<std::string>>();
  auto vindex = [&](const std::string& name) {
    for (size_t i = 0; i < g.vertices.size(); ++i)
      if (g.vertices[i] == name) return static_cast<int>(i);
    fail("BadInput", "unknown vertex " + name);
  };
  for (const auto& e : j.at("edges")) {
    if (e.is_array()) {
      g.edges.emplace_back(vindex(e.at(0).get<std::string>()),
                           vindex(e.at(1).get<std::string>()));
    } else {
      g.edges.emplace_back(vindex(e.at("ends").at(0).get<std::string>()),
                           vindex(e.at("ends").at(1).get<std::string>()));
      g.edge_names.push_back(e.value("name", "e" + std::to_string(g.edges.size())));
    }
  }
  if (!g.edge_names.empty() && g.edge_names.size() != g.edges.size())
    fail("BadInput", "either name all edges or none");
  return g;
}

structures::Matroid parse_matroid(const json& j) {
  const std::string type = j.value("type", "");
  if (type == "free") return structures::make_free(j.at("n").get<int>());
  if (type == "uniform")
    return structures::make_uniform(j.at("n").get<int>(), j.at("r").get<int>());
  if (type == "graphic") return structures::make_graphic(parse_graph(j.at("graph")));
  if (type == "vector_gf")
    return structures::make_vector_gf(
        j.at("q").get<int>(), j.at("vectors").get<std::vector<std::vector<int>>>());
  if (type == "steiner")
    return structures::make_steiner(j.at("t").get<int>(), j.at("m").get<int>(),
                                    j.at("n").get<int>(),
                                    j.at("blocks").get<std::vector<std::vector<int>>>());
  if (type == "explicit") {
    std::vector<std::string> ground = j.at("ground").get<std::vector<std::string>>();
    std::vector<structures::Mask> fam;
    for (const auto& s : j.at("independents")) {
      structures::Mask mask = 0;
      for (const auto& name : s) {
        int idx = -1;
        for (size_t i = 0; i < ground.size(); ++i)
          if (ground[i] == name.get<std::string>()) idx = static_cast<int>(i);
        if (idx < 0) fail("BadInput", "unknown ground element in independents");
        mask |= 1u << idx;
      }
      fam.push_back(mask);
    }
    return structures::make_explicit(std::move(ground), std::move(fam));
  }
  fail("BadInput", "unknown matroid type '" + type + "'");
}

std::vector<Rat> weights_for(const json& j, const std::vector<std::string>& names,
                             const std::string& mode, const poset::Poset* p) {
  if (mode == "uniform" || (mode.empty() && !j.contains("weights")))
    return std::vector<Rat>(names.size(), Rat(1));
  if (mode == "canonical") {
    if (!p) fail("BadInput", "canonical weights apply to posets only");
    return poset::canonical_chain_weights(*p);
  }
  if (!mode.empty() && mode != "file")
    fail("BadInput", "unknown weight mode '" + mode + "'");
  if (!j.contains("weights")) fail("BadInput", "no weights in the input file");
  std::vector<Rat> w(names.size(), Rat(1));
  for (const auto& [name, val] : j.at("weights").items()) {
    bool found = false;
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) {
        w[i] = rat_from_json(val);
        found = true;
      }
    if (!found) fail("BadInput", "weight for unknown element " + name);
  }
  return w;
}

structures::DiscretePolymatroid parse_polymatroid(const json& j) {
  const std::string type = j.value("type", "explicit");
  if (type == "full")
    return structures::make_full_polymatroid(j.at("n").get<int>(), j.at("r").get<int>());
  if (type == "explicit" || type == "polymatroid")
    return structures::make_polymatroid(
        j.at("n").get<int>(), j.at("independents").get<std::vector<std::vector<int>>>());
  fail("BadInput", "unknown polymatroid type '" + type + "'");
}

structures::GreedoidLanguage parse_greedoid(const json& j) {
  const std::string type = j.value("type", "");
  if (type == "from_matroid") return structures::lift_matroid(parse_matroid(j.at("matroid")));
  if (type == "poset_antimatroid")
    return structures::lift_poset_antimatroid(parse_poset(j.at("poset")));
  if (type == "branching") {
    const json& dj = j.at("digraph");
    structures::Digraph dg;
    dg.vertices = dj.at("vertices").get<std::vector<std::string>>();
    auto vindex = [&](const std::string& name) {
      for (size_t i = 0; i < dg.vertices.size(); ++i)
        if (dg.vertices[i] == name) return static_cast<int>(i);
      fail("BadInput", "unknown vertex " + name);
    };
    dg.root = vindex(dj.at("root").get<std::string>());
    for (const auto& e : dj.at("edges"))
      dg.edges.emplace_back(vindex(e.at(0).get<std::string>()),
                            vindex(e.at(1).get<std::string>()));
    return structures::lift_branching(dg);
  }
  if (type == "explicit") {
    std::vector<std::string> alphabet = j.at("alphabet").get<std::vector<std::string>>();
    std::vector<structures::Word> words;
    for (const auto& wj : j.at("words")) {
      structures::Word w;
      for (const auto& letter : wj) {
        int idx = -1;
        for (size_t i = 0; i < alphabet.size(); ++i)
          if (alphabet[i] == letter.get<std::string>()) idx = static_cast<int>(i);
        if (idx < 0) fail("BadInput", "unknown letter in word");
        w.push_back(idx);
      }
      words.push_back(std::move(w));
    }
    return structures::make_language(std::move(alphabet), std::move(words));
  }
  fail("BadInput", "unknown greedoid type '" + type + "'");
}

structures::MatroidMorphism parse_morphism(const json& j) {
  structures::MatroidMorphism mm;
  mm.source = parse_matroid(j.at("source"));
  mm.target = parse_matroid(j.at("target"));
  mm.phi.assign(mm.source.n(), -1);
  for (const auto& [from, to] : j.at("phi").items())
    mm.phi[mm.source.index_of(from)] = mm.target.index_of(to.get<std::string>());
  for (int x : mm.phi)
    if (x < 0) fail("BadInput", "phi must be total on the source ground set");
  return mm;
}

json condition_json(const ineq::Condition& c) {
  json j;
  j["name"] = c.name;
  j["pass"] = c.pass;
  if (c.vacuous) j["vacuous"] = true;
  if (!c.witness.empty()) j["witness"] = c.witness;
  return j;
}

json report_json(const ineq::IneqReport& r) {
  json j;
  j["name"] = r.name;
  j["k"] = r.k;
  j["lhs"] = rat_json(r.lhs);
  j["rhs"] = rat_json(r.rhs);
  j["factor"] = rat_json(r.factor);
  j["holds"] = r.holds;
  j["equality"] = r.equality;
  j["applicable"] = r.applicable;
  if (!r.conditions.empty()) {
    json cs = json::array();
    for (const auto& c : r.conditions) cs.push_back(condition_json(c));
    j["conditions"] = cs;
    if (r.conditions_pass) j["conditions_pass"] = *r.conditions_pass;
    j["consistent"] = r.consistent;
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

std::string report_text(const ineq::IneqReport& r) {
  std::ostringstream os;
  os << r.name << " k=" << r.k << ": ";
  if (!r.applicable) {
    os << "inapplicable (" << r.note << ")";
    return os.str();
  }
  os << rat_str(r.lhs) << (r.equality ? " = " : (r.holds ? " > " : " < "))
     << rat_str(r.rhs) << " [factor " << rat_str(r.factor) << "] "
     << (r.holds ? "holds" : "FAILS");
  if (r.equality) os << ", equality";
  for (const auto& c : r.conditions) {
    os << "\n    " << c.name << ": " << (c.pass ? "pass" : "fail");
    if (c.vacuous) os << " (vacuous)";
    if (!c.witness.empty()) os << " [" << c.witness << "]";
  }
  if (r.conditions_pass)
    os << "\n    equality <=> conditions: " << (r.consistent ? "consistent" : "INCONSISTENT");
  return os.str();
}

json matrix_json(const linalg::LabeledSymMatrix& m) {
  json j;
  j["labels"] = m.labels();
  json rows = json::array();
  for (int i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (int jj = 0; jj < m.dim(); ++jj) row.push_back(rat_json(m.at(i, jj)));
    rows.push_back(row);
  }
  j["entries"] = rows;
  return j;
}

}  // namespace caw::io
