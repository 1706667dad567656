#include <doctest.h>

#include "caw/io.hpp"

using namespace caw;
using caw::io::json;

TEST_CASE("rational serialization") {
  CHECK(io::rat_json(rat(3, 2)) == json("3/2"));
  CHECK(io::rat_json(Rat(7)) == json(7));
  CHECK(io::rat_json(rat(-4, 8)) == json("-1/2"));
  CHECK(io::rat_from_json(json("3/2")) == rat(3, 2));
  CHECK(io::rat_from_json(json(5)) == Rat(5));
  CHECK_THROWS_AS(io::rat_from_json(json("x")), Error);
  CHECK_THROWS_AS((void)rat_parse("1/0"), std::invalid_argument);
}

TEST_CASE("poset parsing") {
  const json j = json::parse(R"({
    "elements": ["a", "b", "c"],
    "relations": [["a", "b"], ["b", "c"]],
    "weights": {"a": "3/2", "b": 1, "c": 1}
  })");
  const auto p = io::parse_poset(j);
  CHECK(p.n() == 3);
  CHECK(p.lt(0, 2));
  REQUIRE(p.weights.has_value());
  CHECK((*p.weights)[0] == rat(3, 2));
  CHECK_THROWS_WITH_AS(io::parse_poset(json::parse(R"({"elements": ["a"],
    "weights": {"q": 1}})")),
                       doctest::Contains("BadInput"), Error);
}

TEST_CASE("matroid parsing") {
  CHECK(io::parse_matroid(json::parse(R"({"type":"uniform","n":4,"r":2})")).rank() == 2);
  CHECK(io::parse_matroid(json::parse(R"({"type":"free","n":3})")).rank() == 3);
  const json gj = json::parse(R"({
    "type": "graphic",
    "graph": {"vertices": ["1","2","3"],
              "edges": [{"name":"a","ends":["1","2"]},
                        {"name":"b","ends":["2","3"]},
                        {"name":"c","ends":["1","3"]}]}
  })");
  const auto m = io::parse_matroid(gj);
  CHECK(m.ground == std::vector<std::string>{"a", "b", "c"});
  CHECK(m.rank() == 2);
  const auto v = io::parse_matroid(
      json::parse(R"({"type":"vector_gf","q":2,"vectors":[[0,1],[1,0],[1,1]]})"));
  CHECK(v.count(2) == 3);
  const auto e = io::parse_matroid(json::parse(
      R"({"type":"explicit","ground":["a","b"],"independents":[[],["a"],["b"]]})"));
  CHECK(e.rank() == 1);
  CHECK_THROWS_AS(io::parse_matroid(json::parse(R"({"type":"wat"})")), Error);
}

TEST_CASE("greedoid and morphism parsing") {
  const auto g = io::parse_greedoid(json::parse(R"({
    "type": "explicit",
    "alphabet": ["x", "y"],
    "words": [[], ["x"], ["y"], ["x","y"], ["y","x"]]
  })"));
  CHECK(g.flags.is_greedoid());

  const auto mm = io::parse_morphism(json::parse(R"({
    "source": {"type":"free","n":2},
    "target": {"type":"uniform","n":2,"r":1},
    "phi": {"x1":"x1","x2":"x2"}
  })"));
  CHECK(structures::validate_morphism(mm).valid);
}

TEST_CASE("reports are deterministic json") {
  ineq::IneqReport r;
  r.name = "demo";
  r.k = 2;
  r.lhs = rat(9, 1);
  r.rhs = rat(13, 2);
  r.factor = rat(3, 2);
  r.holds = true;
  r.conditions.push_back({"cond", true, false, "w"});
  r.conditions_pass = true;
  const auto j1 = io::report_json(r).dump();
  const auto j2 = io::report_json(r).dump();
  CHECK(j1 == j2);
  CHECK(j1.find("\"13/2\"") != std::string::npos);
  CHECK(j1.find("\"lhs\":9") != std::string::npos);
  const std::string text = io::report_text(r);
  CHECK(text.find("holds") != std::string::npos);
}
