#include <doctest.h>

#include "caw/inequalities.hpp"
#include "caw/oracle.hpp"

using namespace caw;
using namespace caw::ineq;

namespace {

structures::Graph k4_minus_edge() {
  structures::Graph g;
  g.vertices = {"1", "2", "3", "4"};
  g.edges = {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  g.edge_names = {"a", "b", "c", "d", "e"};
  return g;
}

structures::Graph complete_graph(int n) {
  structures::Graph g;
  for (int i = 1; i <= n; ++i) g.vertices.push_back(std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.edges.emplace_back(i, j);
  return g;
}

structures::Graph cycle_graph(int n) {
  structures::Graph g;
  for (int i = 1; i <= n; ++i) g.vertices.push_back(std::to_string(i));
  for (int i = 0; i < n; ++i) g.edges.emplace_back(i, (i + 1) % n);
  return g;
}

poset::Poset running_example() {
  return poset::build_poset({"a", "b", "c", "d", "z"},
                            {{"a", "b"}, {"b", "c"}, {"a", "z"}, {"d", "c"}});
}

}  // namespace

TEST_CASE("matroid suite on U(4,2)") {
  const auto m = structures::make_uniform(4, 2);
  const auto suite = matroid_suite(m, std::vector<Rat>(4, Rat(1)), 1);
  CHECK(suite.ultra.holds);
  CHECK(suite.ultra.equality);  // strong Mason is exact on uniform matroids
  CHECK(suite.girth == 3);
  CHECK(*suite.ultra.conditions_pass);
  CHECK(suite.ultra.consistent);
  CHECK(suite.plain.holds);
  CHECK_FALSE(suite.plain.equality);  // 16 > 6
}

TEST_CASE("matroid suite on the GF(2) plane") {
  const auto m = structures::make_vector_gf(2, {{0, 1}, {1, 0}, {1, 1}});
  const auto suite = matroid_suite(m, std::vector<Rat>(3, Rat(1)), 1);
  CHECK(suite.p_km1 == 3);
  // 9 = 2 * (3/2) * 1 * 3
  CHECK(suite.refined.equality);
  CHECK(*suite.refined.conditions_pass);
  CHECK(suite.refined.consistent);
  // s(0) = 1: singleton parallel classes of the empty set
  bool saw_s = false;
  for (const auto& c : suite.refined.conditions)
    if (c.name == "ME2") {
      CHECK(c.witness == "s(k-1) = 1");
      saw_s = true;
    }
  CHECK(saw_s);
}

TEST_CASE("matroid suite on K4 minus an edge") {
  const auto m = structures::make_graphic(k4_minus_edge());
  const auto suite = matroid_suite(m, std::vector<Rat>(5, Rat(1)), 2);
  CHECK(suite.refined.lhs == 100);
  CHECK(suite.refined.rhs == 90);
  CHECK(suite.refined.holds);
  CHECK_FALSE(suite.refined.equality);
  CHECK_FALSE(*suite.refined.conditions_pass);
  CHECK(suite.refined.consistent);
  // monotone strength of the right-hand sides
  CHECK(suite.refined.rhs >= suite.ultra.rhs);
  CHECK(suite.ultra.rhs >= suite.one_sided.rhs);
  CHECK(suite.one_sided.rhs >= suite.plain.rhs);
}

TEST_CASE("weighted equality needs uniform weights") {
  const auto m = structures::make_uniform(4, 2);
  const std::vector<Rat> w = {Rat(1), Rat(2), Rat(1), Rat(1)};
  const auto suite = matroid_suite(m, w, 1);
  CHECK(suite.ultra.holds);
  CHECK_FALSE(suite.ultra.equality);
  CHECK_FALSE(*suite.ultra.conditions_pass);
  CHECK(suite.ultra.consistent);
}

TEST_CASE("uniform matroids give strong-Mason equality everywhere") {
  for (int n = 2; n <= 8; ++n)
    for (int r = 2; r <= n; ++r) {
      const auto m = structures::make_uniform(n, r);
      for (int k = 1; k < r; ++k) {
        const auto suite = matroid_suite(m, std::vector<Rat>(n, Rat(1)), k);
        CHECK(suite.ultra.equality);
        CHECK(suite.ultra.consistent);
      }
    }
}

TEST_CASE("graphical special cases") {
  const auto c5 = graphical_special(cycle_graph(5));
  CHECK(c5.cycle_ratio.equality);  // ratio 2 = (3/2)(1 + 1/3)
  CHECK(c5.is_cycle);
  CHECK(c5.cycle_ratio.consistent);

  const auto k4 = graphical_special(complete_graph(4));
  CHECK(k4.cycle_ratio.holds);
  CHECK_FALSE(k4.cycle_ratio.equality);
  CHECK_FALSE(k4.is_cycle);
  CHECK(k4.cycle_ratio.consistent);

  const auto k4e = graphical_special(k4_minus_edge());
  CHECK_FALSE(k4e.cycle_ratio.equality);
  CHECK(k4e.cycle_ratio.consistent);

  for (int n = 5; n <= 7; ++n) {
    const auto kn = graphical_special(complete_graph(n));
    for (const auto& r : kn.strict) {
      CHECK(r.holds);
      CHECK_FALSE(r.equality);  // always strict for 1 < k < N-2
    }
    CHECK(static_cast<int>(kn.strict.size()) == std::max(0, n - 4));
  }

  structures::Graph disconnected;
  disconnected.vertices = {"1", "2", "3"};
  disconnected.edges = {{0, 1}};
  CHECK_THROWS_WITH_AS(graphical_special(disconnected),
                       doctest::Contains("Disconnected"), Error);
}

TEST_CASE("finite field bound") {
  std::vector<std::vector<int>> cube;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        if (a || b || c) cube.push_back({a, b, c});
  const auto reports = gf_field_bound(2, cube);
  REQUIRE(reports.size() == 2);
  for (const auto& r : reports) CHECK(r.holds);
  // k = 1 denominator is q^m - 2 = 6
  CHECK(reports[0].factor == Rat(2) * (Rat(1) + rat(1, 6)));
}

TEST_CASE("polymatroid suite") {
  const auto d = structures::make_full_polymatroid(2, 3);
  const std::vector<Rat> uw(2, Rat(1));

  // t = 1, k = 2: equality, polygirth 4 > 3
  const auto t1 = polymatroid_suite(d, uw, Rat(1), 2);
  CHECK(t1.refined.equality);
  CHECK(t1.polygirth == 4);
  CHECK(*t1.refined.conditions_pass);
  CHECK(t1.refined.consistent);

  // 0 < t < 1, k = 1, uniform: equality per the mixed-regime theorem
  const auto th = polymatroid_suite(d, uw, rat(1, 2), 1);
  CHECK(th.refined.equality);
  CHECK(th.refined.consistent);
  // same t, k = 2: no equality (k != 1)
  const auto th2 = polymatroid_suite(d, uw, rat(1, 2), 2);
  CHECK(th2.refined.holds);
  CHECK_FALSE(th2.refined.equality);
  CHECK(th2.refined.consistent);

  // matroid as polymatroid at t = 0 reproduces the matroid refined report
  const auto m = structures::make_graphic(k4_minus_edge());
  const auto dm = structures::polymatroid_of_matroid(m);
  const auto t0 = polymatroid_suite(dm, std::vector<Rat>(5, Rat(1)), Rat(0), 2);
  const auto ms = matroid_suite(m, std::vector<Rat>(5, Rat(1)), 2);
  CHECK(t0.refined.lhs == ms.refined.lhs);
  CHECK(t0.refined.rhs == ms.refined.rhs);
  CHECK(t0.refined.equality == ms.refined.equality);
  CHECK(t0.refined.consistent);

  structures::DiscretePolymatroid degenerate;
  degenerate.n = 2;
  degenerate.independents = {{0, 0}, {1, 0}, {2, 0}};
  CHECK_THROWS_WITH_AS(polymatroid_suite(degenerate, uw, Rat(1), 1),
                       doctest::Contains("Degenerate"), Error);
}

TEST_CASE("antimatroid suite on tree posets") {
  const poset::Poset tree = poset::tree_poset({"r", "u", "v", "l1", "l2", "l3", "l4"},
                                              {-1, 0, 0, 1, 1, 2, 2});
  const auto w = poset::canonical_chain_weights(tree);
  for (int k = 1; k < tree.height(); ++k) {
    const auto suite = antimatroid_suite(tree, w, k);
    CHECK(suite.main.equality);
    CHECK(*suite.main.conditions_pass);
    CHECK(suite.main.consistent);
    // s(k-1) = number of leaves = 4
    for (const auto& c : suite.main.conditions)
      if (c.name == "AE1") CHECK(c.witness == "s(k-1) = 4");
    CHECK(suite.total.equal_everywhere);
    CHECK(suite.total.recognizer);
    CHECK(suite.total.consistent);
  }
}

TEST_CASE("antimatroid suite on a skew shape") {
  const poset::Poset shape = poset::skew_shape_poset({2, 1}, {});
  const auto w = poset::canonical_chain_weights(shape);
  for (int k = 1; k < shape.n(); ++k) {
    const auto suite = antimatroid_suite(shape, w, k);
    CHECK(suite.main.holds);
    CHECK(suite.main.consistent);
  }
  // uniform weights violate cover monotonicity where two covers meet
  const poset::Poset grid = poset::grid_poset(2, 2);
  CHECK_THROWS_WITH_AS(antimatroid_suite(grid, std::vector<Rat>(4, Rat(1)), 1),
                       doctest::Contains("CMViolated"), Error);
}

TEST_CASE("greedoid suite equality triple") {
  const auto free4 = structures::make_free(4);
  auto lang = structures::lift_matroid(free4);
  const int k = 2;
  auto scale = counting::refined_scale(lang.rank(), k,
                                       structures::continuation_number(free4, k - 1));
  const auto w = counting::product_weight(lang, std::vector<Rat>(4, Rat(1)), scale);
  const auto suite = greedoid_suite(w, k);
  CHECK(suite.main.equality);
  CHECK(suite.ge_b);
  CHECK(suite.ge_c);
  CHECK(suite.triple_consistent);

  const auto k4e = structures::make_graphic(k4_minus_edge());
  auto lang2 = structures::lift_matroid(k4e);
  auto scale2 = counting::refined_scale(lang2.rank(), k,
                                        structures::continuation_number(k4e, k - 1));
  const auto w2 = counting::product_weight(lang2, std::vector<Rat>(5, Rat(1)), scale2);
  const auto suite2 = greedoid_suite(w2, k);
  CHECK(suite2.main.holds);
  CHECK_FALSE(suite2.main.equality);
  CHECK_FALSE(suite2.ge_b);
  CHECK_FALSE(suite2.ge_c);
  CHECK(suite2.triple_consistent);

  // tree-poset antimatroid with c == 1: equality with the unit scale ratio
  const poset::Poset tree = poset::tree_poset({"r", "u", "v", "l1", "l2"},
                                              {-1, 0, 0, 1, 2});
  auto lang3 = structures::lift_poset_antimatroid(tree);
  const auto w3 = counting::product_weight(lang3, poset::canonical_chain_weights(tree),
                                           counting::uniform_scale(lang3.rank()));
  const auto suite3 = greedoid_suite(w3, 2);
  CHECK(suite3.main.equality);
  CHECK(suite3.triple_consistent);

  // non-admissible weights are rejected
  const poset::Poset grid = poset::grid_poset(2, 2);
  auto lang4 = structures::lift_poset_antimatroid(grid);
  const auto w4 = counting::product_weight(lang4, std::vector<Rat>(4, Rat(1)),
                                           counting::uniform_scale(lang4.rank()));
  CHECK_THROWS_WITH_AS(greedoid_suite(w4, 2), doctest::Contains("NotAdmissible"),
                       Error);
}

TEST_CASE("morphism suite") {
  // identity onto a rank-1 uniform target: strong-form equality at k = 2
  structures::MatroidMorphism mm{structures::make_free(4),
                                 structures::make_uniform(4, 1), {0, 1, 2, 3}};
  const auto suite = morphism_suite(mm, std::vector<Rat>(4, Rat(1)), 2);
  CHECK(suite.eh.equality);
  CHECK(*suite.eh.conditions_pass);
  CHECK(suite.eh.consistent);
  CHECK(suite.refined.consistent);

  // a rank-0 target reproduces the matroid suite exactly
  structures::MatroidMorphism to_point{structures::make_graphic(k4_minus_edge()),
                                       structures::make_uniform(1, 0), {0, 0, 0, 0, 0}};
  const auto ms = matroid_suite(to_point.source, std::vector<Rat>(5, Rat(1)), 2);
  const auto mos = morphism_suite(to_point, std::vector<Rat>(5, Rat(1)), 2);
  CHECK(mos.eh.lhs == ms.ultra.lhs);
  CHECK(mos.eh.rhs == ms.ultra.rhs);
  CHECK(mos.refined.lhs == ms.refined.lhs);
  CHECK(mos.refined.rhs == ms.refined.rhs);

  // identity U(4,3) -> U(4,2): singleton images have rank 1 < 2, so MME3
  // fails and equality fails with it
  structures::MatroidMorphism id42{structures::make_uniform(4, 3),
                                   structures::make_uniform(4, 2), {0, 1, 2, 3}};
  const auto s42 = morphism_suite(id42, std::vector<Rat>(4, Rat(1)), 2);
  CHECK_FALSE(s42.eh.equality);
  bool mme3_pass = true;
  for (const auto& c : s42.eh.conditions)
    if (c.name == "MME3") mme3_pass = c.pass;
  CHECK_FALSE(mme3_pass);
  CHECK(s42.eh.consistent);
  CHECK(s42.refined.consistent);

  structures::MatroidMorphism bad{structures::make_uniform(2, 1),
                                  structures::make_free(2), {0, 1}};
  CHECK_THROWS_WITH_AS(morphism_suite(bad, std::vector<Rat>(2, Rat(1)), 1),
                       doctest::Contains("NotAMorphism"), Error);
}

TEST_CASE("stanley suite") {
  const poset::Poset p = running_example();
  const std::vector<Rat> uw(5, Rat(1));
  const int z = p.index_of("z");
  const auto suite = stanley_suite(p, uw, z, 3);
  CHECK(suite.main.lhs == 9);
  CHECK(suite.main.rhs == 6);
  CHECK(suite.main.holds);
  CHECK_FALSE(suite.item_a);
  CHECK_FALSE(suite.item_b);
  CHECK_FALSE(suite.item_c);
  CHECK_FALSE(suite.item_d);
  CHECK_FALSE(suite.item_e);
  CHECK(suite.items_agree);
  CHECK(suite.lemma_equivalence);

  // antichain: equality for every z and every valid k
  const poset::Poset a5 = poset::antichain(5);
  for (int k = 2; k <= 4; ++k) {
    const auto sa = stanley_suite(a5, std::vector<Rat>(5, Rat(1)), 0, k);
    CHECK(sa.item_a);
    CHECK(sa.item_b);
    CHECK(sa.item_c);
    CHECK(sa.item_d);
    CHECK(sa.item_e);
    CHECK(sa.items_agree);
    CHECK(sa.s == 1);
  }

  // Entringer triangle: log-concavity of a(3, k)
  const poset::Poset q3 = poset::skew_shape_poset({3, 2, 1}, {1});
  for (int k = 2; k < q3.n(); ++k) {
    bool zero_middle = false;
    try {
      const auto sq = stanley_suite(q3, std::vector<Rat>(5, Rat(1)), 0, k);
      CHECK(sq.main.holds);
      CHECK(sq.items_agree);
    } catch (const Error& e) {
      zero_middle = true;
      CHECK(std::string(e.what()).find("ZeroMiddleTerm") != std::string::npos);
    }
    (void)zero_middle;
  }

  std::vector<Rat> bad(5, Rat(1));
  bad[p.index_of("b")] = Rat(3);
  CHECK_THROWS_WITH_AS(stanley_suite(p, bad, z, 3),
                       doctest::Contains("NotOrderReversing"), Error);
}

TEST_CASE("stanley items agree on random posets") {
  oracle::Rng rng(420);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const poset::Poset p = oracle::random_poset(rng, 4 + static_cast<int>(rng.below(3)));
    const auto w = oracle::random_order_reversing_weights(rng, p);
    for (int z = 0; z < p.n(); ++z)
      for (int k = 2; k < p.n(); ++k) {
        try {
          const auto suite = stanley_suite(p, w, z, k);
          CHECK(suite.items_agree);
          CHECK(suite.lemma_equivalence);
          // (b) implies (a); (d) and (e) coincide
          if (suite.item_b) CHECK(suite.item_a);
          CHECK(suite.item_d == suite.item_e);
          ++checked;
        } catch (const Error&) {
          // N(k) = 0 frames are skipped
        }
      }
  }
  CHECK(checked > 100);
}

TEST_CASE("belt suites") {
  // width-2 poset: two chains side by side
  const poset::Poset p = poset::build_poset(
      {"a1", "a2", "a3", "b1", "b2"}, {{"a1", "a2"}, {"a2", "a3"}, {"b1", "b2"}});
  const std::vector<Rat> w = {Rat(3), Rat(2), Rat(1), Rat(2), Rat(1)};
  for (int z = 0; z < p.n(); ++z) {
    CHECK(poset::has_belt(p, z));
    for (int k = 2; k < p.n(); ++k) {
      const auto tro = stanley_belt_suite(p, z, k, BeltMode::tropical, w);
      CHECK(tro.main.holds);
      // the tropical ideal weight satisfies submodularity
      std::vector<Rat> ideal(1u << p.n(), Rat(0));
      for (structures::Mask s = 0; s < (1u << p.n()); ++s)
        for (int x = 0; x < p.n(); ++x)
          if ((s >> x & 1u) && w[x] > ideal[s]) ideal[s] = w[x];
      const auto sub = stanley_belt_suite(p, z, k, BeltMode::submodular, w, &ideal);
      CHECK(sub.main.holds);
      CHECK(sub.main.lhs == tro.main.lhs);
    }
  }
  CHECK_THROWS_WITH_AS(
      stanley_belt_suite(poset::antichain(3), 0, 2, BeltMode::tropical,
                         std::vector<Rat>(3, Rat(1))),
      doctest::Contains("NoBelt"), Error);

  // a weight that violates submodularity is rejected with a witness
  const poset::Poset c3 = poset::chain(3);
  std::vector<Rat> badw(1u << 3, Rat(1));
  badw[0b011] = Rat(5);  // w(S+x+y) w(S) > w(S+x)^2 for the chain below z
  // pick z = the top, inc(z) empty -> no applicable triple, so use z = x2
  // with inc(z) = {} ... need incomparable pair; use a belt poset instead
  const poset::Poset pb = poset::build_poset({"x", "y", "z0"}, {{"x", "y"}});
  std::vector<Rat> bw(1u << 3, Rat(1));
  // S = {}, x, y chain incomparable to z0: force w({x,y}) w({}) > w({x})^2
  bw[0b000] = Rat(1);
  bw[0b001] = Rat(1);
  bw[0b011] = Rat(5);
  CHECK_THROWS_WITH_AS(stanley_belt_suite(pb, pb.index_of("z0"), 2,
                                          BeltMode::submodular,
                                          std::vector<Rat>(3, Rat(1)), &bw),
                       doctest::Contains("SubmodViolated"), Error);
}

TEST_CASE("right-hand sides are monotone in strength across graphs") {
  // plain <= one-sided <= strong <= refined, for every instance
  for (const auto& g : oracle::all_connected_graphs(4)) {
    const auto m = structures::make_graphic(g);
    for (int k = 1; k < m.rank(); ++k) {
      const auto s = matroid_suite(m, std::vector<Rat>(m.n(), Rat(1)), k);
      CHECK(s.one_sided.rhs >= s.plain.rhs);
      CHECK(s.ultra.rhs >= s.one_sided.rhs);
      if (s.refined.applicable) CHECK(s.refined.rhs >= s.ultra.rhs);
    }
  }
}
