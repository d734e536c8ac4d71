#include <doctest.h>

#include "seplogic/errors.hpp"
#include "seplogic/evaluator.hpp"
#include "seplogic/families.hpp"
#include "seplogic/formula_lib.hpp"
#include "seplogic/games.hpp"
#include "support.hpp"

using namespace seplogic;
using namespace testsupport;

namespace {

bool all_degrees(const Graph& g, std::size_t d) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != d) return false;
  }
  return true;
}

bool well_formed(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    if (u == v || u >= g.order() || v >= g.order()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("planarity pair") {
  const auto [g, h] = gen_planarity_pair(1);
  CHECK(g.order() == 8);
  CHECK(g.size() == 12);
  CHECK(h.order() == 8);
  CHECK(h.size() == 12);
  CHECK(all_degrees(g, 3));
  CHECK(all_degrees(h, 3));
  CHECK(is_planar(g));
  CHECK_FALSE(is_planar(h));
  CHECK(ladder_vertex(1, 1) == 0);
  CHECK(ladder_vertex(2, 1) == 1);
  CHECK(ladder_vertex(1, 2) == 2);
  CHECK(g.adjacent(ladder_vertex(1, 1), ladder_vertex(1, 4)));
  CHECK(h.adjacent(ladder_vertex(1, 1), ladder_vertex(2, 4)));
  const auto pins = planarity_pins(1);
  REQUIRE(pins.size() == 4);
  CHECK(pins[2] == PebblePair{ladder_vertex(1, 4), ladder_vertex(2, 4)});
  const auto [g2, h2] = gen_planarity_pair(2);
  CHECK(g2.order() == 16);
  CHECK(all_degrees(h2, 3));
  CHECK_THROWS_AS(gen_planarity_pair(0), InputError);
}

TEST_CASE("cycle and apex-clique pairs") {
  const auto [c, cc] = gen_cycle_pair(1);
  CHECK(are_isomorphic(c, cycle_graph(8)));
  CHECK(are_isomorphic(cc, cycle_graph(4).disjoint_union(cycle_graph(4))));
  GameConfig cfg;
  cfg.rounds = 1;
  CHECK(solve(RelationalStructure::from_graph(c), RelationalStructure::from_graph(cc), cfg).winner ==
        Player::Duplicator);

  const auto [g, h] = gen_apex_clique_pair(1, 1);
  CHECK(g.order() == 10);
  CHECK(is_k_connected(g, 3));
  CHECK_FALSE(is_k_connected(h, 3));
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < 8; ++v) keep.push_back(v);
  CHECK_FALSE(is_connected(h.induced(keep)));
  CHECK(is_connected(g.induced(keep)));
  CHECK(h.adjacent(8, 9));
}

TEST_CASE("conn atoms on apex-clique pairs are trivial") {
  for (std::size_t k = 0; k <= 2; ++k) {
    const auto [g, h] = gen_apex_clique_pair(1, k);
    for (const Graph* side : {&g, &h}) {
      for (std::size_t l = 0; l <= k; ++l) {
        std::vector<Vertex> t(l + 2, 0);
        do {
          const std::vector<Vertex> zs(t.begin() + 2, t.end());
          const bool hit = std::find(zs.begin(), zs.end(), t[0]) != zs.end() ||
                           std::find(zs.begin(), zs.end(), t[1]) != zs.end();
          CHECK(connected_after_deletion(*side, t[0], t[1], zs) == !hit);
        } while (next_tuple(t, side->order()));
      }
    }
  }
}

TEST_CASE("lexicographic product") {
  CHECK(lexicographic_product(Graph(1), 4) == complete_graph(4));
  CHECK(are_isomorphic(lexicographic_product(path_graph(2), 2), complete_graph(4)));
  const Graph c5 = cycle_graph(5);
  const Graph p = lexicographic_product(c5, 3);
  CHECK(p.order() == 15);
  CHECK(p.size() == 5 * 3 + 5 * 9);
  CHECK(p.adjacent(0, 2));
  CHECK(p.adjacent(0, 3));
  CHECK_FALSE(p.adjacent(0, 6));
  CHECK_THROWS_AS(lexicographic_product(c5, 0), InputError);
}

TEST_CASE("disjoint-paths pair") {
  const auto [g, h] = gen_dp_pair(2, 1);
  CHECK(g.order() == 18);
  CHECK(h.order() == 18);
  const auto [g1, h1] = gen_dp_pair(1, 2);
  CHECK(g1.order() == 20);
  CHECK(h1.order() == 20);
  for (const Graph* side : {&g1, &h1}) {
    for (Vertex u = 0; u < side->order(); ++u) {
      for (Vertex v = 0; v < side->order(); ++v) {
        const std::vector<VertexPair> pair{{u, v}};
        CHECK(disjoint_paths_exist(*side, pair));
      }
    }
  }
  const Formula two_pairs = exists(std::vector<Var>{"a1", "b1", "a2", "b2"}, negation(dp({{"a1", "b1"}, {"a2", "b2"}})));
  CHECK_FALSE(evaluate_sentence(RelationalStructure::from_graph(g), two_pairs));
  CHECK(evaluate_sentence(RelationalStructure::from_graph(h), two_pairs));
}

TEST_CASE("bipartite pair") {
  const auto [c8, c9] = gen_bipartite_pair(3);
  CHECK(c8 == cycle_graph(8));
  CHECK(c9 == cycle_graph(9));
  CHECK(is_bipartite(c8));
  CHECK_FALSE(is_bipartite(c9));
  CHECK(is_connected(c8));
  CHECK(is_connected(c9));
  const auto [k2, c3] = gen_bipartite_pair(1);
  CHECK(k2 == complete_graph(2));
  CHECK(c3 == cycle_graph(3));
}

TEST_CASE("named families") {
  CHECK(family_names().size() == 5);
  for (const auto& info : family_names()) {
    const auto [a, b] = generate_family({info.name, {}});
    CHECK(well_formed(a));
    CHECK(well_formed(b));
  }
  const auto [g, h] = generate_family({"dp-pair", {{"q", 2}, {"k", 1}}});
  CHECK(g.order() == 18);
  CHECK_THROWS_AS(generate_family({"nope", {}}), InputError);
  CHECK_THROWS_AS(generate_family({"cycle-pair", {{"q", 0}}}), InputError);
  CHECK_THROWS_AS(generate_family({"cycle-pair", {{"r", 1}}}), InputError);
}
