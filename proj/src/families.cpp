#include "seplogic/families.hpp"

#include <algorithm>

#include "seplogic/errors.hpp"

namespace seplogic {

namespace {

constexpr std::size_t kMaxExponent = 16;

std::size_t power_of_two(std::size_t e) {
  if (e > kMaxExponent) throw InputError("family parameter too large");
  return std::size_t{1} << e;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw InputError(message);
}

Graph with_apex(const Graph& g) {
  Graph out(g.order() + 1);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (Vertex v = 0; v < g.order(); ++v) out.add_edge(v, g.order());
  return out;
}

Graph join_clique(const Graph& g, std::size_t clique) {
  const std::size_t n = g.order();
  Graph out(n + clique);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (Vertex c = n; c < n + clique; ++c) {
    for (Vertex v = 0; v < c; ++v) out.add_edge(v, c);
  }
  return out;
}

}  // namespace

Vertex ladder_vertex(std::size_t i, std::size_t j) { return (j - 1) * 2 + (i - 1); }

GraphPair gen_planarity_pair(std::size_t q) {
  require(q >= 1, "planarity pair needs q >= 1");
  const std::size_t n = power_of_two(q + 1);
  Graph g(2 * n);
  for (std::size_t j = 1; j <= n; ++j) {
    g.add_edge(ladder_vertex(1, j), ladder_vertex(2, j));
    if (j < n) {
      g.add_edge(ladder_vertex(1, j), ladder_vertex(1, j + 1));
      g.add_edge(ladder_vertex(2, j), ladder_vertex(2, j + 1));
    }
  }
  Graph h = g;
  g.add_edge(ladder_vertex(1, 1), ladder_vertex(1, n));
  g.add_edge(ladder_vertex(2, 1), ladder_vertex(2, n));
  h.add_edge(ladder_vertex(1, 1), ladder_vertex(2, n));
  h.add_edge(ladder_vertex(2, 1), ladder_vertex(1, n));
  return {g, h};
}

std::vector<PebblePair> planarity_pins(std::size_t q) {
  require(q >= 1, "planarity pair needs q >= 1");
  const std::size_t n = power_of_two(q + 1);
  return {{ladder_vertex(1, 1), ladder_vertex(1, 1)},
          {ladder_vertex(2, 1), ladder_vertex(2, 1)},
          {ladder_vertex(1, n), ladder_vertex(2, n)},
          {ladder_vertex(2, n), ladder_vertex(1, n)}};
}

GraphPair gen_cycle_pair(std::size_t q) {
  require(q >= 1, "cycle pair needs q >= 1");
  const std::size_t half = power_of_two(q + 1);
  return {cycle_graph(2 * half), cycle_graph(half).disjoint_union(cycle_graph(half))};
}

GraphPair gen_apex_clique_pair(std::size_t q, std::size_t k) {
  auto [g, h] = gen_cycle_pair(q);
  return {join_clique(g, k + 1), join_clique(h, k + 1)};
}

Graph lexicographic_product(const Graph& g, std::size_t m) {
  require(m >= 1, "lexicographic product needs m >= 1");
  Graph out(g.order() * m);
  for (Vertex i = 0; i < g.order(); ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t j2 = j + 1; j2 < m; ++j2) out.add_edge(i * m + j, i * m + j2);
    }
  }
  for (auto [u, v] : g.edges()) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t j2 = 0; j2 < m; ++j2) out.add_edge(u * m + j, v * m + j2);
    }
  }
  return out;
}

GraphPair gen_dp_pair(std::size_t q, std::size_t k) {
  require(q >= 1 && k >= 1, "dp pair needs q >= 1 and k >= 1");
  const std::size_t half = power_of_two(q);
  Graph g = with_apex(cycle_graph(2 * half));
  Graph h = with_apex(cycle_graph(half).disjoint_union(cycle_graph(half)));
  return {lexicographic_product(g, 2 * k), lexicographic_product(h, 2 * k)};
}

GraphPair gen_bipartite_pair(std::size_t q) {
  require(q >= 1, "bipartite pair needs q >= 1");
  const std::size_t n = power_of_two(q);
  return {cycle_graph(n), cycle_graph(n + 1)};
}

const std::vector<FamilyInfo>& family_names() {
  static const std::vector<FamilyInfo> names{
      {"planarity-pair", {"q"}},
      {"cycle-pair", {"q"}},
      {"apex-clique-pair", {"q", "k"}},
      {"dp-pair", {"q", "k"}},
      {"bipartite-pair", {"q"}},
  };
  return names;
}

GraphPair generate_family(const FamilySpec& spec) {
  const auto& known = family_names();
  auto info = std::find_if(known.begin(), known.end(), [&](const FamilyInfo& f) { return f.name == spec.name; });
  if (info == known.end()) throw InputError("unknown family " + spec.name);
  for (const auto& [key, value] : spec.params) {
    if (std::find(info->params.begin(), info->params.end(), key) == info->params.end()) {
      throw InputError("family " + spec.name + " has no parameter " + key);
    }
  }
  auto param = [&](const std::string& key) {
    auto it = spec.params.find(key);
    return it == spec.params.end() ? std::size_t{1} : it->second;
  };
  if (spec.name == "planarity-pair") return gen_planarity_pair(param("q"));
  if (spec.name == "cycle-pair") return gen_cycle_pair(param("q"));
  if (spec.name == "apex-clique-pair") return gen_apex_clique_pair(param("q"), param("k"));
  if (spec.name == "dp-pair") return gen_dp_pair(param("q"), param("k"));
  if (spec.name == "bipartite-pair") return gen_bipartite_pair(param("q"));
  throw InputError("unknown family " + spec.name);
}

}  // namespace seplogic
