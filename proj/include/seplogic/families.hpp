#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "seplogic/games.hpp"
#include "seplogic/graph.hpp"

namespace seplogic {

using GraphPair = std::pair<Graph, Graph>;

// Ladders have vertices v_{i,j} (i in {1,2}, j in 1..n) numbered (j-1)*2 + (i-1).

/// Vertex number of v_{i,j} in the ladders of gen_planarity_pair.
Vertex ladder_vertex(std::size_t i, std::size_t j);

/// Circular ladder and Moebius ladder with n = 2^{q+1} rungs. q >= 1.
GraphPair gen_planarity_pair(std::size_t q);

/// The pins v_{1,1}->v'_{1,1}, v_{2,1}->v'_{2,1}, v_{1,n}->v'_{2,n}, v_{2,n}->v'_{1,n}.
std::vector<PebblePair> planarity_pins(std::size_t q);

/// C_{2^{q+2}} and two copies of C_{2^{q+1}}.
GraphPair gen_cycle_pair(std::size_t q);

/// gen_cycle_pair(q) with every vertex joined to a new K_{k+1}; the clique
/// occupies the highest vertex numbers.
GraphPair gen_apex_clique_pair(std::size_t q, std::size_t k);

/// Each vertex i becomes the clique {i*m, ..., i*m + m-1}; an edge ij becomes a
/// complete bipartite join of the two cliques. m >= 1.
Graph lexicographic_product(const Graph& g, std::size_t m);

/// C_{2^{q+1}} plus an apex against two copies of C_{2^q} plus an apex, each
/// multiplied lexicographically with K_{2k}. q >= 1, k >= 1.
GraphPair gen_dp_pair(std::size_t q, std::size_t k);

/// (C_{2^q}, C_{2^q + 1}). q >= 1; for q = 1 the first graph is K2.
GraphPair gen_bipartite_pair(std::size_t q);

struct FamilySpec {
  std::string name;
  std::map<std::string, std::size_t> params;
};

struct FamilyInfo {
  std::string name;
  std::vector<std::string> params;
};

const std::vector<FamilyInfo>& family_names();

/// Builds a named family. Missing parameters default to q = 1 and k = 1.
/// Throws InputError for unknown names or parameters out of range.
GraphPair generate_family(const FamilySpec& spec);

}  // namespace seplogic
