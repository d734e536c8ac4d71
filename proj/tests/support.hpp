#pragma once

// Shared fixtures for the unit and acceptance tests: graph corpora and
// oracles written independently of the library's own search code.

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "seplogic/graph.hpp"
#include "seplogic/oracles.hpp"
#include "seplogic/structure.hpp"

namespace testsupport {

using seplogic::Graph;
using seplogic::Vertex;
using seplogic::VertexPair;

/// One representative per isomorphism class of graphs on exactly n vertices (n <= 6).
const std::vector<Graph>& graphs_on(std::size_t n);

/// Representatives of all graphs with 1..max_n vertices.
std::vector<Graph> all_graphs_up_to(std::size_t max_n);

/// G(n, p) with n uniform in [min_n, max_n] and p uniform in [0.15, 0.85].
Graph random_graph(std::mt19937_64& rng, std::size_t min_n, std::size_t max_n);

/// 200 random graphs on 1..7 vertices from a fixed seed.
const std::vector<Graph>& random_corpus();

/// all_graphs_up_to(5) followed by random_corpus().
std::vector<Graph> atom_corpus();

/// Plain BFS reachability in g minus `deleted`.
bool reachable_avoiding(const Graph& g, Vertex u, Vertex v, const std::vector<Vertex>& deleted);

/// All simple paths from s to t as vertex sequences; {s} when s == t.
std::vector<std::vector<Vertex>> simple_paths(const Graph& g, Vertex s, Vertex t);

/// Tries every combination of simple paths, one per pair, and accepts when any
/// vertex shared by two chosen paths is an endpoint of both.
bool path_system_exists(const Graph& g, const std::vector<VertexPair>& pairs);

/// Rooted tree: parent[root] == root.
struct RootedTree {
  Graph graph;
  std::vector<Vertex> parent;
  Vertex root = 0;

  bool is_proper_ancestor(Vertex a, Vertex b) const;
  /// Structure with E, R (root) and Less (proper ancestor).
  seplogic::RelationalStructure structure() const;
};

/// Random recursive tree on n vertices under a random relabelling.
RootedTree random_rooted_tree(std::mt19937_64& rng, std::size_t n);

/// Graph with vertices renamed by a random permutation.
Graph shuffled(std::mt19937_64& rng, const Graph& g);

/// Odometer over all tuples in {0..n-1}^length.
bool next_tuple(std::vector<Vertex>& tuple, std::size_t n);

}  // namespace testsupport
