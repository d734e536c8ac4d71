#pragma once

// Brute-force decision procedures for the graph properties the formula
// library expresses. They are exponential and meant for small graphs
// (n <= ~20 for minor and planarity checks, n <= ~60 for the BFS-based ones);
// formula evaluation is tested against them.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "seplogic/graph.hpp"

namespace seplogic {

using VertexPair = std::pair<Vertex, Vertex>;

/// True iff u and v lie in one component of g minus `deleted`. False whenever
/// u or v is itself deleted; true for u == v when u survives.
bool connected_after_deletion(const Graph& g, Vertex u, Vertex v, std::span<const Vertex> deleted);

/// More than k vertices, and g - X connected for every X with |X| < k.
bool is_k_connected(const Graph& g, std::size_t k);

/// Paths P_i linking pairs[i] such that a vertex on two paths is an endpoint of
/// both. A pair (x, x) is linked by the single-vertex path. Pairs are routed in
/// input order, shortest paths first, with failed states memoized.
std::optional<std::vector<Path>> find_disjoint_paths(const Graph& g, std::span<const VertexPair> pairs);

bool disjoint_paths_exist(const Graph& g, std::span<const VertexPair> pairs);

bool has_cycle(const Graph& g);
bool is_bipartite(const Graph& g);

/// Injection of V(h) into V(g) plus internally disjoint paths per edge of h.
bool is_topological_minor(const Graph& h, const Graph& g);

/// Branch-set model: disjoint connected vertex sets of g, one per vertex of h,
/// with an edge between the sets of every edge of h.
bool is_minor(const Graph& h, const Graph& g);

/// No K5 and no K_{3,3} minor. Degree-<=2 reductions and the Euler bound run first.
bool is_planar(const Graph& g);

std::size_t min_fvs_size(const Graph& g);

using GraphPredicate = std::function<bool(const Graph&)>;

/// Least d <= budget with elimination distance d to the class, or nullopt.
std::optional<std::size_t> elimination_distance(const Graph& g, const GraphPredicate& in_class,
                                                std::size_t budget);

struct TupleHash {
  std::size_t operator()(const std::vector<Vertex>& t) const {
    std::size_t seed = t.size();
    for (Vertex v : t) seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    return seed;
  }
};

/// Memoizing front end for the conn and disjoint-paths atoms on one graph.
/// Not synchronized; use one instance per thread.
class AtomCache {
 public:
  explicit AtomCache(const Graph& g) : graph_(&g) {}

  bool conn(Vertex u, Vertex v, std::span<const Vertex> deleted);
  bool dp(std::span<const VertexPair> pairs);
  const Graph& graph() const { return *graph_; }

 private:
  const Graph* graph_;
  std::unordered_map<std::vector<Vertex>, bool, TupleHash> conn_;
  std::unordered_map<std::vector<Vertex>, bool, TupleHash> dp_;
};

}  // namespace seplogic
