#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace seplogic {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Fixed-universe bitset over vertex ids 0..universe-1.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::span<const Vertex> members);

  std::size_t universe() const { return universe_; }
  bool contains(Vertex v) const {
    return v < universe_ && ((words_[v / 64] >> (v % 64)) & 1U) != 0;
  }
  void insert(Vertex v) { words_[v / 64] |= std::uint64_t{1} << (v % 64); }
  void erase(Vertex v) { words_[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  std::vector<Vertex> elements() const;
  std::size_t hash() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

/// Finite simple undirected graph on vertices 0..order()-1.
///
/// Loops are rejected and parallel edges collapse, so `size()` always counts
/// unordered pairs.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t order);
  Graph(std::size_t order, std::span<const Edge> edges);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return size_; }

  /// Adds {u, v}. Returns false if the edge was already present.
  bool add_edge(Vertex u, Vertex v);
  bool adjacent(Vertex u, Vertex v) const { return matrix_[u * order() + v] != 0; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  /// Subgraph induced on `keep`; vertex keep[i] becomes i.
  Graph induced(std::span<const Vertex> keep) const;
  /// Subgraph induced on the complement of `removed`, renumbered in increasing order.
  Graph without(const VertexSet& removed) const;
  /// Vertices of `other` are shifted by order().
  Graph disjoint_union(const Graph& other) const;

  void check_vertex(Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_.size() == b.adjacency_.size() && a.matrix_ == b.matrix_;
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<char> matrix_;
};

/// A simple path given by its vertex sequence. A single vertex is a path of length 0.
struct Path {
  std::vector<Vertex> vertices;

  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  std::span<const Vertex> internal() const {
    if (vertices.size() <= 2) return {};
    return std::span<const Vertex>(vertices).subspan(1, vertices.size() - 2);
  }
  /// Distinct vertices, consecutive entries adjacent in `g`.
  bool is_valid_in(const Graph& g) const;
};

/// Vertex sets of the connected components, each sorted, ordered by least vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// Backtracking isomorphism test with degree refinement.
bool are_isomorphic(const Graph& a, const Graph& b);

Graph complete_graph(std::size_t n);
/// C_n for n >= 3; n = 1 and n = 2 give K1 and K2.
Graph cycle_graph(std::size_t n);
/// Path on n vertices 0-1-...-(n-1).
Graph path_graph(std::size_t n);
/// K_{a,b} with parts {0..a-1} and {a..a+b-1}.
Graph complete_bipartite_graph(std::size_t a, std::size_t b);

}  // namespace seplogic
