#include "seplogic/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <queue>
#include <string>

#include "seplogic/errors.hpp"

namespace seplogic {

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

std::size_t VertexSet::count() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::vector<Vertex> VertexSet::elements() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < universe_; ++v) {
    if (contains(v)) out.push_back(v);
  }
  return out;
}

std::size_t VertexSet::hash() const {
  std::size_t seed = universe_;
  for (auto w : words_) seed ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  return seed;
}

Graph::Graph(std::size_t order) : adjacency_(order), matrix_(order * order, 0) {}

Graph::Graph(std::size_t order, std::span<const Edge> edges) : Graph(order) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(Vertex v) const {
  if (v >= order()) {
    throw InputError("vertex " + std::to_string(v) + " out of range for graph of order " +
                     std::to_string(order()));
  }
}

bool Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  if (adjacent(u, v)) return false;
  matrix_[u * order() + v] = 1;
  matrix_[v * order() + u] = 1;
  adjacency_[u].insert(std::upper_bound(adjacency_[u].begin(), adjacency_[u].end(), v), v);
  adjacency_[v].insert(std::upper_bound(adjacency_[v].begin(), adjacency_[v].end(), u), u);
  ++size_;
  return true;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  Graph sub(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    check_vertex(keep[i]);
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      if (keep[i] != keep[j] && adjacent(keep[i], keep[j])) sub.add_edge(i, j);
    }
  }
  return sub;
}

Graph Graph::without(const VertexSet& removed) const {
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < order(); ++v) {
    if (!removed.contains(v)) keep.push_back(v);
  }
  return induced(keep);
}

Graph Graph::disjoint_union(const Graph& other) const {
  Graph out(order() + other.order());
  for (auto [u, v] : edges()) out.add_edge(u, v);
  for (auto [u, v] : other.edges()) out.add_edge(u + order(), v + order());
  return out;
}

bool Path::is_valid_in(const Graph& g) const {
  if (vertices.empty()) return false;
  std::vector<char> seen(g.order(), 0);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    Vertex v = vertices[i];
    if (v >= g.order() || seen[v]) return false;
    seen[v] = 1;
    if (i > 0 && !g.adjacent(vertices[i - 1], v)) return false;
  }
  return true;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> components;
  std::vector<char> seen(g.order(), 0);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> component{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < component.size(); ++head) {
      for (Vertex w : g.neighbors(component[head])) {
        if (!seen[w]) {
          seen[w] = 1;
          component.push_back(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

namespace {

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Graph& a, const Graph& b) : a_(a), b_(b), map_(a.order()), used_(b.order(), 0) {
    // Map high-degree vertices first; they constrain the search most.
    order_.resize(a.order());
    for (Vertex v = 0; v < a.order(); ++v) order_[v] = v;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex x, Vertex y) { return a.degree(x) > a.degree(y); });
  }

  bool run() { return extend(0); }

 private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    Vertex v = order_[depth];
    for (Vertex w = 0; w < b_.order(); ++w) {
      if (used_[w] || b_.degree(w) != a_.degree(v)) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        Vertex u = order_[i];
        ok = a_.adjacent(u, v) == b_.adjacent(map_[u], w);
      }
      if (!ok) continue;
      map_[v] = w;
      used_[w] = 1;
      if (extend(depth + 1)) return true;
      used_[w] = 0;
    }
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<char> used_;
};

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> degrees;
  for (Vertex v = 0; v < g.order(); ++v) degrees.push_back(g.degree(v));
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

}  // namespace

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (degree_sequence(a) != degree_sequence(b)) return false;
  return IsomorphismSearch(a, b).run();
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph cycle_graph(std::size_t n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
  Graph g(a + b);
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = 0; v < b; ++v) g.add_edge(u, a + v);
  }
  return g;
}

}  // namespace seplogic
