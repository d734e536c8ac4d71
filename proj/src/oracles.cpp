#include "seplogic/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "seplogic/errors.hpp"

namespace seplogic {

namespace {

/// Vertices reachable from `source` without entering `blocked` (source itself may be blocked).
std::vector<char> reachable(const Graph& g, Vertex source, const std::vector<char>& blocked) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{source};
  seen[source] = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w] && !blocked[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace

bool connected_after_deletion(const Graph& g, Vertex u, Vertex v, std::span<const Vertex> deleted) {
  g.check_vertex(u);
  g.check_vertex(v);
  std::vector<char> blocked(g.order(), 0);
  for (Vertex z : deleted) {
    g.check_vertex(z);
    blocked[z] = 1;
  }
  if (blocked[u] || blocked[v]) return false;
  if (u == v) return true;
  return reachable(g, u, blocked)[v] != 0;
}

bool is_k_connected(const Graph& g, std::size_t k) {
  const std::size_t n = g.order();
  if (n <= k) return false;
  // Every X with |X| < k, via combinations of each size.
  for (std::size_t size = 0; size < k; ++size) {
    std::vector<std::size_t> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      VertexSet removed(n, pick);
      if (!is_connected(g.without(removed))) return false;
      // next combination
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return true;
}

namespace {

struct FailedState {
  std::size_t pair_index;
  VertexSet blocked;
  friend bool operator==(const FailedState&, const FailedState&) = default;
};

struct FailedStateHash {
  std::size_t operator()(const FailedState& s) const { return s.blocked.hash() * 31 + s.pair_index; }
};

class DisjointPathSearch {
 public:
  DisjointPathSearch(const Graph& g, std::span<const VertexPair> pairs)
      : g_(g), pairs_(pairs.begin(), pairs.end()), paths_(pairs.size()), blocked_(g.order()),
        last_hard_(pairs.size()), current_(pairs.size()) {
    // Endpoints may never be internal vertices of any path.
    for (auto [x, y] : pairs_) {
      blocked_.insert(x);
      blocked_.insert(y);
    }
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      if (is_hard(i)) last_hard_ = i;
    }
  }

  std::optional<std::vector<Path>> run() {
    if (!route(0)) return std::nullopt;
    return paths_;
  }

 private:
  // A pair needing internal vertices: distinct, non-adjacent endpoints.
  bool is_hard(std::size_t i) const {
    auto [x, y] = pairs_[i];
    return x != y && !g_.adjacent(x, y);
  }

  bool route(std::size_t i) {
    if (i == pairs_.size()) return true;
    auto [x, y] = pairs_[i];
    if (x == y) {
      paths_[i] = Path{{x}};
      return route(i + 1);
    }
    if (g_.adjacent(x, y)) {
      // The direct edge uses no internal vertex, so it dominates every other route.
      paths_[i] = Path{{x, y}};
      return route(i + 1);
    }
    FailedState key{i, blocked_};
    if (failed_.contains(key)) return false;
    if (!remaining_routable(i)) {
      failed_.insert(std::move(key));
      return false;
    }
    if (i == last_hard_) {
      paths_[i] = shortest_route(x, y);
      return route(i + 1);
    }
    std::size_t free = g_.order() - blocked_.count();
    for (std::size_t length = 1; length <= free; ++length) {
      current_[i] = {x};
      if (extend(i, x, y, length)) return true;
    }
    failed_.insert(std::move(key));
    return false;
  }

  // Depth-first enumeration of x..y paths with exactly `length` internal vertices.
  bool extend(std::size_t i, Vertex last, Vertex target, std::size_t length) {
    if (current_[i].size() - 1 == length) {
      if (!g_.adjacent(last, target)) return false;
      current_[i].push_back(target);
      paths_[i] = Path{current_[i]};
      current_[i].pop_back();
      for (std::size_t j = 1; j < paths_[i].vertices.size() - 1; ++j) blocked_.insert(paths_[i].vertices[j]);
      if (route(i + 1)) return true;
      for (std::size_t j = 1; j < paths_[i].vertices.size() - 1; ++j) blocked_.erase(paths_[i].vertices[j]);
      return false;
    }
    for (Vertex w : g_.neighbors(last)) {
      if (blocked_.contains(w) || std::find(current_[i].begin(), current_[i].end(), w) != current_[i].end()) continue;
      current_[i].push_back(w);
      bool done = extend(i, w, target, length);
      current_[i].pop_back();
      if (done) return true;
    }
    return false;
  }

  std::vector<char> blocked_mask() const {
    std::vector<char> mask(g_.order(), 0);
    for (Vertex v = 0; v < g_.order(); ++v) mask[v] = blocked_.contains(v) ? 1 : 0;
    return mask;
  }

  bool remaining_routable(std::size_t from) const {
    auto mask = blocked_mask();
    for (std::size_t j = from; j < pairs_.size(); ++j) {
      if (!is_hard(j)) continue;
      auto [x, y] = pairs_[j];
      // y is blocked as an endpoint; it is a legitimate target here.
      mask[y] = 0;
      bool ok = reachable(g_, x, mask)[y] != 0;
      mask[y] = 1;
      if (!ok) return false;
    }
    return true;
  }

  Path shortest_route(Vertex x, Vertex y) const {
    std::vector<Vertex> parent(g_.order(), g_.order());
    std::vector<Vertex> queue{x};
    parent[x] = x;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex v = queue[head];
      for (Vertex w : g_.neighbors(v)) {
        if (parent[w] != g_.order()) continue;
        if (w != y && blocked_.contains(w)) continue;
        parent[w] = v;
        queue.push_back(w);
      }
    }
    Path p;
    for (Vertex v = y; v != x; v = parent[v]) p.vertices.push_back(v);
    p.vertices.push_back(x);
    std::reverse(p.vertices.begin(), p.vertices.end());
    return p;
  }

  const Graph& g_;
  std::vector<VertexPair> pairs_;
  std::vector<Path> paths_;
  VertexSet blocked_;
  std::size_t last_hard_;
  // Partial path under construction, one per pair.
  std::vector<std::vector<Vertex>> current_;
  std::unordered_set<FailedState, FailedStateHash> failed_;
};

}  // namespace

std::optional<std::vector<Path>> find_disjoint_paths(const Graph& g, std::span<const VertexPair> pairs) {
  if (pairs.empty()) throw InputError("disjoint paths: at least one pair required");
  for (auto [x, y] : pairs) {
    g.check_vertex(x);
    g.check_vertex(y);
  }
  return DisjointPathSearch(g, pairs).run();
}

bool disjoint_paths_exist(const Graph& g, std::span<const VertexPair> pairs) {
  return find_disjoint_paths(g, pairs).has_value();
}

bool has_cycle(const Graph& g) {
  // A forest has exactly n - c edges.
  return g.size() + connected_components(g).size() > g.order();
}

bool is_bipartite(const Graph& g) {
  std::vector<int> colour(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::vector<Vertex> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex v = queue[head];
      for (Vertex w : g.neighbors(v)) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[v];
          queue.push_back(w);
        } else if (colour[w] == colour[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

class InjectionSearch {
 public:
  InjectionSearch(const Graph& h, const Graph& g) : h_(h), g_(g), image_(h.order()), used_(g.order(), 0) {}

  bool run() { return place(0); }

 private:
  bool place(Vertex v) {
    if (v == h_.order()) return linkable();
    for (Vertex w = 0; w < g_.order(); ++w) {
      if (used_[w] || g_.degree(w) < h_.degree(v)) continue;
      image_[v] = w;
      used_[w] = 1;
      if (place(v + 1)) return true;
      used_[w] = 0;
    }
    return false;
  }

  bool linkable() const {
    std::vector<VertexPair> pairs;
    for (auto [u, v] : h_.edges()) pairs.emplace_back(image_[u], image_[v]);
    for (Vertex v = 0; v < h_.order(); ++v) {
      if (h_.degree(v) == 0) pairs.emplace_back(image_[v], image_[v]);
    }
    return disjoint_paths_exist(g_, pairs);
  }

  const Graph& h_;
  const Graph& g_;
  std::vector<Vertex> image_;
  std::vector<char> used_;
};

/// Enumerates partial partitions of V(g) into exactly |V(h)| blocks as
/// restricted growth strings (block ids appear in order of first use), then
/// tests connectivity of every block and whether h embeds into the quotient.
class BranchSetSearch {
 public:
  BranchSetSearch(const Graph& h, const Graph& g)
      : h_(h), g_(g), blocks_(h.order()), label_(g.order(), kUnused) {}

  bool run() { return assign(0, 0); }

 private:
  static constexpr std::size_t kUnused = static_cast<std::size_t>(-1);

  bool assign(Vertex v, std::size_t used_blocks) {
    const std::size_t n = g_.order();
    if (used_blocks + (n - v) < blocks_) return false;
    if (v == n) return used_blocks == blocks_ && check_model();
    label_[v] = kUnused;
    if (assign(v + 1, used_blocks)) return true;
    for (std::size_t b = 0; b < used_blocks; ++b) {
      label_[v] = b;
      if (assign(v + 1, used_blocks)) return true;
    }
    if (used_blocks < blocks_) {
      label_[v] = used_blocks;
      if (assign(v + 1, used_blocks + 1)) return true;
    }
    label_[v] = kUnused;
    return false;
  }

  bool check_model() {
    const std::size_t n = g_.order();
    // Each block connected.
    for (std::size_t b = 0; b < blocks_; ++b) {
      std::vector<char> outside(n, 0);
      Vertex start = n;
      for (Vertex v = 0; v < n; ++v) {
        outside[v] = label_[v] != b;
        if (!outside[v] && start == n) start = v;
      }
      auto seen = reachable(g_, start, outside);
      for (Vertex v = 0; v < n; ++v) {
        if (!outside[v] && !seen[v]) return false;
      }
    }
    quotient_.assign(blocks_ * blocks_, 0);
    for (auto [u, v] : g_.edges()) {
      if (label_[u] == kUnused || label_[v] == kUnused || label_[u] == label_[v]) continue;
      quotient_[label_[u] * blocks_ + label_[v]] = 1;
      quotient_[label_[v] * blocks_ + label_[u]] = 1;
    }
    image_.assign(blocks_, 0);
    taken_.assign(blocks_, 0);
    return embed(0);
  }

  // Bijection from V(h) to blocks preserving edges of h.
  bool embed(Vertex v) {
    if (v == h_.order()) return true;
    for (std::size_t b = 0; b < blocks_; ++b) {
      if (taken_[b]) continue;
      bool ok = true;
      for (Vertex u : h_.neighbors(v)) {
        if (u < v && !quotient_[image_[u] * blocks_ + b]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image_[v] = b;
      taken_[b] = 1;
      if (embed(v + 1)) return true;
      taken_[b] = 0;
    }
    return false;
  }

  const Graph& h_;
  const Graph& g_;
  std::size_t blocks_;
  std::vector<std::size_t> label_;
  std::vector<char> quotient_;
  std::vector<std::size_t> image_;
  std::vector<char> taken_;
};

}  // namespace

bool is_topological_minor(const Graph& h, const Graph& g) {
  if (h.order() == 0) return true;
  if (h.order() > g.order() || h.size() > g.size()) return false;
  return InjectionSearch(h, g).run();
}

bool is_minor(const Graph& h, const Graph& g) {
  if (h.order() == 0) return true;
  if (h.order() > g.order() || h.size() > g.size()) return false;
  return BranchSetSearch(h, g).run();
}

namespace {

// Removes vertices of degree <= 1 and suppresses degree-2 vertices until
// neither applies. Both operations preserve planarity.
Graph planarity_kernel(Graph g) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.degree(v) > 2) continue;
      Graph next = g;
      if (g.degree(v) == 2) {
        Vertex a = g.neighbors(v)[0];
        Vertex b = g.neighbors(v)[1];
        next.add_edge(a, b);
      }
      VertexSet removed(g.order());
      removed.insert(v);
      g = next.without(removed);
      changed = true;
      break;
    }
  }
  return g;
}

}  // namespace

bool is_planar(const Graph& g) {
  const Graph k5 = complete_graph(5);
  const Graph k33 = complete_bipartite_graph(3, 3);
  for (const auto& component : connected_components(g)) {
    Graph kernel = planarity_kernel(g.induced(component));
    const std::size_t n = kernel.order();
    if (n <= 4) continue;
    if (kernel.size() > 3 * n - 6) return false;
    if (is_minor(k5, kernel) || is_minor(k33, kernel)) return false;
  }
  return true;
}

std::size_t min_fvs_size(const Graph& g) {
  const std::size_t n = g.order();
  for (std::size_t size = 0; size <= n; ++size) {
    std::vector<std::size_t> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      if (!has_cycle(g.without(VertexSet(n, pick)))) return size;
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return n;
}

namespace {

bool elimination_distance_at_most(const Graph& g, const GraphPredicate& in_class, std::size_t d) {
  if (in_class(g)) return true;
  if (d == 0) return false;
  for (const auto& component : connected_components(g)) {
    Graph piece = g.induced(component);
    bool reducible = false;
    for (Vertex v = 0; v < piece.order() && !reducible; ++v) {
      VertexSet removed(piece.order());
      removed.insert(v);
      reducible = elimination_distance_at_most(piece.without(removed), in_class, d - 1);
    }
    if (!reducible) return false;
  }
  return true;
}

}  // namespace

std::optional<std::size_t> elimination_distance(const Graph& g, const GraphPredicate& in_class,
                                                std::size_t budget) {
  for (std::size_t d = 0; d <= budget; ++d) {
    if (elimination_distance_at_most(g, in_class, d)) return d;
  }
  return std::nullopt;
}

bool AtomCache::conn(Vertex u, Vertex v, std::span<const Vertex> deleted) {
  std::vector<Vertex> key{u, v};
  key.insert(key.end(), deleted.begin(), deleted.end());
  auto it = conn_.find(key);
  if (it != conn_.end()) return it->second;
  bool value = connected_after_deletion(*graph_, u, v, deleted);
  conn_.emplace(std::move(key), value);
  return value;
}

bool AtomCache::dp(std::span<const VertexPair> pairs) {
  std::vector<Vertex> key;
  for (auto [x, y] : pairs) {
    key.push_back(x);
    key.push_back(y);
  }
  auto it = dp_.find(key);
  if (it != dp_.end()) return it->second;
  bool value = disjoint_paths_exist(*graph_, pairs);
  dp_.emplace(std::move(key), value);
  return value;
}

}  // namespace seplogic
