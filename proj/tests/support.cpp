#include "support.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace testsupport {

namespace {

std::uint64_t canonical_mask(std::size_t n, std::uint64_t mask, const std::vector<std::pair<Vertex, Vertex>>& slots) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::size_t> index(n * n, 0);
  for (std::size_t i = 0; i < slots.size(); ++i) index[slots[i].first * n + slots[i].second] = i;
  std::uint64_t best = UINT64_MAX;
  do {
    std::uint64_t image = 0;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (((mask >> i) & 1U) == 0) continue;
      Vertex a = perm[slots[i].first];
      Vertex b = perm[slots[i].second];
      if (a > b) std::swap(a, b);
      image |= std::uint64_t{1} << index[a * n + b];
    }
    best = std::min(best, image);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<Graph> enumerate_classes(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> slots;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  }
  std::set<std::uint64_t> seen;
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    const std::uint64_t canon = canonical_mask(n, mask, slots);
    if (canon != mask || !seen.insert(canon).second) continue;
    Graph g(n);
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if ((mask >> i) & 1U) g.add_edge(slots[i].first, slots[i].second);
    }
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

const std::vector<Graph>& graphs_on(std::size_t n) {
  static std::map<std::size_t, std::vector<Graph>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerate_classes(n)).first;
  return it->second;
}

std::vector<Graph> all_graphs_up_to(std::size_t max_n) {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto& part = graphs_on(n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Graph random_graph(std::mt19937_64& rng, std::size_t min_n, std::size_t max_n) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(min_n, max_n)(rng);
  const double p = std::uniform_real_distribution<double>(0.15, 0.85)(rng);
  std::bernoulli_distribution edge(p);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (edge(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

const std::vector<Graph>& random_corpus() {
  static const std::vector<Graph> corpus = [] {
    std::mt19937_64 rng(20240607);
    std::vector<Graph> out;
    for (int i = 0; i < 200; ++i) out.push_back(random_graph(rng, 1, 7));
    return out;
  }();
  return corpus;
}

std::vector<Graph> atom_corpus() {
  auto out = all_graphs_up_to(5);
  const auto& random = random_corpus();
  out.insert(out.end(), random.begin(), random.end());
  return out;
}

bool reachable_avoiding(const Graph& g, Vertex u, Vertex v, const std::vector<Vertex>& deleted) {
  std::vector<char> blocked(g.order(), 0);
  for (Vertex z : deleted) blocked[z] = 1;
  if (blocked[u] || blocked[v]) return false;
  std::vector<char> seen(g.order(), 0);
  std::deque<Vertex> queue{u};
  seen[u] = 1;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    if (x == v) return true;
    for (Vertex y = 0; y < g.order(); ++y) {
      if (g.adjacent(x, y) && !blocked[y] && !seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  }
  return false;
}

std::vector<std::vector<Vertex>> simple_paths(const Graph& g, Vertex s, Vertex t) {
  std::vector<std::vector<Vertex>> out;
  if (s == t) return {{s}};
  std::vector<Vertex> path{s};
  std::vector<char> on(g.order(), 0);
  on[s] = 1;
  auto extend = [&](auto&& self) -> void {
    const Vertex last = path.back();
    for (Vertex y = 0; y < g.order(); ++y) {
      if (!g.adjacent(last, y) || on[y]) continue;
      path.push_back(y);
      if (y == t) {
        out.push_back(path);
      } else {
        on[y] = 1;
        self(self);
        on[y] = 0;
      }
      path.pop_back();
    }
  };
  extend(extend);
  return out;
}

namespace {

bool compatible(const std::vector<Vertex>& p, const std::vector<Vertex>& q) {
  for (Vertex v : p) {
    if (std::find(q.begin(), q.end(), v) == q.end()) continue;
    const bool end_p = v == p.front() || v == p.back();
    const bool end_q = v == q.front() || v == q.back();
    if (!end_p || !end_q) return false;
  }
  return true;
}

}  // namespace

bool path_system_exists(const Graph& g, const std::vector<VertexPair>& pairs) {
  std::vector<std::vector<std::vector<Vertex>>> options;
  for (auto [s, t] : pairs) {
    options.push_back(simple_paths(g, s, t));
    if (options.back().empty()) return false;
  }
  std::vector<const std::vector<Vertex>*> chosen;
  auto search = [&](auto&& self, std::size_t i) -> bool {
    if (i == options.size()) return true;
    for (const auto& p : options[i]) {
      bool ok = std::all_of(chosen.begin(), chosen.end(), [&](const auto* q) { return compatible(p, *q); });
      if (!ok) continue;
      chosen.push_back(&p);
      if (self(self, i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return search(search, 0);
}

bool RootedTree::is_proper_ancestor(Vertex a, Vertex b) const {
  while (b != root) {
    b = parent[b];
    if (b == a) return true;
  }
  return false;
}

seplogic::RelationalStructure RootedTree::structure() const {
  const std::size_t n = graph.order();
  std::map<std::string, seplogic::Relation> rels;
  rels["E"].arity = 2;
  for (auto [u, v] : graph.edges()) {
    rels["E"].tuples.insert({u, v});
    rels["E"].tuples.insert({v, u});
  }
  rels["R"].arity = 1;
  rels["R"].tuples.insert({root});
  rels["Less"].arity = 2;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = 0; b < n; ++b) {
      if (is_proper_ancestor(a, b)) rels["Less"].tuples.insert({a, b});
    }
  }
  return seplogic::RelationalStructure(n, std::move(rels));
}

RootedTree random_rooted_tree(std::mt19937_64& rng, std::size_t n) {
  std::vector<Vertex> label(n);
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  RootedTree t;
  t.graph = Graph(n);
  t.parent.assign(n, 0);
  t.root = label[0];
  t.parent[t.root] = t.root;
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t p = std::uniform_int_distribution<std::size_t>(0, i - 1)(rng);
    t.parent[label[i]] = label[p];
    t.graph.add_edge(label[i], label[p]);
  }
  return t;
}

Graph shuffled(std::mt19937_64& rng, const Graph& g) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  Graph out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

bool next_tuple(std::vector<Vertex>& tuple, std::size_t n) {
  for (auto& x : tuple) {
    if (++x < n) return true;
    x = 0;
  }
  return false;
}

}  // namespace testsupport
