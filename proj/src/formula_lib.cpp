#include "seplogic/formula_lib.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "seplogic/errors.hpp"

namespace seplogic {

Formula connectivity() { return forall("x", forall("y", conn("x", "y"))); }

Formula k_connectivity(std::size_t k) {
  if (k == 0) return connectivity();
  std::vector<Var> zs;
  std::vector<Formula> guards;
  for (std::size_t i = 1; i <= k; ++i) {
    Var z = "z" + std::to_string(i);
    guards.push_back(conjunction(neq("x", z), neq("y", z)));
    zs.push_back(z);
  }
  Formula body = implication(conjunction(std::move(guards)), conn("x", "y", zs));
  std::vector<Var> all{"x", "y"};
  all.insert(all.end(), zs.begin(), zs.end());
  return forall(all, body);
}

Formula acyclic() {
  Formula witness = exists("z", conjunction(conn("z", "x", {"y"}), conn("z", "y", {"x"})));
  return negation(exists("x", exists("y", conjunction(rel("E", {"x", "y"}), witness))));
}

Formula fvs(std::size_t k) {
  const Formula base = acyclic();
  FreshNames fresh(base);
  std::vector<Var> zs;
  for (std::size_t i = 0; i < k; ++i) zs.push_back(fresh.next());
  Formula f = base;
  for (std::size_t i = k; i-- > 0;) f = exists(zs[i], del_relativize(zs[i], f));
  return f;
}

Formula edgeless() { return forall("x", forall("y", negation(rel("E", {"x", "y"})))); }

Formula elimination_distance_formula(std::size_t k, const Formula& class_sentence) {
  if (!free_variables(class_sentence).empty()) {
    throw InputError("elimination distance: the class formula must be a sentence");
  }
  Formula ed = class_sentence;
  for (std::size_t j = 0; j < k; ++j) {
    FreshNames fresh(ed);
    Var x = fresh.next();
    Var y = fresh.next();
    Formula step = comp_relativize(x, exists(y, del_relativize(y, ed)));
    ed = disjunction(ed, forall(x, step));
  }
  return ed;
}

Formula conn_via_dp(const Var& x, const Var& y, const std::vector<Var>& zs) {
  std::vector<VarPair> pairs{{x, y}};
  std::vector<Formula> parts;
  for (const auto& z : zs) pairs.emplace_back(z, z);
  parts.push_back(dp(std::move(pairs)));
  for (const auto& z : zs) parts.push_back(conjunction(neq(z, x), neq(z, y)));
  return conjunction(std::move(parts));
}

Formula topological_minor_formula(const Graph& h) {
  if (h.order() == 0) throw InputError("topological minor: pattern graph has no vertices");
  FreshNames fresh;
  std::vector<Var> xs;
  for (Vertex v = 0; v < h.order(); ++v) xs.push_back(fresh.next());
  std::vector<Formula> parts;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) parts.push_back(neq(xs[i], xs[j]));
  }
  std::vector<VarPair> pairs;
  for (auto [u, v] : h.edges()) pairs.emplace_back(xs[u], xs[v]);
  for (Vertex v = 0; v < h.order(); ++v) {
    if (h.degree(v) == 0) pairs.emplace_back(xs[v], xs[v]);
  }
  parts.push_back(dp(std::move(pairs)));
  return exists(xs, conjunction(std::move(parts)));
}

namespace {

// Tree with `leaves` labelled leaves: attach[l] is the internal node next to
// leaf l; internal nodes are 0..internal-1.
struct LeafTree {
  std::size_t internal = 1;
  std::vector<std::size_t> attach;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

std::vector<LeafTree> leaf_trees(std::size_t leaves) {
  std::vector<LeafTree> trees{LeafTree{1, std::vector<std::size_t>(std::min<std::size_t>(leaves, 3), 0), {}}};
  for (std::size_t leaf = 3; leaf < leaves; ++leaf) {
    std::vector<LeafTree> next;
    for (const auto& t : trees) {
      for (std::size_t node = 0; node < t.internal; ++node) {
        LeafTree u = t;
        u.attach.push_back(node);
        next.push_back(std::move(u));
      }
      for (std::size_t e = 0; e < t.edges.size(); ++e) {
        LeafTree u = t;
        const std::size_t c = u.internal++;
        auto [a, b] = u.edges[e];
        u.edges[e] = {a, c};
        u.edges.emplace_back(c, b);
        u.attach.push_back(c);
        next.push_back(std::move(u));
      }
      for (std::size_t l = 0; l < t.attach.size(); ++l) {
        LeafTree u = t;
        const std::size_t c = u.internal++;
        u.edges.emplace_back(u.attach[l], c);
        u.attach[l] = c;
        u.attach.push_back(c);
        next.push_back(std::move(u));
      }
    }
    trees = std::move(next);
  }
  return trees;
}

Graph expand(const Graph& h, const std::vector<const LeafTree*>& choice) {
  std::vector<std::size_t> offset(h.order() + 1, 0);
  for (Vertex v = 0; v < h.order(); ++v) offset[v + 1] = offset[v] + choice[v]->internal;
  Graph g(offset.back());
  auto node_for = [&](Vertex v, Vertex neighbor) {
    auto nbrs = h.neighbors(v);
    auto index = static_cast<std::size_t>(std::lower_bound(nbrs.begin(), nbrs.end(), neighbor) - nbrs.begin());
    return offset[v] + choice[v]->attach[index];
  };
  for (Vertex v = 0; v < h.order(); ++v) {
    for (auto [a, b] : choice[v]->edges) g.add_edge(offset[v] + a, offset[v] + b);
  }
  for (auto [u, w] : h.edges()) g.add_edge(node_for(u, w), node_for(w, u));
  return g;
}

}  // namespace

std::vector<Graph> topological_expansion_family(const Graph& h) {
  std::map<std::size_t, std::vector<LeafTree>> trees_by_degree;
  std::vector<LeafTree> stars(h.order());
  std::vector<std::vector<const LeafTree*>> options(h.order());
  for (Vertex v = 0; v < h.order(); ++v) {
    const std::size_t d = h.degree(v);
    stars[v] = LeafTree{1, std::vector<std::size_t>(d, 0), {}};
    if (d < 4) {
      options[v] = {&stars[v]};
      continue;
    }
    auto [it, inserted] = trees_by_degree.try_emplace(d);
    if (inserted) it->second = leaf_trees(d);
    for (const auto& t : it->second) options[v].push_back(&t);
  }

  std::vector<Graph> family;
  std::vector<const LeafTree*> choice(h.order());
  std::function<void(Vertex)> walk = [&](Vertex v) {
    if (v == h.order()) {
      Graph g = expand(h, choice);
      for (const auto& member : family) {
        if (are_isomorphic(member, g)) return;
      }
      family.push_back(std::move(g));
      return;
    }
    for (const LeafTree* t : options[v]) {
      choice[v] = t;
      walk(v + 1);
    }
  };
  walk(0);
  return family;
}

Formula minor_formula(const Graph& h) {
  std::vector<Formula> parts;
  for (const auto& member : topological_expansion_family(h)) parts.push_back(topological_minor_formula(member));
  return disjunction(std::move(parts));
}

Formula planarity_formula() {
  return conjunction(negation(minor_formula(complete_graph(5))),
                     negation(minor_formula(complete_bipartite_graph(3, 3))));
}

Formula tree_order_via_conn(const Var& x, const Var& y) {
  FreshNames fresh;
  fresh.reserve(x);
  fresh.reserve(y);
  Var r = fresh.next();
  return exists(r, conjunction({rel(kRootSymbol, {r}), conn(x, r, {y}), negation(conn(y, r, {x}))}));
}

namespace {

Formula less(const Var& a, const Var& b) { return rel(kAncestorSymbol, {a, b}); }
Formula less_eq(const Var& a, const Var& b) { return disjunction(less(a, b), eq(a, b)); }

}  // namespace

Formula conn_via_order(const Var& x, const Var& y, const std::vector<Var>& zs) {
  FreshNames fresh;
  fresh.reserve(x);
  fresh.reserve(y);
  for (const auto& z : zs) fresh.reserve(z);
  const Var w = fresh.next();
  const Var w2 = fresh.next();
  Formula lca = conjunction(
      {less_eq(w, x), less_eq(w, y),
       negation(exists(w2, conjunction({less(w, w2), less_eq(w2, x), less_eq(w2, y)})))});
  std::vector<Formula> parts{lca};
  for (const auto& z : zs) {
    parts.push_back(negation(disjunction(conjunction(less_eq(w, z), less_eq(z, x)),
                                         conjunction(less_eq(w, z), less_eq(z, y)))));
  }
  return exists(w, conjunction(std::move(parts)));
}

namespace {

std::vector<Var> numbered(const std::string& stem, std::size_t count) {
  std::vector<Var> out;
  for (std::size_t i = 1; i <= count; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

Graph named_graph(const std::string& name) {
  if (name == "K3") return complete_graph(3);
  if (name == "K4") return complete_graph(4);
  if (name == "K5") return complete_graph(5);
  if (name == "C4") return cycle_graph(4);
  if (name == "K33") return complete_bipartite_graph(3, 3);
  throw InputError("unknown pattern graph " + name);
}

}  // namespace

const std::vector<LibraryEntry>& library_entries() {
  static const std::vector<LibraryEntry> entries{
      {"connectivity", "", "the graph is connected"},
      {"k-connectivity", "K", "(K+1)-connectivity with a conn_K atom"},
      {"acyclic", "", "the graph is a forest"},
      {"fvs", "K", "a feedback vertex set of K distinct vertices exists"},
      {"edgeless", "", "no edges"},
      {"ed-edgeless", "K", "elimination distance at most K to the edgeless graphs"},
      {"conn-via-dp", "K", "conn_K(x, y | z1..zK) through a disjoint-paths atom"},
      {"top-minor", "K3|K4|K5|C4|K33", "the pattern is a topological minor"},
      {"minor", "K3|K4|K5|C4|K33", "the pattern is a minor"},
      {"planarity", "", "no K5 and no K3,3 minor"},
      {"tree-order", "", "x is a proper ancestor of y (uses R)"},
      {"conn-via-order", "K", "conn_K(x, y | z1..zK) on rooted trees (uses Less)"},
  };
  return entries;
}

Formula build_library_formula(const std::string& name, const std::vector<std::string>& params) {
  auto want = [&](std::size_t count) {
    if (params.size() != count) {
      throw InputError("builder " + name + " takes " + std::to_string(count) + " parameter(s), got " +
                       std::to_string(params.size()));
    }
  };
  auto number = [&]() -> std::size_t {
    want(1);
    const auto& text = params[0];
    if (text.empty() || text.size() > 6 || text.find_first_not_of("0123456789") != std::string::npos) {
      throw InputError("builder " + name + " expects a small non-negative integer, got '" + text + "'");
    }
    return std::stoul(text);
  };
  if (name == "connectivity") return want(0), connectivity();
  if (name == "k-connectivity") return k_connectivity(number());
  if (name == "acyclic") return want(0), acyclic();
  if (name == "fvs") return fvs(number());
  if (name == "edgeless") return want(0), edgeless();
  if (name == "ed-edgeless") return elimination_distance_formula(number(), edgeless());
  if (name == "conn-via-dp") return conn_via_dp("x", "y", numbered("z", number()));
  if (name == "top-minor") return want(1), topological_minor_formula(named_graph(params[0]));
  if (name == "minor") return want(1), minor_formula(named_graph(params[0]));
  if (name == "planarity") return want(0), planarity_formula();
  if (name == "tree-order") return want(0), tree_order_via_conn("x", "y");
  if (name == "conn-via-order") return conn_via_order("x", "y", numbered("z", number()));
  throw InputError("unknown builder " + name);
}

}  // namespace seplogic
