#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "seplogic/formula.hpp"
#include "seplogic/graph.hpp"

namespace seplogic {

/// Unary relation marking the root of a rooted tree.
inline constexpr const char* kRootSymbol = "R";
/// Binary strict ancestor relation on a rooted tree: Less(a, b) iff a is a
/// proper ancestor of b.
inline constexpr const char* kAncestorSymbol = "Less";

/// forall x. forall y. conn(x, y |)
Formula connectivity();

/// (k+1)-connectivity with one conn_k atom over variables x, y, z1..zk.
/// k = 0 gives connectivity().
Formula k_connectivity(std::size_t k);

/// Negation of: exists x, y with E(x, y) and a z reaching x without y and y without x.
Formula acyclic();

/// exists z1 del(z1)[ ... exists zk del(zk)[acyclic()] ... ]. The zi range over
/// distinct vertices.
Formula fvs(std::size_t k);

/// forall x. forall y. !E(x, y)
Formula edgeless();

/// ed_0 = class_sentence and ed_{j+1} = ed_j | forall x. (exists y. del(y)[ed_j])^[comp(x)].
/// Throws InputError if class_sentence has free variables.
Formula elimination_distance_formula(std::size_t k, const Formula& class_sentence);

/// dp[(x, y), (z1, z1), ...] & z1 != x & z1 != y & ...; free variables x, y, zs.
Formula conn_via_dp(const Var& x, const Var& y, const std::vector<Var>& zs);

/// Distinct branch vertices plus one dp atom linking every edge of h, with a
/// trivial pair for each isolated vertex. Throws InputError on an empty h.
Formula topological_minor_formula(const Graph& h);

/// Graphs obtained from h by replacing each vertex of degree d >= 4 with a tree
/// whose internal nodes have degree >= 3 and whose d leaves carry the incident
/// edges. Members are pairwise non-isomorphic; h itself comes first.
std::vector<Graph> topological_expansion_family(const Graph& h);

/// Disjunction of topological_minor_formula over the expansion family.
Formula minor_formula(const Graph& h);

/// !minor_formula(K5) & !minor_formula(K_{3,3}).
Formula planarity_formula();

/// Strict ancestor order through R and conn_1; free variables x, y.
Formula tree_order_via_conn(const Var& x, const Var& y);

/// conn_k(x, y | zs) over the ancestor relation Less on rooted trees.
Formula conn_via_order(const Var& x, const Var& y, const std::vector<Var>& zs);

struct LibraryEntry {
  std::string name;
  std::string params;
  std::string summary;
};

/// Builders reachable by name, as used by `seplogic lib` and `lib:NAME:params`.
const std::vector<LibraryEntry>& library_entries();

/// Builds a library formula from its name and textual parameters. Throws
/// InputError for unknown names or bad parameters.
Formula build_library_formula(const std::string& name, const std::vector<std::string>& params);

}  // namespace seplogic
