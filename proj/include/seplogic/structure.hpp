#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "seplogic/graph.hpp"

namespace seplogic {

using Tuple = std::vector<Vertex>;

struct Relation {
  std::size_t arity = 0;
  std::set<Tuple> tuples;

  friend bool operator==(const Relation&, const Relation&) = default;
};

/// Relation symbol name to arity.
using Signature = std::map<std::string, std::size_t>;

/// Finite relational structure with a non-empty universe 0..size()-1 and a
/// mandatory binary relation "E" that is irreflexive and symmetric.
///
/// Connectivity semantics always refer to the graph (A, E), cached as graph().
class RelationalStructure {
 public:
  /// Throws InputError on an empty universe, a missing or invalid "E", a tuple of
  /// the wrong length, or an element outside the universe.
  RelationalStructure(std::size_t universe_size, std::map<std::string, Relation> relations);

  /// The structure (V(g), E(g)) with no further relations.
  static RelationalStructure from_graph(const Graph& g);

  std::size_t size() const { return universe_size_; }
  const Graph& graph() const { return graph_; }
  const std::map<std::string, Relation>& relations() const { return relations_; }
  const Relation* find(const std::string& symbol) const;
  Signature signature() const;

  bool holds(const std::string& symbol, std::span<const Vertex> args) const;

  /// Substructure induced on `keep`; keep[i] becomes element i.
  RelationalStructure induced(std::span<const Vertex> keep) const;

  /// Copy with one more relation (replacing any of the same name).
  RelationalStructure with_relation(const std::string& symbol, Relation relation) const;

  friend bool operator==(const RelationalStructure& a, const RelationalStructure& b) {
    return a.universe_size_ == b.universe_size_ && a.relations_ == b.relations_;
  }

 private:
  std::size_t universe_size_;
  std::map<std::string, Relation> relations_;
  Graph graph_;
};

}  // namespace seplogic
