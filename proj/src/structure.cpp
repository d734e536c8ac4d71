#include "seplogic/structure.hpp"

#include <string>

#include "seplogic/errors.hpp"

namespace seplogic {

RelationalStructure::RelationalStructure(std::size_t universe_size,
                                         std::map<std::string, Relation> relations)
    : universe_size_(universe_size), relations_(std::move(relations)), graph_(universe_size) {
  if (universe_size_ == 0) throw InputError("structure universe must be non-empty");
  for (const auto& [name, rel] : relations_) {
    if (name.empty()) throw InputError("relation symbol must be non-empty");
    for (const auto& tuple : rel.tuples) {
      if (tuple.size() != rel.arity) {
        throw InputError("relation " + name + " has arity " + std::to_string(rel.arity) +
                         " but contains a tuple of length " + std::to_string(tuple.size()));
      }
      for (Vertex v : tuple) {
        if (v >= universe_size_) {
          throw InputError("relation " + name + " mentions element " + std::to_string(v) +
                           " outside universe of size " + std::to_string(universe_size_));
        }
      }
    }
  }
  auto edge_rel = relations_.find("E");
  if (edge_rel == relations_.end()) throw InputError("structure lacks the edge relation E");
  if (edge_rel->second.arity != 2) throw InputError("relation E must be binary");
  for (const auto& t : edge_rel->second.tuples) {
    if (t[0] == t[1]) throw InputError("relation E is not irreflexive at " + std::to_string(t[0]));
    if (!edge_rel->second.tuples.contains(Tuple{t[1], t[0]})) {
      throw InputError("relation E is not symmetric: (" + std::to_string(t[0]) + ", " +
                       std::to_string(t[1]) + ") has no reverse");
    }
    graph_.add_edge(t[0], t[1]);
  }
}

RelationalStructure RelationalStructure::from_graph(const Graph& g) {
  Relation edges{2, {}};
  for (auto [u, v] : g.edges()) {
    edges.tuples.insert({u, v});
    edges.tuples.insert({v, u});
  }
  return RelationalStructure(g.order(), {{"E", std::move(edges)}});
}

const Relation* RelationalStructure::find(const std::string& symbol) const {
  auto it = relations_.find(symbol);
  return it == relations_.end() ? nullptr : &it->second;
}

Signature RelationalStructure::signature() const {
  Signature sig;
  for (const auto& [name, rel] : relations_) sig[name] = rel.arity;
  return sig;
}

bool RelationalStructure::holds(const std::string& symbol, std::span<const Vertex> args) const {
  const Relation* rel = find(symbol);
  if (rel == nullptr) throw InputError("unknown relation symbol " + symbol);
  if (args.size() != rel->arity) {
    throw InputError("relation " + symbol + " expects " + std::to_string(rel->arity) +
                     " arguments, got " + std::to_string(args.size()));
  }
  if (symbol == "E") return graph_.adjacent(args[0], args[1]);
  return rel->tuples.contains(Tuple(args.begin(), args.end()));
}

RelationalStructure RelationalStructure::induced(std::span<const Vertex> keep) const {
  std::vector<std::optional<Vertex>> index(universe_size_);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= universe_size_) throw InputError("induced: element out of range");
    index[keep[i]] = i;
  }
  std::map<std::string, Relation> out;
  for (const auto& [name, rel] : relations_) {
    Relation sub{rel.arity, {}};
    for (const auto& t : rel.tuples) {
      Tuple mapped;
      bool inside = true;
      for (Vertex v : t) {
        if (!index[v]) {
          inside = false;
          break;
        }
        mapped.push_back(*index[v]);
      }
      if (inside) sub.tuples.insert(std::move(mapped));
    }
    out.emplace(name, std::move(sub));
  }
  return RelationalStructure(keep.size(), std::move(out));
}

RelationalStructure RelationalStructure::with_relation(const std::string& symbol, Relation relation) const {
  auto rels = relations_;
  rels[symbol] = std::move(relation);
  return RelationalStructure(universe_size_, std::move(rels));
}

}  // namespace seplogic
