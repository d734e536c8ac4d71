#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "seplogic/formula.hpp"
#include "seplogic/oracles.hpp"
#include "seplogic/structure.hpp"

namespace seplogic {

using Assignment = std::map<Var, Vertex>;

class Evaluator;

/// A formula compiled against one structure with a fixed parameter order.
///
/// Consecutive quantifiers of the same kind form one block. The body of a block
/// is split into conjuncts (universal blocks are handled as negated
/// existential ones), and each conjunct is tested as soon as the block
/// variables it mentions are bound. Blocks memoize their result on the values
/// of their free variables.
class PreparedFormula {
 public:
  /// Values in the order of `parameters()`; each must be < structure size.
  bool operator()(std::span<const Vertex> values);
  const std::vector<Var>& parameters() const { return parameters_; }

  struct Program;

 private:
  friend class Evaluator;
  PreparedFormula(std::shared_ptr<Program> program, std::vector<Var> parameters);

  std::shared_ptr<Program> program_;
  std::vector<Var> parameters_;
};

/// Model checker for one structure. conn and disjoint-paths atoms go through a
/// shared AtomCache, so one instance should serve many formulas. Prepared
/// formulas refer back to it and must not outlive it. Not synchronized; use
/// one instance per thread.
class Evaluator {
 public:
  explicit Evaluator(const RelationalStructure& s);

  const RelationalStructure& structure() const { return *structure_; }

  /// Compiles f. Throws InputError if a free variable of f is missing from
  /// `parameters` or a relation symbol is unknown or used at the wrong arity.
  PreparedFormula prepare(const Formula& f, std::vector<Var> parameters);

  /// Throws InputError on unbound free variables or out-of-range values.
  bool evaluate(const Formula& f, const Assignment& a);
  /// Throws InputError if f has free variables.
  bool evaluate_sentence(const Formula& f);

  AtomCache& atoms() { return atoms_; }

  struct RelationTable;

 private:
  const RelationTable& table(const std::string& symbol, std::size_t arity);

  const RelationalStructure* structure_;
  AtomCache atoms_;
  std::map<std::string, std::shared_ptr<RelationTable>> tables_;
};

bool evaluate(const RelationalStructure& s, const Formula& f, const Assignment& a);
bool evaluate_sentence(const RelationalStructure& s, const Formula& f);

/// Rough work estimate n^qr(f) * |f| used for budget refusals.
double evaluation_cost(const RelationalStructure& s, const Formula& f);

}  // namespace seplogic
