#pragma once

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace seplogic {

using Var = std::string;
using VarPair = std::pair<Var, Var>;

struct Equals {
  Var lhs;
  Var rhs;
  friend bool operator==(const Equals&, const Equals&) = default;
};

struct RelAtom {
  std::string symbol;
  std::vector<Var> args;
  friend bool operator==(const RelAtom&, const RelAtom&) = default;
};

/// conn_k(source, target, deleted...) with k = deleted.size().
struct ConnAtom {
  Var source;
  Var target;
  std::vector<Var> deleted;
  std::size_t k() const { return deleted.size(); }
  friend bool operator==(const ConnAtom&, const ConnAtom&) = default;
};

/// disjoint-paths_k over k = pairs.size() >= 1 endpoint pairs.
struct DpAtom {
  std::vector<VarPair> pairs;
  std::size_t k() const { return pairs.size(); }
  friend bool operator==(const DpAtom&, const DpAtom&) = default;
};

struct Not;
struct Binary;
struct Quantified;

enum class Connective { And, Or, Implies };
enum class Quantifier { Exists, Forall };

using FormulaNode = std::variant<Equals, RelAtom, ConnAtom, DpAtom, Not, Binary, Quantified>;

/// Immutable formula of first-order logic with conn_k and disjoint-paths_k
/// atoms. Copies share structure; equality is structural.
class Formula {
 public:
  explicit Formula(FormulaNode node);

  const FormulaNode& node() const;
  template <class T>
  const T* as() const;
  template <class T>
  bool is() const;
  /// Address of the shared node; stable identity for memo tables.
  const void* identity() const { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  std::shared_ptr<const FormulaNode> node_;
};

struct Not {
  Formula operand;
  friend bool operator==(const Not&, const Not&) = default;
};

struct Binary {
  Connective op;
  Formula lhs;
  Formula rhs;
  friend bool operator==(const Binary&, const Binary&) = default;
};

struct Quantified {
  Quantifier quantifier;
  Var var;
  Formula body;
  friend bool operator==(const Quantified&, const Quantified&) = default;
};

inline const FormulaNode& Formula::node() const { return *node_; }

template <class T>
const T* Formula::as() const {
  return std::get_if<T>(node_.get());
}

template <class T>
bool Formula::is() const {
  return std::holds_alternative<T>(*node_);
}

// Builders. Variable names must be nonempty.
Formula eq(Var x, Var y);
Formula neq(Var x, Var y);
Formula rel(std::string symbol, std::vector<Var> args);
Formula conn(Var x, Var y, std::vector<Var> deleted = {});
Formula dp(std::vector<VarPair> pairs);
Formula negation(Formula f);
Formula conjunction(Formula a, Formula b);
Formula disjunction(Formula a, Formula b);
Formula implication(Formula a, Formula b);
/// Left-nested conjunction; `parts` must be nonempty.
Formula conjunction(std::vector<Formula> parts);
Formula disjunction(std::vector<Formula> parts);
Formula exists(Var x, Formula body);
Formula forall(Var x, Formula body);
Formula exists(const std::vector<Var>& xs, Formula body);
Formula forall(const std::vector<Var>& xs, Formula body);

/// Maximum nesting depth of quantifiers.
std::size_t quantifier_rank(const Formula& f);
std::set<Var> free_variables(const Formula& f);
std::set<Var> bound_variables(const Formula& f);
/// Every variable name occurring anywhere, free or bound.
std::set<Var> all_variables(const Formula& f);
/// Number of AST nodes.
std::size_t formula_size(const Formula& f);
/// Relation symbols with every arity they are used at.
std::set<std::pair<std::string, std::size_t>> relation_uses(const Formula& f);

struct Fragment {
  enum class Kind { FO, Conn, Dp };
  Kind kind = Kind::FO;
  std::size_t k = 0;
  friend bool operator==(const Fragment&, const Fragment&) = default;
};

/// Least of FO, FO+conn(k), FO+DP(k) containing f. Under disjoint paths a
/// conn_k atom counts as disjoint-paths_{k+1}.
Fragment classify_fragment(const Formula& f);
/// True iff every formula of `inner` belongs to `outer`.
bool fragment_includes(const Fragment& outer, const Fragment& inner);
std::string to_string(const Fragment& fragment);

/// Generator of names "_v0", "_v1", ... skipping reserved names.
class FreshNames {
 public:
  FreshNames() = default;
  explicit FreshNames(const Formula& avoid) { reserve(avoid); }

  void reserve(const Var& name) { taken_.insert(name); }
  void reserve(const Formula& f);
  Var next();

 private:
  std::set<Var> taken_;
  std::size_t counter_ = 0;
};

/// Alpha-equivalent formula in which every quantifier binds a distinct fresh name.
Formula rename_bound(const Formula& f);

/// del(z)[f]: quantifiers skip z, conn atoms gain z as an extra deletion,
/// and dp atoms gain the pair (z, z) plus guards z != endpoint.
/// Binders named z are renamed first. Throws InputError if z is free in f.
Formula del_relativize(const Var& z, const Formula& f);

/// f^[comp(x)]: every quantifier restricted to the component of x.
/// Throws InputError if x is bound in f.
Formula comp_relativize(const Var& x, const Formula& f);

}  // namespace seplogic
