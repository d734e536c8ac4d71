#include "seplogic/evaluator.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <unordered_map>

#include "seplogic/errors.hpp"

namespace seplogic {

struct Evaluator::RelationTable {
  std::size_t arity = 0;
  std::vector<char> dense;
  const std::set<Tuple>* tuples = nullptr;
};

namespace {

constexpr std::size_t kDenseLimit = std::size_t{1} << 22;

enum class Kind { Equals, Relation, Adjacent, Conn, Dp, Not, And, Or, Implies, Block, True };

struct Node {
  Kind kind = Kind::True;
  std::vector<std::size_t> slots;
  const Evaluator::RelationTable* table = nullptr;
  std::vector<std::size_t> children;

  // Block: existential search over `bound`, testing checks[i] once the first i
  // block variables are set.
  std::vector<std::size_t> bound;
  std::vector<std::vector<std::size_t>> checks;
  std::vector<std::size_t> key_slots;
  bool memo_enabled = false;
  std::unordered_map<std::uint64_t, bool> memo;
};

std::string join_names(const std::set<Var>& names) {
  std::string out;
  for (const auto& v : names) out += (out.empty() ? "" : ", ") + v;
  return out;
}

}  // namespace

struct PreparedFormula::Program {
  Evaluator* evaluator = nullptr;
  std::size_t universe = 0;
  std::vector<Node> nodes;
  std::size_t root = 0;
  std::vector<Vertex> values;
  std::map<Var, std::size_t> slot_of;
  std::vector<Vertex> scratch;
  std::vector<VertexPair> pairs;

  std::size_t slot(const Var& v) {
    auto [it, inserted] = slot_of.emplace(v, slot_of.size());
    if (inserted) values.push_back(0);
    return it->second;
  }

  std::size_t add(Node node) {
    nodes.push_back(std::move(node));
    return nodes.size() - 1;
  }

  bool eval(std::size_t id) {
    Node& n = nodes[id];
    switch (n.kind) {
      case Kind::True:
        return true;
      case Kind::Equals:
        return values[n.slots[0]] == values[n.slots[1]];
      case Kind::Adjacent:
        return evaluator->structure().graph().adjacent(values[n.slots[0]], values[n.slots[1]]);
      case Kind::Relation: {
        const auto& t = *n.table;
        if (!t.dense.empty()) {
          std::size_t index = 0;
          for (std::size_t s : n.slots) index = index * universe + values[s];
          return t.dense[index] != 0;
        }
        scratch.clear();
        for (std::size_t s : n.slots) scratch.push_back(values[s]);
        return t.tuples->contains(scratch);
      }
      case Kind::Conn: {
        scratch.clear();
        for (std::size_t i = 2; i < n.slots.size(); ++i) scratch.push_back(values[n.slots[i]]);
        return evaluator->atoms().conn(values[n.slots[0]], values[n.slots[1]], scratch);
      }
      case Kind::Dp: {
        pairs.clear();
        for (std::size_t i = 0; i < n.slots.size(); i += 2) {
          pairs.emplace_back(values[n.slots[i]], values[n.slots[i + 1]]);
        }
        return evaluator->atoms().dp(pairs);
      }
      case Kind::Not:
        return !eval(n.children[0]);
      case Kind::And:
        return eval(n.children[0]) && eval(n.children[1]);
      case Kind::Or:
        return eval(n.children[0]) || eval(n.children[1]);
      case Kind::Implies:
        return !eval(n.children[0]) || eval(n.children[1]);
      case Kind::Block:
        return eval_block(id);
    }
    return false;
  }

  bool eval_block(std::size_t id) {
    std::uint64_t key = 0;
    if (nodes[id].memo_enabled) {
      for (std::size_t s : nodes[id].key_slots) key = key * universe + values[s];
      auto it = nodes[id].memo.find(key);
      if (it != nodes[id].memo.end()) return it->second;
    }
    const std::size_t depth = nodes[id].bound.size();
    std::vector<Vertex> saved(depth);
    for (std::size_t i = 0; i < depth; ++i) saved[i] = values[nodes[id].bound[i]];
    bool result = search(id, 0);
    for (std::size_t i = 0; i < depth; ++i) values[nodes[id].bound[i]] = saved[i];
    if (nodes[id].memo_enabled) nodes[id].memo.emplace(key, result);
    return result;
  }

  bool search(std::size_t id, std::size_t level) {
    // Indices are re-read from `nodes` after each recursive call; the vector
    // itself is never resized during evaluation, so references stay valid.
    const Node& n = nodes[id];
    for (std::size_t check : n.checks[level]) {
      if (!eval(check)) return false;
    }
    if (level == n.bound.size()) return true;
    const std::size_t slot = n.bound[level];
    for (Vertex v = 0; v < universe; ++v) {
      values[slot] = v;
      if (search(id, level + 1)) return true;
    }
    return false;
  }
};

namespace {

struct Part {
  Formula formula;
  bool negated;
};

void collect(const Formula& f, bool negated, std::vector<Part>& parts) {
  if (const auto* n = f.as<Not>()) {
    collect(n->operand, !negated, parts);
    return;
  }
  if (const auto* b = f.as<Binary>()) {
    if (!negated && b->op == Connective::And) {
      collect(b->lhs, false, parts);
      collect(b->rhs, false, parts);
      return;
    }
    if (negated && b->op == Connective::Or) {
      collect(b->lhs, true, parts);
      collect(b->rhs, true, parts);
      return;
    }
    if (negated && b->op == Connective::Implies) {
      collect(b->lhs, false, parts);
      collect(b->rhs, true, parts);
      return;
    }
  }
  parts.push_back({f, negated});
}

class Compiler {
 public:
  Compiler(PreparedFormula::Program& program, std::function<const Evaluator::RelationTable&(const std::string&, std::size_t)> table)
      : p_(program), table_(std::move(table)) {}

  std::size_t compile(const Formula& f) {
    return std::visit(
        [&](const auto& node) -> std::size_t {
          using T = std::decay_t<decltype(node)>;
          Node out;
          if constexpr (std::is_same_v<T, Equals>) {
            out.kind = Kind::Equals;
            out.slots = {p_.slot(node.lhs), p_.slot(node.rhs)};
          } else if constexpr (std::is_same_v<T, RelAtom>) {
            for (const auto& a : node.args) out.slots.push_back(p_.slot(a));
            if (node.symbol == "E" && node.args.size() == 2) {
              out.kind = Kind::Adjacent;
            } else {
              out.kind = Kind::Relation;
              out.table = &table_(node.symbol, node.args.size());
            }
          } else if constexpr (std::is_same_v<T, ConnAtom>) {
            out.kind = Kind::Conn;
            out.slots = {p_.slot(node.source), p_.slot(node.target)};
            for (const auto& z : node.deleted) out.slots.push_back(p_.slot(z));
          } else if constexpr (std::is_same_v<T, DpAtom>) {
            out.kind = Kind::Dp;
            for (const auto& [x, y] : node.pairs) {
              out.slots.push_back(p_.slot(x));
              out.slots.push_back(p_.slot(y));
            }
          } else if constexpr (std::is_same_v<T, Not>) {
            std::size_t child = compile(node.operand);
            out.kind = Kind::Not;
            out.children = {child};
          } else if constexpr (std::is_same_v<T, Binary>) {
            std::size_t lhs = compile(node.lhs);
            std::size_t rhs = compile(node.rhs);
            out.kind = node.op == Connective::And ? Kind::And : node.op == Connective::Or ? Kind::Or : Kind::Implies;
            out.children = {lhs, rhs};
          } else {
            return compile_block(f);
          }
          return p_.add(std::move(out));
        },
        f.node());
  }

 private:
  std::size_t compile_block(const Formula& f) {
    const Quantifier kind = f.as<Quantified>()->quantifier;
    std::vector<Var> chain;
    Formula body = f;
    while (const auto* q = body.as<Quantified>()) {
      if (q->quantifier != kind || std::find(chain.begin(), chain.end(), q->var) != chain.end()) break;
      chain.push_back(q->var);
      body = q->body;
    }
    const bool universal = kind == Quantifier::Forall;
    const auto body_free = free_variables(body);
    std::vector<Var> vars;
    for (const auto& v : chain) {
      if (body_free.contains(v)) vars.push_back(v);
    }

    std::vector<Part> parts;
    collect(body, universal, parts);

    Node block;
    block.kind = Kind::Block;
    for (const auto& v : vars) block.bound.push_back(p_.slot(v));
    block.checks.resize(vars.size() + 1);
    for (const auto& part : parts) {
      std::size_t level = 0;
      for (const auto& v : free_variables(part.formula)) {
        auto it = std::find(vars.begin(), vars.end(), v);
        if (it != vars.end()) level = std::max<std::size_t>(level, static_cast<std::size_t>(it - vars.begin()) + 1);
      }
      std::size_t id = compile(part.formula);
      if (part.negated) {
        Node neg;
        neg.kind = Kind::Not;
        neg.children = {id};
        id = p_.add(std::move(neg));
      }
      block.checks[level].push_back(id);
    }
    for (const auto& v : free_variables(f)) block.key_slots.push_back(p_.slot(v));
    const double entries = std::pow(static_cast<double>(p_.universe), static_cast<double>(block.key_slots.size()));
    block.memo_enabled = entries < 1e18;
    std::size_t id = p_.add(std::move(block));
    if (!universal) return id;
    Node neg;
    neg.kind = Kind::Not;
    neg.children = {id};
    return p_.add(std::move(neg));
  }

  PreparedFormula::Program& p_;
  std::function<const Evaluator::RelationTable&(const std::string&, std::size_t)> table_;
};

}  // namespace

PreparedFormula::PreparedFormula(std::shared_ptr<Program> program, std::vector<Var> parameters)
    : program_(std::move(program)), parameters_(std::move(parameters)) {}

bool PreparedFormula::operator()(std::span<const Vertex> values) {
  if (values.size() != parameters_.size()) {
    throw InputError("expected " + std::to_string(parameters_.size()) + " values, got " +
                     std::to_string(values.size()));
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] >= program_->universe) {
      throw InputError("value " + std::to_string(values[i]) + " for " + parameters_[i] +
                       " is outside the universe of size " + std::to_string(program_->universe));
    }
    program_->values[i] = values[i];
  }
  return program_->eval(program_->root);
}

Evaluator::Evaluator(const RelationalStructure& s) : structure_(&s), atoms_(s.graph()) {}

const Evaluator::RelationTable& Evaluator::table(const std::string& symbol, std::size_t arity) {
  const Relation* relation = structure_->find(symbol);
  if (relation == nullptr) throw InputError("relation " + symbol + " is not in the structure");
  if (relation->arity != arity) {
    throw InputError("relation " + symbol + " has arity " + std::to_string(relation->arity) + " but is used with " +
                     std::to_string(arity) + " arguments");
  }
  auto& entry = tables_[symbol];
  if (!entry) {
    entry = std::make_shared<RelationTable>();
    entry->arity = arity;
    entry->tuples = &relation->tuples;
    const double cells = std::pow(static_cast<double>(structure_->size()), static_cast<double>(arity));
    if (cells <= static_cast<double>(kDenseLimit)) {
      entry->dense.assign(static_cast<std::size_t>(cells), 0);
      for (const auto& t : relation->tuples) {
        std::size_t index = 0;
        for (Vertex v : t) index = index * structure_->size() + v;
        entry->dense[index] = 1;
      }
      if (entry->dense.empty()) entry->dense.push_back(0);
    }
  }
  return *entry;
}

PreparedFormula Evaluator::prepare(const Formula& f, std::vector<Var> parameters) {
  std::set<Var> missing;
  const std::set<Var> given(parameters.begin(), parameters.end());
  for (const auto& v : free_variables(f)) {
    if (!given.contains(v)) missing.insert(v);
  }
  if (!missing.empty()) throw InputError("unbound variables: " + join_names(missing));
  if (given.size() != parameters.size()) throw InputError("parameter names must be distinct");

  auto program = std::make_shared<PreparedFormula::Program>();
  program->evaluator = this;
  program->universe = structure_->size();
  for (const auto& v : parameters) program->slot(v);
  Compiler compiler(*program, [this](const std::string& symbol, std::size_t arity) -> const RelationTable& {
    return table(symbol, arity);
  });
  program->root = compiler.compile(f);
  return PreparedFormula(std::move(program), std::move(parameters));
}

bool Evaluator::evaluate(const Formula& f, const Assignment& a) {
  std::vector<Var> names;
  std::vector<Vertex> values;
  for (const auto& [name, value] : a) {
    names.push_back(name);
    values.push_back(value);
  }
  auto prepared = prepare(f, std::move(names));
  return prepared(values);
}

bool Evaluator::evaluate_sentence(const Formula& f) {
  auto free = free_variables(f);
  if (!free.empty()) throw InputError("not a sentence; free variables: " + join_names(free));
  return evaluate(f, {});
}

bool evaluate(const RelationalStructure& s, const Formula& f, const Assignment& a) {
  Evaluator e(s);
  return e.evaluate(f, a);
}

bool evaluate_sentence(const RelationalStructure& s, const Formula& f) {
  Evaluator e(s);
  return e.evaluate_sentence(f);
}

double evaluation_cost(const RelationalStructure& s, const Formula& f) {
  return std::pow(static_cast<double>(s.size()), static_cast<double>(quantifier_rank(f))) *
         static_cast<double>(formula_size(f));
}

}  // namespace seplogic
