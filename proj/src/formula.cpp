#include "seplogic/formula.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "seplogic/errors.hpp"

namespace seplogic {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_name(const Var& v) {
  if (v.empty()) throw InputError("variable names must be nonempty");
}

}  // namespace

Formula::Formula(FormulaNode node) : node_(std::make_shared<const FormulaNode>(std::move(node))) {}

bool operator==(const Formula& a, const Formula& b) {
  return a.node_ == b.node_ || *a.node_ == *b.node_;
}

Formula eq(Var x, Var y) {
  check_name(x);
  check_name(y);
  return Formula(Equals{std::move(x), std::move(y)});
}

Formula neq(Var x, Var y) { return negation(eq(std::move(x), std::move(y))); }

Formula rel(std::string symbol, std::vector<Var> args) {
  if (symbol.empty()) throw InputError("relation symbols must be nonempty");
  for (const auto& a : args) check_name(a);
  return Formula(RelAtom{std::move(symbol), std::move(args)});
}

Formula conn(Var x, Var y, std::vector<Var> deleted) {
  check_name(x);
  check_name(y);
  for (const auto& z : deleted) check_name(z);
  return Formula(ConnAtom{std::move(x), std::move(y), std::move(deleted)});
}

Formula dp(std::vector<VarPair> pairs) {
  if (pairs.empty()) throw InputError("disjoint-paths atoms need at least one pair");
  for (const auto& [x, y] : pairs) {
    check_name(x);
    check_name(y);
  }
  return Formula(DpAtom{std::move(pairs)});
}

Formula negation(Formula f) { return Formula(Not{std::move(f)}); }
Formula conjunction(Formula a, Formula b) { return Formula(Binary{Connective::And, std::move(a), std::move(b)}); }
Formula disjunction(Formula a, Formula b) { return Formula(Binary{Connective::Or, std::move(a), std::move(b)}); }
Formula implication(Formula a, Formula b) {
  return Formula(Binary{Connective::Implies, std::move(a), std::move(b)});
}

Formula conjunction(std::vector<Formula> parts) {
  if (parts.empty()) throw InputError("empty conjunction");
  Formula out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out = conjunction(out, parts[i]);
  return out;
}

Formula disjunction(std::vector<Formula> parts) {
  if (parts.empty()) throw InputError("empty disjunction");
  Formula out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out = disjunction(out, parts[i]);
  return out;
}

Formula exists(Var x, Formula body) {
  check_name(x);
  return Formula(Quantified{Quantifier::Exists, std::move(x), std::move(body)});
}

Formula forall(Var x, Formula body) {
  check_name(x);
  return Formula(Quantified{Quantifier::Forall, std::move(x), std::move(body)});
}

Formula exists(const std::vector<Var>& xs, Formula body) {
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) body = exists(*it, std::move(body));
  return body;
}

Formula forall(const std::vector<Var>& xs, Formula body) {
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) body = forall(*it, std::move(body));
  return body;
}

std::size_t quantifier_rank(const Formula& f) {
  return std::visit(overloaded{
                        [](const Not& n) { return quantifier_rank(n.operand); },
                        [](const Binary& b) { return std::max(quantifier_rank(b.lhs), quantifier_rank(b.rhs)); },
                        [](const Quantified& q) { return 1 + quantifier_rank(q.body); },
                        [](const auto&) -> std::size_t { return 0; },
                    },
                    f.node());
}

namespace {

// Variables an atom mentions, in argument order.
std::vector<Var> atom_variables(const FormulaNode& node) {
  return std::visit(overloaded{
                        [](const Equals& e) { return std::vector<Var>{e.lhs, e.rhs}; },
                        [](const RelAtom& r) { return r.args; },
                        [](const ConnAtom& c) {
                          std::vector<Var> vs{c.source, c.target};
                          vs.insert(vs.end(), c.deleted.begin(), c.deleted.end());
                          return vs;
                        },
                        [](const DpAtom& d) {
                          std::vector<Var> vs;
                          for (const auto& [x, y] : d.pairs) {
                            vs.push_back(x);
                            vs.push_back(y);
                          }
                          return vs;
                        },
                        [](const auto&) { return std::vector<Var>{}; },
                    },
                    node);
}

void collect_free(const Formula& f, std::set<Var>& bound, std::set<Var>& out) {
  std::visit(overloaded{
                 [&](const Not& n) { collect_free(n.operand, bound, out); },
                 [&](const Binary& b) {
                   collect_free(b.lhs, bound, out);
                   collect_free(b.rhs, bound, out);
                 },
                 [&](const Quantified& q) {
                   bool fresh = bound.insert(q.var).second;
                   collect_free(q.body, bound, out);
                   if (fresh) bound.erase(q.var);
                 },
                 [&](const auto&) {
                   for (const auto& v : atom_variables(f.node())) {
                     if (!bound.contains(v)) out.insert(v);
                   }
                 },
             },
             f.node());
}

template <class Fn>
void for_each_node(const Formula& f, Fn&& fn) {
  fn(f);
  std::visit(overloaded{
                 [&](const Not& n) { for_each_node(n.operand, fn); },
                 [&](const Binary& b) {
                   for_each_node(b.lhs, fn);
                   for_each_node(b.rhs, fn);
                 },
                 [&](const Quantified& q) { for_each_node(q.body, fn); },
                 [](const auto&) {},
             },
             f.node());
}

}  // namespace

std::set<Var> free_variables(const Formula& f) {
  std::set<Var> bound;
  std::set<Var> out;
  collect_free(f, bound, out);
  return out;
}

std::set<Var> bound_variables(const Formula& f) {
  std::set<Var> out;
  for_each_node(f, [&](const Formula& g) {
    if (auto q = g.as<Quantified>()) out.insert(q->var);
  });
  return out;
}

std::set<Var> all_variables(const Formula& f) {
  std::set<Var> out;
  for_each_node(f, [&](const Formula& g) {
    if (auto q = g.as<Quantified>()) out.insert(q->var);
    for (auto& v : atom_variables(g.node())) out.insert(std::move(v));
  });
  return out;
}

std::size_t formula_size(const Formula& f) {
  std::size_t count = 0;
  for_each_node(f, [&](const Formula&) { ++count; });
  return count;
}

std::set<std::pair<std::string, std::size_t>> relation_uses(const Formula& f) {
  std::set<std::pair<std::string, std::size_t>> out;
  for_each_node(f, [&](const Formula& g) {
    if (auto r = g.as<RelAtom>()) out.emplace(r->symbol, r->args.size());
  });
  return out;
}

Fragment classify_fragment(const Formula& f) {
  bool has_conn = false;
  bool has_dp = false;
  std::size_t max_conn = 0;
  std::size_t max_dp = 0;
  for_each_node(f, [&](const Formula& g) {
    if (auto c = g.as<ConnAtom>()) {
      has_conn = true;
      max_conn = std::max(max_conn, c->k());
    } else if (auto d = g.as<DpAtom>()) {
      has_dp = true;
      max_dp = std::max(max_dp, d->k());
    }
  });
  if (has_dp) return {Fragment::Kind::Dp, std::max(max_dp, has_conn ? max_conn + 1 : 0)};
  if (has_conn) return {Fragment::Kind::Conn, max_conn};
  return {Fragment::Kind::FO, 0};
}

bool fragment_includes(const Fragment& outer, const Fragment& inner) {
  using K = Fragment::Kind;
  switch (inner.kind) {
    case K::FO:
      return true;
    case K::Conn:
      if (outer.kind == K::Conn) return inner.k <= outer.k;
      return outer.kind == K::Dp && inner.k + 1 <= outer.k;
    case K::Dp:
      return outer.kind == K::Dp && inner.k <= outer.k;
  }
  return false;
}

std::string to_string(const Fragment& fragment) {
  switch (fragment.kind) {
    case Fragment::Kind::FO:
      return "FO";
    case Fragment::Kind::Conn:
      return "FO+conn(" + std::to_string(fragment.k) + ")";
    case Fragment::Kind::Dp:
      return "FO+DP(" + std::to_string(fragment.k) + ")";
  }
  return "?";
}

void FreshNames::reserve(const Formula& f) {
  for (auto& v : all_variables(f)) taken_.insert(std::move(v));
}

Var FreshNames::next() {
  while (true) {
    Var candidate = "_v" + std::to_string(counter_++);
    if (taken_.insert(candidate).second) return candidate;
  }
}

namespace {

Var lookup(const std::map<Var, Var>& renaming, const Var& v) {
  auto it = renaming.find(v);
  return it == renaming.end() ? v : it->second;
}

// Renames binders for which `pick` returns a replacement, substituting bound occurrences.
template <class Pick>
Formula rename_binders(const Formula& f, std::map<Var, Var>& renaming, Pick& pick) {
  auto sub = [&](const Var& v) { return lookup(renaming, v); };
  return std::visit(
      overloaded{
          [&](const Equals& e) { return eq(sub(e.lhs), sub(e.rhs)); },
          [&](const RelAtom& r) {
            std::vector<Var> args;
            for (const auto& a : r.args) args.push_back(sub(a));
            return rel(r.symbol, std::move(args));
          },
          [&](const ConnAtom& c) {
            std::vector<Var> deleted;
            for (const auto& z : c.deleted) deleted.push_back(sub(z));
            return conn(sub(c.source), sub(c.target), std::move(deleted));
          },
          [&](const DpAtom& d) {
            std::vector<VarPair> pairs;
            for (const auto& [x, y] : d.pairs) pairs.emplace_back(sub(x), sub(y));
            return dp(std::move(pairs));
          },
          [&](const Not& n) { return negation(rename_binders(n.operand, renaming, pick)); },
          [&](const Binary& b) {
            return Formula(Binary{b.op, rename_binders(b.lhs, renaming, pick), rename_binders(b.rhs, renaming, pick)});
          },
          [&](const Quantified& q) {
            Var replacement = pick(q.var);
            auto saved = renaming.find(q.var);
            std::optional<Var> previous;
            if (saved != renaming.end()) previous = saved->second;
            renaming[q.var] = replacement;
            Formula body = rename_binders(q.body, renaming, pick);
            if (previous) {
              renaming[q.var] = *previous;
            } else {
              renaming.erase(q.var);
            }
            return Formula(Quantified{q.quantifier, replacement, body});
          },
      },
      f.node());
}

}  // namespace

Formula rename_bound(const Formula& f) {
  FreshNames fresh(f);
  std::map<Var, Var> renaming;
  auto pick = [&](const Var&) { return fresh.next(); };
  return rename_binders(f, renaming, pick);
}

namespace {

Formula del_rewrite(const Var& z, const Formula& f) {
  return std::visit(
      overloaded{
          [&](const ConnAtom& c) {
            auto deleted = c.deleted;
            deleted.push_back(z);
            return conn(c.source, c.target, std::move(deleted));
          },
          [&](const DpAtom& d) {
            auto pairs = d.pairs;
            pairs.emplace_back(z, z);
            std::vector<Formula> guards;
            for (const auto& [x, y] : d.pairs) guards.push_back(conjunction(neq(z, x), neq(z, y)));
            return conjunction(dp(std::move(pairs)), conjunction(std::move(guards)));
          },
          [&](const Not& n) { return negation(del_rewrite(z, n.operand)); },
          [&](const Binary& b) { return Formula(Binary{b.op, del_rewrite(z, b.lhs), del_rewrite(z, b.rhs)}); },
          [&](const Quantified& q) {
            Formula body = del_rewrite(z, q.body);
            if (q.quantifier == Quantifier::Exists) return exists(q.var, conjunction(neq(q.var, z), body));
            return forall(q.var, implication(neq(q.var, z), body));
          },
          [&](const auto&) { return f; },
      },
      f.node());
}

Formula comp_rewrite(const Var& x, const Formula& f) {
  return std::visit(
      overloaded{
          [&](const Not& n) { return negation(comp_rewrite(x, n.operand)); },
          [&](const Binary& b) { return Formula(Binary{b.op, comp_rewrite(x, b.lhs), comp_rewrite(x, b.rhs)}); },
          [&](const Quantified& q) {
            Formula body = comp_rewrite(x, q.body);
            if (q.quantifier == Quantifier::Exists) return exists(q.var, conjunction(conn(x, q.var), body));
            return forall(q.var, implication(conn(x, q.var), body));
          },
          [&](const auto&) { return f; },
      },
      f.node());
}

}  // namespace

Formula del_relativize(const Var& z, const Formula& f) {
  if (free_variables(f).contains(z)) throw InputError("del: variable " + z + " occurs free in the formula");
  Formula source = f;
  if (bound_variables(f).contains(z)) {
    FreshNames fresh(f);
    fresh.reserve(z);
    std::map<Var, Var> renaming;
    auto pick = [&](const Var& v) { return v == z ? fresh.next() : v; };
    source = rename_binders(f, renaming, pick);
  }
  return del_rewrite(z, source);
}

Formula comp_relativize(const Var& x, const Formula& f) {
  if (bound_variables(f).contains(x)) throw InputError("comp: variable " + x + " is bound in the formula");
  return comp_rewrite(x, f);
}

}  // namespace seplogic
