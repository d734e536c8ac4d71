#include <doctest.h>

#include <random>

#include "seplogic/errors.hpp"
#include "seplogic/evaluator.hpp"
#include "seplogic/formula_lib.hpp"
#include "seplogic/parser.hpp"
#include "seplogic/random_formula.hpp"
#include "support.hpp"

using namespace seplogic;
using namespace testsupport;

namespace {

RelationalStructure graph_structure(const Graph& g) { return RelationalStructure::from_graph(g); }

// Direct recursive semantics, kept deliberately naive.
bool naive(const RelationalStructure& s, const Formula& f, Assignment& a) {
  const Graph& g = s.graph();
  if (const auto* e = f.as<Equals>()) return a.at(e->lhs) == a.at(e->rhs);
  if (const auto* r = f.as<RelAtom>()) {
    std::vector<Vertex> args;
    for (const auto& v : r->args) args.push_back(a.at(v));
    return s.holds(r->symbol, args);
  }
  if (const auto* c = f.as<ConnAtom>()) {
    std::vector<Vertex> deleted;
    for (const auto& z : c->deleted) deleted.push_back(a.at(z));
    return reachable_avoiding(g, a.at(c->source), a.at(c->target), deleted);
  }
  if (const auto* d = f.as<DpAtom>()) {
    std::vector<VertexPair> pairs;
    for (const auto& [x, y] : d->pairs) pairs.emplace_back(a.at(x), a.at(y));
    return path_system_exists(g, pairs);
  }
  if (const auto* n = f.as<Not>()) return !naive(s, n->operand, a);
  if (const auto* b = f.as<Binary>()) {
    const bool l = naive(s, b->lhs, a);
    switch (b->op) {
      case Connective::And:
        return l && naive(s, b->rhs, a);
      case Connective::Or:
        return l || naive(s, b->rhs, a);
      case Connective::Implies:
        return !l || naive(s, b->rhs, a);
    }
  }
  const auto* q = f.as<Quantified>();
  auto saved = a.find(q->var);
  std::optional<Vertex> previous;
  if (saved != a.end()) previous = saved->second;
  bool result = q->quantifier == Quantifier::Forall;
  for (Vertex v = 0; v < s.size(); ++v) {
    a[q->var] = v;
    const bool body = naive(s, q->body, a);
    if (q->quantifier == Quantifier::Exists && body) {
      result = true;
      break;
    }
    if (q->quantifier == Quantifier::Forall && !body) {
      result = false;
      break;
    }
  }
  if (previous) {
    a[q->var] = *previous;
  } else {
    a.erase(q->var);
  }
  return result;
}

}  // namespace

TEST_CASE("evaluate examples") {
  const Formula conn_sentence = parse("forall x. forall y. conn(x,y|)");
  CHECK(evaluate_sentence(graph_structure(cycle_graph(3)), conn_sentence));
  CHECK_FALSE(evaluate_sentence(graph_structure(Graph(2)), conn_sentence));
  CHECK_FALSE(evaluate_sentence(graph_structure(cycle_graph(4)), acyclic()));
  CHECK(evaluate_sentence(graph_structure(path_graph(3)), acyclic()));
  CHECK(evaluate_sentence(graph_structure(cycle_graph(8)), conn_sentence));
  const Formula k4 = parse(
      "exists a. exists b. exists c. exists d. (a != b & a != c & a != d & b != c & b != d & c != d & "
      "dp[(a, b), (c, d)])");
  CHECK(evaluate_sentence(graph_structure(complete_graph(4)), k4));
  CHECK_FALSE(evaluate_sentence(graph_structure(path_graph(4)), parse(
      "exists a. exists b. exists c. exists d. (a != b & a != c & a != d & b != c & b != d & c != d & "
      "dp[(a, b), (c, d)] & E(a, c) & E(c, b))")));
}

TEST_CASE("assignments and errors") {
  const auto s = graph_structure(path_graph(3));
  CHECK(evaluate(s, conn("x", "y"), {{"x", 0}, {"y", 2}}));
  CHECK_FALSE(evaluate(s, conn("x", "y", {"z"}), {{"x", 0}, {"y", 2}, {"z", 1}}));
  try {
    evaluate(s, conn("x", "y"), {});
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("unbound variables: x, y") != std::string::npos);
  }
  CHECK_THROWS_AS(evaluate(s, conn("x", "y"), {{"x", 0}, {"y", 9}}), InputError);
  CHECK_THROWS_AS(evaluate_sentence(s, rel("E", {"x", "y"})), InputError);
  CHECK_THROWS_AS(evaluate_sentence(s, exists("x", rel("P", {"x"}))), InputError);
  CHECK_THROWS_AS(evaluate_sentence(s, exists("x", rel("E", {"x"}))), InputError);
  CHECK(evaluate(s, exists("x", eq("x", "y")), {{"y", 1}, {"unused", 0}}));
}

TEST_CASE("structures with extra relations") {
  std::map<std::string, Relation> rels;
  rels["E"] = Relation{2, {{0, 1}, {1, 0}}};
  rels["P"] = Relation{1, {{1}}};
  rels["Z"] = Relation{0, {{}}};
  rels["T"] = Relation{3, {{0, 1, 2}}};
  const RelationalStructure s(3, rels);
  CHECK(evaluate_sentence(s, parse("exists x. P(x) & exists y. E(x, y)")));
  CHECK(evaluate_sentence(s, parse("Z()")));
  CHECK(evaluate_sentence(s, parse("exists x. exists y. exists z. T(x, y, z) & !E(y, z)")));
  CHECK_FALSE(evaluate_sentence(s, parse("forall x. P(x)")));
}

TEST_CASE("quantifiers range over already bound elements") {
  const auto s = graph_structure(Graph(1));
  CHECK(evaluate_sentence(s, parse("forall x. exists y. x = y")));
  CHECK(evaluate_sentence(s, parse("exists x. exists y. conn(x, y |)")));
  CHECK_FALSE(evaluate_sentence(s, parse("exists x. exists y. x != y")));
}

TEST_CASE("bare atoms agree with the graph oracles on all small graphs") {
  for (const auto& g : all_graphs_up_to(5)) {
    const auto s = graph_structure(g);
    Evaluator ev(s);
    auto c1 = ev.prepare(conn("x", "y", {"z"}), {"x", "y", "z"});
    auto d2 = ev.prepare(dp({{"a", "b"}, {"c", "d"}}), {"a", "b", "c", "d"});
    std::vector<Vertex> t(3, 0);
    do {
      const std::vector<Vertex> z{t[2]};
      CHECK(c1(t) == connected_after_deletion(g, t[0], t[1], z));
    } while (next_tuple(t, g.order()));
    std::vector<Vertex> u(4, 0);
    do {
      const std::vector<VertexPair> pairs{{u[0], u[1]}, {u[2], u[3]}};
      CHECK(d2(u) == disjoint_paths_exist(g, pairs));
    } while (next_tuple(u, g.order()));
  }
}

TEST_CASE("observation: conn via disjoint paths") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_graph(rng, 1, 8);
    const auto s = graph_structure(g);
    Evaluator ev(s);
    auto lhs = ev.prepare(conn("x", "y", {"z1", "z2"}), {"x", "y", "z1", "z2"});
    auto rhs = ev.prepare(conn_via_dp("x", "y", {"z1", "z2"}), {"x", "y", "z1", "z2"});
    std::vector<Vertex> t(4, 0);
    do {
      CHECK(lhs(t) == rhs(t));
    } while (next_tuple(t, g.order()));
  }
}

TEST_CASE("evaluator agrees with naive recursive semantics") {
  std::mt19937_64 rng(43);
  const std::vector<Fragment> fragments{{Fragment::Kind::FO, 0}, {Fragment::Kind::Conn, 1}, {Fragment::Kind::Dp, 2}};
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = random_graph(rng, 1, 6);
    const auto s = graph_structure(g);
    RandomFormulaOptions opts;
    opts.fragment = fragments[trial % 3];
    opts.max_qr = 1 + trial % 3;
    opts.free = trial % 2 == 0 ? std::vector<Var>{} : std::vector<Var>{"p"};
    const Formula f = random_formula(rng, opts);
    Evaluator ev(s);
    for (Vertex p = 0; p < (opts.free.empty() ? 1 : g.order()); ++p) {
      Assignment a;
      if (!opts.free.empty()) a["p"] = p;
      Assignment scratch = a;
      CAPTURE(print(f));
      CHECK(ev.evaluate(f, a) == naive(s, f, scratch));
    }
  }
}

TEST_CASE("negation and quantifier dualities") {
  std::mt19937_64 rng(47);
  RandomFormulaOptions opts;
  opts.fragment = {Fragment::Kind::Conn, 1};
  opts.free = {"x", "y"};
  opts.max_qr = 2;
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_graph(rng, 1, 7);
    const auto s = graph_structure(g);
    Evaluator ev(s);
    const Formula phi = random_formula(rng, opts);
    auto lhs = ev.prepare(negation(exists("x", phi)), {"y"});
    auto rhs = ev.prepare(forall("x", negation(phi)), {"y"});
    for (Vertex y = 0; y < g.order(); ++y) {
      const std::vector<Vertex> t{y};
      CHECK(lhs(t) == rhs(t));
    }
  }
}

TEST_CASE("prepared formulas and the cost estimate") {
  const auto s = graph_structure(cycle_graph(5));
  Evaluator ev(s);
  auto f = ev.prepare(conn("x", "y", {"z"}), {"z", "x", "y"});
  CHECK(f.parameters() == std::vector<Var>{"z", "x", "y"});
  const std::vector<Vertex> t{1, 0, 2};
  CHECK(f(t));
  CHECK_THROWS_AS(ev.prepare(conn("x", "y"), {"x"}), InputError);
  CHECK(evaluation_cost(s, connectivity()) == doctest::Approx(25.0 * formula_size(connectivity())));
  CHECK(evaluation_cost(s, eq("x", "y")) == doctest::Approx(1.0));
}
