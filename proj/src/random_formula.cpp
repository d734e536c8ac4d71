#include "seplogic/random_formula.hpp"

#include <string>

#include "seplogic/errors.hpp"

namespace seplogic {

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t bound) {
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

bool coin(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

class SentenceGenerator {
 public:
  SentenceGenerator(std::mt19937_64& rng, const RandomFormulaOptions& options) : rng_(rng), options_(options) {
    for (const auto& [symbol, arity] : options.relations) {
      if (symbol != "E") relations_.emplace_back(symbol, arity);
    }
  }

  Formula run() {
    std::vector<Var> scope = options_.free;
    if (scope.empty() && options_.max_qr == 0) {
      throw InputError("a random sentence needs quantifier rank at least 1");
    }
    return formula(options_.max_qr, scope, options_.connective_depth);
  }

 private:
  Formula formula(std::size_t rank, std::vector<Var>& scope, std::size_t depth) {
    const bool must_quantify = scope.empty();
    if (rank > 0 && (must_quantify || coin(rng_, 0.4))) return quantified(rank, scope);
    if (depth > 0 && coin(rng_, 0.55)) {
      switch (pick(rng_, 4)) {
        case 0:
          return negation(formula(rank, scope, depth - 1));
        case 1:
          return conjunction(formula(rank, scope, depth - 1), formula(rank, scope, depth - 1));
        case 2:
          return disjunction(formula(rank, scope, depth - 1), formula(rank, scope, depth - 1));
        default:
          return implication(formula(rank, scope, depth - 1), formula(rank, scope, depth - 1));
      }
    }
    return atom(scope);
  }

  Formula quantified(std::size_t rank, std::vector<Var>& scope) {
    Var v = "q" + std::to_string(options_.max_qr - rank);
    scope.push_back(v);
    Formula body = formula(rank - 1, scope, options_.connective_depth);
    scope.pop_back();
    return coin(rng_, 0.5) ? exists(v, body) : forall(v, body);
  }

  Formula atom(const std::vector<Var>& scope) {
    auto var = [&] { return scope[pick(rng_, scope.size())]; };
    auto vars = [&](std::size_t count) {
      std::vector<Var> out;
      for (std::size_t i = 0; i < count; ++i) out.push_back(var());
      return out;
    };
    std::vector<int> kinds{0, 1, 1};
    const auto& fragment = options_.fragment;
    if (fragment.kind == Fragment::Kind::Conn) kinds.insert(kinds.end(), {2, 2, 2});
    if (fragment.kind == Fragment::Kind::Dp) {
      kinds.insert(kinds.end(), {3, 3, 3});
      if (fragment.k >= 2) kinds.push_back(2);
    }
    if (!relations_.empty()) kinds.push_back(4);
    switch (kinds[pick(rng_, kinds.size())]) {
      case 0:
        return eq(var(), var());
      case 1:
        return rel("E", vars(2));
      case 2: {
        const std::size_t max_l = fragment.kind == Fragment::Kind::Conn ? fragment.k : fragment.k - 1;
        const std::size_t l = pick(rng_, max_l + 1);
        return conn(var(), var(), vars(l));
      }
      case 3: {
        const std::size_t l = 1 + pick(rng_, fragment.k);
        std::vector<VarPair> pairs;
        for (std::size_t i = 0; i < l; ++i) pairs.emplace_back(var(), var());
        return dp(std::move(pairs));
      }
      default: {
        const auto& [symbol, arity] = relations_[pick(rng_, relations_.size())];
        return rel(symbol, vars(arity));
      }
    }
  }

  std::mt19937_64& rng_;
  const RandomFormulaOptions& options_;
  std::vector<std::pair<std::string, std::size_t>> relations_;
};

const char* const kVariablePool[] = {"x", "y", "z", "u", "v", "w1", "a_2", "b'"};
const std::pair<const char*, std::size_t> kRelationPool[] = {{"E", 2}, {"R", 1}, {"Less", 2}, {"T", 3}, {"P", 0}};

Var pool_var(std::mt19937_64& rng) { return kVariablePool[pick(rng, std::size(kVariablePool))]; }

Formula ast(std::mt19937_64& rng, std::size_t depth) {
  const std::size_t choice = depth == 0 ? pick(rng, 4) : pick(rng, 10);
  switch (choice) {
    case 0:
      return eq(pool_var(rng), pool_var(rng));
    case 1: {
      const auto& [symbol, arity] = kRelationPool[pick(rng, std::size(kRelationPool))];
      std::vector<Var> args;
      for (std::size_t i = 0; i < arity; ++i) args.push_back(pool_var(rng));
      return rel(symbol, std::move(args));
    }
    case 2: {
      std::vector<Var> deleted;
      const std::size_t k = pick(rng, 4);
      for (std::size_t i = 0; i < k; ++i) deleted.push_back(pool_var(rng));
      return conn(pool_var(rng), pool_var(rng), std::move(deleted));
    }
    case 3: {
      std::vector<VarPair> pairs;
      const std::size_t k = 1 + pick(rng, 3);
      for (std::size_t i = 0; i < k; ++i) pairs.emplace_back(pool_var(rng), pool_var(rng));
      return dp(std::move(pairs));
    }
    case 4:
    case 5:
      return negation(ast(rng, depth - 1));
    case 6:
      return conjunction(ast(rng, depth - 1), ast(rng, depth - 1));
    case 7:
      return disjunction(ast(rng, depth - 1), ast(rng, depth - 1));
    case 8:
      return implication(ast(rng, depth - 1), ast(rng, depth - 1));
    default:
      return coin(rng, 0.5) ? exists(pool_var(rng), ast(rng, depth - 1)) : forall(pool_var(rng), ast(rng, depth - 1));
  }
}

}  // namespace

Formula random_formula(std::mt19937_64& rng, const RandomFormulaOptions& options) {
  if (options.fragment.kind == Fragment::Kind::Dp && options.fragment.k == 0) {
    throw InputError("FO+DP(0) has no disjoint-paths atoms; use FO");
  }
  return SentenceGenerator(rng, options).run();
}

Formula random_ast(std::mt19937_64& rng, std::size_t max_depth) { return ast(rng, max_depth); }

}  // namespace seplogic
