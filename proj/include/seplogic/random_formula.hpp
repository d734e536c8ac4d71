#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "seplogic/formula.hpp"
#include "seplogic/structure.hpp"

namespace seplogic {

struct RandomFormulaOptions {
  /// Which extended atoms may occur. Under FO+conn(k) conn_l with l <= k is
  /// used; under FO+DP(k) dp_l with 1 <= l <= k and conn_l with l < k.
  Fragment fragment;
  std::size_t max_qr = 2;
  /// Relation symbols beyond E and equality.
  Signature relations;
  /// Free variables the formula may mention (empty gives sentences).
  std::vector<Var> free;
  /// Maximal nesting of connectives between quantifiers.
  std::size_t connective_depth = 3;
};

/// Random formula within the fragment with quantifier rank <= max_qr and free
/// variables among `free`. Needs max_qr >= 1 when `free` is empty.
Formula random_formula(std::mt19937_64& rng, const RandomFormulaOptions& options);

/// Unconstrained AST of depth <= max_depth over every node kind, with small
/// variable and relation name pools. Used for syntax round trips.
Formula random_ast(std::mt19937_64& rng, std::size_t max_depth);

}  // namespace seplogic
