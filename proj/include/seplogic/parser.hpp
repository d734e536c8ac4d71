#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "seplogic/formula.hpp"
#include "seplogic/structure.hpp"

namespace seplogic {

// Surface syntax (full EBNF in docs/grammar.ebnf):
//
//   exists x. phi      forall x. phi      (lowest precedence, body extends right)
//   phi -> psi         right-associative
//   phi | psi          left-associative
//   phi & psi          left-associative
//   !phi
//   x = y    x != y    R(x1, ..., xk)
//   conn(x, y | z1, ..., zk)     deletion list may be empty: conn(x, y |)
//   dp[(x1, y1), ..., (xk, yk)]
//
// Unicode aliases are accepted on input: ∀ ∃ ∧ ∨ ¬ → ≠. '#' starts a comment.

/// Throws ParseError with the position of the first offending token.
Formula parse(std::string_view text);
/// As parse, and additionally rejects relation symbols missing from `signature`
/// or used with a different arity.
Formula parse(std::string_view text, const Signature& signature);

/// Canonical ASCII text; parse(print(f)) == f.
std::string print(const Formula& f);

std::ostream& operator<<(std::ostream& out, const Formula& f);

/// Problems that make f unusable as a sentence: free variables, inconsistent
/// relation arities (against each other and against `signature` when given),
/// and quantifiers that re-bind a variable already bound in an enclosing scope.
/// Empty result means the sentence is fine.
std::vector<std::string> validate_sentence(const Formula& f);
std::vector<std::string> validate_sentence(const Formula& f, const Signature& signature);

}  // namespace seplogic
