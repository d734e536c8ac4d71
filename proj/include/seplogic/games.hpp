#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seplogic/formula.hpp"
#include "seplogic/structure.hpp"

namespace seplogic {

struct GameVariant {
  enum class Kind { Plain, Conn, Dp };
  Kind kind = Kind::Plain;
  /// conn_l for l <= k, or disjoint-paths_l for 1 <= l <= k.
  std::size_t k = 0;

  static GameVariant plain() { return {Kind::Plain, 0}; }
  static GameVariant conn(std::size_t k) { return {Kind::Conn, k}; }
  static GameVariant dp(std::size_t k) { return {Kind::Dp, k}; }

  /// "plain", "conn:K" or "dp:K" (K >= 1 for dp). Throws InputError.
  static GameVariant parse(const std::string& text);

  /// The logic whose rank-q equivalence the game characterizes.
  Fragment fragment() const;

  friend bool operator==(const GameVariant&, const GameVariant&) = default;
};

std::string to_string(const GameVariant& variant);

/// (element of A, element of B)
using PebblePair = std::pair<Vertex, Vertex>;

struct GameConfig {
  std::size_t rounds = 0;
  GameVariant variant;
  /// Opening pairs that join the winning condition without using up rounds.
  std::vector<PebblePair> pinned;
  bool extract_strategy = false;
  /// Node limit for extracted strategies; larger trees are cut and flagged.
  std::size_t strategy_cap = 200000;
  /// Leaf estimate limit; negative means SEPLOGIC_BUDGET or 1e8.
  double budget = -1;
};

enum class Player { Spoiler, Duplicator };
std::string to_string(Player p);

enum class Side { A, B };

/// One round: Spoiler picks `pick` in `side`, Duplicator answers `reply` in
/// the other structure. `children` hold the continuation for the next round.
/// In a Spoiler tree a node with `violated` set ends the play with a Spoiler
/// win; in a Duplicator tree every unpebbled pick of Spoiler has a node.
/// Picks of already pebbled elements are answered with their partners and do
/// not appear.
struct StrategyNode {
  Side side = Side::A;
  Vertex pick = 0;
  Vertex reply = 0;
  bool violated = false;
  std::vector<StrategyNode> children;
};

struct GameResult {
  Player winner = Player::Duplicator;
  /// Winning condition already fails on the pinned pairs.
  bool pinned_violation = false;
  bool strategy_extracted = false;
  bool strategy_truncated = false;
  std::vector<StrategyNode> strategy;
  std::size_t positions_explored = 0;
};

/// Partial isomorphism (all relations, equality) plus agreement of every conn_l
/// (l <= k) or disjoint-paths_l (1 <= l <= k) atom over every sequence of pebble
/// indices, repetitions allowed.
bool check_winning_condition(const RelationalStructure& a, const RelationalStructure& b,
                             const std::vector<PebblePair>& pebbles, const GameVariant& variant);

/// Leaf estimate (|A| + |B|)^rounds.
double game_cost(const RelationalStructure& a, const RelationalStructure& b, std::size_t rounds);

/// Exact minimax search. After each round the condition is tested and a
/// violation ends the play; this is sound because every clause only looks at
/// sub-sequences of the pebble tuple, so a violation persists under
/// extension. Positions are memoized on (rounds left, set of pebble pairs),
/// which determines the outcome since the condition is symmetric under
/// reordering and repetition of pairs.
///
/// Throws BudgetExceeded when game_cost exceeds the budget, and InputError on
/// pinned elements outside the universes or structures with different
/// relation symbols.
GameResult solve(const RelationalStructure& a, const RelationalStructure& b, const GameConfig& cfg);

/// Plays every opponent line against the extracted strategy and confirms it
/// wins for result.winner. False for truncated or missing strategies.
bool verify_strategy(const RelationalStructure& a, const RelationalStructure& b, const GameConfig& cfg,
                     const GameResult& result);

void print_strategy(std::ostream& out, const GameResult& result);

struct SoundnessReport {
  Player winner = Player::Duplicator;
  std::size_t samples = 0;
  /// Sampled formulas (free variables p0, p1, ... bound to the pinned pairs)
  /// on which the structures disagree.
  std::vector<Formula> disagreements;
};

/// Solves the game, then evaluates `samples` random formulas of the variant's
/// fragment with quantifier rank <= max_qr on both sides. A disagreement
/// under a Duplicator verdict is a counterexample; under a Spoiler verdict it
/// is a distinguishing formula. Throws InputError if max_qr > cfg.rounds.
SoundnessReport sample_soundness(const RelationalStructure& a, const RelationalStructure& b, const GameConfig& cfg,
                                 std::size_t samples, std::size_t max_qr, std::uint64_t seed);

}  // namespace seplogic
