#include "seplogic/games.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <unordered_map>

#include "seplogic/errors.hpp"
#include "seplogic/evaluator.hpp"
#include "seplogic/oracles.hpp"
#include "seplogic/random_formula.hpp"

namespace seplogic {

GameVariant GameVariant::parse(const std::string& text) {
  if (text == "plain") return plain();
  auto colon = text.find(':');
  if (colon != std::string::npos) {
    const std::string head = text.substr(0, colon);
    const std::string tail = text.substr(colon + 1);
    if (!tail.empty() && tail.size() <= 3 && tail.find_first_not_of("0123456789") == std::string::npos) {
      const std::size_t k = std::stoul(tail);
      if (head == "conn") return conn(k);
      if (head == "dp" && k >= 1) return dp(k);
    }
  }
  throw InputError("unknown game variant '" + text + "' (expected plain, conn:K or dp:K with K >= 1)");
}

Fragment GameVariant::fragment() const {
  switch (kind) {
    case Kind::Plain:
      return {Fragment::Kind::FO, 0};
    case Kind::Conn:
      return {Fragment::Kind::Conn, k};
    case Kind::Dp:
      return {Fragment::Kind::Dp, k};
  }
  return {};
}

std::string to_string(const GameVariant& variant) {
  switch (variant.kind) {
    case GameVariant::Kind::Plain:
      return "plain";
    case GameVariant::Kind::Conn:
      return "conn:" + std::to_string(variant.k);
    case GameVariant::Kind::Dp:
      return "dp:" + std::to_string(variant.k);
  }
  return "?";
}

std::string to_string(Player p) { return p == Player::Spoiler ? "Spoiler" : "Duplicator"; }

namespace {

// Calls fn(sequence) for every sequence of length `length` over 0..last that
// contains `last`.
template <class Fn>
bool all_sequences_with(std::size_t last, std::size_t length, Fn&& fn) {
  std::vector<std::size_t> seq(length, 0);
  while (true) {
    if (std::find(seq.begin(), seq.end(), last) != seq.end()) {
      if (!fn(seq)) return false;
    }
    std::size_t i = 0;
    while (i < length && seq[i] == last) seq[i++] = 0;
    if (i == length) return true;
    ++seq[i];
  }
}

class Arena {
 public:
  Arena(const RelationalStructure& a, const RelationalStructure& b, const GameVariant& variant)
      : a_(a), b_(b), variant_(variant), atoms_a_(a.graph()), atoms_b_(b.graph()) {
    if (a.signature() != b.signature()) throw InputError("the structures have different relation symbols");
    if (variant.kind == GameVariant::Kind::Dp && variant.k == 0) {
      throw InputError("the disjoint-paths game needs k >= 1");
    }
    for (const auto& [symbol, rel] : a.relations()) {
      if (symbol != "E") others_.push_back({&rel, b.find(symbol)});
    }
  }

  const RelationalStructure& a() const { return a_; }
  const RelationalStructure& b() const { return b_; }

  /// Clauses that involve no pebble at all (nullary relations).
  bool base() const {
    for (const auto& [ra, rb] : others_) {
      if (ra->arity == 0 && ra->tuples.empty() != rb->tuples.empty()) return false;
    }
    return true;
  }

  /// Clauses whose index sequence contains the last pebble.
  bool extends(const std::vector<PebblePair>& pebbles) {
    const std::size_t t = pebbles.size() - 1;
    const auto [at, bt] = pebbles[t];
    const Graph& ga = a_.graph();
    const Graph& gb = b_.graph();
    for (std::size_t i = 0; i < t; ++i) {
      const auto [ai, bi] = pebbles[i];
      if ((ai == at) != (bi == bt)) return false;
      if (ai != at && ga.adjacent(ai, at) != gb.adjacent(bi, bt)) return false;
    }
    for (const auto& [ra, rb] : others_) {
      if (ra->arity == 0) continue;
      Tuple ta(ra->arity);
      Tuple tb(ra->arity);
      bool ok = all_sequences_with(t, ra->arity, [&](const std::vector<std::size_t>& seq) {
        for (std::size_t i = 0; i < seq.size(); ++i) {
          ta[i] = pebbles[seq[i]].first;
          tb[i] = pebbles[seq[i]].second;
        }
        return ra->tuples.contains(ta) == rb->tuples.contains(tb);
      });
      if (!ok) return false;
    }
    if (variant_.kind == GameVariant::Kind::Conn) {
      for (std::size_t l = 0; l <= variant_.k; ++l) {
        std::vector<Vertex> da(l);
        std::vector<Vertex> db(l);
        bool ok = all_sequences_with(t, l + 2, [&](const std::vector<std::size_t>& seq) {
          for (std::size_t i = 0; i < l; ++i) {
            da[i] = pebbles[seq[i + 2]].first;
            db[i] = pebbles[seq[i + 2]].second;
          }
          return atoms_a_.conn(pebbles[seq[0]].first, pebbles[seq[1]].first, da) ==
                 atoms_b_.conn(pebbles[seq[0]].second, pebbles[seq[1]].second, db);
        });
        if (!ok) return false;
      }
    } else if (variant_.kind == GameVariant::Kind::Dp) {
      for (std::size_t l = 1; l <= variant_.k; ++l) {
        std::vector<VertexPair> pa(l);
        std::vector<VertexPair> pb(l);
        bool ok = all_sequences_with(t, 2 * l, [&](const std::vector<std::size_t>& seq) {
          for (std::size_t i = 0; i < l; ++i) {
            pa[i] = {pebbles[seq[2 * i]].first, pebbles[seq[2 * i + 1]].first};
            pb[i] = {pebbles[seq[2 * i]].second, pebbles[seq[2 * i + 1]].second};
          }
          return atoms_a_.dp(pa) == atoms_b_.dp(pb);
        });
        if (!ok) return false;
      }
    }
    return true;
  }

  bool full(const std::vector<PebblePair>& pebbles) {
    if (!base()) return false;
    std::vector<PebblePair> prefix;
    for (const auto& p : pebbles) {
      prefix.push_back(p);
      if (!extends(prefix)) return false;
    }
    return true;
  }

 private:
  const RelationalStructure& a_;
  const RelationalStructure& b_;
  GameVariant variant_;
  AtomCache atoms_a_;
  AtomCache atoms_b_;
  std::vector<std::pair<const Relation*, const Relation*>> others_;
};

bool pebbled(const std::vector<PebblePair>& pebbles, Side side, Vertex x) {
  return std::any_of(pebbles.begin(), pebbles.end(),
                     [&](const PebblePair& p) { return (side == Side::A ? p.first : p.second) == x; });
}

PebblePair make_pair(Side side, Vertex pick, Vertex reply) {
  return side == Side::A ? PebblePair{pick, reply} : PebblePair{reply, pick};
}

class Solver {
 public:
  Solver(Arena& arena, std::size_t cap) : arena_(arena), cap_(cap) {}

  bool duplicator_wins(std::vector<PebblePair>& pebbles, std::size_t left) {
    if (left == 0) return true;
    auto key = memo_key(pebbles, left);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    ++explored_;
    bool result = true;
    for (Side side : {Side::A, Side::B}) {
      for (Vertex x = 0; x < size(side) && result; ++x) {
        if (pebbled(pebbles, side, x)) continue;
        result = find_reply(pebbles, left, side, x).has_value();
      }
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

  std::vector<StrategyNode> duplicator_tree(std::vector<PebblePair>& pebbles, std::size_t left) {
    std::vector<StrategyNode> nodes;
    if (left == 0) return nodes;
    for (Side side : {Side::A, Side::B}) {
      for (Vertex x = 0; x < size(side); ++x) {
        if (pebbled(pebbles, side, x)) continue;
        if (!grow()) return nodes;
        auto y = *find_reply(pebbles, left, side, x);
        StrategyNode node{side, x, y, false, {}};
        pebbles.push_back(make_pair(side, x, y));
        node.children = duplicator_tree(pebbles, left - 1);
        pebbles.pop_back();
        nodes.push_back(std::move(node));
      }
    }
    return nodes;
  }

  std::vector<StrategyNode> spoiler_tree(std::vector<PebblePair>& pebbles, std::size_t left) {
    std::vector<StrategyNode> nodes;
    for (Side side : {Side::A, Side::B}) {
      for (Vertex x = 0; x < size(side); ++x) {
        if (pebbled(pebbles, side, x) || find_reply(pebbles, left, side, x)) continue;
        for (Vertex y = 0; y < size(other(side)); ++y) {
          if (!grow()) return nodes;
          StrategyNode node{side, x, y, false, {}};
          pebbles.push_back(make_pair(side, x, y));
          node.violated = !arena_.extends(pebbles);
          if (!node.violated) node.children = spoiler_tree(pebbles, left - 1);
          pebbles.pop_back();
          nodes.push_back(std::move(node));
        }
        return nodes;
      }
    }
    return nodes;
  }

  std::size_t explored() const { return explored_; }
  bool truncated() const { return truncated_; }

 private:
  static Side other(Side s) { return s == Side::A ? Side::B : Side::A; }
  std::size_t size(Side s) const { return s == Side::A ? arena_.a().size() : arena_.b().size(); }

  bool grow() {
    if (nodes_ >= cap_) {
      truncated_ = true;
      return false;
    }
    ++nodes_;
    return true;
  }

  std::optional<Vertex> find_reply(std::vector<PebblePair>& pebbles, std::size_t left, Side side, Vertex x) {
    for (Vertex y = 0; y < size(other(side)); ++y) {
      pebbles.push_back(make_pair(side, x, y));
      bool ok = arena_.extends(pebbles) && duplicator_wins(pebbles, left - 1);
      pebbles.pop_back();
      if (ok) return y;
    }
    return std::nullopt;
  }

  static std::vector<Vertex> memo_key(const std::vector<PebblePair>& pebbles, std::size_t left) {
    std::vector<PebblePair> sorted = pebbles;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<Vertex> key{left};
    for (auto [x, y] : sorted) {
      key.push_back(x);
      key.push_back(y);
    }
    return key;
  }

  Arena& arena_;
  std::size_t cap_;
  std::size_t nodes_ = 0;
  std::size_t explored_ = 0;
  bool truncated_ = false;
  std::unordered_map<std::vector<Vertex>, bool, TupleHash> memo_;
};

void check_pins(const RelationalStructure& a, const RelationalStructure& b, const std::vector<PebblePair>& pins) {
  for (auto [x, y] : pins) {
    if (x >= a.size() || y >= b.size()) {
      throw InputError("pinned pair " + std::to_string(x) + ":" + std::to_string(y) + " lies outside the structures");
    }
  }
}

}  // namespace

bool check_winning_condition(const RelationalStructure& a, const RelationalStructure& b,
                             const std::vector<PebblePair>& pebbles, const GameVariant& variant) {
  check_pins(a, b, pebbles);
  Arena arena(a, b, variant);
  return arena.full(pebbles);
}

double game_cost(const RelationalStructure& a, const RelationalStructure& b, std::size_t rounds) {
  return std::pow(static_cast<double>(a.size() + b.size()), static_cast<double>(rounds));
}

GameResult solve(const RelationalStructure& a, const RelationalStructure& b, const GameConfig& cfg) {
  check_pins(a, b, cfg.pinned);
  const double budget = cfg.budget >= 0 ? cfg.budget : budget_from_environment();
  const double cost = game_cost(a, b, cfg.rounds);
  if (cost > budget) throw BudgetExceeded(cost, budget);

  Arena arena(a, b, cfg.variant);
  GameResult result;
  if (!arena.full(cfg.pinned)) {
    result.winner = Player::Spoiler;
    result.pinned_violation = true;
    result.strategy_extracted = cfg.extract_strategy;
    return result;
  }
  Solver solver(arena, cfg.strategy_cap);
  std::vector<PebblePair> pebbles = cfg.pinned;
  result.winner = solver.duplicator_wins(pebbles, cfg.rounds) ? Player::Duplicator : Player::Spoiler;
  if (cfg.extract_strategy) {
    result.strategy = result.winner == Player::Duplicator ? solver.duplicator_tree(pebbles, cfg.rounds)
                                                          : solver.spoiler_tree(pebbles, cfg.rounds);
    result.strategy_extracted = true;
    result.strategy_truncated = solver.truncated();
  }
  result.positions_explored = solver.explored();
  return result;
}

namespace {

const StrategyNode* find_node(const std::vector<StrategyNode>& nodes, Side side, Vertex pick) {
  for (const auto& n : nodes) {
    if (n.side == side && n.pick == pick) return &n;
  }
  return nullptr;
}

bool verify_duplicator(Arena& arena, std::vector<PebblePair>& pebbles, std::size_t left,
                       const std::vector<StrategyNode>& nodes) {
  if (left == 0) return true;
  for (Side side : {Side::A, Side::B}) {
    const std::size_t n = side == Side::A ? arena.a().size() : arena.b().size();
    for (Vertex x = 0; x < n; ++x) {
      if (pebbled(pebbles, side, x)) continue;
      const StrategyNode* node = find_node(nodes, side, x);
      if (node == nullptr) return false;
      pebbles.push_back(make_pair(side, x, node->reply));
      bool ok = arena.extends(pebbles) && verify_duplicator(arena, pebbles, left - 1, node->children);
      pebbles.pop_back();
      if (!ok) return false;
    }
  }
  return true;
}

bool verify_spoiler(Arena& arena, std::vector<PebblePair>& pebbles, std::size_t left,
                    const std::vector<StrategyNode>& nodes) {
  if (left == 0 || nodes.empty()) return false;
  const Side side = nodes.front().side;
  const Vertex pick = nodes.front().pick;
  const std::size_t replies = side == Side::A ? arena.b().size() : arena.a().size();
  for (Vertex y = 0; y < replies; ++y) {
    const StrategyNode* node = nullptr;
    for (const auto& n : nodes) {
      if (n.side == side && n.pick == pick && n.reply == y) node = &n;
    }
    if (node == nullptr) return false;
    pebbles.push_back(make_pair(side, pick, y));
    bool ok = !arena.extends(pebbles) || verify_spoiler(arena, pebbles, left - 1, node->children);
    pebbles.pop_back();
    if (!ok) return false;
  }
  return true;
}

void print_nodes(std::ostream& out, const std::vector<StrategyNode>& nodes, std::size_t indent) {
  for (const auto& n : nodes) {
    const char* pick_side = n.side == Side::A ? "A" : "B";
    const char* reply_side = n.side == Side::A ? "B" : "A";
    out << std::string(2 * indent, ' ') << pick_side << ' ' << n.pick << " -> " << reply_side << ' ' << n.reply;
    if (n.violated) out << "  (condition fails)";
    out << '\n';
    print_nodes(out, n.children, indent + 1);
  }
}

}  // namespace

bool verify_strategy(const RelationalStructure& a, const RelationalStructure& b, const GameConfig& cfg,
                     const GameResult& result) {
  if (!result.strategy_extracted || result.strategy_truncated) return false;
  Arena arena(a, b, cfg.variant);
  const bool pinned_ok = arena.full(cfg.pinned);
  if (result.winner == Player::Spoiler && !pinned_ok) return true;
  if (!pinned_ok) return false;
  std::vector<PebblePair> pebbles = cfg.pinned;
  if (result.winner == Player::Duplicator) return verify_duplicator(arena, pebbles, cfg.rounds, result.strategy);
  return verify_spoiler(arena, pebbles, cfg.rounds, result.strategy);
}

void print_strategy(std::ostream& out, const GameResult& result) {
  if (result.pinned_violation) {
    out << "the pinned pairs already violate the winning condition\n";
    return;
  }
  out << "strategy for " << to_string(result.winner) << " (Spoiler pick -> Duplicator reply):\n";
  print_nodes(out, result.strategy, 1);
  if (result.strategy_truncated) out << "  ... truncated\n";
}

SoundnessReport sample_soundness(const RelationalStructure& a, const RelationalStructure& b, const GameConfig& cfg,
                                 std::size_t samples, std::size_t max_qr, std::uint64_t seed) {
  if (max_qr > cfg.rounds) throw InputError("sampled quantifier rank exceeds the number of rounds");
  GameConfig plain_cfg = cfg;
  plain_cfg.extract_strategy = false;
  SoundnessReport report;
  report.winner = solve(a, b, plain_cfg).winner;

  RandomFormulaOptions options;
  options.fragment = cfg.variant.fragment();
  options.max_qr = max_qr;
  options.relations = a.signature();
  std::vector<Vertex> values_a;
  std::vector<Vertex> values_b;
  for (std::size_t i = 0; i < cfg.pinned.size(); ++i) {
    options.free.push_back("p" + std::to_string(i));
    values_a.push_back(cfg.pinned[i].first);
    values_b.push_back(cfg.pinned[i].second);
  }
  std::mt19937_64 rng(seed);
  Evaluator eval_a(a);
  Evaluator eval_b(b);
  for (std::size_t i = 0; i < samples; ++i) {
    Formula f = random_formula(rng, options);
    auto pa = eval_a.prepare(f, options.free);
    auto pb = eval_b.prepare(f, options.free);
    if (pa(values_a) != pb(values_b)) report.disagreements.push_back(f);
    ++report.samples;
  }
  return report;
}

}  // namespace seplogic
