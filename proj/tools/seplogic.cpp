// Command-line front end: check, game, lib and gen subcommands.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "seplogic/errors.hpp"
#include "seplogic/evaluator.hpp"
#include "seplogic/families.hpp"
#include "seplogic/formula_lib.hpp"
#include "seplogic/games.hpp"
#include "seplogic/io.hpp"
#include "seplogic/parser.hpp"

using namespace seplogic;

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::vector<std::string> split(const std::string& text, char separator) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, separator)) parts.push_back(part);
  return parts;
}

std::size_t parse_count(const std::string& text, const std::string& what) {
  if (text.empty() || text.size() > 9 || text.find_first_not_of("0123456789") != std::string::npos) {
    throw InputError(what + " must be a non-negative integer, got '" + text + "'");
  }
  return std::stoul(text);
}

void print_builders(std::ostream& out) {
  out << "available builders:\n";
  for (const auto& e : library_entries()) {
    out << "  " << e.name << (e.params.empty() ? "" : " " + e.params) << "  " << e.summary << '\n';
  }
}

Formula load_formula(const std::string& source) {
  if (source.rfind("lib:", 0) == 0) {
    auto parts = split(source.substr(4), ':');
    if (parts.empty()) throw InputError("lib: needs a builder name");
    std::string name = parts.front();
    parts.erase(parts.begin());
    return build_library_formula(name, parts);
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(source, ec)) {
    std::ifstream in(source);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
  }
  return parse(source);
}

struct CheckOptions {
  std::string structure;
  std::string formula;
  std::vector<std::string> bindings;
  bool force = false;
};

int run_check(const CheckOptions& opt) {
  try {
    const RelationalStructure s = load_structure(opt.structure);
    const Formula f = load_formula(opt.formula);
    Assignment a;
    for (const auto& b : opt.bindings) {
      auto eqpos = b.find('=');
      if (eqpos == std::string::npos) throw InputError("binding '" + b + "' is not of the form VAR=ELEMENT");
      a[b.substr(0, eqpos)] = parse_count(b.substr(eqpos + 1), "bound element");
    }
    const double budget = budget_from_environment();
    const double cost = evaluation_cost(s, f);
    if (cost > budget && !opt.force) {
      std::cerr << "error: " << BudgetExceeded(cost, budget).what() << " (use --force to run anyway)\n";
      return kExitBudget;
    }
    Evaluator evaluator(s);
    const bool verdict = evaluator.evaluate(f, a);
    std::cout << "result: " << (verdict ? "true" : "false") << '\n';
    return verdict ? kExitTrue : kExitFalse;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

struct GameOptions {
  std::string a;
  std::string b;
  std::string variant = "plain";
  std::size_t rounds = 1;
  std::vector<std::string> pins;
  bool strategy = false;
  std::size_t samples = 0;
  std::size_t max_qr = 0;
  bool max_qr_set = false;
  std::uint64_t seed = 1;
};

int run_game(const GameOptions& opt) {
  try {
    const RelationalStructure a = load_structure(opt.a);
    const RelationalStructure b = load_structure(opt.b);
    GameConfig cfg;
    cfg.rounds = opt.rounds;
    cfg.variant = GameVariant::parse(opt.variant);
    cfg.extract_strategy = opt.strategy;
    for (const auto& p : opt.pins) {
      auto parts = split(p, ':');
      if (parts.size() != 2) throw InputError("pin '" + p + "' is not of the form A:B");
      cfg.pinned.emplace_back(parse_count(parts[0], "pinned element"), parse_count(parts[1], "pinned element"));
    }
    const GameResult result = solve(a, b, cfg);
    std::cout << "winner: " << to_string(result.winner) << '\n';
    if (opt.strategy) print_strategy(std::cout, result);
    if (opt.samples > 0) {
      const std::size_t qr = opt.max_qr_set ? opt.max_qr : opt.rounds;
      const SoundnessReport report = sample_soundness(a, b, cfg, opt.samples, qr, opt.seed);
      std::cout << "samples: " << report.samples << " disagreements: " << report.disagreements.size() << '\n';
      if (!report.disagreements.empty()) {
        std::cout << (report.winner == Player::Duplicator ? "counterexample: " : "distinguishing: ")
                  << print(report.disagreements.front()) << '\n';
      }
    }
    return result.winner == Player::Duplicator ? 0 : 1;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int run_lib(const std::string& name, const std::vector<std::string>& params) {
  try {
    const Formula f = build_library_formula(name, params);
    std::cout << print(f) << '\n';
    std::cout << "# fragment: " << to_string(classify_fragment(f)) << ", quantifier rank "
              << quantifier_rank(f) << '\n';
    return 0;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    print_builders(std::cerr);
    return kExitUsage;
  }
}

int run_gen(const std::string& name, std::size_t q, std::size_t k, std::string out) {
  try {
    FamilySpec spec{name, {{"q", q}}};
    for (const auto& f : family_names()) {
      if (f.name == name && std::find(f.params.begin(), f.params.end(), "k") != f.params.end()) spec.params["k"] = k;
    }
    auto [g, h] = generate_family(spec);
    if (out.size() > 6 && out.ends_with(".graph")) out.resize(out.size() - 6);
    save_graph(out + ".a.graph", g);
    save_graph(out + ".b.graph", h);
    std::cout << "wrote " << out << ".a.graph (" << g.order() << " vertices, " << g.size() << " edges) and "
              << out << ".b.graph (" << h.order() << " vertices, " << h.size() << " edges)\n";
    return 0;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\nfamilies:";
    for (const auto& f : family_names()) std::cerr << ' ' << f.name;
    std::cerr << '\n';
    return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Model checking and EF games for FO with connectivity and disjoint-paths atoms"};
  app.require_subcommand(1);

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Evaluate a formula on a graph or structure file");
  check_cmd->add_option("structure", check.structure, "Graph or structure file")->required();
  check_cmd->add_option("formula", check.formula, "Formula text, a file, or lib:NAME[:PARAM...]")->required();
  check_cmd->add_option("--bind", check.bindings, "Free variable binding VAR=ELEMENT");
  check_cmd->add_flag("--force", check.force, "Ignore the cost budget");

  GameOptions game;
  auto* game_cmd = app.add_subcommand("game", "Solve an Ehrenfeucht-Fraisse game");
  game_cmd->add_option("a", game.a, "First graph or structure file")->required();
  game_cmd->add_option("b", game.b, "Second graph or structure file")->required();
  game_cmd->add_option("--variant", game.variant, "plain, conn:K or dp:K");
  game_cmd->add_option("-q,--rounds", game.rounds, "Number of rounds");
  game_cmd->add_option("--pin", game.pins, "Pinned opening pair A:B");
  game_cmd->add_flag("--strategy", game.strategy, "Print the winner's strategy");
  game_cmd->add_option("--samples", game.samples, "Random formulas to evaluate on both sides");
  auto* qr_opt = game_cmd->add_option("--max-qr", game.max_qr, "Rank of sampled formulas (default: rounds)");
  game_cmd->add_option("--seed", game.seed, "Seed for sampling");

  std::string lib_name;
  std::vector<std::string> lib_params;
  auto* lib_cmd = app.add_subcommand("lib", "Print a library formula");
  lib_cmd->add_option("name", lib_name, "Builder name")->required();
  lib_cmd->add_option("params", lib_params, "Builder parameters");

  std::string gen_name;
  std::size_t gen_q = 1;
  std::size_t gen_k = 1;
  std::string gen_out = "family";
  auto* gen_cmd = app.add_subcommand("gen", "Write a separating graph pair");
  gen_cmd->add_option("name", gen_name, "Family name")->required();
  gen_cmd->add_option("--q", gen_q, "Parameter q");
  gen_cmd->add_option("--k", gen_k, "Parameter k");
  gen_cmd->add_option("-o,--output", gen_out, "Output stem; writes STEM.a.graph and STEM.b.graph");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (*check_cmd) return run_check(check);
  if (*game_cmd) {
    game.max_qr_set = qr_opt->count() > 0;
    return run_game(game);
  }
  if (*lib_cmd) return run_lib(lib_name, lib_params);
  if (*gen_cmd) return run_gen(gen_name, gen_q, gen_k, gen_out);
  return kExitUsage;
}
