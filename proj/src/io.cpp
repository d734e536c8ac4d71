#include "seplogic/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "seplogic/errors.hpp"

namespace seplogic {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::vector<Line> content_lines(std::istream& in) {
  std::vector<Line> lines;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos || text[first] == '#') continue;
    lines.push_back({number, text});
  }
  return lines;
}

std::vector<std::size_t> parse_numbers(const Line& line, std::size_t expected) {
  std::istringstream in(line.text);
  std::vector<std::size_t> values;
  std::string token;
  while (in >> token) {
    if (token.find_first_not_of("0123456789") != std::string::npos) {
      throw InputError("line " + std::to_string(line.number) + ": expected a non-negative integer, got '" +
                       token + "'");
    }
    values.push_back(std::stoull(token));
  }
  if (values.size() != expected) {
    throw InputError("line " + std::to_string(line.number) + ": expected " + std::to_string(expected) +
                     " numbers, got " + std::to_string(values.size()));
  }
  return values;
}

Graph graph_from_lines(const std::vector<Line>& lines) {
  if (lines.empty()) throw InputError("graph file is empty");
  auto header = parse_numbers(lines[0], 2);
  const std::size_t n = header[0];
  const std::size_t m = header[1];
  if (lines.size() - 1 != m) {
    throw InputError("graph header announces " + std::to_string(m) + " edges but file has " +
                     std::to_string(lines.size() - 1));
  }
  Graph g(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto uv = parse_numbers(lines[i], 2);
    try {
      g.add_edge(uv[0], uv[1]);
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(lines[i].number) + ": " + e.what());
    }
  }
  return g;
}

RelationalStructure structure_from_lines(const std::vector<Line>& lines) {
  std::istringstream head(lines.at(0).text);
  std::string keyword;
  std::size_t universe = 0;
  if (!(head >> keyword >> universe) || keyword != "universe") {
    throw InputError("line " + std::to_string(lines[0].number) + ": expected 'universe N'");
  }
  std::map<std::string, Relation> relations;
  Relation* current = nullptr;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream row(lines[i].text);
    std::string first;
    row >> first;
    if (first == "rel") {
      std::string name;
      std::size_t arity = 0;
      if (!(row >> name >> arity)) {
        throw InputError("line " + std::to_string(lines[i].number) + ": expected 'rel NAME ARITY'");
      }
      if (relations.contains(name)) {
        throw InputError("line " + std::to_string(lines[i].number) + ": relation " + name + " declared twice");
      }
      current = &relations[name];
      current->arity = arity;
      continue;
    }
    if (current == nullptr) {
      throw InputError("line " + std::to_string(lines[i].number) + ": tuple before any 'rel' block");
    }
    auto values = parse_numbers(lines[i], current->arity);
    current->tuples.insert(Tuple(values.begin(), values.end()));
  }
  return RelationalStructure(universe, std::move(relations));
}

bool looks_like_structure(const std::vector<Line>& lines) {
  if (lines.empty()) return false;
  std::istringstream head(lines[0].text);
  std::string keyword;
  head >> keyword;
  return keyword == "universe";
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return in;
}

}  // namespace

Graph read_graph(std::istream& in) { return graph_from_lines(content_lines(in)); }

void write_graph(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

RelationalStructure read_structure(std::istream& in) {
  auto lines = content_lines(in);
  if (lines.empty()) throw InputError("structure file is empty");
  return structure_from_lines(lines);
}

void write_structure(std::ostream& out, const RelationalStructure& s) {
  out << "universe " << s.size() << '\n';
  for (const auto& [name, rel] : s.relations()) {
    out << "rel " << name << ' ' << rel.arity << '\n';
    for (const auto& t : rel.tuples) {
      for (std::size_t i = 0; i < t.size(); ++i) out << (i ? " " : "") << t[i];
      out << '\n';
    }
  }
}

RelationalStructure read_structure_or_graph(std::istream& in) {
  auto lines = content_lines(in);
  if (lines.empty()) throw InputError("input file is empty");
  if (looks_like_structure(lines)) return structure_from_lines(lines);
  return RelationalStructure::from_graph(graph_from_lines(lines));
}

Graph load_graph(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_graph(in);
}

RelationalStructure load_structure(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_structure_or_graph(in);
}

void save_graph(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  write_graph(out, g);
}

}  // namespace seplogic
