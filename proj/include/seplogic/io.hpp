#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "seplogic/graph.hpp"
#include "seplogic/structure.hpp"

namespace seplogic {

// Graph text format:
//   n m
//   u v        (m lines, 0-based endpoints)
// Structure text format:
//   universe n
//   rel NAME ARITY
//   a1 ... aARITY   (one tuple per line, until the next "rel")
// Blank lines and lines starting with '#' are ignored in both. A structure
// must contain an "E" block.

Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

RelationalStructure read_structure(std::istream& in);
void write_structure(std::ostream& out, const RelationalStructure& s);

/// Reads a structure file, or a graph file converted with from_graph.
RelationalStructure read_structure_or_graph(std::istream& in);

Graph load_graph(const std::filesystem::path& path);
RelationalStructure load_structure(const std::filesystem::path& path);
void save_graph(const std::filesystem::path& path, const Graph& g);

}  // namespace seplogic
