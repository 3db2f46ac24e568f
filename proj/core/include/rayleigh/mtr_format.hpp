#pragma once

#include <istream>
#include <optional>
#include <string>

#include "rayleigh/graph.hpp"
#include "rayleigh/matroid.hpp"

namespace rayleigh {

// Result of reading a ".mtr" document. Graph bodies also carry the graph
// itself so edge/vertex-level operations keep their structure.
struct MtrContent {
  Matroid matroid;
  std::optional<Graph> graph;
};

// Line-oriented text format. "#" starts a comment; blank lines are ignored.
//   name <free text>            (optional)
//   elements <label> ...        (required, defines the ground order)
// followed by exactly one body:
//   field gf2|gf3|rational      then a "matrix" line and one row per line
//   bases                       then one basis per line, as labels
//   transversal                 then one set per line
//   lines3                      then one three-point line per line
//   uniform <r> <m>             (m must match the element count)
//   graph                       then <edge-label> <tail> <head> per line
// Parse failures throw ParseError carrying the 1-based line number.
MtrContent parse_mtr(std::istream& in);
MtrContent parse_mtr_text(const std::string& text);
MtrContent load_mtr(const std::string& path);  // Error on unreadable files

// Canonical "bases" body; re-parsing yields an equal matroid.
std::string write_mtr(const Matroid& m);
// "graph" body preserving edge order and orientation.
std::string write_mtr(const Graph& g, const std::string& name);

}  // namespace rayleigh
