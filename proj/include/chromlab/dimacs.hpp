#pragma once

#include <iosfwd>
#include <string>

#include "chromlab/graph.hpp"

namespace chromlab {

/// Writes `p edge <n> <m>` followed by one `e <u> <v>` line per edge,
/// 1-based, in lexicographic order of (u,v).
void write_dimacs(std::ostream& os, const Graph& g);

/// Reads the format produced by write_dimacs.  Lines starting with 'c' and
/// blank lines are skipped.  Self-loops, out-of-range endpoints, duplicate
/// edges, and an edge count disagreeing with the header are rejected with
/// parse_error.
Graph read_dimacs(std::istream& is);

Graph read_dimacs_file(const std::string& path);
void write_dimacs_file(const std::string& path, const Graph& g);

}  // namespace chromlab
