#ifndef P5COLOR_IO_HPP
#define P5COLOR_IO_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "p5color/graph.hpp"

namespace p5c {

// DIMACS ".col": header `p edge <n> <m>`, edge lines `e <u> <v>` (1-indexed),
// comment lines `c ...`. Duplicate edges are tolerated; self-loops are not.
Graph read_dimacs(std::istream& in);
Graph read_dimacs_file(const std::string& path);
void write_dimacs(std::ostream& out, const Graph& g,
                  const std::vector<std::string>& comments = {});

// List file: one line per vertex, `<vertex-label>: c1 c2 ...`. Vertices
// absent from the file keep the full palette [k]. Returned map is keyed by
// original label.
std::map<int, std::vector<int>> read_lists(std::istream& in);
std::map<int, std::vector<int>> read_lists_file(const std::string& path);
void write_lists(std::ostream& out, const std::map<int, std::vector<int>>& lists,
                 const std::vector<std::string>& comments = {});

} // namespace p5c

#endif
