#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "topo/graph.hpp"

namespace topo {

struct ParseError : std::runtime_error {
    int line;
    ParseError(const std::string& msg, int line_no)
        : std::runtime_error(msg + " (line " + std::to_string(line_no) + ")"),
          line(line_no) {}
};

// Text format: `v <idx> <color-label>` lines followed by `e <u> <v>` lines,
// `#` comments, vertex indices dense from 0. The color table is sorted
// alphabetically so label sets parse to identical tables.
ColoredGraph parse_edge_list(std::istream& in);
std::string write_edge_list(const ColoredGraph& g);

// Standard graph6, one graph per line; all vertices get one default color.
ColoredGraph parse_graph6_line(const std::string& line, int line_no = 1);
std::vector<ColoredGraph> parse_graph6(std::istream& in);
std::string write_graph6(const ColoredGraph& g);

// Dispatches on extension: .g6 -> graph6 (first graph), otherwise edge list.
ColoredGraph load_graph(const std::string& path);
std::vector<ColoredGraph> load_graphs(const std::string& path);

}  // namespace topo
