#pragma once

#include <string>
#include <utility>

#include "topo/filtration.hpp"
#include "topo/graph.hpp"

namespace topo {

enum class FiltrationKind { Degree, Betweenness, Closeness, FormanRicci };

FiltrationKind parse_filtration_kind(const std::string& name);
std::string filtration_kind_name(FiltrationKind kind);
bool is_edge_level(FiltrationKind kind);

// Structure-derived filtration values. Degree, betweenness and closeness are
// vertex-level; Forman-Ricci (4 - deg u - deg v) is edge-level. Betweenness
// and closeness are rounded to 12 significant digits so value classes are
// reproducible. Vertices carrying a virtual color are shifted strictly below
// every other value.
struct StructuralFiltration {
    FiltrationKind kind;
    std::optional<VertexValues> vertex;
    std::optional<EdgeValues> edge;
};

StructuralFiltration generate_filtration(const ColoredGraph& g, FiltrationKind kind);
VertexValues generate_vertex_values(const ColoredGraph& g, FiltrationKind kind);
EdgeValues generate_edge_values(const ColoredGraph& g, FiltrationKind kind);

double round_significant(double x, int digits = 12);

// Recolors the graph by value classes (one color per distinct value, in
// ascending value order) and returns the matching vertex filtration.
std::pair<ColoredGraph, VertexFiltration> value_class_coloring(const ColoredGraph& g,
                                                               const VertexValues& f);

// Shared value-class coloring for a pair of graphs: classes come from the
// union of both value sets, so the recolored graphs share a table.
std::pair<ColoredGraph, ColoredGraph> shared_value_class_coloring(
    const ColoredGraph& g, const VertexValues& fg, const ColoredGraph& h,
    const VertexValues& fh, VertexFiltration* out_filtration = nullptr);

}  // namespace topo
