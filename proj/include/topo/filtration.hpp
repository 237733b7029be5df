#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "topo/graph.hpp"

namespace topo {

// Vertex-level color filtration: one value per color of the shared table.
struct VertexFiltration {
    std::vector<double> by_color;
    bool operator==(const VertexFiltration&) const = default;
};

// Edge-level color filtration: one value per unordered color pair, plus the
// reserved time at which every vertex enters (strictly below all values).
struct EdgeFiltration {
    std::vector<double> by_pair;  // pair_index order over the table
    double vertex_floor = 0.0;
    bool operator==(const EdgeFiltration&) const = default;
};

// 0 when all values are positive, otherwise one below the minimum.
double default_floor(const std::vector<double>& values);

EdgeFiltration make_edge_filtration(std::vector<double> by_pair);
EdgeFiltration max_edge_from_vertex(const VertexFiltration& f);

struct FiltrationSpec {
    std::optional<VertexFiltration> vertex;
    std::optional<EdgeFiltration> edge;
};

// JSON: {"vertex": {"red": 1.0, ...}, "edge": {"blue|red": 3.0, ...}} with
// edge keys alphabetically normalized.
FiltrationSpec parse_filtration_spec(const std::string& json_text,
                                     const std::vector<std::string>& color_table);
std::string write_filtration_spec(const FiltrationSpec& spec,
                                  const std::vector<std::string>& color_table);

// Concrete filtration values on one graph.
struct VertexValues {
    std::vector<double> v;  // size n
    bool operator==(const VertexValues&) const = default;
};

struct EdgeValues {
    std::vector<double> e;  // size m, aligned with graph.edges
    double floor = 0.0;     // strictly below every entry of e
    bool operator==(const EdgeValues&) const = default;
};

EdgeValues make_edge_values(std::vector<double> e);
EdgeValues make_edge_values(std::vector<double> e, double floor);

VertexValues lower(const ColoredGraph& g, const VertexFiltration& f);
EdgeValues lower(const ColoredGraph& g, const EdgeFiltration& f);

// Generic lower-star input consumed by persistence and EC routines:
// every element carries its own entry time, edge >= max endpoint.
struct GraphValues {
    std::vector<double> vertex;
    std::vector<double> edge;
};

GraphValues to_graph_values(const ColoredGraph& g, const VertexValues& f);
GraphValues to_graph_values(const ColoredGraph& g, const EdgeValues& f);

using FiltrationSteps = std::vector<double>;

FiltrationSteps steps_of(const GraphValues& f);
FiltrationSteps steps_of(const VertexValues& f);
FiltrationSteps steps_of(const EdgeValues& f);
FiltrationSteps union_steps(FiltrationSteps a, const FiltrationSteps& b);

struct Subgraph {
    std::vector<int> vertices;               // original ids, ascending
    std::vector<std::pair<int, int>> edges;  // original id pairs
    bool operator==(const Subgraph&) const = default;
};

Subgraph sublevel(const ColoredGraph& g, const GraphValues& f, double t);
Subgraph sublevel(const ColoredGraph& g, const VertexValues& f, double t);
Subgraph sublevel(const ColoredGraph& g, const EdgeValues& f, double t);

// Reindexed copy of the subgraph; keeps colors and the color table.
ColoredGraph induced(const ColoredGraph& g, const Subgraph& s);

// Value a product vertex with factor colors (a from G, b from H) enters at.
double product_vertex_value(const VertexFiltration& fg, const VertexFiltration& fh,
                            ColorId a, ColorId b);

// Coloring view over the product table; defined when the two factor maps
// induce one value per unordered pair.
struct ProductVertexColoring {
    VertexFiltration filtration;  // over product_color_table
    bool consistent = true;       // false when orientations disagree
    bool injective_inputs = true; // hypothesis flag, outputs stay exact either way
};
ProductVertexColoring product_vertex_filtration(const VertexFiltration& fg,
                                                const VertexFiltration& fh);

// Concrete product filtration values on a materialized box product.
VertexValues product_vertex_values(const ColoredGraph& g, const VertexValues& fg,
                                   const ColoredGraph& h, const VertexValues& fh);
EdgeValues product_edge_values(const ColoredGraph& g, const EdgeValues& fg,
                               const ColoredGraph& h, const EdgeValues& fh,
                               const ColoredGraph& product);

// Product of two arbitrary lower-star filtrations: each product element
// enters when both of its factor projections are present.
GraphValues product_graph_values(const ColoredGraph& g, const GraphValues& fg,
                                 const ColoredGraph& h, const GraphValues& fh,
                                 const ColoredGraph& product);

bool injective_on_present_colors(const ColoredGraph& g, const VertexFiltration& f);

// Deterministic random filtrations for battery tests; small integer values,
// ties allowed.
VertexFiltration random_vertex_filtration(int num_colors, std::mt19937_64& rng);
EdgeFiltration random_edge_filtration(int num_colors, std::mt19937_64& rng);

}  // namespace topo
