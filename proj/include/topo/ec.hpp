#pragma once

#include <optional>
#include <string>
#include <vector>

#include "topo/filtration.hpp"
#include "topo/graph.hpp"

namespace topo {

// Euler characteristics of the sublevel graphs, sampled at every value the
// filtration functions can produce over the color table. The edge part
// excludes the vertex floor.
struct ECDiagram {
    std::vector<double> vertex_values;
    std::vector<long> vertex_part;
    std::vector<double> edge_values;
    std::vector<long> edge_part;
    bool operator==(const ECDiagram&) const = default;
};

ECDiagram ec_diagram(const ColoredGraph& g, const VertexFiltration& fv,
                     const EdgeFiltration& fe);
ECDiagram ec_diagram(const ColoredGraph& g, const FiltrationSpec& spec);

// EC diagram with the max-induced edge filtration.
ECDiagram max_ec(const ColoredGraph& g, const VertexFiltration& fv);

// Value-level variant for structure-generated filtrations: vertex part over
// the value grid of f, edge part under max-induced edge entry times.
ECDiagram ec_from_values(const ColoredGraph& g, const VertexValues& f);
ECDiagram ec_from_values(const ColoredGraph& g, const EdgeValues& f);

// True iff the census data (#V per color, #E per color pair) coincide;
// differing vertex counts settle it immediately.
bool signatures_equal(const ColoredGraph& g, const ColoredGraph& h);

// A filtration under which the EC diagrams of g and h differ, built from the
// color-ordering constructions; nullopt when the signatures match and no
// witness exists.
std::optional<FiltrationSpec> find_ec_witness(const ColoredGraph& g, const ColoredGraph& h);

// Randomized filtration batteries over the shared color table.
bool ec_battery_equal(const ColoredGraph& g, const ColoredGraph& h, int count,
                      uint64_t seed);
bool max_ec_battery_equal(const ColoredGraph& g, const ColoredGraph& h, int count,
                          uint64_t seed);

std::string ec_to_json(const ECDiagram& d);

}  // namespace topo
