#pragma once

#include <stdexcept>
#include <variant>

#include "topo/filtration.hpp"
#include "topo/graph.hpp"
#include "topo/ph.hpp"

namespace topo {

inline constexpr long kDefaultProductBudget = 4'000'000;

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// 0-dimensional persistence of the product of two vertex-level filtrations,
// computed from the factor sweeps without materializing the product.
PersistenceDiagram prod_vertex_ph0(const ColoredGraph& g, const VertexValues& fg,
                                   const ColoredGraph& h, const VertexValues& fh);
PersistenceDiagram prod_vertex_ph0(const ColoredGraph& g, const VertexFiltration& fg,
                                   const ColoredGraph& h, const VertexFiltration& fh);

// Same output through the symmetric non-trivial-birth rule (intersection of
// the two one-sided candidate sets).
PersistenceDiagram prod_vertex_ph0_symmetric(const ColoredGraph& g, const VertexValues& fg,
                                             const ColoredGraph& h, const VertexValues& fh);
PersistenceDiagram prod_vertex_ph0_symmetric(const ColoredGraph& g, const VertexFiltration& fg,
                                             const ColoredGraph& h, const VertexFiltration& fh);

// 0-dimensional persistence of the product of two edge-level filtrations
// sharing a vertex floor; only death counts are tracked.
PersistenceDiagram prod_edge_ph0(const ColoredGraph& g, const EdgeValues& fg,
                                 const ColoredGraph& h, const EdgeValues& fh);
PersistenceDiagram prod_edge_ph0(const ColoredGraph& g, const EdgeFiltration& fg,
                                 const ColoredGraph& h, const EdgeFiltration& fh);

// Factor filtrations of either level.
using FactorFiltration = std::variant<VertexValues, EdgeValues>;

// 1-dimensional persistence of any product filtration: cycle births from the
// closed-form first Betti number of the product, no product built.
PersistenceDiagram prod_ph1(const ColoredGraph& g, const FactorFiltration& fg,
                            const ColoredGraph& h, const FactorFiltration& fh);

// Oracle and benchmark baseline: materializes the box product and its
// product filtration, then runs the single-graph sweep. Dimensions 0 and 1.
PersistenceDiagram naive_prod_ph(const ColoredGraph& g, const FactorFiltration& fg,
                                 const ColoredGraph& h, const FactorFiltration& fh,
                                 long budget = kDefaultProductBudget);

}  // namespace topo
