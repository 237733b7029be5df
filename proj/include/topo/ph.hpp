#pragma once

#include <limits>
#include <string>
#include <tuple>
#include <vector>

#include "topo/filtration.hpp"
#include "topo/graph.hpp"

namespace topo {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct PersistencePair {
    int dim = 0;
    double birth = 0.0;
    double death = kInf;        // kInf marks a feature that never dies
    int rep_u = -1, rep_v = -1; // representatives; product pairs carry factor vertices
};

struct PersistenceDiagram {
    std::vector<PersistencePair> pairs;

    size_t size() const { return pairs.size(); }
    size_t count_dim(int d) const;
    // (dim, birth, death), sorted; the multiset the public contract compares
    std::vector<std::tuple<int, double, double>> sorted_triples() const;
};

bool diagrams_equal(const PersistenceDiagram& a, const PersistenceDiagram& b);
PersistenceDiagram filter_dim(const PersistenceDiagram& d, int dim);
PersistenceDiagram merge_diagrams(const PersistenceDiagram& a, const PersistenceDiagram& b);
std::vector<double> death_multiset(const PersistenceDiagram& d, int dim);
std::vector<double> birth_multiset(const PersistenceDiagram& d, int dim);

// Per-step bookkeeping of one union-find sweep. Step i < steps.size() refers
// to the critical value steps[i]; step steps.size() is the +infinity step at
// which surviving components are stamped dead.
struct AlgorithmTrace {
    FiltrationSteps steps;
    std::vector<std::vector<int>> births;  // non-trivial births per step
    std::vector<std::vector<int>> deaths;  // non-trivial deaths; at the inf step: survivors
    std::vector<std::vector<int>> betti;   // live component representatives after each step
    std::vector<long> alive_after;         // |betti[i]|
    std::vector<long> cycles;              // first-Betti increments per step

    std::vector<int> vertex_birth_step;
    std::vector<int> vertex_death_step;    // == inf_step() when the vertex never dies
    std::vector<double> vertex_birth_value;

    int inf_step() const { return static_cast<int>(steps.size()); }
    double step_value(int i) const { return i >= inf_step() ? kInf : steps[i]; }

    bool born_nt(int v, int i) const {
        return vertex_birth_step[v] == i && vertex_death_step[v] > i;
    }
    bool dies_nt(int v, int i) const {
        return vertex_death_step[v] == i && vertex_birth_step[v] < i;
    }
    bool alive_before(int v, int i) const {
        return vertex_birth_step[v] < i && vertex_death_step[v] >= i;
    }
    bool alive_after_step(int v, int i) const {
        return vertex_birth_step[v] <= i && vertex_death_step[v] > i;
    }
    long alive_count_before(int i) const { return i == 0 ? 0 : alive_after[i - 1]; }
    // At the infinity step everything has been stamped dead.
    long alive_count_after(int i) const { return i >= inf_step() ? 0 : alive_after[i]; }
};

struct PHResult {
    PersistenceDiagram diagram;
    AlgorithmTrace trace;
};

// 0-dimensional persistence by the elder rule. Ties: within one critical
// value edges are processed in ascending (u, v) order and on equal component
// births the larger representative index dies. An explicit step grid (a
// superset of the attained values) aligns traces across graphs.
PHResult ph0(const ColoredGraph& g, const GraphValues& f,
             const FiltrationSteps* grid = nullptr, bool want_step_lists = true);
PHResult ph0(const ColoredGraph& g, const VertexValues& f,
             const FiltrationSteps* grid = nullptr, bool want_step_lists = true);
PHResult ph0(const ColoredGraph& g, const EdgeValues& f,
             const FiltrationSteps* grid = nullptr, bool want_step_lists = true);
PHResult ph0(const ColoredGraph& g, const VertexFiltration& f);
PHResult ph0(const ColoredGraph& g, const EdgeFiltration& f);

// Cycle births (a_i, inf) with multiplicity = increment of the first Betti
// number at a_i.
PersistenceDiagram ph1(const ColoredGraph& g, const GraphValues& f);
PersistenceDiagram ph1(const ColoredGraph& g, const VertexValues& f);
PersistenceDiagram ph1(const ColoredGraph& g, const EdgeValues& f);
PersistenceDiagram ph1(const ColoredGraph& g, const VertexFiltration& f);
PersistenceDiagram ph1(const ColoredGraph& g, const EdgeFiltration& f);

// Dimensions 0 and 1 together.
PersistenceDiagram ph_all(const ColoredGraph& g, const GraphValues& f);
PersistenceDiagram ph_all(const ColoredGraph& g, const VertexValues& f);
PersistenceDiagram ph_all(const ColoredGraph& g, const EdgeValues& f);

// Vertex-level diagram under f and edge-level diagram under the max-induced
// edge filtration. Death multisets and cycle-birth multisets of the two
// coincide.
struct MaxPH {
    PersistenceDiagram vertex_level;
    PersistenceDiagram edge_level;
};
MaxPH max_ph(const ColoredGraph& g, const VertexFiltration& f);

// {"dim0": [[birth, death], ...], "dim1": [[birth, "inf"], ...]} with values
// as shortest round-trip decimal strings.
std::string diagram_to_json(const PersistenceDiagram& d);
PersistenceDiagram diagram_from_json(const std::string& text);
std::string format_value(double v);
double parse_value(const std::string& s);

}  // namespace topo
