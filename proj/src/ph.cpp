#include "topo/ph.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace topo {

size_t PersistenceDiagram::count_dim(int d) const {
    size_t c = 0;
    for (const auto& p : pairs) c += (p.dim == d);
    return c;
}

std::vector<std::tuple<int, double, double>> PersistenceDiagram::sorted_triples() const {
    std::vector<std::tuple<int, double, double>> t;
    t.reserve(pairs.size());
    for (const auto& p : pairs) t.emplace_back(p.dim, p.birth, p.death);
    std::sort(t.begin(), t.end());
    return t;
}

bool diagrams_equal(const PersistenceDiagram& a, const PersistenceDiagram& b) {
    return a.sorted_triples() == b.sorted_triples();
}

PersistenceDiagram filter_dim(const PersistenceDiagram& d, int dim) {
    PersistenceDiagram out;
    for (const auto& p : d.pairs)
        if (p.dim == dim) out.pairs.push_back(p);
    return out;
}

PersistenceDiagram merge_diagrams(const PersistenceDiagram& a, const PersistenceDiagram& b) {
    PersistenceDiagram out = a;
    out.pairs.insert(out.pairs.end(), b.pairs.begin(), b.pairs.end());
    return out;
}

std::vector<double> death_multiset(const PersistenceDiagram& d, int dim) {
    std::vector<double> out;
    for (const auto& p : d.pairs)
        if (p.dim == dim) out.push_back(p.death);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<double> birth_multiset(const PersistenceDiagram& d, int dim) {
    std::vector<double> out;
    for (const auto& p : d.pairs)
        if (p.dim == dim) out.push_back(p.birth);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

int step_of(const FiltrationSteps& grid, double value) {
    auto it = std::lower_bound(grid.begin(), grid.end(), value);
    if (it == grid.end() || *it != value)
        throw std::logic_error("filtration value missing from step grid");
    return static_cast<int>(it - grid.begin());
}

struct ElderUnionFind {
    std::vector<int> parent, size, rep;
    explicit ElderUnionFind(int n) : parent(n), size(n, 1), rep(n) {
        std::iota(parent.begin(), parent.end(), 0);
        std::iota(rep.begin(), rep.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
};

}  // namespace

PHResult ph0(const ColoredGraph& g, const GraphValues& f,
             const FiltrationSteps* grid, bool want_step_lists) {
    FiltrationSteps own_grid;
    if (!grid) {
        own_grid = steps_of(f);
        grid = &own_grid;
    }
    const FiltrationSteps& steps = *grid;
    const int n_steps = static_cast<int>(steps.size());
    const int inf_step = n_steps;

    AlgorithmTrace trace;
    trace.steps = steps;
    trace.births.assign(n_steps + 1, {});
    trace.deaths.assign(n_steps + 1, {});
    trace.betti.assign(n_steps + 1, {});
    trace.alive_after.assign(n_steps + 1, 0);
    trace.cycles.assign(n_steps + 1, 0);
    trace.vertex_birth_step.resize(g.n);
    trace.vertex_death_step.assign(g.n, inf_step);
    trace.vertex_birth_value.resize(g.n);

    std::vector<std::vector<int>> verts_at(n_steps), edges_at(n_steps);
    for (int v = 0; v < g.n; ++v) {
        int s = step_of(steps, f.vertex[v]);
        trace.vertex_birth_step[v] = s;
        trace.vertex_birth_value[v] = f.vertex[v];
        verts_at[s].push_back(v);
    }
    for (size_t e = 0; e < g.edges.size(); ++e)
        edges_at[step_of(steps, f.edge[e])].push_back(static_cast<int>(e));

    ElderUnionFind uf(g.n);
    std::vector<char> added(g.n, 0), killed(g.n, 0);
    std::vector<double> death_value(g.n, kInf);
    long alive = 0;

    for (int i = 0; i < n_steps; ++i) {
        double a = steps[i];
        for (int v : verts_at[i]) {
            added[v] = 1;
            ++alive;
        }
        // g.edges is globally sorted, so each bucket is already in (u, v) order
        for (int e : edges_at[i]) {
            auto [u, v] = g.edges[e];
            if (!added[u] || !added[v])
                throw std::logic_error("edge enters before an endpoint");
            int ru = uf.find(u), rv = uf.find(v);
            if (ru == rv) {
                ++trace.cycles[i];
                continue;
            }
            int pu = uf.rep[ru], pv = uf.rep[rv];
            // elder rule: younger dies; on equal births the larger index dies
            bool pu_is_elder =
                std::make_pair(trace.vertex_birth_value[pu], pu) <
                std::make_pair(trace.vertex_birth_value[pv], pv);
            int keep_rep = pu_is_elder ? pu : pv;
            int loser_rep = pu_is_elder ? pv : pu;

            killed[loser_rep] = 1;
            --alive;
            death_value[loser_rep] = a;
            trace.vertex_death_step[loser_rep] = i;
            if (trace.vertex_birth_step[loser_rep] < i)
                trace.deaths[i].push_back(loser_rep);

            if (uf.size[ru] < uf.size[rv]) std::swap(ru, rv);
            uf.parent[rv] = ru;
            uf.size[ru] += uf.size[rv];
            uf.rep[ru] = keep_rep;
        }
        for (int v : verts_at[i])
            if (!killed[v]) trace.births[i].push_back(v);
        trace.alive_after[i] = alive;
        if (want_step_lists) {
            for (int v = 0; v < g.n; ++v)
                if (added[v] && !killed[v]) trace.betti[i].push_back(v);
        }
    }

    // infinity step: surviving components die at +inf
    for (int v = 0; v < g.n; ++v) {
        if (added[v] && !killed[v]) {
            trace.deaths[inf_step].push_back(v);
            if (want_step_lists) trace.betti[inf_step].push_back(v);
        }
    }
    trace.alive_after[inf_step] = static_cast<long>(trace.deaths[inf_step].size());

    PHResult result;
    result.diagram.pairs.reserve(g.n);
    for (int v = 0; v < g.n; ++v) {
        if (!added[v]) throw std::logic_error("vertex never entered the filtration");
        PersistencePair p;
        p.dim = 0;
        p.birth = trace.vertex_birth_value[v];
        p.death = death_value[v];
        p.rep_u = v;
        result.diagram.pairs.push_back(p);
    }
    result.trace = std::move(trace);
    return result;
}

PHResult ph0(const ColoredGraph& g, const VertexValues& f,
             const FiltrationSteps* grid, bool want_step_lists) {
    return ph0(g, to_graph_values(g, f), grid, want_step_lists);
}

PHResult ph0(const ColoredGraph& g, const EdgeValues& f,
             const FiltrationSteps* grid, bool want_step_lists) {
    return ph0(g, to_graph_values(g, f), grid, want_step_lists);
}

PHResult ph0(const ColoredGraph& g, const VertexFiltration& f) { return ph0(g, lower(g, f)); }
PHResult ph0(const ColoredGraph& g, const EdgeFiltration& f) { return ph0(g, lower(g, f)); }

namespace {

PersistenceDiagram cycles_to_diagram(const AlgorithmTrace& trace) {
    PersistenceDiagram out;
    for (int i = 0; i < trace.inf_step(); ++i) {
        for (long c = 0; c < trace.cycles[i]; ++c) {
            PersistencePair p;
            p.dim = 1;
            p.birth = trace.steps[i];
            p.death = kInf;
            out.pairs.push_back(p);
        }
    }
    return out;
}

}  // namespace

PersistenceDiagram ph1(const ColoredGraph& g, const GraphValues& f) {
    return cycles_to_diagram(ph0(g, f, nullptr, false).trace);
}

PersistenceDiagram ph1(const ColoredGraph& g, const VertexValues& f) {
    return ph1(g, to_graph_values(g, f));
}

PersistenceDiagram ph1(const ColoredGraph& g, const EdgeValues& f) {
    return ph1(g, to_graph_values(g, f));
}

PersistenceDiagram ph1(const ColoredGraph& g, const VertexFiltration& f) {
    return ph1(g, lower(g, f));
}

PersistenceDiagram ph1(const ColoredGraph& g, const EdgeFiltration& f) {
    return ph1(g, lower(g, f));
}

PersistenceDiagram ph_all(const ColoredGraph& g, const GraphValues& f) {
    PHResult r = ph0(g, f, nullptr, false);
    return merge_diagrams(r.diagram, cycles_to_diagram(r.trace));
}

PersistenceDiagram ph_all(const ColoredGraph& g, const VertexValues& f) {
    return ph_all(g, to_graph_values(g, f));
}

PersistenceDiagram ph_all(const ColoredGraph& g, const EdgeValues& f) {
    return ph_all(g, to_graph_values(g, f));
}

MaxPH max_ph(const ColoredGraph& g, const VertexFiltration& f) {
    for (double v : f.by_color)
        if (!(v > 0)) throw std::invalid_argument("max_ph needs a strictly positive filtration");
    MaxPH out;
    out.vertex_level = ph_all(g, lower(g, f));
    out.edge_level = ph_all(g, lower(g, max_edge_from_vertex(f)));
    return out;
}

std::string format_value(double v) {
    if (v == kInf) return "inf";
    if (v == -kInf) return "-inf";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double parse_value(const std::string& s) {
    if (s == "inf") return kInf;
    if (s == "-inf") return -kInf;
    size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw std::runtime_error("bad numeric value '" + s + "'");
    return v;
}

std::string diagram_to_json(const PersistenceDiagram& d) {
    nlohmann::json j;
    j["dim0"] = nlohmann::json::array();
    j["dim1"] = nlohmann::json::array();
    auto triples = d.sorted_triples();
    for (const auto& [dim, birth, death] : triples) {
        nlohmann::json entry = {format_value(birth), format_value(death)};
        j[dim == 0 ? "dim0" : "dim1"].push_back(std::move(entry));
    }
    return j.dump();
}

PersistenceDiagram diagram_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    PersistenceDiagram d;
    for (int dim : {0, 1}) {
        const char* key = dim == 0 ? "dim0" : "dim1";
        if (!j.contains(key)) continue;
        for (const auto& entry : j[key]) {
            PersistencePair p;
            p.dim = dim;
            p.birth = parse_value(entry.at(0).get<std::string>());
            p.death = parse_value(entry.at(1).get<std::string>());
            d.pairs.push_back(p);
        }
    }
    return d;
}

}  // namespace topo
