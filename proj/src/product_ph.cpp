#include "topo/product_ph.hpp"

#include <algorithm>

namespace topo {

namespace {

// Tuple state shared by the two vertex-level algorithms. Tuples are indexed
// i * n_H + j; birth steps refer to the union grid of both factors.
struct TupleSweep {
    const AlgorithmTrace& tg;
    const AlgorithmTrace& th;
    int n_g, n_h;
    std::vector<int> birth_step;              // per tuple
    std::vector<double> death;                // kInf while unmarked
    std::vector<char> marked;
    std::vector<std::vector<int>> by_birth;   // tuple ids per birth step

    TupleSweep(const ColoredGraph& g, const AlgorithmTrace& tg_in,
               const ColoredGraph& h, const AlgorithmTrace& th_in)
        : tg(tg_in), th(th_in), n_g(g.n), n_h(h.n) {
        size_t total = static_cast<size_t>(n_g) * n_h;
        birth_step.resize(total);
        death.assign(total, kInf);
        marked.assign(total, 0);
        by_birth.assign(tg.steps.size() + 1, {});
        for (int i = 0; i < n_g; ++i) {
            for (int j = 0; j < n_h; ++j) {
                int s = std::max(tg.vertex_birth_step[i], th.vertex_birth_step[j]);
                size_t t = static_cast<size_t>(i) * n_h + j;
                birth_step[t] = s;
                by_birth[s].push_back(static_cast<int>(t));
            }
        }
    }

    void mark(size_t t, double value) {
        marked[t] = 1;
        death[t] = value;
    }

    // deaths of one factor at step i kill every unmarked tuple in that
    // factor's row/column that was born strictly earlier
    void mark_factor_deaths(int i, double a) {
        for (int v : th.deaths[i]) {
            for (int u = 0; u < n_g; ++u) {
                size_t t = static_cast<size_t>(u) * n_h + v;
                if (!marked[t] && birth_step[t] < i) mark(t, a);
            }
        }
        for (int u : tg.deaths[i]) {
            size_t row = static_cast<size_t>(u) * n_h;
            for (int v = 0; v < n_h; ++v) {
                size_t t = row + v;
                if (!marked[t] && birth_step[t] < i) mark(t, a);
            }
        }
    }

    PersistenceDiagram diagram(const FiltrationSteps& grid) const {
        PersistenceDiagram out;
        out.pairs.reserve(marked.size());
        for (int u = 0; u < n_g; ++u) {
            for (int v = 0; v < n_h; ++v) {
                size_t t = static_cast<size_t>(u) * n_h + v;
                PersistencePair p;
                p.dim = 0;
                p.birth = grid[birth_step[t]];
                p.death = death[t];
                p.rep_u = u;
                p.rep_v = v;
                out.pairs.push_back(p);
            }
        }
        return out;
    }
};

PersistenceDiagram prod_vertex_ph0_impl(const ColoredGraph& g, const VertexValues& fg,
                                        const ColoredGraph& h, const VertexValues& fh,
                                        bool symmetric_rule) {
    if (g.n == 0 || h.n == 0) return {};
    FiltrationSteps grid = union_steps(steps_of(fg), steps_of(fh));
    AlgorithmTrace tg = ph0(g, fg, &grid, false).trace;
    AlgorithmTrace th = ph0(h, fh, &grid, false).trace;

    TupleSweep sweep(g, tg, h, th);
    int inf_step = static_cast<int>(grid.size());

    for (int i = 0; i <= inf_step; ++i) {
        double a = i == inf_step ? kInf : grid[i];
        sweep.mark_factor_deaths(i, a);
        if (i == inf_step) break;

        // everything born exactly now that is not a non-trivial birth of the
        // product filtration dies immediately
        for (int t : sweep.by_birth[i]) {
            if (sweep.marked[t]) continue;
            int u = t / h.n, v = t % h.n;
            bool nt;
            if (!symmetric_rule) {
                nt = (tg.born_nt(u, i) && th.alive_before(v, i)) ||
                     (tg.alive_after_step(u, i) && th.born_nt(v, i));
                if (tg.born_nt(u, i) && th.dies_nt(v, i)) nt = false;
            } else {
                bool one = (tg.born_nt(u, i) && th.alive_before(v, i)) ||
                           (tg.alive_after_step(u, i) && th.born_nt(v, i));
                bool two = (tg.alive_before(u, i) && th.born_nt(v, i)) ||
                           (tg.born_nt(u, i) && th.alive_after_step(v, i));
                nt = one && two;
            }
            if (!nt) sweep.mark(t, grid[i]);
        }
    }
    return sweep.diagram(grid);
}

}  // namespace

PersistenceDiagram prod_vertex_ph0(const ColoredGraph& g, const VertexValues& fg,
                                   const ColoredGraph& h, const VertexValues& fh) {
    return prod_vertex_ph0_impl(g, fg, h, fh, false);
}

PersistenceDiagram prod_vertex_ph0_symmetric(const ColoredGraph& g, const VertexValues& fg,
                                             const ColoredGraph& h, const VertexValues& fh) {
    return prod_vertex_ph0_impl(g, fg, h, fh, true);
}

PersistenceDiagram prod_vertex_ph0(const ColoredGraph& g, const VertexFiltration& fg,
                                   const ColoredGraph& h, const VertexFiltration& fh) {
    return prod_vertex_ph0(g, lower(g, fg), h, lower(h, fh));
}

PersistenceDiagram prod_vertex_ph0_symmetric(const ColoredGraph& g, const VertexFiltration& fg,
                                             const ColoredGraph& h, const VertexFiltration& fh) {
    return prod_vertex_ph0_symmetric(g, lower(g, fg), h, lower(h, fh));
}

PersistenceDiagram prod_edge_ph0(const ColoredGraph& g, const EdgeValues& fg,
                                 const ColoredGraph& h, const EdgeValues& fh) {
    if (fg.floor != fh.floor)
        throw std::invalid_argument("prod_edge_ph0 needs a common vertex floor");
    if (g.n == 0 || h.n == 0) return {};
    FiltrationSteps grid = union_steps(steps_of(fg), steps_of(fh));
    AlgorithmTrace tg = ph0(g, fg, &grid, false).trace;
    AlgorithmTrace th = ph0(h, fh, &grid, false).trace;

    double floor = fg.floor;
    int inf_step = static_cast<int>(grid.size());
    PersistenceDiagram out;
    out.pairs.reserve(static_cast<size_t>(g.n) * h.n);
    long emitted = 0;
    for (int i = 0; i <= inf_step; ++i) {
        double a = i == inf_step ? kInf : grid[i];
        // the H factor advances against G's state after this step; at the
        // infinity step the G side has already been stamped out
        long num = th.alive_count_before(i) * static_cast<long>(tg.deaths[i].size()) +
                   tg.alive_count_after(i) * static_cast<long>(th.deaths[i].size());
        for (long c = 0; c < num; ++c) {
            PersistencePair p;
            p.dim = 0;
            p.birth = floor;
            p.death = a;
            out.pairs.push_back(p);
        }
        emitted += num;
    }
    if (emitted != static_cast<long>(g.n) * h.n)
        throw std::logic_error("prod_edge_ph0 lost track of tuples");
    return out;
}

PersistenceDiagram prod_edge_ph0(const ColoredGraph& g, const EdgeFiltration& fg,
                                 const ColoredGraph& h, const EdgeFiltration& fh) {
    return prod_edge_ph0(g, lower(g, fg), h, lower(h, fh));
}

namespace {

GraphValues factor_graph_values(const ColoredGraph& g, const FactorFiltration& f) {
    if (std::holds_alternative<VertexValues>(f))
        return to_graph_values(g, std::get<VertexValues>(f));
    return to_graph_values(g, std::get<EdgeValues>(f));
}

// vertex count, edge count and live component count of each sublevel
struct Census {
    std::vector<long> nv, ne, b0;
};

Census census_on_grid(const ColoredGraph& g, const GraphValues& f,
                      const FiltrationSteps& grid) {
    AlgorithmTrace tr = ph0(g, f, &grid, false).trace;
    Census c;
    int k = static_cast<int>(grid.size());
    c.nv.assign(k, 0);
    c.ne.assign(k, 0);
    c.b0.assign(k, 0);
    std::vector<long> dv(k, 0), de(k, 0);
    for (double v : f.vertex) dv[std::lower_bound(grid.begin(), grid.end(), v) - grid.begin()]++;
    for (double e : f.edge) de[std::lower_bound(grid.begin(), grid.end(), e) - grid.begin()]++;
    long sv = 0, se = 0;
    for (int i = 0; i < k; ++i) {
        sv += dv[i];
        se += de[i];
        c.nv[i] = sv;
        c.ne[i] = se;
        c.b0[i] = tr.alive_after[i];
    }
    return c;
}

}  // namespace

PersistenceDiagram prod_ph1(const ColoredGraph& g, const FactorFiltration& fg,
                            const ColoredGraph& h, const FactorFiltration& fh) {
    if (g.n == 0 || h.n == 0) return {};
    GraphValues vg = factor_graph_values(g, fg);
    GraphValues vh = factor_graph_values(h, fh);
    FiltrationSteps grid = union_steps(steps_of(vg), steps_of(vh));
    Census cg = census_on_grid(g, vg, grid);
    Census ch = census_on_grid(h, vh, grid);

    PersistenceDiagram out;
    long prev = 0;
    for (size_t i = 0; i < grid.size(); ++i) {
        long chi_g = cg.nv[i] - cg.ne[i];
        long chi_h = ch.nv[i] - ch.ne[i];
        long b1 = cg.ne[i] * ch.ne[i] + cg.b0[i] * ch.b0[i] - chi_g * chi_h;
        if (b1 < prev) throw std::logic_error("first Betti number of the product decreased");
        for (long c = prev; c < b1; ++c) {
            PersistencePair p;
            p.dim = 1;
            p.birth = grid[i];
            p.death = kInf;
            out.pairs.push_back(p);
        }
        prev = b1;
    }
    return out;
}

PersistenceDiagram naive_prod_ph(const ColoredGraph& g, const FactorFiltration& fg,
                                 const ColoredGraph& h, const FactorFiltration& fh,
                                 long budget) {
    long total = static_cast<long>(g.n) * h.n;
    if (total > budget)
        throw BudgetError("product has " + std::to_string(total) +
                          " vertices, budget is " + std::to_string(budget));
    if (g.n == 0 || h.n == 0) return {};
    ColoredGraph p = box_product(g, h);
    GraphValues values = product_graph_values(g, factor_graph_values(g, fg), h,
                                              factor_graph_values(h, fh), p);
    return ph_all(p, values);
}

}  // namespace topo
