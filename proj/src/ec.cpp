#include "topo/ec.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace topo {

namespace {

// chi at each grid value for elements entering at the given times
std::vector<long> chi_curve(const std::vector<double>& grid,
                            std::vector<double> vertex_times,
                            std::vector<double> edge_times) {
    std::sort(vertex_times.begin(), vertex_times.end());
    std::sort(edge_times.begin(), edge_times.end());
    std::vector<long> out;
    out.reserve(grid.size());
    size_t vi = 0, ei = 0;
    long chi = 0;
    for (double t : grid) {
        while (vi < vertex_times.size() && vertex_times[vi] <= t) ++vi, ++chi;
        while (ei < edge_times.size() && edge_times[ei] <= t) ++ei, --chi;
        out.push_back(chi);
    }
    return out;
}

std::vector<double> function_image(const std::vector<double>& values) {
    std::vector<double> grid = values;
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

}  // namespace

ECDiagram ec_diagram(const ColoredGraph& g, const VertexFiltration& fv,
                     const EdgeFiltration& fe) {
    GraphValues vertex_level = to_graph_values(g, lower(g, fv));
    EdgeValues el = lower(g, fe);

    ECDiagram d;
    d.vertex_values = function_image(fv.by_color);
    d.vertex_part = chi_curve(d.vertex_values, vertex_level.vertex, vertex_level.edge);
    d.edge_values = function_image(fe.by_pair);
    // every vertex is present at the floor, before the first edge value
    std::vector<double> vertex_times(g.n, fe.vertex_floor);
    d.edge_part = chi_curve(d.edge_values, vertex_times, el.e);
    return d;
}

ECDiagram ec_diagram(const ColoredGraph& g, const FiltrationSpec& spec) {
    if (spec.vertex && spec.edge) return ec_diagram(g, *spec.vertex, *spec.edge);
    if (spec.vertex) return max_ec(g, *spec.vertex);
    throw std::invalid_argument("EC diagram needs a vertex filtration");
}

ECDiagram max_ec(const ColoredGraph& g, const VertexFiltration& fv) {
    return ec_diagram(g, fv, max_edge_from_vertex(fv));
}

ECDiagram ec_from_values(const ColoredGraph& g, const VertexValues& f) {
    GraphValues values = to_graph_values(g, f);
    ECDiagram d;
    d.vertex_values = function_image(f.v);
    d.vertex_part = chi_curve(d.vertex_values, values.vertex, values.edge);
    d.edge_values = d.vertex_values;
    std::vector<double> floor_times(g.n, default_floor(f.v));
    d.edge_part = chi_curve(d.edge_values, floor_times, values.edge);
    return d;
}

ECDiagram ec_from_values(const ColoredGraph& g, const EdgeValues& f) {
    ECDiagram d;
    d.edge_values = function_image(f.e);
    std::vector<double> vertex_times(g.n, f.floor);
    d.edge_part = chi_curve(d.edge_values, vertex_times, f.e);
    return d;
}

bool signatures_equal(const ColoredGraph& g, const ColoredGraph& h) {
    if (g.color_table != h.color_table)
        throw std::invalid_argument("signatures_equal: graphs must share a color table");
    if (g.n != h.n) return false;
    return ec_signature(g) == ec_signature(h);
}

namespace {

// f_v ranking the listed colors first (1, 2, ...), remaining colors after in
// table order; injective by construction.
VertexFiltration ordered_filtration(int k, const std::vector<ColorId>& first) {
    VertexFiltration f;
    f.by_color.assign(k, 0.0);
    double next = 1.0;
    for (ColorId c : first) f.by_color[c] = next++;
    for (int c = 0; c < k; ++c)
        if (f.by_color[c] == 0.0) f.by_color[c] = next++;
    return f;
}

long count_or_zero(const std::map<std::pair<ColorId, ColorId>, long>& m, ColorId a,
                   ColorId b) {
    auto it = m.find({std::min(a, b), std::max(a, b)});
    return it == m.end() ? 0 : it->second;
}

long count_or_zero(const std::map<ColorId, long>& m, ColorId c) {
    auto it = m.find(c);
    return it == m.end() ? 0 : it->second;
}

}  // namespace

std::optional<FiltrationSpec> find_ec_witness(const ColoredGraph& g, const ColoredGraph& h) {
    if (g.color_table != h.color_table)
        throw std::invalid_argument("find_ec_witness: graphs must share a color table");
    if (signatures_equal(g, h)) return std::nullopt;

    int k = g.num_colors();
    ECSignature sg = ec_signature(g), sh = ec_signature(h);

    std::vector<std::vector<ColorId>> orders;
    // a differing diagonal pair is separated by making its color smallest;
    // a differing cross pair by making its two colors the smallest two
    for (ColorId c = 0; c < k; ++c)
        if (count_or_zero(sg.edge_counts, c, c) != count_or_zero(sh.edge_counts, c, c))
            orders.push_back({c});
    for (ColorId a = 0; a < k; ++a)
        for (ColorId b = a + 1; b < k; ++b)
            if (count_or_zero(sg.edge_counts, a, b) != count_or_zero(sh.edge_counts, a, b))
                orders.push_back({a, b});
    // with all edge counts equal a vertex-count difference shows in chi(G(c))
    for (ColorId c = 0; c < k; ++c)
        if (count_or_zero(sg.vertex_counts, c) != count_or_zero(sh.vertex_counts, c))
            orders.push_back({c});
    orders.push_back({});

    for (const auto& order : orders) {
        FiltrationSpec spec;
        spec.vertex = ordered_filtration(k, order);
        spec.edge = max_edge_from_vertex(*spec.vertex);
        if (!(ec_diagram(g, spec) == ec_diagram(h, spec))) return spec;
    }
    if (g.n == h.n)
        throw std::logic_error("witness construction failed to separate the diagrams");
    // with different vertex totals the diagrams can agree everywhere
    return std::nullopt;
}

bool ec_battery_equal(const ColoredGraph& g, const ColoredGraph& h, int count,
                      uint64_t seed) {
    if (g.color_table != h.color_table)
        throw std::invalid_argument("battery: graphs must share a color table");
    std::mt19937_64 rng(seed);
    int k = g.num_colors();
    for (int i = 0; i < count; ++i) {
        VertexFiltration fv = random_vertex_filtration(k, rng);
        EdgeFiltration fe = random_edge_filtration(k, rng);
        if (!(ec_diagram(g, fv, fe) == ec_diagram(h, fv, fe))) return false;
    }
    return true;
}

bool max_ec_battery_equal(const ColoredGraph& g, const ColoredGraph& h, int count,
                          uint64_t seed) {
    if (g.color_table != h.color_table)
        throw std::invalid_argument("battery: graphs must share a color table");
    std::mt19937_64 rng(seed);
    int k = g.num_colors();
    for (int i = 0; i < count; ++i) {
        VertexFiltration fv = random_vertex_filtration(k, rng);
        if (!(max_ec(g, fv) == max_ec(h, fv))) return false;
    }
    return true;
}

std::string ec_to_json(const ECDiagram& d) {
    nlohmann::json j;
    j["vertex"] = d.vertex_part;
    j["edge"] = d.edge_part;
    j["vertex_values"] = d.vertex_values;
    j["edge_values"] = d.edge_values;
    return j.dump();
}

}  // namespace topo
