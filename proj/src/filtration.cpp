#include "topo/filtration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

namespace topo {

double default_floor(const std::vector<double>& values) {
    double min_v = std::numeric_limits<double>::infinity();
    for (double v : values) min_v = std::min(min_v, v);
    if (min_v > 0.0) return 0.0;
    return min_v - 1.0;
}

EdgeFiltration make_edge_filtration(std::vector<double> by_pair) {
    EdgeFiltration f;
    f.vertex_floor = default_floor(by_pair);
    f.by_pair = std::move(by_pair);
    return f;
}

EdgeFiltration max_edge_from_vertex(const VertexFiltration& f) {
    int k = static_cast<int>(f.by_color.size());
    EdgeFiltration out;
    out.by_pair.resize(num_color_pairs(k));
    for (int a = 0; a < k; ++a)
        for (int b = a; b < k; ++b)
            out.by_pair[pair_index(a, b, k)] = std::max(f.by_color[a], f.by_color[b]);
    out.vertex_floor = default_floor(out.by_pair);
    return out;
}

EdgeValues make_edge_values(std::vector<double> e) {
    EdgeValues out;
    out.floor = default_floor(e);
    out.e = std::move(e);
    return out;
}

EdgeValues make_edge_values(std::vector<double> e, double floor) {
    for (double v : e)
        if (!(floor < v)) throw std::invalid_argument("edge value at or below the vertex floor");
    EdgeValues out;
    out.e = std::move(e);
    out.floor = floor;
    return out;
}

VertexValues lower(const ColoredGraph& g, const VertexFiltration& f) {
    if (f.by_color.size() != static_cast<size_t>(g.num_colors()))
        throw std::invalid_argument("vertex filtration not total on the color table");
    VertexValues out;
    out.v.resize(g.n);
    for (int v = 0; v < g.n; ++v) out.v[v] = f.by_color[g.color[v]];
    return out;
}

EdgeValues lower(const ColoredGraph& g, const EdgeFiltration& f) {
    int k = g.num_colors();
    if (f.by_pair.size() != static_cast<size_t>(num_color_pairs(k)))
        throw std::invalid_argument("edge filtration not total on the color pairs");
    EdgeValues out;
    out.floor = f.vertex_floor;
    out.e.resize(g.edges.size());
    for (size_t i = 0; i < g.edges.size(); ++i) {
        auto [u, v] = g.edges[i];
        out.e[i] = f.by_pair[pair_index(g.color[u], g.color[v], k)];
        if (!(out.floor < out.e[i]))
            throw std::invalid_argument("edge filtration value at or below the vertex floor");
    }
    return out;
}

GraphValues to_graph_values(const ColoredGraph& g, const VertexValues& f) {
    if (f.v.size() != static_cast<size_t>(g.n))
        throw std::invalid_argument("vertex values size mismatch");
    GraphValues out;
    out.vertex = f.v;
    out.edge.resize(g.edges.size());
    for (size_t i = 0; i < g.edges.size(); ++i)
        out.edge[i] = std::max(f.v[g.edges[i].first], f.v[g.edges[i].second]);
    return out;
}

GraphValues to_graph_values(const ColoredGraph& g, const EdgeValues& f) {
    if (f.e.size() != g.edges.size())
        throw std::invalid_argument("edge values size mismatch");
    GraphValues out;
    out.vertex.assign(g.n, f.floor);
    out.edge = f.e;
    return out;
}

namespace {

FiltrationSteps sorted_unique(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

FiltrationSteps steps_of(const GraphValues& f) {
    std::vector<double> all = f.vertex;
    all.insert(all.end(), f.edge.begin(), f.edge.end());
    return sorted_unique(std::move(all));
}

FiltrationSteps steps_of(const VertexValues& f) { return sorted_unique(f.v); }

FiltrationSteps steps_of(const EdgeValues& f) {
    std::vector<double> all = f.e;
    all.push_back(f.floor);
    return sorted_unique(std::move(all));
}

FiltrationSteps union_steps(FiltrationSteps a, const FiltrationSteps& b) {
    a.insert(a.end(), b.begin(), b.end());
    return sorted_unique(std::move(a));
}

Subgraph sublevel(const ColoredGraph& g, const GraphValues& f, double t) {
    Subgraph s;
    for (int v = 0; v < g.n; ++v)
        if (f.vertex[v] <= t) s.vertices.push_back(v);
    for (size_t i = 0; i < g.edges.size(); ++i)
        if (f.edge[i] <= t) s.edges.push_back(g.edges[i]);
    return s;
}

Subgraph sublevel(const ColoredGraph& g, const VertexValues& f, double t) {
    return sublevel(g, to_graph_values(g, f), t);
}

Subgraph sublevel(const ColoredGraph& g, const EdgeValues& f, double t) {
    return sublevel(g, to_graph_values(g, f), t);
}

ColoredGraph induced(const ColoredGraph& g, const Subgraph& s) {
    std::unordered_map<int, int> index;
    index.reserve(s.vertices.size());
    for (size_t i = 0; i < s.vertices.size(); ++i) index[s.vertices[i]] = static_cast<int>(i);
    ColoredGraph out;
    out.n = static_cast<int>(s.vertices.size());
    out.color_table = g.color_table;
    out.color.reserve(out.n);
    for (int v : s.vertices) out.color.push_back(g.color[v]);
    for (const auto& [u, v] : s.edges) {
        auto iu = index.find(u), iv = index.find(v);
        if (iu == index.end() || iv == index.end())
            throw std::invalid_argument("subgraph edge endpoint missing from vertex set");
        int a = iu->second, b = iv->second;
        if (a > b) std::swap(a, b);
        out.edges.emplace_back(a, b);
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

double product_vertex_value(const VertexFiltration& fg, const VertexFiltration& fh,
                            ColorId a, ColorId b) {
    return std::max(fg.by_color.at(a), fh.by_color.at(b));
}

ProductVertexColoring product_vertex_filtration(const VertexFiltration& fg,
                                                const VertexFiltration& fh) {
    if (fg.by_color.size() != fh.by_color.size())
        throw std::invalid_argument("factor filtrations over different color tables");
    int k = static_cast<int>(fg.by_color.size());
    ProductVertexColoring out;
    out.filtration.by_color.resize(num_color_pairs(k));
    for (int a = 0; a < k; ++a) {
        for (int b = a; b < k; ++b) {
            double v1 = product_vertex_value(fg, fh, a, b);
            double v2 = product_vertex_value(fg, fh, b, a);
            if (v1 != v2) out.consistent = false;
            out.filtration.by_color[pair_index(a, b, k)] = std::max(v1, v2);
        }
    }
    auto injective = [](const VertexFiltration& f) {
        auto v = f.by_color;
        std::sort(v.begin(), v.end());
        return std::adjacent_find(v.begin(), v.end()) == v.end();
    };
    out.injective_inputs = injective(fg) && injective(fh);
    return out;
}

VertexValues product_vertex_values(const ColoredGraph& g, const VertexValues& fg,
                                   const ColoredGraph& h, const VertexValues& fh) {
    VertexValues out;
    out.v.resize(static_cast<size_t>(g.n) * h.n);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < h.n; ++j)
            out.v[static_cast<size_t>(i) * h.n + j] = std::max(fg.v[i], fh.v[j]);
    return out;
}

namespace {

std::unordered_map<long, double> edge_value_map(const ColoredGraph& x,
                                                const std::vector<double>& values) {
    std::unordered_map<long, double> m;
    m.reserve(x.edges.size());
    for (size_t i = 0; i < x.edges.size(); ++i)
        m[static_cast<long>(x.edges[i].first) * x.n + x.edges[i].second] = values[i];
    return m;
}

}  // namespace

EdgeValues product_edge_values(const ColoredGraph& g, const EdgeValues& fg,
                               const ColoredGraph& h, const EdgeValues& fh,
                               const ColoredGraph& product) {
    if (fg.floor != fh.floor)
        throw std::invalid_argument("product of edge filtrations needs a common vertex floor");
    auto gmap = edge_value_map(g, fg.e);
    auto hmap = edge_value_map(h, fh.e);

    EdgeValues out;
    out.floor = fg.floor;
    out.e.resize(product.edges.size());
    for (size_t i = 0; i < product.edges.size(); ++i) {
        auto [a, b] = product.edges[i];
        int g1 = a / h.n, j1 = a % h.n;
        int g2 = b / h.n, j2 = b % h.n;
        if (g1 == g2) {
            out.e[i] = hmap.at(static_cast<long>(std::min(j1, j2)) * h.n + std::max(j1, j2));
        } else {
            out.e[i] = gmap.at(static_cast<long>(std::min(g1, g2)) * g.n + std::max(g1, g2));
        }
    }
    return out;
}

GraphValues product_graph_values(const ColoredGraph& g, const GraphValues& fg,
                                 const ColoredGraph& h, const GraphValues& fh,
                                 const ColoredGraph& product) {
    auto gmap = edge_value_map(g, fg.edge);
    auto hmap = edge_value_map(h, fh.edge);
    GraphValues out;
    out.vertex.resize(static_cast<size_t>(g.n) * h.n);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < h.n; ++j)
            out.vertex[static_cast<size_t>(i) * h.n + j] =
                std::max(fg.vertex[i], fh.vertex[j]);
    out.edge.resize(product.edges.size());
    for (size_t i = 0; i < product.edges.size(); ++i) {
        auto [a, b] = product.edges[i];
        int g1 = a / h.n, j1 = a % h.n;
        int g2 = b / h.n, j2 = b % h.n;
        if (g1 == g2) {
            double he = hmap.at(static_cast<long>(std::min(j1, j2)) * h.n + std::max(j1, j2));
            out.edge[i] = std::max(fg.vertex[g1], he);
        } else {
            double ge = gmap.at(static_cast<long>(std::min(g1, g2)) * g.n + std::max(g1, g2));
            out.edge[i] = std::max(ge, fh.vertex[j1]);
        }
    }
    return out;
}

bool injective_on_present_colors(const ColoredGraph& g, const VertexFiltration& f) {
    std::vector<char> present(g.num_colors(), 0);
    for (ColorId c : g.color) present[c] = 1;
    std::vector<double> values;
    for (int c = 0; c < g.num_colors(); ++c)
        if (present[c]) values.push_back(f.by_color[c]);
    std::sort(values.begin(), values.end());
    return std::adjacent_find(values.begin(), values.end()) == values.end();
}

FiltrationSpec parse_filtration_spec(const std::string& json_text,
                                     const std::vector<std::string>& color_table) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    std::unordered_map<std::string, ColorId> index;
    for (size_t i = 0; i < color_table.size(); ++i)
        index[color_table[i]] = static_cast<ColorId>(i);
    int k = static_cast<int>(color_table.size());

    FiltrationSpec spec;
    if (j.contains("vertex")) {
        VertexFiltration f;
        f.by_color.assign(k, std::numeric_limits<double>::quiet_NaN());
        for (auto& [key, value] : j["vertex"].items()) {
            auto it = index.find(key);
            if (it == index.end())
                throw std::runtime_error("filtration color '" + key + "' not in color table");
            f.by_color[it->second] = value.get<double>();
        }
        for (int c = 0; c < k; ++c)
            if (std::isnan(f.by_color[c]))
                throw std::runtime_error("vertex filtration missing color '" + color_table[c] + "'");
        spec.vertex = std::move(f);
    }
    if (j.contains("edge")) {
        std::vector<double> by_pair(num_color_pairs(k),
                                    std::numeric_limits<double>::quiet_NaN());
        for (auto& [key, value] : j["edge"].items()) {
            size_t bar = key.find('|');
            if (bar == std::string::npos)
                throw std::runtime_error("edge filtration key '" + key + "' is not 'a|b'");
            std::string a = key.substr(0, bar), b = key.substr(bar + 1);
            auto ia = index.find(a), ib = index.find(b);
            if (ia == index.end() || ib == index.end())
                throw std::runtime_error("edge filtration key '" + key + "' not in color table");
            by_pair[pair_index(ia->second, ib->second, k)] = value.get<double>();
        }
        for (int a = 0; a < k; ++a)
            for (int b = a; b < k; ++b)
                if (std::isnan(by_pair[pair_index(a, b, k)]))
                    throw std::runtime_error("edge filtration missing pair '" +
                                             pair_label(color_table[a], color_table[b]) + "'");
        spec.edge = make_edge_filtration(std::move(by_pair));
    }
    if (!spec.vertex && !spec.edge)
        throw std::runtime_error("filtration spec has neither 'vertex' nor 'edge'");
    return spec;
}

std::string write_filtration_spec(const FiltrationSpec& spec,
                                  const std::vector<std::string>& color_table) {
    nlohmann::json j = nlohmann::json::object();
    int k = static_cast<int>(color_table.size());
    if (spec.vertex) {
        nlohmann::json v = nlohmann::json::object();
        for (int c = 0; c < k; ++c) v[color_table[c]] = spec.vertex->by_color[c];
        j["vertex"] = std::move(v);
    }
    if (spec.edge) {
        nlohmann::json e = nlohmann::json::object();
        for (int a = 0; a < k; ++a)
            for (int b = a; b < k; ++b)
                e[pair_label(color_table[a], color_table[b])] =
                    spec.edge->by_pair[pair_index(a, b, k)];
        j["edge"] = std::move(e);
    }
    return j.dump();
}

VertexFiltration random_vertex_filtration(int num_colors, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dist(1, std::max(2, 2 * num_colors));
    VertexFiltration f;
    f.by_color.resize(num_colors);
    for (double& v : f.by_color) v = static_cast<double>(dist(rng));
    return f;
}

EdgeFiltration random_edge_filtration(int num_colors, std::mt19937_64& rng) {
    int pairs = num_color_pairs(num_colors);
    std::uniform_int_distribution<int> dist(1, std::max(2, 2 * pairs));
    std::vector<double> by_pair(pairs);
    for (double& v : by_pair) v = static_cast<double>(dist(rng));
    return make_edge_filtration(std::move(by_pair));
}

}  // namespace topo
