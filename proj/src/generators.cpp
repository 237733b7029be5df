#include "topo/generators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <stack>
#include <stdexcept>

namespace topo {

FiltrationKind parse_filtration_kind(const std::string& name) {
    if (name == "degree") return FiltrationKind::Degree;
    if (name == "betweenness") return FiltrationKind::Betweenness;
    if (name == "closeness") return FiltrationKind::Closeness;
    if (name == "forman-ricci" || name == "fr") return FiltrationKind::FormanRicci;
    throw std::invalid_argument("unknown filtration generator '" + name + "'");
}

std::string filtration_kind_name(FiltrationKind kind) {
    switch (kind) {
        case FiltrationKind::Degree: return "degree";
        case FiltrationKind::Betweenness: return "betweenness";
        case FiltrationKind::Closeness: return "closeness";
        case FiltrationKind::FormanRicci: return "forman-ricci";
    }
    return "?";
}

bool is_edge_level(FiltrationKind kind) { return kind == FiltrationKind::FormanRicci; }

double round_significant(double x, int digits) {
    if (x == 0.0 || !std::isfinite(x)) return x;
    double scale = std::pow(10.0, digits - 1 - static_cast<int>(std::floor(std::log10(std::fabs(x)))));
    return std::round(x * scale) / scale;
}

namespace {

std::vector<int> degrees(const ColoredGraph& g) {
    std::vector<int> deg(g.n, 0);
    for (const auto& [u, v] : g.edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

// Brandes, unweighted, unnormalized.
std::vector<double> betweenness(const ColoredGraph& g) {
    auto adj = g.adjacency();
    std::vector<double> bc(g.n, 0.0);
    std::vector<int> dist(g.n), sigma(g.n);
    std::vector<double> delta(g.n);
    std::vector<std::vector<int>> pred(g.n);
    for (int s = 0; s < g.n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(sigma.begin(), sigma.end(), 0);
        std::fill(delta.begin(), delta.end(), 0.0);
        for (auto& p : pred) p.clear();
        std::stack<int> order;
        std::queue<int> q;
        dist[s] = 0;
        sigma[s] = 1;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            order.push(v);
            for (int w : adj[v]) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
                if (dist[w] == dist[v] + 1) {
                    sigma[w] += sigma[v];
                    pred[w].push_back(v);
                }
            }
        }
        while (!order.empty()) {
            int w = order.top();
            order.pop();
            for (int v : pred[w])
                delta[v] += static_cast<double>(sigma[v]) / sigma[w] * (1.0 + delta[w]);
            if (w != s) bc[w] += delta[w];
        }
    }
    // each unordered pair was counted from both endpoints
    for (double& b : bc) b /= 2.0;
    return bc;
}

// (r - 1) / sum of distances within the component; 0 for isolated vertices.
std::vector<double> closeness(const ColoredGraph& g) {
    auto adj = g.adjacency();
    std::vector<double> out(g.n, 0.0);
    std::vector<int> dist(g.n);
    for (int s = 0; s < g.n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        long total = 0, reached = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            ++reached;
            total += dist[v];
            for (int w : adj[v])
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
        }
        if (reached > 1) out[s] = static_cast<double>(reached - 1) / total;
    }
    return out;
}

// Shift values of virtual-tagged elements strictly below everything else:
// the rest of the graph moves up by the full value span.
void shift_virtual_first(std::vector<double>& values,
                         const std::vector<char>& is_virtual_element) {
    bool any_virtual = false, any_plain = false;
    for (char v : is_virtual_element) (v ? any_virtual : any_plain) = true;
    if (!any_virtual || !any_plain) return;
    double lo = values[0], hi = values[0];
    for (double v : values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    double shift = hi - lo + 1.0;
    for (size_t i = 0; i < values.size(); ++i)
        if (!is_virtual_element[i]) values[i] += shift;
}

}  // namespace

VertexValues generate_vertex_values(const ColoredGraph& g, FiltrationKind kind) {
    if (g.n == 0) throw std::invalid_argument("filtration generator needs a nonempty graph");
    VertexValues out;
    switch (kind) {
        case FiltrationKind::Degree: {
            auto deg = degrees(g);
            out.v.assign(deg.begin(), deg.end());
            break;
        }
        case FiltrationKind::Betweenness: {
            out.v = betweenness(g);
            for (double& v : out.v) v = round_significant(v);
            break;
        }
        case FiltrationKind::Closeness: {
            out.v = closeness(g);
            for (double& v : out.v) v = round_significant(v);
            break;
        }
        case FiltrationKind::FormanRicci:
            throw std::invalid_argument("forman-ricci is an edge-level generator");
    }
    std::vector<char> is_virtual(g.n, 0);
    for (int v = 0; v < g.n; ++v) is_virtual[v] = color_is_virtual(g, g.color[v]);
    shift_virtual_first(out.v, is_virtual);
    return out;
}

EdgeValues generate_edge_values(const ColoredGraph& g, FiltrationKind kind) {
    if (g.n == 0) throw std::invalid_argument("filtration generator needs a nonempty graph");
    if (kind != FiltrationKind::FormanRicci)
        throw std::invalid_argument("vertex-level generator asked for edge values");
    auto deg = degrees(g);
    std::vector<double> values(g.edges.size());
    for (size_t i = 0; i < g.edges.size(); ++i)
        values[i] = 4.0 - deg[g.edges[i].first] - deg[g.edges[i].second];
    std::vector<char> is_virtual(g.edges.size(), 0);
    for (size_t i = 0; i < g.edges.size(); ++i)
        is_virtual[i] = color_is_virtual(g, g.color[g.edges[i].first]) ||
                        color_is_virtual(g, g.color[g.edges[i].second]);
    shift_virtual_first(values, is_virtual);
    return make_edge_values(std::move(values));
}

StructuralFiltration generate_filtration(const ColoredGraph& g, FiltrationKind kind) {
    StructuralFiltration out;
    out.kind = kind;
    if (is_edge_level(kind))
        out.edge = generate_edge_values(g, kind);
    else
        out.vertex = generate_vertex_values(g, kind);
    return out;
}

std::pair<ColoredGraph, VertexFiltration> value_class_coloring(const ColoredGraph& g,
                                                               const VertexValues& f) {
    std::vector<double> classes = f.v;
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    ColoredGraph out = g;
    out.color_table.clear();
    for (double c : classes) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.12g", c);
        out.color_table.push_back(buf);
    }
    for (int v = 0; v < g.n; ++v)
        out.color[v] = static_cast<ColorId>(
            std::lower_bound(classes.begin(), classes.end(), f.v[v]) - classes.begin());
    VertexFiltration filt;
    filt.by_color = classes;
    return {out, filt};
}

std::pair<ColoredGraph, ColoredGraph> shared_value_class_coloring(
    const ColoredGraph& g, const VertexValues& fg, const ColoredGraph& h,
    const VertexValues& fh, VertexFiltration* out_filtration) {
    std::vector<double> classes = fg.v;
    classes.insert(classes.end(), fh.v.begin(), fh.v.end());
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    std::vector<std::string> table;
    for (double c : classes) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.12g", c);
        table.push_back(buf);
    }
    auto recolor = [&](const ColoredGraph& x, const VertexValues& f) {
        ColoredGraph out = x;
        out.color_table = table;
        for (int v = 0; v < x.n; ++v)
            out.color[v] = static_cast<ColorId>(
                std::lower_bound(classes.begin(), classes.end(), f.v[v]) - classes.begin());
        return out;
    };
    if (out_filtration) out_filtration->by_color = classes;
    return {recolor(g, fg), recolor(h, fh)};
}

}  // namespace topo
