#include "topo/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace topo {

std::vector<std::vector<int>> ColoredGraph::adjacency() const {
    std::vector<std::vector<int>> adj(n);
    for (const auto& [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

void ColoredGraph::validate() const {
    if (static_cast<int>(color.size()) != n)
        throw std::invalid_argument("color vector size does not match vertex count");
    for (ColorId c : color)
        if (c < 0 || c >= num_colors())
            throw std::invalid_argument("vertex color outside color table");
    for (size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (u >= v) throw std::invalid_argument("edge endpoints not in canonical order");
        if (u < 0 || v >= n) throw std::invalid_argument("edge endpoint out of range");
        if (i > 0 && edges[i - 1] == edges[i])
            throw std::invalid_argument("duplicate edge");
    }
    if (!std::is_sorted(edges.begin(), edges.end()))
        throw std::invalid_argument("edge list not sorted");
}

ColoredGraph make_graph(int n, std::vector<std::pair<int, int>> edges,
                        std::vector<ColorId> color,
                        std::vector<std::string> color_table) {
    ColoredGraph g;
    g.n = n;
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("self loop");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    g.edges = std::move(edges);
    g.color = std::move(color);
    g.color_table = std::move(color_table);
    g.validate();
    return g;
}

int pair_index(ColorId a, ColorId b, int k) {
    if (a > b) std::swap(a, b);
    return a * k - a * (a - 1) / 2 + (b - a);
}

int num_color_pairs(int k) { return k * (k + 1) / 2; }

std::pair<ColorId, ColorId> pair_from_index(int idx, int k) {
    for (ColorId a = 0; a < k; ++a) {
        int row = k - a;
        if (idx < row) return {a, a + idx};
        idx -= row;
    }
    throw std::out_of_range("pair index out of range");
}

std::string pair_label(const std::string& a, const std::string& b) {
    return a <= b ? a + "|" + b : b + "|" + a;
}

std::vector<std::string> product_color_table(const std::vector<std::string>& base) {
    int k = static_cast<int>(base.size());
    std::vector<std::string> table;
    table.reserve(num_color_pairs(k));
    for (int a = 0; a < k; ++a)
        for (int b = a; b < k; ++b) table.push_back(base[a] + "|" + base[b]);
    return table;
}

ColoredGraph box_product(const ColoredGraph& g, const ColoredGraph& h) {
    if (g.color_table != h.color_table)
        throw std::invalid_argument("box_product: factors must share a color table");
    int k = g.num_colors();
    ColoredGraph p;
    p.n = g.n * h.n;
    p.color_table = product_color_table(g.color_table);
    p.color.resize(p.n);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < h.n; ++j)
            p.color[i * h.n + j] = pair_index(g.color[i], h.color[j], k);
    p.edges.reserve(static_cast<size_t>(g.n) * h.edges.size() +
                    static_cast<size_t>(h.n) * g.edges.size());
    for (int i = 0; i < g.n; ++i)
        for (const auto& [a, b] : h.edges)
            p.edges.emplace_back(i * h.n + a, i * h.n + b);
    for (const auto& [a, b] : g.edges)
        for (int j = 0; j < h.n; ++j)
            p.edges.emplace_back(a * h.n + j, b * h.n + j);
    std::sort(p.edges.begin(), p.edges.end());
    return p;
}

bool is_virtual_label(const std::string& label) {
    size_t start = 0;
    while (start <= label.size()) {
        size_t bar = label.find('|', start);
        size_t end = bar == std::string::npos ? label.size() : bar;
        if (label.compare(start, end - start, kVirtualColor) == 0) return true;
        if (bar == std::string::npos) break;
        start = bar + 1;
    }
    return false;
}

bool color_is_virtual(const ColoredGraph& g, ColorId c) {
    return is_virtual_label(g.color_table[c]);
}

bool has_virtual_colors(const ColoredGraph& g) {
    for (ColorId c : g.color)
        if (color_is_virtual(g, c)) return true;
    return false;
}

ColoredGraph add_virtual(const ColoredGraph& g) {
    ColoredGraph out = g;
    auto it = std::find(out.color_table.begin(), out.color_table.end(), kVirtualColor);
    ColorId vc;
    if (it == out.color_table.end()) {
        vc = out.num_colors();
        out.color_table.push_back(kVirtualColor);
    } else {
        vc = static_cast<ColorId>(it - out.color_table.begin());
    }
    out.color.push_back(vc);
    out.n += 1;
    return out;
}

namespace {

struct UnionFind {
    std::vector<int> parent, size;
    explicit UnionFind(int n) : parent(n), size(n, 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    // returns false if already joined
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
        return true;
    }
};

}  // namespace

BettiNumbers betti(const ColoredGraph& g) {
    UnionFind uf(g.n);
    long merges = 0;
    for (const auto& [u, v] : g.edges)
        if (uf.unite(u, v)) ++merges;
    BettiNumbers b;
    b.b0 = g.n - merges;
    b.b1 = g.num_edges() - g.n + b.b0;
    return b;
}

long euler_characteristic(const ColoredGraph& g) { return g.n - g.num_edges(); }

long betti1_product(const ColoredGraph& a, const ColoredGraph& b) {
    long ea = a.num_edges(), eb = b.num_edges();
    long b0a = betti(a).b0, b0b = betti(b).b0;
    long chia = euler_characteristic(a), chib = euler_characteristic(b);
    return ea * eb + b0a * b0b - chia * chib;
}

std::vector<int> component_labels(const ColoredGraph& g) {
    UnionFind uf(g.n);
    for (const auto& [u, v] : g.edges) uf.unite(u, v);
    std::vector<int> label(g.n, -1);
    int next = 0;
    for (int v = 0; v < g.n; ++v) {
        int r = uf.find(v);
        if (label[r] < 0) label[r] = next++;
        label[v] = label[r];
    }
    return label;
}

ECSignature ec_signature(const ColoredGraph& g) {
    ECSignature s;
    for (ColorId c : g.color) s.vertex_counts[c]++;
    for (const auto& [u, v] : g.edges) {
        ColorId a = g.color[u], b = g.color[v];
        if (a > b) std::swap(a, b);
        s.edge_counts[{a, b}]++;
    }
    return s;
}

void align_color_tables(ColoredGraph& g, ColoredGraph& h) {
    std::vector<std::string> merged = g.color_table;
    merged.insert(merged.end(), h.color_table.begin(), h.color_table.end());
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    auto remap = [&merged](ColoredGraph& x) {
        std::unordered_map<std::string, ColorId> index;
        for (size_t i = 0; i < merged.size(); ++i) index[merged[i]] = static_cast<ColorId>(i);
        for (ColorId& c : x.color) c = index.at(x.color_table[c]);
        x.color_table = merged;
    };
    remap(g);
    remap(h);
}

ColoredGraph relabel(const ColoredGraph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.n)
        throw std::invalid_argument("relabel: permutation size mismatch");
    ColoredGraph out;
    out.n = g.n;
    out.color_table = g.color_table;
    out.color.resize(g.n);
    for (int v = 0; v < g.n; ++v) out.color[perm[v]] = g.color[v];
    out.edges.reserve(g.edges.size());
    for (const auto& [u, v] : g.edges) {
        int a = perm[u], b = perm[v];
        if (a > b) std::swap(a, b);
        out.edges.emplace_back(a, b);
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

}  // namespace topo
