#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace topo {

using ColorId = int;

// Reserved color for basepoint vertices; filtration generators place it
// strictly before every other color.
inline constexpr const char* kVirtualColor = "virtual";

// Finite simple graph with one color per vertex. Colors index into
// color_table; two graphs are comparable only when their tables match.
struct ColoredGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // u < v, sorted, unique
    std::vector<ColorId> color;              // size n
    std::vector<std::string> color_table;

    int num_colors() const { return static_cast<int>(color_table.size()); }
    int num_edges() const { return static_cast<int>(edges.size()); }

    std::vector<std::vector<int>> adjacency() const;
    void validate() const;  // throws std::invalid_argument on broken invariants
};

ColoredGraph make_graph(int n, std::vector<std::pair<int, int>> edges,
                        std::vector<ColorId> color,
                        std::vector<std::string> color_table);

// Canonical index of the unordered color pair (a, b) in a table of k colors.
int pair_index(ColorId a, ColorId b, int k);
int num_color_pairs(int k);
std::pair<ColorId, ColorId> pair_from_index(int idx, int k);
std::string pair_label(const std::string& a, const std::string& b);

// Table holding one entry per unordered pair of base colors, in pair_index
// order. Shared factor tables yield a shared product table.
std::vector<std::string> product_color_table(const std::vector<std::string>& base);

// Box (Cartesian) product. Vertex (i, j) of the product has index i*n_H + j;
// vertex colors are the unordered pairs of factor colors.
ColoredGraph box_product(const ColoredGraph& g, const ColoredGraph& h);

// Appends one isolated vertex carrying the reserved virtual color.
ColoredGraph add_virtual(const ColoredGraph& g);
bool is_virtual_label(const std::string& label);
bool has_virtual_colors(const ColoredGraph& g);
bool color_is_virtual(const ColoredGraph& g, ColorId c);

struct BettiNumbers {
    long b0 = 0;
    long b1 = 0;
    bool operator==(const BettiNumbers&) const = default;
};

BettiNumbers betti(const ColoredGraph& g);
long euler_characteristic(const ColoredGraph& g);  // |V| - |E|

// First Betti number of a box product from factor data alone:
// #E(A)#E(B) + b0(A)b0(B) - chi(A)chi(B).
long betti1_product(const ColoredGraph& a, const ColoredGraph& b);

// Component id per vertex, ids dense from 0 in order of first appearance.
std::vector<int> component_labels(const ColoredGraph& g);

// Per-color vertex counts and per-color-pair edge counts. Zero counts are
// absent, so signatures over a shared table compare with operator==.
struct ECSignature {
    std::map<ColorId, long> vertex_counts;
    std::map<std::pair<ColorId, ColorId>, long> edge_counts;  // keys a <= b
    bool operator==(const ECSignature&) const = default;
};

ECSignature ec_signature(const ColoredGraph& g);

// Rebuilds both graphs over the sorted union of their color labels.
void align_color_tables(ColoredGraph& g, ColoredGraph& h);

// perm[old] = new index.
ColoredGraph relabel(const ColoredGraph& g, const std::vector<int>& perm);

}  // namespace topo
