#include "topo/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace topo {

ColoredGraph parse_edge_list(std::istream& in) {
    std::map<int, std::string> labels;
    std::vector<std::tuple<int, int, int>> raw_edges;  // (u, v, line)
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream iss(line);
        std::string tag;
        if (!(iss >> tag) || tag[0] == '#') continue;
        if (tag == "v") {
            int idx;
            std::string label;
            if (!(iss >> idx >> label)) throw ParseError("malformed vertex line", line_no);
            if (idx < 0) throw ParseError("negative vertex index", line_no);
            if (labels.count(idx)) throw ParseError("duplicate vertex declaration", line_no);
            labels[idx] = label;
        } else if (tag == "e") {
            int u, v;
            if (!(iss >> u >> v)) throw ParseError("malformed edge line", line_no);
            raw_edges.emplace_back(u, v, line_no);
        } else {
            throw ParseError("unknown record '" + tag + "'", line_no);
        }
    }
    int n = static_cast<int>(labels.size());
    for (const auto& [idx, label] : labels)
        if (idx >= n) throw ParseError("vertex indices not dense from 0", 0);

    std::vector<std::string> table;
    for (const auto& [idx, label] : labels) table.push_back(label);
    std::sort(table.begin(), table.end());
    table.erase(std::unique(table.begin(), table.end()), table.end());

    std::vector<ColorId> color(n);
    for (const auto& [idx, label] : labels)
        color[idx] = static_cast<ColorId>(
            std::lower_bound(table.begin(), table.end(), label) - table.begin());

    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v, ln] : raw_edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("edge endpoint references undeclared vertex", ln);
        if (u == v) throw ParseError("self loop", ln);
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw ParseError("duplicate edge", 0);
    return make_graph(n, std::move(edges), std::move(color), std::move(table));
}

std::string write_edge_list(const ColoredGraph& g) {
    std::ostringstream out;
    for (int v = 0; v < g.n; ++v)
        out << "v " << v << " " << g.color_table[g.color[v]] << "\n";
    for (const auto& [u, v] : g.edges) out << "e " << u << " " << v << "\n";
    return out.str();
}

namespace {

constexpr int kG6Offset = 63;

int g6_byte(const std::string& line, size_t pos, int line_no) {
    if (pos >= line.size()) throw ParseError("truncated graph6 data", line_no);
    unsigned char c = static_cast<unsigned char>(line[pos]);
    if (c < 63 || c > 126) throw ParseError("graph6 byte out of range", line_no);
    return c - kG6Offset;
}

}  // namespace

ColoredGraph parse_graph6_line(const std::string& raw, int line_no) {
    std::string line = raw;
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
    if (line.empty()) throw ParseError("empty graph6 line", line_no);

    size_t pos = 0;
    long n = 0;
    if (line[0] == '~') {
        if (line.size() >= 2 && line[1] == '~') {
            for (int i = 0; i < 6; ++i) n = (n << 6) | g6_byte(line, 2 + i, line_no);
            pos = 8;
        } else {
            for (int i = 0; i < 3; ++i) n = (n << 6) | g6_byte(line, 1 + i, line_no);
            pos = 4;
        }
    } else {
        n = g6_byte(line, 0, line_no);
        pos = 1;
    }
    if (n > 1'000'000) throw ParseError("graph6 vertex count too large", line_no);

    long nbits = n * (n - 1) / 2;
    long nbytes = (nbits + 5) / 6;
    if (static_cast<long>(line.size() - pos) != nbytes)
        throw ParseError("graph6 data length mismatch", line_no);

    std::vector<std::pair<int, int>> edges;
    long bit = 0;
    for (long byte = 0; byte < nbytes; ++byte) {
        int value = g6_byte(line, pos + byte, line_no);
        for (int b = 5; b >= 0; --b, ++bit) {
            bool set = (value >> b) & 1;
            if (bit >= nbits) {
                if (set) throw ParseError("nonzero graph6 padding bits", line_no);
                continue;
            }
            if (set) {
                // bits run column-major over the upper triangle
                long idx = bit;
                int j = 1;
                while (idx >= j) idx -= j++;
                edges.emplace_back(static_cast<int>(idx), j);
            }
        }
    }
    std::vector<ColorId> color(n, 0);
    return make_graph(static_cast<int>(n), std::move(edges), std::move(color), {"0"});
}

std::vector<ColoredGraph> parse_graph6(std::istream& in) {
    std::vector<ColoredGraph> graphs;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string stripped = line;
        while (!stripped.empty() && std::isspace(static_cast<unsigned char>(stripped.back())))
            stripped.pop_back();
        if (stripped.empty()) continue;
        graphs.push_back(parse_graph6_line(stripped, line_no));
    }
    return graphs;
}

std::string write_graph6(const ColoredGraph& g) {
    std::string out;
    long n = g.n;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kG6Offset));
    } else {
        out.push_back('~');
        for (int i = 2; i >= 0; --i)
            out.push_back(static_cast<char>(((n >> (6 * i)) & 63) + kG6Offset));
    }
    std::vector<bool> adj(static_cast<size_t>(n) * n, false);
    for (const auto& [u, v] : g.edges) adj[static_cast<size_t>(u) * n + v] = true;
    int acc = 0, nb = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (adj[static_cast<size_t>(i) * n + j] ? 1 : 0);
            if (++nb == 6) {
                out.push_back(static_cast<char>(acc + kG6Offset));
                acc = 0;
                nb = 0;
            }
        }
    }
    if (nb > 0) out.push_back(static_cast<char>((acc << (6 - nb)) + kG6Offset));
    return out;
}

namespace {

bool has_suffix(const std::string& s, const std::string& suf) {
    return s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
}

}  // namespace

std::vector<ColoredGraph> load_graphs(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    if (has_suffix(path, ".g6") || has_suffix(path, ".graph6")) return parse_graph6(in);
    std::vector<ColoredGraph> out;
    out.push_back(parse_edge_list(in));
    return out;
}

ColoredGraph load_graph(const std::string& path) {
    auto graphs = load_graphs(path);
    if (graphs.empty()) throw std::runtime_error("no graphs in " + path);
    return graphs.front();
}

}  // namespace topo
