#pragma once

// Graph construction for double subdivided stars T_{l,m}, subdivided stars
// SK_{1,l}, paths, and general edge-list graphs.
//
// Vertex numbering for T_{l,m}: a=0, b=1, then the l-side middle vertices,
// the l-side pendants, the m-side middles, and the m-side pendants, in
// branch order.  Labels c,d are the pendants of the first two l-side
// branches, e,f their middles (present only when l >= 2).

#include <Eigen/Dense>

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace starwalk {

using Matrix = Eigen::MatrixXd;

enum class Family { DoubleSubdividedStar, SubdividedStar, Path, General };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::DoubleSubdividedStar: return "DoubleSubdividedStar";
        case Family::SubdividedStar: return "SubdividedStar";
        case Family::Path: return "Path";
        case Family::General: return "General";
    }
    return "General";
}

struct GraphSpec {
    int n = 0;
    std::set<std::pair<int, int>> edges;  // pairs stored with first < second
    std::map<char, int> labels;           // roles a,b,c,d,e,f -> vertex
    Family family = Family::General;
    int family_l = 0;  // parameters for the tagged family, 0 if unused
    int family_m = 0;
    bool duplicate_edges_collapsed = false;

    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u > v) std::swap(u, v);
        if (!edges.insert({u, v}).second) duplicate_edges_collapsed = true;
    }

    int degree(int v) const {
        int d = 0;
        for (const auto& e : edges) d += (e.first == v) + (e.second == v);
        return d;
    }

    std::optional<int> label(char role) const {
        auto it = labels.find(role);
        if (it == labels.end()) return std::nullopt;
        return it->second;
    }

    int label_or_throw(char role) const {
        auto v = label(role);
        if (!v) throw std::invalid_argument(std::string("label '") + role + "' not set");
        return *v;
    }
};

// Center a adjacent to b and to l middle vertices; each middle carries one
// pendant; symmetrically on the b side with m branches.
inline GraphSpec build_double_subdivided_star(int l, int m) {
    if (l < 1 || m < 1) throw std::invalid_argument("T_{l,m} requires l,m >= 1");
    GraphSpec g;
    g.n = 2 * l + 2 * m + 2;
    g.family = Family::DoubleSubdividedStar;
    g.family_l = l;
    g.family_m = m;
    const int a = 0, b = 1;
    const int l_mid = 2;              // l-side middles: [2, 2+l)
    const int l_pen = 2 + l;          // l-side pendants: [2+l, 2+2l)
    const int m_mid = 2 + 2 * l;      // m-side middles
    const int m_pen = 2 + 2 * l + m;  // m-side pendants
    g.add_edge(a, b);
    for (int j = 0; j < l; ++j) {
        g.add_edge(a, l_mid + j);
        g.add_edge(l_mid + j, l_pen + j);
    }
    for (int k = 0; k < m; ++k) {
        g.add_edge(b, m_mid + k);
        g.add_edge(m_mid + k, m_pen + k);
    }
    g.labels['a'] = a;
    g.labels['b'] = b;
    if (l >= 2) {
        g.labels['e'] = l_mid;
        g.labels['f'] = l_mid + 1;
        g.labels['c'] = l_pen;
        g.labels['d'] = l_pen + 1;
    }
    return g;
}

// SK_{1,l}: l copies of P_3 glued at one pendant vertex.
inline GraphSpec build_subdivided_star(int l) {
    if (l < 1) throw std::invalid_argument("SK_{1,l} requires l >= 1");
    GraphSpec g;
    g.n = 2 * l + 1;
    g.family = Family::SubdividedStar;
    g.family_l = l;
    const int a = 0;
    for (int j = 0; j < l; ++j) {
        g.add_edge(a, 1 + j);          // middles: [1, 1+l)
        g.add_edge(1 + j, 1 + l + j);  // pendants: [1+l, 1+2l)
    }
    g.labels['a'] = a;
    return g;
}

inline GraphSpec build_path(int n) {
    if (n < 1) throw std::invalid_argument("P_n requires n >= 1");
    GraphSpec g;
    g.n = n;
    g.family = Family::Path;
    g.family_l = n;
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    g.labels['a'] = 0;
    g.labels['b'] = n - 1;
    return g;
}

inline GraphSpec from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    GraphSpec g;
    g.n = n;
    g.family = Family::General;
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

// Text format: first line "n", then one "u v" edge per line (0-based).
inline GraphSpec parse_edge_list(std::istream& in) {
    int n;
    if (!(in >> n)) throw std::invalid_argument("edge list: missing vertex count");
    std::vector<std::pair<int, int>> edges;
    int u, v;
    while (in >> u >> v) edges.push_back({u, v});
    return from_edge_list(n, edges);
}

inline Matrix adjacency(const GraphSpec& g) {
    Matrix A = Matrix::Zero(g.n, g.n);
    for (const auto& [u, v] : g.edges) {
        A(u, v) = 1.0;
        A(v, u) = 1.0;
    }
    return A;
}

inline bool is_connected(const GraphSpec& g) {
    if (g.n == 0) return true;
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& [x, y] : g.edges) {
            int w = -1;
            if (x == v) w = y;
            else if (y == v) w = x;
            if (w >= 0 && !seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == g.n;
}

// 2-coloring by BFS; throws on odd cycles.  Used by the eigenvector flip.
inline std::vector<int> bipartition(const GraphSpec& g) {
    std::vector<int> color(g.n, -1);
    std::vector<std::vector<int>> adj(g.n);
    for (const auto& [u, v] : g.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (int s = 0; s < g.n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::vector<int> queue{s};
        for (size_t i = 0; i < queue.size(); ++i) {
            int v = queue[i];
            for (int w : adj[v]) {
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if (color[w] == color[v]) {
                    throw std::invalid_argument("graph is not bipartite");
                }
            }
        }
    }
    return color;
}

}  // namespace starwalk
