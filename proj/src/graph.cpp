#include "chroma/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "chroma/errors.hpp"

namespace chroma {

Edge make_edge(int u, int v) {
    if (u == v) throw InvalidParameter("self-loop {" + std::to_string(u) + "," + std::to_string(v) + "}");
    if (u > v) std::swap(u, v);
    return Edge{u, v};
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 1) throw InvalidParameter("graph order must be >= 1, got " + std::to_string(n));
    for (auto& e : edges) {
        e = make_edge(e.u, e.v);
        if (e.u < 0 || e.v >= n)
            throw InvalidParameter("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                   "} out of range for order " + std::to_string(n));
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw InvalidParameter("duplicate edge");
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    for (const auto& e : edges_) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw InvalidParameter("vertex " + std::to_string(v) + " out of range");
    return adj_[v];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

bool Graph::adjacent(int u, int v) const {
    const auto& a = neighbors(u);
    if (v < 0 || v >= n_) throw InvalidParameter("vertex " + std::to_string(v) + " out of range");
    return std::binary_search(a.begin(), a.end(), v);
}

int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
    return d;
}

std::vector<int> pendant_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1) out.push_back(v);
    return out;
}

bool is_connected(const Graph& g) {
    std::vector<char> seen(g.order(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
    }
    return reached == g.order();
}

bool is_bipartite(const Graph& g) {
    std::vector<int> side(g.order(), -1);
    for (int s = 0; s < g.order(); ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    q.push(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

InducedSubgraph induced_subgraph(const Graph& g, std::vector<int> s) {
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw InvalidParameter("duplicate vertex in induced subgraph selection");
    for (int v : s)
        if (v < 0 || v >= g.order())
            throw InvalidParameter("vertex " + std::to_string(v) + " out of range");
    if (s.empty()) throw InvalidParameter("induced subgraph needs at least one vertex");
    std::vector<int> pos(g.order(), -1);
    for (int i = 0; i < static_cast<int>(s.size()); ++i) pos[s[i]] = i;
    std::vector<Edge> es;
    for (const auto& e : g.edges())
        if (pos[e.u] >= 0 && pos[e.v] >= 0) es.push_back(Edge{pos[e.u], pos[e.v]});
    return InducedSubgraph{Graph(static_cast<int>(s.size()), std::move(es)), std::move(s)};
}

}  // namespace chroma
