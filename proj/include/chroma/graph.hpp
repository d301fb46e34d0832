#pragma once

#include <compare>
#include <vector>

namespace chroma {

// Unordered vertex pair, normalized to u < v on construction via make_edge.
struct Edge {
    int u = 0;
    int v = 0;
    auto operator<=>(const Edge&) const = default;
};

Edge make_edge(int u, int v);

// Immutable simple undirected graph on vertices 0..n-1.
// No self-loops, no duplicate edges; rejected at construction.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool adjacent(int u, int v) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;             // sorted, normalized
    std::vector<std::vector<int>> adj_;   // sorted neighbor lists
};

int max_degree(const Graph& g);
std::vector<int> pendant_vertices(const Graph& g);  // degree-1 vertices, ascending
bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

// Induced subgraph on S, relabeled to 0..|S|-1 preserving vertex order.
// vertices[i] is the original label of new vertex i.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertices;
};
InducedSubgraph induced_subgraph(const Graph& g, std::vector<int> s);

}  // namespace chroma
