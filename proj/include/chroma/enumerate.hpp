#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "chroma/graph.hpp"

namespace chroma {

// Exact isomorphism test; brute-force backtracking with a degree prefilter.
// Intended for the enumeration limits (order <= ~10).
bool is_isomorphic(const Graph& a, const Graph& b);

// Pull-based stream of connected bipartite graphs of order n, exactly one
// representative per isomorphism class. Candidates come from enumerating
// cross-edge subsets over every bipartition split; duplicates are rejected by
// exhaustive isomorphism testing against the retained representatives.
class ConnectedBipartiteEnumerator {
public:
    explicit ConnectedBipartiteEnumerator(int n, int limit = 8);
    std::optional<Graph> next();

private:
    bool keep_if_new(const Graph& g);

    int n_;
    int left_ = 1;          // current bipartition split size (left part)
    uint64_t mask_ = 0;     // current cross-edge subset
    bool done_ = false;
    bool emitted_k1_ = false;
    std::map<std::vector<int>, std::vector<int>> buckets_;  // invariant key -> indices into seen_
    std::vector<Graph> seen_;
};

std::vector<Graph> enumerate_connected_bipartite(int n, int limit = 8);

// All connected graphs of order n up to isomorphism (brute force over edge
// subsets); supports the exhaustive small-order checks.
std::vector<Graph> enumerate_connected_graphs(int n, int limit = 7);

}  // namespace chroma
