#pragma once

// Shared helpers for randomized property suites: seeded instance generators
// and the naive oracles that the engine is checked against. Everything here
// deliberately avoids the production search paths: counting is plain
// fixed-order backtracking, and the reference sn search enumerates all
// subsets and all proper colorings with no pruning rules.

#include <algorithm>
#include <random>
#include <vector>

#include "chroma/coloring.hpp"
#include "chroma/graph.hpp"

namespace testutil {

inline chroma::Graph random_graph(std::mt19937& rng, int n, double edge_prob) {
    std::bernoulli_distribution coin(edge_prob);
    std::vector<chroma::Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) es.push_back(chroma::Edge{u, v});
    return chroma::Graph(n, std::move(es));
}

// Random proper partial coloring built greedily over a shuffled vertex order.
inline chroma::PartialColoring random_proper_partial(std::mt19937& rng, const chroma::Graph& g, int k,
                                                     double color_prob) {
    chroma::PartialColoring c = chroma::PartialColoring::empty(g.order(), k);
    std::vector<int> order(g.order());
    for (int v = 0; v < g.order(); ++v) order[v] = v;
    std::shuffle(order.begin(), order.end(), rng);
    std::bernoulli_distribution coin(color_prob);
    for (int v : order) {
        if (!coin(rng)) continue;
        std::vector<int> feasible;
        for (int col = 1; col <= k; ++col) {
            bool ok = true;
            for (int w : g.neighbors(v))
                if (c.color[w] == col) {
                    ok = false;
                    break;
                }
            if (ok) feasible.push_back(col);
        }
        if (feasible.empty()) continue;
        c.color[v] = feasible[std::uniform_int_distribution<size_t>(0, feasible.size() - 1)(rng)];
    }
    return c;
}

// Fixed-order backtracking count with no color lists and no propagation.
inline long long naive_count(const chroma::Graph& g, const chroma::PartialColoring& c, long long cap) {
    std::vector<int> color = c.color;
    auto rec = [&](auto&& self, int v) -> long long {
        while (v < g.order() && color[v] != 0) ++v;
        if (v == g.order()) return 1;
        long long total = 0;
        for (int col = 1; col <= c.k; ++col) {
            bool ok = true;
            for (int w : g.neighbors(v))
                if (color[w] == col) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[v] = col;
            total += self(self, v + 1);
            color[v] = 0;
            if (total >= cap) break;
        }
        return std::min(total, cap);
    };
    return rec(rec, 0);
}

// Reference Sudoku number: all vertex subsets by ascending size, all proper
// colorings of each (not just canonical ones), no forced-vertex or edge-cover
// rules. Returns the smallest subset size admitting a uniquely extendable
// coloring.
inline int reference_sudoku_number(const chroma::Graph& g, int k) {
    int n = g.order();
    std::vector<int> subset;
    auto colorings_have_witness = [&](auto&& self, std::vector<int>& color, size_t idx) -> bool {
        if (idx == subset.size()) {
            chroma::PartialColoring c{k, color};
            return chroma::detail::count_extensions_raw(g, c, 2, nullptr) == 1;
        }
        int v = subset[idx];
        for (int col = 1; col <= k; ++col) {
            bool ok = true;
            for (int w : g.neighbors(v))
                if (color[w] == col) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[v] = col;
            if (self(self, color, idx + 1)) {
                color[v] = 0;
                return true;
            }
            color[v] = 0;
        }
        return false;
    };
    for (int size = 0; size <= n; ++size) {
        std::vector<int> pick(size);
        for (int i = 0; i < size; ++i) pick[i] = i;
        while (true) {
            subset = pick;
            std::vector<int> color(n, 0);
            if (colorings_have_witness(colorings_have_witness, color, 0)) return size;
            int i = size - 1;
            while (i >= 0 && pick[i] == n - size + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return n;
}

}  // namespace testutil
