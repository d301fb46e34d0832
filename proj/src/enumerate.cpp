#include "chroma/enumerate.hpp"

#include <algorithm>
#include <string>

#include "chroma/errors.hpp"

namespace chroma {

namespace {

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> d(g.order());
    for (int v = 0; v < g.order(); ++v) d[v] = g.degree(v);
    return d;
}

// Cheap invariant used to bucket graphs before full isomorphism testing:
// order, size, sorted degrees, then the sorted list of per-vertex sorted
// neighbor-degree vectors.
std::vector<int> invariant_key(const Graph& g) {
    std::vector<int> key{g.order(), g.size()};
    std::vector<int> deg = degree_sequence(g);
    std::vector<int> sorted_deg = deg;
    std::sort(sorted_deg.begin(), sorted_deg.end());
    key.insert(key.end(), sorted_deg.begin(), sorted_deg.end());
    std::vector<std::vector<int>> profiles;
    for (int v = 0; v < g.order(); ++v) {
        std::vector<int> p{deg[v]};
        for (int w : g.neighbors(v)) p.push_back(deg[w]);
        std::sort(p.begin() + 1, p.end());
        profiles.push_back(std::move(p));
    }
    std::sort(profiles.begin(), profiles.end());
    for (const auto& p : profiles) {
        key.push_back(-1);
        key.insert(key.end(), p.begin(), p.end());
    }
    return key;
}

struct IsoSearch {
    const Graph& a;
    const Graph& b;
    std::vector<int> order;    // a's vertices, high degree first
    std::vector<int> map;      // a vertex -> b vertex
    std::vector<char> used;    // b vertices already taken

    bool assign(size_t depth) {
        if (depth == order.size()) return true;
        int v = order[depth];
        for (int w = 0; w < b.order(); ++w) {
            if (used[w] || a.degree(v) != b.degree(w)) continue;
            bool ok = true;
            for (size_t i = 0; i < depth && ok; ++i) {
                int u = order[i];
                if (a.adjacent(u, v) != b.adjacent(map[u], w)) ok = false;
            }
            if (!ok) continue;
            used[w] = 1;
            map[v] = w;
            if (assign(depth + 1)) return true;
            used[w] = 0;
        }
        return false;
    }
};

}  // namespace

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    if (invariant_key(a) != invariant_key(b)) return false;
    IsoSearch s{a, b, {}, std::vector<int>(a.order(), -1), std::vector<char>(b.order(), 0)};
    s.order.resize(a.order());
    for (int v = 0; v < a.order(); ++v) s.order[v] = v;
    std::sort(s.order.begin(), s.order.end(),
              [&](int x, int y) { return a.degree(x) != a.degree(y) ? a.degree(x) > a.degree(y) : x < y; });
    return s.assign(0);
}

ConnectedBipartiteEnumerator::ConnectedBipartiteEnumerator(int n, int limit) : n_(n) {
    if (n < 1) throw InvalidParameter("enumeration order must be >= 1");
    if (n > limit)
        throw LimitExceeded("bipartite enumeration limited to order " + std::to_string(limit));
    if (n > 1) left_ = 1;
}

bool ConnectedBipartiteEnumerator::keep_if_new(const Graph& g) {
    auto key = invariant_key(g);
    auto& bucket = buckets_[key];
    for (int idx : bucket)
        if (is_isomorphic(seen_[idx], g)) return false;
    bucket.push_back(static_cast<int>(seen_.size()));
    seen_.push_back(g);
    return true;
}

std::optional<Graph> ConnectedBipartiteEnumerator::next() {
    if (done_) return std::nullopt;
    if (n_ == 1) {
        done_ = true;
        return Graph(1, {});
    }
    while (left_ <= n_ / 2) {
        int right = n_ - left_;
        uint64_t cells = static_cast<uint64_t>(left_) * right;
        uint64_t total = uint64_t{1} << cells;
        while (mask_ < total) {
            uint64_t m = mask_++;
            std::vector<Edge> es;
            for (int i = 0; i < left_; ++i)
                for (int j = 0; j < right; ++j)
                    if ((m >> (i * right + j)) & 1) es.push_back(Edge{i, left_ + j});
            if (static_cast<int>(es.size()) < n_ - 1) continue;  // too few edges to connect
            Graph g(n_, std::move(es));
            if (!is_connected(g)) continue;
            if (keep_if_new(g)) return g;
        }
        mask_ = 0;
        ++left_;
    }
    done_ = true;
    return std::nullopt;
}

std::vector<Graph> enumerate_connected_bipartite(int n, int limit) {
    ConnectedBipartiteEnumerator e(n, limit);
    std::vector<Graph> out;
    while (auto g = e.next()) out.push_back(std::move(*g));
    return out;
}

std::vector<Graph> enumerate_connected_graphs(int n, int limit) {
    if (n < 1) throw InvalidParameter("enumeration order must be >= 1");
    if (n > limit)
        throw LimitExceeded("connected enumeration limited to order " + std::to_string(limit));
    std::vector<Edge> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all.push_back(Edge{u, v});
    std::map<std::vector<int>, std::vector<int>> buckets;
    std::vector<Graph> kept;
    uint64_t total = uint64_t{1} << all.size();
    for (uint64_t m = 0; m < total; ++m) {
        std::vector<Edge> es;
        for (size_t i = 0; i < all.size(); ++i)
            if ((m >> i) & 1) es.push_back(all[i]);
        if (static_cast<int>(es.size()) < n - 1) continue;
        Graph g(n, std::move(es));
        if (!is_connected(g)) continue;
        auto key = invariant_key(g);
        auto& bucket = buckets[key];
        bool fresh = true;
        for (int idx : bucket)
            if (is_isomorphic(kept[idx], g)) {
                fresh = false;
                break;
            }
        if (!fresh) continue;
        bucket.push_back(static_cast<int>(kept.size()));
        kept.push_back(std::move(g));
    }
    return kept;
}

}  // namespace chroma
