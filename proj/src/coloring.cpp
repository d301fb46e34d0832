#include "chroma/coloring.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "chroma/errors.hpp"

namespace chroma {

namespace {

uint64_t all_colors(int k) { return (uint64_t{1} << k) - 1; }

void validate_shape(const Graph& g, const PartialColoring& c) {
    if (c.k < 1) throw InvalidParameter("color count k must be >= 1");
    if (c.k > kMaxColors) throw LimitExceeded("at most " + std::to_string(kMaxColors) + " colors supported");
    if (static_cast<int>(c.color.size()) != g.order())
        throw InvalidParameter("coloring size does not match graph order");
    for (int v = 0; v < g.order(); ++v)
        if (c.color[v] < 0 || c.color[v] > c.k)
            throw InvalidParameter("color " + std::to_string(c.color[v]) + " outside 1.." + std::to_string(c.k) +
                                   " on vertex " + std::to_string(v));
}

void require_proper(const Graph& g, const PartialColoring& c) {
    validate_shape(g, c);
    for (const auto& e : g.edges())
        if (c.color[e.u] != 0 && c.color[e.u] == c.color[e.v])
            throw ImproperColoring("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                   "} has both endpoints colored " + std::to_string(c.color[e.u]));
}

}  // namespace

PartialColoring PartialColoring::empty(int n, int k) {
    PartialColoring c;
    c.k = k;
    c.color.assign(n, 0);
    return c;
}

PartialColoring PartialColoring::from_pairs(int n, int k, const std::vector<std::pair<int, int>>& vc) {
    PartialColoring c = empty(n, k);
    for (auto [v, col] : vc) {
        if (v < 0 || v >= n) throw InvalidParameter("vertex " + std::to_string(v) + " out of range");
        if (col < 1 || col > k)
            throw InvalidParameter("color " + std::to_string(col) + " outside 1.." + std::to_string(k));
        if (c.color[v] != 0) throw InvalidParameter("vertex " + std::to_string(v) + " colored twice");
        c.color[v] = col;
    }
    return c;
}

int PartialColoring::assigned_count() const {
    return static_cast<int>(color.size() - std::count(color.begin(), color.end(), 0));
}

bool PartialColoring::complete() const {
    return std::find(color.begin(), color.end(), 0) == color.end();
}

std::vector<int> PartialColoring::domain() const {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(color.size()); ++v)
        if (color[v] != 0) out.push_back(v);
    return out;
}

std::vector<std::pair<int, int>> PartialColoring::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < static_cast<int>(color.size()); ++v)
        if (color[v] != 0) out.emplace_back(v, color[v]);
    return out;
}

int ColorList::size_of(int v) const { return std::popcount(lists[v]); }

std::vector<int> ColorList::colors_of(int v) const {
    std::vector<int> out;
    for (int c = 1; c <= k; ++c)
        if (has(v, c)) out.push_back(c);
    return out;
}

std::string ExtensionCount::to_string() const {
    if (count == 0) return "Zero";
    if (count == 1) return "ExactlyOne";
    return "AtLeast(" + std::to_string(count) + ")";
}

bool is_proper_partial(const Graph& g, const PartialColoring& c) {
    validate_shape(g, c);
    for (const auto& e : g.edges())
        if (c.color[e.u] != 0 && c.color[e.u] == c.color[e.v]) return false;
    return true;
}

ColorList color_lists(const Graph& g, const PartialColoring& c) {
    require_proper(g, c);
    ColorList out;
    out.k = c.k;
    out.lists.assign(g.order(), 0);
    for (int v = 0; v < g.order(); ++v) {
        if (c.color[v] != 0) continue;
        uint64_t mask = all_colors(c.k);
        for (int w : g.neighbors(v))
            if (c.color[w] != 0) mask &= ~(uint64_t{1} << (c.color[w] - 1));
        out.lists[v] = mask;
    }
    return out;
}

std::optional<PartialColoring> propagate(const Graph& g, const PartialColoring& c) {
    require_proper(g, c);
    PartialColoring cur = c;
    std::vector<uint64_t> mask(g.order(), 0);
    for (int v = 0; v < g.order(); ++v) {
        if (cur.color[v] != 0) continue;
        mask[v] = all_colors(cur.k);
        for (int w : g.neighbors(v))
            if (cur.color[w] != 0) mask[v] &= ~(uint64_t{1} << (cur.color[w] - 1));
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < g.order(); ++v) {
            if (cur.color[v] != 0) continue;
            if (mask[v] == 0) return std::nullopt;
            if (std::popcount(mask[v]) == 1) {
                int col = std::countr_zero(mask[v]) + 1;
                cur.color[v] = col;
                for (int w : g.neighbors(v))
                    if (cur.color[w] == 0) mask[w] &= ~(uint64_t{1} << (col - 1));
                changed = true;
            }
        }
    }
    for (int v = 0; v < g.order(); ++v)
        if (cur.color[v] == 0 && mask[v] == 0) return std::nullopt;
    return cur;
}

namespace detail {

namespace {

// Backtracking counter: repeatedly colors the uncolored vertex with the
// fewest feasible colors (ties to the smallest index), so singleton lists are
// consumed without branching. Deterministic for fixed input.
struct ExtSearch {
    const Graph& g;
    int k;
    long long cap;
    std::vector<int> color;
    std::vector<uint64_t> avail;
    std::vector<int>* first_out;
    long long found = 0;

    void run() { descend(); }

    void descend() {
        int best = -1;
        int best_size = k + 1;
        for (int v = 0; v < g.order(); ++v) {
            if (color[v] != 0) continue;
            int s = std::popcount(avail[v]);
            if (s == 0) return;
            if (s < best_size) {
                best_size = s;
                best = v;
            }
        }
        if (best == -1) {
            if (++found == 1 && first_out) *first_out = color;
            return;
        }
        uint64_t options = avail[best];
        while (options != 0) {
            int c = std::countr_zero(options) + 1;
            options &= options - 1;
            color[best] = c;
            // shrink neighbor lists, remembering which ones actually changed
            uint64_t bit = uint64_t{1} << (c - 1);
            std::vector<int> touched;
            for (int w : g.neighbors(best))
                if (color[w] == 0 && (avail[w] & bit)) {
                    avail[w] &= ~bit;
                    touched.push_back(w);
                }
            descend();
            for (int w : touched) avail[w] |= bit;
            color[best] = 0;
            if (found >= cap) return;
        }
    }
};

}  // namespace

long long count_extensions_raw(const Graph& g, const PartialColoring& c, long long cap,
                               std::vector<int>* first) {
    ExtSearch s{g, c.k, cap, c.color, {}, first};
    s.avail.assign(g.order(), 0);
    for (int v = 0; v < g.order(); ++v) {
        if (c.color[v] != 0) continue;
        uint64_t mask = all_colors(c.k);
        for (int w : g.neighbors(v))
            if (c.color[w] != 0) mask &= ~(uint64_t{1} << (c.color[w] - 1));
        s.avail[v] = mask;
    }
    s.run();
    return s.found;
}

namespace {

struct CliqueSearch {
    const std::vector<uint64_t>& adj;
    int best = 0;
    std::vector<int> stack;
    std::vector<int> best_set;

    void extend(uint64_t cand, int size) {
        if (cand == 0) {
            if (size > best) {
                best = size;
                best_set = stack;
            }
            return;
        }
        while (cand != 0) {
            if (size + std::popcount(cand) <= best) return;
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            stack.push_back(v);
            extend(cand & adj[v], size + 1);
            stack.pop_back();
        }
    }
};

std::vector<int> max_clique_impl(const Graph& g) {
    int n = g.order();
    if (n > 64) {
        // greedy clique: valid lower bound, used only for seeding
        std::vector<int> c;
        for (int v = 0; v < n; ++v) {
            bool ok = true;
            for (int u : c)
                if (!g.adjacent(u, v)) {
                    ok = false;
                    break;
                }
            if (ok) c.push_back(v);
        }
        return c;
    }
    std::vector<uint64_t> adj(n, 0);
    for (const auto& e : g.edges()) {
        adj[e.u] |= uint64_t{1} << e.v;
        adj[e.v] |= uint64_t{1} << e.u;
    }
    CliqueSearch s{adj, 0, {}, {}};
    uint64_t all = (n == 64) ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
    s.extend(all, 0);
    return s.best_set;
}

}  // namespace

int max_clique_size(const Graph& g) { return static_cast<int>(max_clique_impl(g).size()); }

std::vector<int> max_clique_set(const Graph& g) {
    auto c = max_clique_impl(g);
    std::sort(c.begin(), c.end());
    return c;
}

}  // namespace detail

ExtensionCount count_extensions(const Graph& g, const PartialColoring& c, long long cap) {
    if (cap < 2) throw InvalidParameter("extension cap must be >= 2");
    require_proper(g, c);
    return ExtensionCount{detail::count_extensions_raw(g, c, cap, nullptr), cap};
}

PartialColoring unique_extension(const Graph& g, const PartialColoring& c) {
    require_proper(g, c);
    std::vector<int> full;
    long long found = detail::count_extensions_raw(g, c, 2, &full);
    if (found == 0) throw NotExtendable("the partial coloring has no proper extension");
    if (found >= 2) throw NotUnique("the partial coloring has more than one proper extension");
    PartialColoring out;
    out.k = c.k;
    out.color = std::move(full);
    return out;
}

int chromatic_number(const Graph& g) {
    if (g.order() < 1) throw InvalidParameter("graph order must be >= 1");
    int k = std::max(1, detail::max_clique_size(g));
    for (;; ++k) {
        if (k > kMaxColors) throw LimitExceeded("chromatic search exceeded supported color count");
        if (detail::count_extensions_raw(g, PartialColoring::empty(g.order(), k), 1, nullptr) > 0) return k;
    }
}

int clique_number(const Graph& g, int limit) {
    if (g.order() < 1) throw InvalidParameter("graph order must be >= 1");
    if (g.order() > limit)
        throw LimitExceeded("clique search limited to order " + std::to_string(limit));
    return detail::max_clique_size(g);
}

}  // namespace chroma
