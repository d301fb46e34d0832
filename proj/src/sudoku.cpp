#include "chroma/sudoku.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "chroma/errors.hpp"

namespace chroma {

namespace {

uint64_t all_colors(int k) { return (uint64_t{1} << k) - 1; }

// Exact minimum vertex cover by branching on an endpoint of some remaining edge.
int min_vertex_cover(const std::vector<Edge>& edges) {
    if (edges.empty()) return 0;
    Edge e = edges[0];
    int best = static_cast<int>(edges.size());  // covering one endpoint per edge always works
    for (int pick : {e.u, e.v}) {
        std::vector<Edge> rest;
        for (const auto& f : edges)
            if (f.u != pick && f.v != pick) rest.push_back(f);
        best = std::min(best, 1 + min_vertex_cover(rest));
    }
    return best;
}

// Enumerates canonical proper colorings of a fixed sorted subset in
// lexicographic order and counts extensions for each, stopping at the first
// witness. Partial assignments are abandoned as soon as any uncolored vertex
// (inside or outside the subset) has every color blocked by colored neighbors.
struct SubsetEval {
    const Graph& g;
    int k;
    const std::vector<int>& subset;
    std::vector<int> color;
    std::vector<uint64_t> blocked;  // colors used by already-assigned neighbors
    long long colorings_tested = 0;
    bool found = false;
    std::vector<int> witness_initial;
    std::vector<int> witness_full;

    SubsetEval(const Graph& graph, int colors, const std::vector<int>& s)
        : g(graph), k(colors), subset(s), color(graph.order(), 0), blocked(graph.order(), 0) {}

    void run() { descend(0, 0); }

    void descend(size_t depth, int max_used) {
        if (found) return;
        if (depth == subset.size()) {
            ++colorings_tested;
            PartialColoring c;
            c.k = k;
            c.color = color;
            std::vector<int> full;
            if (detail::count_extensions_raw(g, c, 2, &full) == 1) {
                found = true;
                witness_initial = color;
                witness_full = std::move(full);
            }
            return;
        }
        int v = subset[depth];
        int cap = std::min(max_used + 1, k);
        for (int c = 1; c <= cap; ++c) {
            uint64_t bit = uint64_t{1} << (c - 1);
            if (blocked[v] & bit) continue;
            color[v] = c;
            bool dead = false;
            std::vector<int> touched;
            for (int w : g.neighbors(v)) {
                if (color[w] != 0) continue;
                if ((blocked[w] & bit) == 0) {
                    blocked[w] |= bit;
                    touched.push_back(w);
                    if (blocked[w] == all_colors(k)) dead = true;
                }
            }
            if (!dead) descend(depth + 1, std::max(max_used, c));
            for (int w : touched) blocked[w] &= ~bit;
            color[v] = 0;
            if (found) return;
        }
    }
};

struct CandidateOutcome {
    bool found = false;
    long long colorings_tested = 0;
    std::vector<int> witness_initial;
    std::vector<int> witness_full;
};

CandidateOutcome evaluate_subset(const Graph& g, int k, const std::vector<int>& subset) {
    SubsetEval eval(g, k, subset);
    eval.run();
    return CandidateOutcome{eval.found, eval.colorings_tested, std::move(eval.witness_initial),
                            std::move(eval.witness_full)};
}

// All size-t subsets of `free_list` merged with `base`, in lexicographic order
// of the merged sorted set, keeping only those meeting every edge in
// `must_cover`. Merged order equals combination order because the symmetric
// difference of two same-size candidate sets never involves `base`.
std::vector<std::vector<int>> candidate_subsets(const std::vector<int>& base,
                                                const std::vector<int>& free_list, int t,
                                                const std::vector<Edge>& must_cover, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> pick(t);
    std::vector<char> in_set(n, 0);
    for (int v : base) in_set[v] = 1;

    auto emit = [&]() {
        for (int i = 0; i < t; ++i) in_set[free_list[pick[i]]] = 1;
        bool covered = true;
        for (const auto& e : must_cover)
            if (!in_set[e.u] && !in_set[e.v]) {
                covered = false;
                break;
            }
        if (covered) {
            std::vector<int> s = base;
            for (int i = 0; i < t; ++i) s.push_back(free_list[pick[i]]);
            std::sort(s.begin(), s.end());
            out.push_back(std::move(s));
        }
        for (int i = 0; i < t; ++i) in_set[free_list[pick[i]]] = 0;
    };

    if (t == 0) {
        emit();
        return out;
    }
    if (t > static_cast<int>(free_list.size())) return out;
    for (int i = 0; i < t; ++i) pick[i] = i;
    while (true) {
        emit();
        int i = t - 1;
        while (i >= 0 && pick[i] == static_cast<int>(free_list.size()) - t + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < t; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

}  // namespace

bool is_sudoku_coloring(const Graph& g, const PartialColoring& initial) {
    if (!is_proper_partial(g, initial))
        throw ImproperColoring("initial coloring is not proper on its domain");
    if (initial.k < chromatic_number(g))
        throw ChromaticViolation("k is below the chromatic number");
    return detail::count_extensions_raw(g, initial, 2, nullptr) == 1;
}

std::vector<int> required_vertices(const Graph& g, int k) {
    if (k < 2) throw InvalidParameter("required-vertex rule needs k >= 2");
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) <= k - 2) out.push_back(v);
    return out;
}

std::vector<Edge> constraint_edges(const Graph& g, int k) {
    if (k < 2) throw InvalidParameter("constraint-edge rule needs k >= 2");
    std::vector<Edge> out;
    for (const auto& e : g.edges())
        if (g.degree(e.u) <= k - 1 && g.degree(e.v) <= k - 1) out.push_back(e);
    return out;
}

int lower_bound(const Graph& g, int k) {
    std::vector<int> req = required_vertices(g, k);
    std::vector<char> forced(g.order(), 0);
    for (int v : req) forced[v] = 1;
    std::vector<Edge> open;
    for (const auto& e : constraint_edges(g, k))
        if (!forced[e.u] && !forced[e.v]) open.push_back(e);
    return static_cast<int>(req.size()) + min_vertex_cover(open);
}

SnResult sudoku_number(const Graph& g, int k, const SearchOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    if (g.order() < 1) throw InvalidParameter("graph order must be >= 1");
    if (k < 1) throw InvalidParameter("color count k must be >= 1");
    if (k > kMaxColors) throw LimitExceeded("at most " + std::to_string(kMaxColors) + " colors supported");
    if (k < chromatic_number(g))
        throw ChromaticViolation("k=" + std::to_string(k) + " is below the chromatic number");

    int n = g.order();
    std::vector<int> req = (k >= 2) ? required_vertices(g, k) : std::vector<int>{};
    if (n - static_cast<int>(req.size()) > opt.limit)
        throw LimitExceeded("search over " + std::to_string(n - static_cast<int>(req.size())) +
                            " non-forced vertices exceeds limit " + std::to_string(opt.limit));

    std::vector<char> is_req(n, 0);
    for (int v : req) is_req[v] = 1;
    std::vector<int> free_list;
    for (int v = 0; v < n; ++v)
        if (!is_req[v]) free_list.push_back(v);
    std::vector<Edge> open_edges;
    if (k >= 2)
        for (const auto& e : constraint_edges(g, k))
            if (!is_req[e.u] && !is_req[e.v]) open_edges.push_back(e);

    int start = static_cast<int>(req.size()) + min_vertex_cover(open_edges);

    SnResult result;
    result.disconnected_input = !is_connected(g);

    for (int s = start; s <= n; ++s) {
        auto candidates = candidate_subsets(req, free_list, s - static_cast<int>(req.size()), open_edges, n);
        result.stats.subsets_examined += static_cast<long long>(candidates.size());
        std::vector<CandidateOutcome> outcomes(candidates.size());

        int workers = std::max(1, opt.threads);
        if (workers == 1 || candidates.size() <= 1) {
            for (size_t i = 0; i < candidates.size(); ++i) outcomes[i] = evaluate_subset(g, k, candidates[i]);
        } else {
            std::atomic<size_t> next_index{0};
            auto work = [&]() {
                while (true) {
                    size_t i = next_index.fetch_add(1);
                    if (i >= candidates.size()) break;
                    outcomes[i] = evaluate_subset(g, k, candidates[i]);
                }
            };
            std::vector<std::thread> pool;
            for (int w = 0; w < workers - 1; ++w) pool.emplace_back(work);
            work();
            for (auto& th : pool) th.join();
        }

        int winner = -1;
        for (size_t i = 0; i < outcomes.size(); ++i) {
            result.stats.colorings_examined += outcomes[i].colorings_tested;
            if (winner == -1 && outcomes[i].found) winner = static_cast<int>(i);
        }
        if (winner >= 0) {
            result.sn = s;
            result.certificate.k = k;
            result.certificate.witness = candidates[winner];
            result.certificate.initial = PartialColoring{k, std::move(outcomes[winner].witness_initial)};
            result.certificate.full = PartialColoring{k, std::move(outcomes[winner].witness_full)};
            result.stats.elapsed_ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            return result;
        }
    }
    // unreachable: coloring all of V is always a witness once k >= chi(G)
    throw Error("subset search exhausted without a witness");
}

SnResult sudoku_number_chromatic(const Graph& g, const SearchOptions& opt) {
    return sudoku_number(g, chromatic_number(g), opt);
}

bool verify_certificate(const Graph& g, const SudokuCertificate& cert, std::string* why) {
    auto fail = [&](const std::string& reason) {
        if (why) *why = reason;
        return false;
    };
    if (static_cast<int>(cert.initial.color.size()) != g.order() ||
        static_cast<int>(cert.full.color.size()) != g.order())
        return fail("coloring size does not match graph order");
    if (cert.initial.k != cert.k || cert.full.k != cert.k) return fail("inconsistent color counts");
    if (cert.initial.domain() != cert.witness) return fail("initial coloring domain differs from witness set");
    if (!cert.full.complete()) return fail("claimed extension does not color every vertex");
    for (int v : cert.witness)
        if (cert.initial.color[v] != cert.full.color[v]) return fail("extension disagrees with initial coloring");
    if (!is_proper_partial(g, cert.full)) return fail("claimed extension is not proper");
    if (!is_proper_partial(g, cert.initial)) return fail("initial coloring is not proper");
    ExtensionCount count = count_extensions(g, cert.initial, 2);
    if (!count.exactly_one()) return fail("initial coloring has " + count.to_string() + " extensions");
    if (unique_extension(g, cert.initial) != cert.full) return fail("unique extension differs from claim");
    return true;
}

}  // namespace chroma
