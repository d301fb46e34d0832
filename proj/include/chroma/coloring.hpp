#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chroma/graph.hpp"

namespace chroma {

// Color sets are tracked as bitmasks, so the engine supports at most 62 colors.
constexpr int kMaxColors = 62;

// Assignment of colors 1..k to a subset of vertices; 0 marks an uncolored
// vertex. Properness on the colored subset is checked by is_proper_partial,
// not assumed by the type.
struct PartialColoring {
    int k = 0;
    std::vector<int> color;  // size = graph order

    static PartialColoring empty(int n, int k);
    static PartialColoring from_pairs(int n, int k, const std::vector<std::pair<int, int>>& vc);

    int assigned_count() const;
    bool complete() const;
    std::vector<int> domain() const;                      // colored vertices, ascending
    std::vector<std::pair<int, int>> pairs() const;       // (vertex, color), ascending

    bool operator==(const PartialColoring&) const = default;
};

// Feasible colors per uncolored vertex: {1..k} minus the colors of colored
// neighbors. Entries for colored vertices are 0 and must not be read.
struct ColorList {
    int k = 0;
    std::vector<uint64_t> lists;

    bool has(int v, int c) const { return (lists[v] >> (c - 1)) & 1u; }
    int size_of(int v) const;
    std::vector<int> colors_of(int v) const;
};

// Number of distinct proper k-colorings of the whole graph agreeing with the
// partial coloring, counted up to `cap`: 0 and 1 are exact, count == cap means
// the search stopped early.
struct ExtensionCount {
    long long count = 0;
    long long cap = 2;

    bool zero() const { return count == 0; }
    bool exactly_one() const { return count == 1; }
    bool multiple() const { return count >= 2; }
    std::string to_string() const;  // Zero | ExactlyOne | AtLeast(c)
};

bool is_proper_partial(const Graph& g, const PartialColoring& c);
ColorList color_lists(const Graph& g, const PartialColoring& c);

// Assigns every vertex whose list is a singleton until fixpoint; nullopt when
// some list becomes empty. The result has the same set of full extensions.
std::optional<PartialColoring> propagate(const Graph& g, const PartialColoring& c);

ExtensionCount count_extensions(const Graph& g, const PartialColoring& c, long long cap = 2);

// The unique proper extension; throws NotExtendable / NotUnique otherwise.
PartialColoring unique_extension(const Graph& g, const PartialColoring& c);

int chromatic_number(const Graph& g);
int clique_number(const Graph& g, int limit = 16);

namespace detail {
// Search core without input validation; callers guarantee a proper partial
// coloring and 1 <= k <= kMaxColors. Accepts cap >= 1; records the first full
// extension found when `first` is non-null.
long long count_extensions_raw(const Graph& g, const PartialColoring& c, long long cap,
                               std::vector<int>* first);
// Exact maximum clique; greedy fallback above 64 vertices (still a valid
// lower bound for the chromatic search).
int max_clique_size(const Graph& g);
std::vector<int> max_clique_set(const Graph& g);
}  // namespace detail

}  // namespace chroma
