#include "chroma/families.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "chroma/coloring.hpp"
#include "chroma/errors.hpp"

namespace chroma {

Graph build_path(int n) {
    if (n < 1) throw InvalidParameter("path order must be >= 1");
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.push_back(Edge{i, i + 1});
    return Graph(n, std::move(es));
}

Graph build_cycle(int n) {
    if (n < 3) throw InvalidParameter("cycle order must be >= 3");
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.push_back(Edge{i, i + 1});
    es.push_back(Edge{0, n - 1});
    return Graph(n, std::move(es));
}

Graph build_complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw InvalidParameter("complete bipartite parts must be >= 1");
    std::vector<Edge> es;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) es.push_back(Edge{i, m + j});
    return Graph(m + n, std::move(es));
}

Graph build_star(int leaves) { return build_complete_bipartite(1, leaves); }

Graph build_bistar(int m, int n) {
    if (m < 1 || n < 1) throw InvalidParameter("bistar pendant counts must be >= 1");
    std::vector<Edge> es{Edge{0, 1}};
    for (int i = 0; i < m; ++i) es.push_back(Edge{0, 2 + i});
    for (int i = 0; i < n; ++i) es.push_back(Edge{1, 2 + m + i});
    return Graph(m + n + 2, std::move(es));
}

Graph corona(const Graph& base, int l) {
    if (l < 1) throw InvalidParameter("corona copy count must be >= 1");
    int n = base.order();
    std::vector<Edge> es = base.edges();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < l; ++j) es.push_back(Edge{i, n + i * l + j});
    return Graph(n * (1 + l), std::move(es));
}

Graph attach_clique(const Graph& base, int u, int v, int m) {
    if (m < 3) throw InvalidParameter("attached clique order must be >= 3");
    if (u < 0 || v < 0 || u >= base.order() || v >= base.order() || !base.adjacent(u, v))
        throw InvalidEdge("{" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge of the base graph");
    int n = base.order();
    std::vector<Edge> es = base.edges();
    std::vector<int> clique{u, v};
    for (int i = 0; i < m - 2; ++i) clique.push_back(n + i);
    for (size_t a = 0; a < clique.size(); ++a)
        for (size_t b = a + 1; b < clique.size(); ++b) {
            Edge e = make_edge(clique[a], clique[b]);
            if (e.u == std::min(u, v) && e.v == std::max(u, v)) continue;  // already present
            es.push_back(e);
        }
    return Graph(n + m - 2, std::move(es));
}

Graph add_apex(const Graph& base, const std::vector<int>& clique) {
    std::vector<int> c = clique;
    std::sort(c.begin(), c.end());
    if (std::adjacent_find(c.begin(), c.end()) != c.end())
        throw InvalidClique("repeated vertex in clique set");
    for (int v : c)
        if (v < 0 || v >= base.order()) throw InvalidClique("vertex " + std::to_string(v) + " out of range");
    for (size_t a = 0; a < c.size(); ++a)
        for (size_t b = a + 1; b < c.size(); ++b)
            if (!base.adjacent(c[a], c[b]))
                throw InvalidClique("vertices " + std::to_string(c[a]) + " and " + std::to_string(c[b]) +
                                    " are not adjacent");
    int w = base.order();
    std::vector<Edge> es = base.edges();
    for (int v : c) es.push_back(Edge{v, w});
    return Graph(w + 1, std::move(es));
}

std::pair<Graph, Graph> embed_kplus1(const Graph& base, int k) {
    if (k < 3) throw InvalidParameter("embedding requires a chromatic number of at least 3");
    if (chromatic_number(base) != k)
        throw InvalidParameter("k must equal the chromatic number of the base graph");
    Graph g2 = corona(base, k);
    int w = g2.order();
    std::vector<Edge> es = g2.edges();
    for (int v = 0; v < base.order(); ++v) es.push_back(Edge{v, w});
    Graph g3(w + 1, std::move(es));
    return {std::move(g2), std::move(g3)};
}

Graph build_graph(const FamilySpec& spec) {
    return std::visit(
        [](const auto& s) -> Graph {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, PathSpec>) return build_path(s.n);
            else if constexpr (std::is_same_v<T, CycleSpec>) return build_cycle(s.n);
            else if constexpr (std::is_same_v<T, StarSpec>) return build_star(s.leaves);
            else if constexpr (std::is_same_v<T, CompleteBipartiteSpec>) return build_complete_bipartite(s.m, s.n);
            else if constexpr (std::is_same_v<T, BistarSpec>) return build_bistar(s.m, s.n);
            else if constexpr (std::is_same_v<T, CoronaSpec>) return corona(s.base, s.copies);
            else if constexpr (std::is_same_v<T, AttachCliqueSpec>) return attach_clique(s.base, s.u, s.v, s.m);
            else if constexpr (std::is_same_v<T, ApexSpec>) return add_apex(s.base, s.clique);
            else return embed_kplus1(s.base, s.k).second;
        },
        spec);
}

std::string describe(const FamilySpec& spec) {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, PathSpec>) return "path:" + std::to_string(s.n);
            else if constexpr (std::is_same_v<T, CycleSpec>) return "cycle:" + std::to_string(s.n);
            else if constexpr (std::is_same_v<T, StarSpec>) return "star:" + std::to_string(s.leaves);
            else if constexpr (std::is_same_v<T, CompleteBipartiteSpec>)
                return "kbip:" + std::to_string(s.m) + "," + std::to_string(s.n);
            else if constexpr (std::is_same_v<T, BistarSpec>)
                return "bistar:" + std::to_string(s.m) + "," + std::to_string(s.n);
            else if constexpr (std::is_same_v<T, CoronaSpec>)
                return "corona:" + std::to_string(s.copies) + ":" + s.base_desc;
            else if constexpr (std::is_same_v<T, AttachCliqueSpec>)
                return "attach:" + s.base_desc + "@" + std::to_string(s.u) + "-" + std::to_string(s.v) +
                       ":K" + std::to_string(s.m);
            else if constexpr (std::is_same_v<T, ApexSpec>) {
                std::string cs;
                for (size_t i = 0; i < s.clique.size(); ++i)
                    cs += (i ? "," : "") + std::to_string(s.clique[i]);
                return "apex:" + cs + ":" + s.base_desc;
            } else
                return "embed:" + std::to_string(s.k) + ":" + s.base_desc;
        },
        spec);
}

namespace {

[[noreturn]] void bad_spec(const std::string& text, const std::string& why) {
    throw InvalidParameter("bad family spec '" + text + "': " + why +
                           " (grammar: path:N | cycle:N | star:N | kbip:M,N | bistar:M,N | "
                           "corona:L:<base> | apex:V1,V2,..:<base> | embed:K:<base> | attach:<base>@U-V:KM)");
}

int parse_int(const std::string& whole, std::string_view tok) {
    int value = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || p != tok.data() + tok.size()) bad_spec(whole, "expected an integer");
    return value;
}

std::vector<int> parse_int_list(const std::string& whole, std::string_view tok) {
    std::vector<int> out;
    size_t start = 0;
    while (start <= tok.size()) {
        size_t comma = tok.find(',', start);
        if (comma == std::string_view::npos) comma = tok.size();
        out.push_back(parse_int(whole, tok.substr(start, comma - start)));
        start = comma + 1;
        if (comma == tok.size()) break;
    }
    return out;
}

}  // namespace

FamilySpec parse_family_spec(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) bad_spec(text, "missing ':'");
    std::string name = text.substr(0, colon);
    std::string rest = text.substr(colon + 1);
    if (rest.empty()) bad_spec(text, "missing parameters");

    if (name == "path") return PathSpec{parse_int(text, rest)};
    if (name == "cycle") return CycleSpec{parse_int(text, rest)};
    if (name == "star") return StarSpec{parse_int(text, rest)};
    if (name == "kbip" || name == "bistar") {
        auto parts = parse_int_list(text, rest);
        if (parts.size() != 2) bad_spec(text, "expected two parameters M,N");
        if (name == "kbip") return CompleteBipartiteSpec{parts[0], parts[1]};
        return BistarSpec{parts[0], parts[1]};
    }
    if (name == "corona" || name == "embed") {
        auto sep = rest.find(':');
        if (sep == std::string::npos) bad_spec(text, "expected " + name + ":N:<base>");
        int arg = parse_int(text, std::string_view(rest).substr(0, sep));
        std::string base_text = rest.substr(sep + 1);
        FamilySpec base = parse_family_spec(base_text);
        Graph base_graph = build_graph(base);
        if (name == "corona") return CoronaSpec{arg, std::move(base_graph), describe(base)};
        return EmbedSpec{arg, std::move(base_graph), describe(base)};
    }
    if (name == "apex") {
        auto sep = rest.find(':');
        if (sep == std::string::npos) bad_spec(text, "expected apex:V1,V2,..:<base>");
        auto clique = parse_int_list(text, std::string_view(rest).substr(0, sep));
        FamilySpec base = parse_family_spec(rest.substr(sep + 1));
        return ApexSpec{std::move(clique), build_graph(base), describe(base)};
    }
    if (name == "attach") {
        auto at = rest.rfind('@');
        if (at == std::string::npos) bad_spec(text, "expected attach:<base>@U-V:KM");
        std::string base_text = rest.substr(0, at);
        std::string tail = rest.substr(at + 1);
        auto sep = tail.find(':');
        if (sep == std::string::npos || sep + 1 >= tail.size() || tail[sep + 1] != 'K')
            bad_spec(text, "expected edge selector U-V followed by :KM");
        auto dash = tail.find('-');
        if (dash == std::string::npos || dash > sep) bad_spec(text, "expected edge selector U-V");
        int u = parse_int(text, std::string_view(tail).substr(0, dash));
        int v = parse_int(text, std::string_view(tail).substr(dash + 1, sep - dash - 1));
        int m = parse_int(text, std::string_view(tail).substr(sep + 2));
        FamilySpec base = parse_family_spec(base_text);
        return AttachCliqueSpec{u, v, m, build_graph(base), describe(base)};
    }
    bad_spec(text, "unknown family '" + name + "'");
}

}  // namespace chroma
