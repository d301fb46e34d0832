#include "chroma/graph_io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "chroma/errors.hpp"

namespace chroma {

namespace {

bool read_two_ints(const std::string& line, long long& a, long long& b) {
    std::istringstream in(line);
    std::string extra;
    if (!(in >> a >> b)) return false;
    if (in >> extra) return false;
    return true;
}

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

Graph parse_edgelist(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    long long n = 0, m = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (blank(line)) continue;
        if (!read_two_ints(line, n, m)) throw ParseError("expected header 'n m'", line_no);
        have_header = true;
        break;
    }
    if (!have_header) throw ParseError("empty input, expected header 'n m'", line_no + 1);
    if (n < 1) throw ParseError("graph order must be >= 1", line_no);
    if (m < 0) throw ParseError("edge count must be >= 0", line_no);

    std::vector<Edge> edges;
    std::set<Edge> seen;
    long long read = 0;
    while (read < m && std::getline(in, line)) {
        ++line_no;
        if (blank(line)) continue;
        long long u = 0, v = 0;
        if (!read_two_ints(line, u, v)) throw ParseError("expected edge 'u v'", line_no);
        if (u == v) throw ParseError("self-loop on vertex " + std::to_string(u), line_no);
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("vertex out of range 0.." + std::to_string(n - 1), line_no);
        Edge e = make_edge(static_cast<int>(u), static_cast<int>(v));
        if (!seen.insert(e).second)
            throw ParseError("duplicate edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}", line_no);
        edges.push_back(e);
        ++read;
    }
    if (read < m) throw ParseError("expected " + std::to_string(m) + " edges, got " + std::to_string(read), line_no + 1);
    while (std::getline(in, line)) {
        ++line_no;
        if (!blank(line)) throw ParseError("trailing content after " + std::to_string(m) + " edges", line_no);
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

std::string emit_edgelist(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

Graph parse_graph6(const std::string& raw) {
    std::string line = raw;
    if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
    if (line.empty()) throw ParseError("empty graph6 string", 1);

    size_t pos = 0;
    auto byte = [&](size_t i) {
        int b = static_cast<unsigned char>(line[i]);
        if (b < 63 || b > 126) throw ParseError("invalid graph6 byte", 1);
        return b - 63;
    };
    long long n = 0;
    if (line[0] == '~') {
        if (line.size() >= 2 && line[1] == '~') throw ParseError("graph6 order too large", 1);
        if (line.size() < 4) throw ParseError("truncated graph6 order", 1);
        n = (static_cast<long long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
        pos = 4;
    } else {
        n = byte(0);
        pos = 1;
    }
    if (n < 1) throw ParseError("graph order must be >= 1", 1);
    if (n > 1024) throw ParseError("graph6 order above supported limit 1024", 1);

    long long bits = n * (n - 1) / 2;
    long long need = (bits + 5) / 6;
    if (static_cast<long long>(line.size()) - static_cast<long long>(pos) != need)
        throw ParseError("graph6 body has wrong length", 1);

    std::vector<Edge> edges;
    long long bit_index = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            int group = byte(pos + bit_index / 6);
            int bit = (group >> (5 - bit_index % 6)) & 1;
            if (bit) edges.push_back(Edge{u, v});
            ++bit_index;
        }
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

std::string emit_graph6(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    long long bits = static_cast<long long>(n) * (n - 1) / 2;
    std::vector<int> groups((bits + 5) / 6, 0);
    long long bit_index = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (g.adjacent(u, v)) groups[bit_index / 6] |= 1 << (5 - bit_index % 6);
            ++bit_index;
        }
    }
    for (int gbyte : groups) out.push_back(static_cast<char>(gbyte + 63));
    return out;
}

}  // namespace chroma
