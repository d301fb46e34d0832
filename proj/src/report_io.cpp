#include "chroma/report_io.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

#include "chroma/errors.hpp"

namespace chroma {

namespace {

using nlohmann::json;

json pairs_to_json(const std::vector<std::pair<int, int>>& pairs) {
    json arr = json::array();
    for (auto [v, c] : pairs) arr.push_back(json::array({v, c}));
    return arr;
}

std::vector<std::pair<int, int>> pairs_from_json(const json& arr, const char* what) {
    if (!arr.is_array()) throw ParseError(std::string(what) + " must be an array", 1);
    std::vector<std::pair<int, int>> out;
    for (const auto& item : arr) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() || !item[1].is_number_integer())
            throw ParseError(std::string(what) + " entries must be [vertex, color]", 1);
        out.emplace_back(item[0].get<int>(), item[1].get<int>());
    }
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string format_millis(double ms) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(3) << ms;
    return out.str();
}

}  // namespace

std::vector<std::pair<int, int>> parse_coloring_pairs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    std::vector<std::pair<int, int>> out;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        long long v = 0, c = 0;
        std::string extra;
        if (!(ls >> v >> c) || (ls >> extra)) throw ParseError("expected 'vertex color'", line_no);
        out.emplace_back(static_cast<int>(v), static_cast<int>(c));
    }
    return out;
}

std::string emit_coloring_pairs(const PartialColoring& c) {
    std::ostringstream out;
    for (auto [v, col] : c.pairs()) out << v << ' ' << col << '\n';
    return out.str();
}

std::string certificate_to_json(const Graph& g, const SnResult& result) {
    json j;
    j["k"] = result.certificate.k;
    j["n"] = g.order();
    j["S"] = result.certificate.witness;
    j["C0"] = pairs_to_json(result.certificate.initial.pairs());
    j["F"] = pairs_to_json(result.certificate.full.pairs());
    j["sn"] = result.sn;
    return j.dump(2) + "\n";
}

ParsedCertificate certificate_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), 1);
    }
    for (const char* key : {"k", "n", "S", "C0", "F", "sn"})
        if (!j.contains(key)) throw ParseError(std::string("certificate missing key '") + key + "'", 1);
    ParsedCertificate out;
    out.n = j["n"].get<int>();
    out.sn = j["sn"].get<int>();
    out.certificate.k = j["k"].get<int>();
    if (!j["S"].is_array()) throw ParseError("S must be an array", 1);
    for (const auto& v : j["S"]) out.certificate.witness.push_back(v.get<int>());
    out.certificate.initial =
        PartialColoring::from_pairs(out.n, out.certificate.k, pairs_from_json(j["C0"], "C0"));
    out.certificate.full =
        PartialColoring::from_pairs(out.n, out.certificate.k, pairs_from_json(j["F"], "F"));
    return out;
}

std::string reports_to_csv(const std::vector<CheckReport>& reports) {
    std::ostringstream out;
    out << "instance_id,family,params,n,k,predicted,computed,verdict,millis\n";
    for (const auto& r : reports) {
        out << csv_field(r.instance_id) << ',' << csv_field(r.family) << ',' << csv_field(r.params) << ','
            << r.n << ',' << r.k << ',' << r.predicted << ',' << r.computed << ','
            << (r.match ? "match" : "mismatch") << ',' << format_millis(r.millis) << '\n';
    }
    return out.str();
}

std::string reports_to_json(const std::vector<CheckReport>& reports) {
    json arr = json::array();
    for (const auto& r : reports) {
        json j;
        j["instance_id"] = r.instance_id;
        j["family"] = r.family;
        j["params"] = r.params;
        j["n"] = r.n;
        j["k"] = r.k;
        j["predicted"] = r.predicted;
        j["computed"] = r.computed;
        j["verdict"] = r.match ? "match" : "mismatch";
        j["millis"] = r.millis;
        j["note"] = r.note;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

std::string reports_to_text(const std::vector<CheckReport>& reports) {
    std::ostringstream out;
    for (const auto& r : reports) {
        out << (r.match ? "[ok]  " : "[FAIL]") << ' ' << r.instance_id << "  n=" << r.n << " k=" << r.k
            << "  predicted=" << r.predicted << " computed=" << r.computed;
        if (!r.note.empty()) out << "  (" << r.note << ")";
        out << '\n';
    }
    return out.str();
}

}  // namespace chroma
