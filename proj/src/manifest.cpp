#include "chroma/manifest.hpp"

#include "json.hpp"

#include "chroma/enumerate.hpp"
#include "chroma/errors.hpp"
#include "chroma/graph_io.hpp"

namespace chroma {

namespace {

using nlohmann::json;

int int_field(const json& j, const char* key, int fallback) {
    return j.contains(key) ? j.at(key).get<int>() : fallback;
}

}  // namespace

Manifest parse_manifest(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid manifest JSON: ") + e.what(), 1);
    }
    Manifest m;
    m.name = j.contains("name") ? j.at("name").get<std::string>() : "unnamed";
    if (j.contains("family_checks"))
        for (const auto& entry : j.at("family_checks")) {
            FamilyCheckEntry e;
            e.spec = entry.at("spec").get<std::string>();
            if (entry.contains("override_predicted"))
                e.override_predicted = entry.at("override_predicted").get<long long>();
            m.family_checks.push_back(std::move(e));
        }
    if (j.contains("attach_checks"))
        for (const auto& entry : j.at("attach_checks"))
            m.attach_checks.push_back(AttachCheckEntry{entry.at("path_n").get<int>(),
                                                       entry.at("clique_m").get<int>(),
                                                       entry.at("u").get<int>(), entry.at("v").get<int>()});
    if (j.contains("delta")) {
        const auto& d = j.at("delta");
        m.delta.all_connected_up_to = int_field(d, "all_connected_up_to", 0);
        m.delta.k_offset = int_field(d, "k_offset", 3);
        if (d.contains("graph6_sample"))
            for (const auto& s : d.at("graph6_sample")) m.delta.graph6_sample.push_back(s.get<std::string>());
    }
    if (j.contains("census")) m.census_n_max = int_field(j.at("census"), "n_max", 0);
    if (j.contains("inequality_checks"))
        for (const auto& entry : j.at("inequality_checks"))
            m.inequality_checks.push_back(InequalityCheckEntry{entry.at("base").get<std::string>(),
                                                               entry.at("u").get<int>(),
                                                               entry.at("v").get<int>(),
                                                               entry.at("m").get<int>()});
    if (j.contains("apex_checks"))
        for (const auto& entry : j.at("apex_checks")) m.apex_checks.push_back(entry.at("base").get<std::string>());
    if (j.contains("embedding_checks"))
        for (const auto& entry : j.at("embedding_checks"))
            m.embedding_checks.push_back(entry.at("base").get<std::string>());
    return m;
}

SuiteResult run_suite(const Manifest& m, const SearchOptions& opt) {
    SuiteResult result;
    auto push = [&](CheckReport r) {
        result.all_match = result.all_match && r.match;
        result.reports.push_back(std::move(r));
    };

    for (const auto& entry : m.family_checks) {
        CheckReport r = check_family_instance(parse_family_spec(entry.spec), opt);
        if (entry.override_predicted) {
            r.predicted = *entry.override_predicted;
            r.match = r.predicted == r.computed;
            r.note = "predicted value overridden by manifest";
        }
        push(std::move(r));
    }
    for (const auto& entry : m.attach_checks)
        push(check_attach_instance(entry.path_n, entry.clique_m, entry.u, entry.v, opt));
    for (int n = 1; n <= m.delta.all_connected_up_to; ++n) {
        auto graphs = enumerate_connected_graphs(n);
        for (size_t i = 0; i < graphs.size(); ++i)
            push(check_delta_threshold(graphs[i], max_degree(graphs[i]) + m.delta.k_offset,
                                       emit_graph6(graphs[i]), opt));
    }
    for (const auto& g6 : m.delta.graph6_sample) {
        Graph g = parse_graph6(g6);
        push(check_delta_threshold(g, max_degree(g) + m.delta.k_offset, g6, opt));
    }
    if (m.census_n_max > 0)
        for (auto& r : census_check(m.census_n_max, opt)) push(std::move(r));
    for (const auto& entry : m.inequality_checks) {
        Graph g = build_graph(parse_family_spec(entry.base));
        push(check_supergraph_inequality(g, entry.u, entry.v, entry.m,
                                         entry.base + "+K" + std::to_string(entry.m), opt));
    }
    for (const auto& base : m.apex_checks)
        push(check_apex_equality(build_graph(parse_family_spec(base)), "apex:" + base, opt));
    for (const auto& base : m.embedding_checks)
        push(check_embedding(build_graph(parse_family_spec(base)), "embed:" + base, opt));
    return result;
}

}  // namespace chroma
