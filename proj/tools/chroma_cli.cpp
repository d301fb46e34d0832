// chroma: exact Sudoku-coloring toolkit for small graphs.
//
// Subcommands: gen, count, sn, check, suite. Exit codes: 0 success
// (for `count`: Zero), 1 for `count`=ExactlyOne / failed `check` / suite
// mismatch, 2 for `count`=AtLeast, 3 usage or input errors.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "chroma/checks.hpp"
#include "chroma/coloring.hpp"
#include "chroma/errors.hpp"
#include "chroma/families.hpp"
#include "chroma/graph_io.hpp"
#include "chroma/manifest.hpp"
#include "chroma/report_io.hpp"
#include "chroma/sudoku.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw chroma::Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw chroma::Error("cannot write " + out_path);
    out << content;
}

chroma::Graph load_graph(const std::string& graph_path, const std::string& family) {
    if (graph_path.empty() == family.empty())
        throw chroma::InvalidParameter("provide exactly one of --graph and --family");
    if (!family.empty()) return chroma::build_graph(chroma::parse_family_spec(family));
    std::string text = read_file(graph_path);
    if (!text.empty() && text.find(' ') == std::string::npos)  // single token: graph6
        return chroma::parse_graph6(text);
    return chroma::parse_edgelist(text);
}

struct CommonOpts {
    std::string graph_path;
    std::string family;
    std::string out_path;
    std::string format = "text";
    int k = 0;
    long long cap = 2;
    int limit = 14;
    int threads = 1;
    int seed = 12345;  // reserved for randomized harnesses; deterministic commands ignore it
};

std::string sn_text_report(const chroma::Graph& g, const chroma::SnResult& r) {
    std::ostringstream out;
    out << "n=" << g.order() << " m=" << g.size() << " k=" << r.certificate.k << '\n';
    out << "sn=" << r.sn << '\n';
    out << "S:";
    for (int v : r.certificate.witness) out << ' ' << v;
    out << '\n' << "C0:";
    for (auto [v, c] : r.certificate.initial.pairs()) out << ' ' << v << ':' << c;
    out << '\n' << "F:";
    for (auto [v, c] : r.certificate.full.pairs()) out << ' ' << v << ':' << c;
    out << '\n';
    out << "subsets_examined=" << r.stats.subsets_examined
        << " colorings_examined=" << r.stats.colorings_examined << '\n';
    if (r.disconnected_input) out << "warning: input graph is disconnected\n";
    return out.str();
}

int run(int argc, char** argv) {
    CLI::App app{"exact Sudoku colorings: generators, counting oracle, sn search, verification"};
    app.require_subcommand(1);
    CommonOpts o;

    auto add_graph_opts = [&](CLI::App* cmd) {
        cmd->add_option("--graph", o.graph_path, "graph file (edge list, or graph6 single token)");
        cmd->add_option("--family", o.family, "family spec, e.g. path:6 or attach:path:6@2-3:K5");
    };
    auto add_run_opts = [&](CLI::App* cmd) {
        cmd->add_option("--limit", o.limit, "bound on non-forced vertices in the subset search")
            ->envname("SUDOKU_CHROMA_LIMIT");
        cmd->add_option("--threads", o.threads, "worker threads (explicit, never auto-detected)");
        cmd->add_option("--format", o.format, "text|json|csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        cmd->add_option("--out", o.out_path, "output path (default stdout)");
        cmd->add_option("--seed", o.seed, "seed for randomized harnesses");
    };

    auto* gen = app.add_subcommand("gen", "emit the edge list of a family instance");
    gen->add_option("--family", o.family, "family spec")->required();
    gen->add_option("--out", o.out_path, "output path (default stdout)");

    auto* count = app.add_subcommand("count", "count proper extensions of a partial coloring (capped)");
    add_graph_opts(count);
    std::string coloring_path;
    count->add_option("--coloring", coloring_path, "coloring file, lines 'v c'")->required();
    count->add_option("--k", o.k, "number of colors")->required();
    count->add_option("--cap", o.cap, "counting cap (>= 2)");

    auto* sn = app.add_subcommand("sn", "compute the Sudoku number with a witness certificate");
    add_graph_opts(sn);
    sn->add_option("--k", o.k, "number of colors (default: chromatic number)");
    add_run_opts(sn);

    auto* check = app.add_subcommand("check", "re-verify a certificate against a graph");
    add_graph_opts(check);
    std::string cert_path;
    check->add_option("--cert", cert_path, "certificate JSON file")->required();

    auto* suite = app.add_subcommand("suite", "run the closed-form verification suite");
    std::string manifest_path;
    suite->add_option("--manifest", manifest_path, "manifest JSON (default: built-in acceptance manifest)");
    add_run_opts(suite);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }
    chroma::SearchOptions opt{o.limit, o.threads};

    if (gen->parsed()) {
        chroma::Graph g = chroma::build_graph(chroma::parse_family_spec(o.family));
        write_output(o.out_path, chroma::emit_edgelist(g));
        return 0;
    }

    if (count->parsed()) {
        chroma::Graph g = load_graph(o.graph_path, o.family);
        auto pairs = chroma::parse_coloring_pairs(read_file(coloring_path));
        auto coloring = chroma::PartialColoring::from_pairs(g.order(), o.k, pairs);
        if (!chroma::is_proper_partial(g, coloring)) {
            std::cerr << "error: coloring is not proper on its domain\n";
            return 3;
        }
        chroma::ExtensionCount result = chroma::count_extensions(g, coloring, o.cap);
        std::cout << result.to_string() << '\n';
        return result.zero() ? 0 : (result.exactly_one() ? 1 : 2);
    }

    if (sn->parsed()) {
        chroma::Graph g = load_graph(o.graph_path, o.family);
        chroma::SnResult result =
            o.k > 0 ? chroma::sudoku_number(g, o.k, opt) : chroma::sudoku_number_chromatic(g, opt);
        std::string why;
        if (!chroma::verify_certificate(g, result.certificate, &why))
            throw chroma::Error("internal: certificate failed re-verification: " + why);
        std::cerr << "elapsed_ms=" << result.stats.elapsed_ms << '\n';
        if (o.format == "json") {
            write_output(o.out_path, chroma::certificate_to_json(g, result));
        } else if (o.format == "csv") {
            std::ostringstream csv;
            csv << "n,k,sn,subsets_examined,colorings_examined\n"
                << g.order() << ',' << result.certificate.k << ',' << result.sn << ','
                << result.stats.subsets_examined << ',' << result.stats.colorings_examined << '\n';
            write_output(o.out_path, csv.str());
        } else {
            write_output(o.out_path, sn_text_report(g, result));
        }
        return 0;
    }

    if (check->parsed()) {
        chroma::Graph g = load_graph(o.graph_path, o.family);
        chroma::ParsedCertificate parsed = chroma::certificate_from_json(read_file(cert_path));
        std::string why;
        bool ok = parsed.n == g.order() && parsed.sn == static_cast<int>(parsed.certificate.witness.size());
        if (!ok) why = "n or sn field inconsistent with witness";
        if (ok) ok = chroma::verify_certificate(g, parsed.certificate, &why);
        std::cout << (ok ? "PASS" : "FAIL: " + why) << '\n';
        return ok ? 0 : 1;
    }

    // suite
    chroma::Manifest manifest = chroma::parse_manifest(
        manifest_path.empty() ? chroma::default_manifest_json() : read_file(manifest_path));
    chroma::SuiteResult result = chroma::run_suite(manifest, opt);
    std::string rendered = o.format == "json"   ? chroma::reports_to_json(result.reports)
                           : o.format == "csv" ? chroma::reports_to_csv(result.reports)
                                               : chroma::reports_to_text(result.reports);
    write_output(o.out_path, rendered);
    std::cerr << "suite '" << manifest.name << "': " << result.reports.size() << " checks, "
              << (result.all_match ? "all match" : "MISMATCHES PRESENT") << '\n';
    return result.all_match ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const chroma::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
