#pragma once

#include <string>
#include <vector>

#include "chroma/coloring.hpp"
#include "chroma/graph.hpp"

namespace chroma {

// Machine-checkable witness: the initial coloring on S extends to exactly one
// proper k-coloring, namely `full`.
struct SudokuCertificate {
    int k = 0;
    std::vector<int> witness;   // S, ascending
    PartialColoring initial;    // colored exactly on S
    PartialColoring full;       // the unique extension
};

// All counters are schedule-independent: every size class below and including
// the witness class is enumerated completely, and colorings are counted per
// subset up to that subset's first witness.
struct SearchStats {
    long long subsets_examined = 0;
    long long colorings_examined = 0;
    double elapsed_ms = 0;
};

struct SearchOptions {
    int limit = 14;   // bound on non-forced vertices the subset search may range over
    int threads = 1;
};

struct SnResult {
    int sn = 0;
    SudokuCertificate certificate;
    SearchStats stats;
    bool disconnected_input = false;
};

// True iff the proper initial coloring has exactly one proper k-extension.
bool is_sudoku_coloring(const Graph& g, const PartialColoring& initial);

// Vertices of degree <= k-2: any witness set must contain all of them, since
// an uncolored one keeps at least two feasible colors in any extension.
std::vector<int> required_vertices(const Graph& g, int k);

// Edges whose endpoints both have degree <= k-1: any witness set must meet
// each of them, or the two endpoints admit at least two completions.
std::vector<Edge> constraint_edges(const Graph& g, int k);

// |required| plus an exact minimum vertex cover of the constraint edges not
// already met by required vertices. Never exceeds the true value.
int lower_bound(const Graph& g, int k);

// Exact sn(G,k) with the lexicographically minimal certificate: smallest |S|,
// then smallest sorted S, then smallest canonical coloring (first vertex gets
// color 1, each new color is the smallest unused index).
SnResult sudoku_number(const Graph& g, int k, const SearchOptions& opt = {});

// sudoku_number at k = chromatic_number(g).
SnResult sudoku_number_chromatic(const Graph& g, const SearchOptions& opt = {});

// Independent re-check of a certificate through the public counting API.
bool verify_certificate(const Graph& g, const SudokuCertificate& cert, std::string* why = nullptr);

}  // namespace chroma
