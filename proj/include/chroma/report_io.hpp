#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chroma/checks.hpp"
#include "chroma/coloring.hpp"
#include "chroma/sudoku.hpp"

namespace chroma {

// Coloring text format: one "v c" pair per line.
std::vector<std::pair<int, int>> parse_coloring_pairs(const std::string& text);
std::string emit_coloring_pairs(const PartialColoring& c);

// Certificate JSON: {"k": int, "n": int, "S": [int], "C0": [[v,c]], "F": [[v,c]], "sn": int}.
std::string certificate_to_json(const Graph& g, const SnResult& result);
struct ParsedCertificate {
    int n = 0;
    int sn = 0;
    SudokuCertificate certificate;
};
ParsedCertificate certificate_from_json(const std::string& text);

// Report emission. CSV columns:
// instance_id,family,params,n,k,predicted,computed,verdict,millis
std::string reports_to_csv(const std::vector<CheckReport>& reports);
std::string reports_to_json(const std::vector<CheckReport>& reports);
std::string reports_to_text(const std::vector<CheckReport>& reports);

}  // namespace chroma
