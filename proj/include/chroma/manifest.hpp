#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chroma/checks.hpp"
#include "chroma/sudoku.hpp"

namespace chroma {

// Version-controlled description of a suite run, so results reproduce
// bit-for-bit. `override_predicted` exists for harness self-tests: it
// replaces the closed-form value with a deliberately chosen one.
struct FamilyCheckEntry {
    std::string spec;
    std::optional<long long> override_predicted;
};
struct AttachCheckEntry {
    int path_n = 0;
    int clique_m = 0;
    int u = 0;
    int v = 0;
};
struct DeltaSection {
    int all_connected_up_to = 0;   // 0 disables
    int k_offset = 3;              // check k up to max_degree + k_offset
    std::vector<std::string> graph6_sample;
};
struct InequalityCheckEntry {
    std::string base;
    int u = 0;
    int v = 0;
    int m = 0;
};

struct Manifest {
    std::string name;
    std::vector<FamilyCheckEntry> family_checks;
    std::vector<AttachCheckEntry> attach_checks;
    DeltaSection delta;
    int census_n_max = 0;          // 0 disables
    std::vector<InequalityCheckEntry> inequality_checks;
    std::vector<std::string> apex_checks;       // base family specs
    std::vector<std::string> embedding_checks;  // base family specs
};

Manifest parse_manifest(const std::string& json_text);

// The manifest shipped with the project (mirrored in manifests/acceptance.json).
const std::string& default_manifest_json();

struct SuiteResult {
    std::vector<CheckReport> reports;
    bool all_match = true;
};

SuiteResult run_suite(const Manifest& m, const SearchOptions& opt = {});

}  // namespace chroma
