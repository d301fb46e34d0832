#pragma once

#include <string>
#include <vector>

#include "chroma/families.hpp"
#include "chroma/graph.hpp"
#include "chroma/sudoku.hpp"

namespace chroma {

// Closed-form value for an instance that satisfies a known rule; emitted only
// after the structural hypotheses have been checked.
struct Prediction {
    std::string source;         // short rule tag
    long long value = 0;
    std::string applicability;  // why the rule applies
};

// One verified instance. `computed` always comes from the subset search,
// never from the predictor, so a wrong closed form is detected rather than
// reproduced.
struct CheckReport {
    std::string instance_id;
    std::string family;
    std::string params;
    int n = 0;
    int k = 0;
    long long predicted = 0;
    long long computed = 0;
    bool match = false;
    double millis = 0;
    std::string note;
};

// 3-color value for paths, even cycles, stars, complete bipartite graphs,
// bistars and coronas of connected bipartite graphs.
Prediction predicted_sn3(const FamilySpec& spec);

// Value for a complete graph of order m glued onto an edge of a path of
// order n: n+m-4 when m >= 4 (needs n >= 3), the path value when m = 3.
Prediction predicted_sn_attach_clique(int path_n, int clique_m);

CheckReport check_family_instance(const FamilySpec& spec, const SearchOptions& opt = {});
std::vector<CheckReport> check_family(const std::vector<FamilySpec>& specs, const SearchOptions& opt = {});

CheckReport check_attach_instance(int path_n, int clique_m, int u, int v, const SearchOptions& opt = {});

// Verifies, for every k in chi(G)..k_max, that the whole vertex set is forced
// exactly when k >= max_degree + 2.
CheckReport check_delta_threshold(const Graph& g, int k_max, const std::string& instance_id,
                                  const SearchOptions& opt = {});

enum class Sn3Class { FullOrder, OneLess, TwoLess, Other };
std::string to_string(Sn3Class c);

// Structural classification of a connected bipartite graph by isomorphism
// against parameterized templates; Other when no family matches.
Sn3Class classify_sn3(const Graph& g);

// Solves every connected bipartite graph up to order n_max and compares the
// solver's class (n, n-1, n-2, other) against classify_sn3.
std::vector<CheckReport> census_check(int n_max, const SearchOptions& opt = {});

// Verifies sn(H) <= sn(G,m) + m - 3 for H = attach_clique(G, u, v, m), G bipartite.
CheckReport check_supergraph_inequality(const Graph& g, int u, int v, int m,
                                        const std::string& instance_id, const SearchOptions& opt = {});

// Requires chi(G) = omega(G); adds an apex over a maximum clique and verifies
// sn(H) = sn(G, chi(G)+1).
CheckReport check_apex_equality(const Graph& g, const std::string& instance_id,
                                const SearchOptions& opt = {});

// Builds the corona/apex pair over G1 (chi >= 3) and verifies the chromatic
// numbers and sn(G3) = sn(G2, k+1) = n*k.
CheckReport check_embedding(const Graph& g1, const std::string& instance_id,
                            const SearchOptions& opt = {});

}  // namespace chroma
