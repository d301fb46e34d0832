#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "chroma/graph.hpp"

namespace chroma {

// Standard families. Generators document their labeling so fixtures map to
// vertex indices deterministically.

Graph build_path(int n);                            // vertices 0..n-1, edges {i,i+1}
Graph build_cycle(int n);                           // path edges plus {n-1,0}; n >= 3
Graph build_complete_bipartite(int m, int n);       // parts {0..m-1} and {m..m+n-1}
Graph build_star(int leaves);                       // K_{1,leaves}: hub 0, leaves 1..leaves
Graph build_bistar(int m, int n);                   // centers u=0, v=1; pendants 2..m+1 on u, m+2..m+n+1 on v

// Corona with l pendant copies: base keeps labels 0..n-1, the j-th pendant of
// base vertex i is n + i*l + j.
Graph corona(const Graph& base, int l);

// Glue a complete graph of order m onto the existing edge {u,v}: the m-2 new
// vertices n..n+m-3 together with u,v become pairwise adjacent.
Graph attach_clique(const Graph& base, int u, int v, int m);

// One new vertex n, adjacent to exactly the given set (verified pairwise adjacent).
Graph add_apex(const Graph& base, const std::vector<int>& clique);

// For k = chi(base) >= 3: first graph is corona(base, k), second adds one more
// vertex adjacent to all original base vertices.
std::pair<Graph, Graph> embed_kplus1(const Graph& base, int k);

// Tagged family description; used by the CLI grammar and by the closed-form
// predictors.
struct PathSpec { int n = 0; };
struct CycleSpec { int n = 0; };
struct StarSpec { int leaves = 0; };
struct CompleteBipartiteSpec { int m = 0, n = 0; };
struct BistarSpec { int m = 0, n = 0; };
struct CoronaSpec { int copies = 0; Graph base; std::string base_desc; };
struct AttachCliqueSpec { int u = 0, v = 0, m = 0; Graph base; std::string base_desc; };
struct ApexSpec { std::vector<int> clique; Graph base; std::string base_desc; };
struct EmbedSpec { int k = 0; Graph base; std::string base_desc; };

using FamilySpec = std::variant<PathSpec, CycleSpec, StarSpec, CompleteBipartiteSpec,
                                BistarSpec, CoronaSpec, AttachCliqueSpec, ApexSpec, EmbedSpec>;

Graph build_graph(const FamilySpec& spec);

// Canonical spec string; parse(describe(s)) round-trips.
std::string describe(const FamilySpec& spec);

// Grammar:
//   path:N | cycle:N | star:N | kbip:M,N | bistar:M,N
//   corona:L:<base>    apex:V1,V2,..:<base>    embed:K:<base>
//   attach:<base>@U-V:KM
FamilySpec parse_family_spec(const std::string& text);

}  // namespace chroma
