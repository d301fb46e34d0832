#include "chroma/manifest.hpp"

namespace chroma {

// Mirrors manifests/acceptance.json; a test keeps the two in sync.
const std::string& default_manifest_json() {
    static const std::string text = R"JSON({
  "name": "acceptance-v1",
  "family_checks": [
    {"spec": "path:2"}, {"spec": "path:3"}, {"spec": "path:4"}, {"spec": "path:5"},
    {"spec": "path:6"}, {"spec": "path:7"}, {"spec": "path:8"}, {"spec": "path:9"},
    {"spec": "path:10"},
    {"spec": "cycle:4"}, {"spec": "cycle:6"}, {"spec": "cycle:8"},
    {"spec": "star:2"}, {"spec": "star:3"}, {"spec": "star:4"}, {"spec": "star:5"}, {"spec": "star:6"},
    {"spec": "kbip:2,2"}, {"spec": "kbip:2,3"}, {"spec": "kbip:2,4"},
    {"spec": "kbip:3,3"}, {"spec": "kbip:3,4"}, {"spec": "kbip:4,4"},
    {"spec": "bistar:1,1"}, {"spec": "bistar:1,2"}, {"spec": "bistar:1,3"},
    {"spec": "bistar:2,2"}, {"spec": "bistar:2,3"}, {"spec": "bistar:3,3"},
    {"spec": "corona:1:path:1"}, {"spec": "corona:1:path:2"}, {"spec": "corona:1:path:3"},
    {"spec": "corona:1:path:4"}, {"spec": "corona:1:star:3"}, {"spec": "corona:1:cycle:4"},
    {"spec": "corona:2:path:1"}, {"spec": "corona:2:path:2"}, {"spec": "corona:2:path:3"},
    {"spec": "corona:2:path:4"}, {"spec": "corona:2:star:3"}, {"spec": "corona:2:cycle:4"}
  ],
  "attach_checks": [
    {"path_n": 3, "clique_m": 4, "u": 1, "v": 2},
    {"path_n": 3, "clique_m": 5, "u": 1, "v": 2},
    {"path_n": 4, "clique_m": 4, "u": 1, "v": 2},
    {"path_n": 4, "clique_m": 5, "u": 1, "v": 2},
    {"path_n": 5, "clique_m": 4, "u": 2, "v": 3},
    {"path_n": 5, "clique_m": 5, "u": 2, "v": 3},
    {"path_n": 6, "clique_m": 4, "u": 2, "v": 3},
    {"path_n": 6, "clique_m": 5, "u": 2, "v": 3},
    {"path_n": 6, "clique_m": 3, "u": 2, "v": 3},
    {"path_n": 6, "clique_m": 4, "u": 0, "v": 1}
  ],
  "delta": {
    "all_connected_up_to": 5,
    "k_offset": 3,
    "graph6_sample": [
      "Esa?", "Eya?", "E]q?", "Eza?", "ExQ?",
      "ELq?", "EJq?", "E~q?", "EXr?", "E|r?",
      "Evy?", "Eny?", "EFj?", "Enj?", "Evz?",
      "Evz_", "E~}?", "E|N?", "E~N?", "E^~?"
    ]
  },
  "census": {"n_max": 7},
  "inequality_checks": [
    {"base": "path:6", "u": 2, "v": 3, "m": 5},
    {"base": "path:5", "u": 2, "v": 3, "m": 4},
    {"base": "cycle:4", "u": 0, "v": 1, "m": 4},
    {"base": "path:2", "u": 0, "v": 1, "m": 3},
    {"base": "star:3", "u": 0, "v": 1, "m": 3},
    {"base": "kbip:2,3", "u": 0, "v": 2, "m": 4}
  ],
  "apex_checks": [
    {"base": "path:4"}, {"base": "cycle:4"}, {"base": "kbip:2,3"},
    {"base": "bistar:2,2"}, {"base": "cycle:3"}
  ],
  "embedding_checks": [
    {"base": "cycle:3"}
  ]
}
)JSON";
    return text;
}

}  // namespace chroma
