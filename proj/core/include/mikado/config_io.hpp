#pragma once

#include "mikado/biclosed.hpp"
#include "mikado/coxeter.hpp"
#include "mikado/verify.hpp"

#include <json.hpp>

#include <string>

namespace mikado {

// Reads and parses a JSON file; wraps I/O and syntax problems in
// ConfigError so the CLI reports them uniformly.
nlohmann::json load_json_file(const std::string& path);

// {"name": ..., "generators": [...], "coxeter_matrix": [[...]],
//  "cartan": [[...]] (optional)}; bond label infinity is 0 or "inf".
CoxeterSystem system_from_json(const nlohmann::json& j);

// {"type": "inversion", "element": "s t"}
// {"type": "complement", "of": {...}}
// {"type": "halfspace", "covector": [0, 1, -2]}      (entries also "p/q")
// {"type": "explicit", "roots": [[1,0]], "certified_depth": 5}
// plus the shorthand strings "empty" and "all".
BiclosedSet biclosed_from_json(const CoxeterSystem& sys,
                               const nlohmann::json& j);

// {"radius": 3, "jobs": 1,
//  "biclosed": ["inversions", "complements", {...set...}],
//  "statements": ["threeparam", {"id": "doubletwist", "limit": 100}]}
SweepSpec sweep_from_json(const CoxeterSystem& sys, const nlohmann::json& j);

}  // namespace mikado
