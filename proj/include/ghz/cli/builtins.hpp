#pragma once

// Generated from scenarios/*.json; keep the two in sync.

#include <map>
#include <string>

namespace ghz::cli {

inline const std::map<std::string, std::string>& builtin_scenarios() {
  static const std::map<std::string, std::string> table = {
      {"w25-imperfect", R"json({
  "name": "w25-imperfect",
  "field": {"kind": "Fp(l)", "p": 2},
  "rank": 1,
  "tail_rays": [],
  "curve": "A1",
  "support": [
    {"point": "t", "vertices": [["1/5"]]},
    {"point": "t^2+l", "vertices": [["0"], ["1/5"]]}
  ],
  "coloring": {"y0": "t", "vertices": {"t": ["1/5"], "t^2+l": ["0"]}},
  "family": {"e": [1], "s": [2], "lambda": ["1"]},
  "bounds": {"weight_box": 10, "e_box": 1, "s_max": 2, "lambda_sample": ["1"]},
  "trust": true,
  "elements": [
    {"weight": [0], "coeff": "t"},
    {"weight": [1], "coeff": "1"},
    {"weight": [5], "coeff": "t^-1"},
    {"weight": [-5], "coeff": "t*(t^2+l)"}
  ],
  "default_command": "verify"
}
)json"},
      {"w25-rational", R"json({
  "name": "w25-rational",
  "field": {"kind": "Fp", "p": 2},
  "rank": 1,
  "tail_rays": [],
  "curve": "A1",
  "support": [
    {"point": "t", "vertices": [["1/5"]]},
    {"point": "t+1", "vertices": [["0"], ["1/5"]]}
  ],
  "coloring": {"y0": "t", "vertices": {"t": ["1/5"], "t+1": ["0"]}},
  "family": {"e": [1], "s": [2], "lambda": ["1"]},
  "bounds": {"weight_box": 10, "e_box": 1, "s_max": 2},
  "elements": [
    {"weight": [0], "coeff": "t"},
    {"weight": [1], "coeff": "1"},
    {"weight": [5], "coeff": "t^-1"},
    {"weight": [-5], "coeff": "t*(t+1)"}
  ],
  "default_command": "coherent"
}
)json"},
      {"char2-ramified", R"json({
  "name": "char2-ramified",
  "field": {"kind": "Fp", "p": 2},
  "rank": 2,
  "tail_rays": [[1, 0], [0, 1]],
  "curve": "A1",
  "support": [
    {"point": "t", "vertices": [["1/2", "0"]]},
    {"point": "t - 1", "vertices": [["1/2", "0"], ["0", "1"]]}
  ],
  "coloring": {"y0": "t", "vertices": {"t": ["1/2", "0"], "t - 1": ["0", "1"]}},
  "family": {"e": [1, 0], "s": [0], "lambda": ["1"]},
  "bounds": {"weight_box": 4, "e_box": 1, "s_max": 1},
  "elements": [
    {"weight": [0, 0], "coeff": "t"},
    {"weight": [1, 0], "coeff": "1"},
    {"weight": [0, 1], "coeff": "1"},
    {"weight": [1, 1], "coeff": "1"},
    {"weight": [2, 1], "coeff": "t^-1*(t-1)^-1"}
  ],
  "default_command": "verify"
}
)json"},
      {"toric-demo", R"json({
  "name": "toric-demo",
  "field": {"kind": "Q"},
  "rank": 2,
  "tail_rays": [[1, 0], [0, 1]],
  "curve": "A1",
  "support": [],
  "bounds": {"weight_box": 3, "e_box": 2},
  "toric": {"root": [-1, 2], "ray": [1, 0]},
  "default_command": "verify"
}
)json"},
      {"half-point-surface", R"json({
  "name": "half-point-surface",
  "field": {"kind": "Q"},
  "rank": 1,
  "tail_rays": [[1]],
  "curve": "A1",
  "support": [{"point": "t", "vertices": [["1/2"]]}],
  "default_command": "toric-check"
}
)json"},
      {"p1-demo", R"json({
  "name": "p1-demo",
  "field": {"kind": "Q"},
  "rank": 1,
  "tail_rays": [[1]],
  "curve": "P1",
  "support": [
    {"point": "t", "vertices": [["1/2"]]},
    {"point": "infinity", "vertices": [["0"]]}
  ],
  "coloring": {"y0": "t", "y_infinity": "infinity", "vertices": {"t": ["1/2"]}},
  "family": {"e": [-1], "s": [1], "lambda": ["1"]},
  "bounds": {"weight_box": 6, "e_box": 2},
  "elements": [
    {"weight": [1], "coeff": "1"},
    {"weight": [2], "coeff": "1"},
    {"weight": [2], "coeff": "t^-1"}
  ],
  "default_command": "verify"
}
)json"},
  };
  return table;
}

}  // namespace ghz::cli
