#pragma once

#include <stdexcept>
#include <string>

#include "delpezzo/resolution.hpp"

namespace delpezzo {

// Raised by the JSON readers; the message names the offending field by path,
// e.g. "curves[2].coeff.lambda_beta: expected a rational".
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Reads a pair configuration from its JSON form:
//
//   {
//     "surface": {"kind": "plane", "n": 6},
//     "curves": [
//       {"id": "T", "class": [3, 1, 1, 1, 1, 1, 1],
//        "coeff": {"lambda_beta": 1}, "smooth": false}
//     ],
//     "points": [
//       {"id": "q",
//        "branches": [{"curve": "T", "type": "quasi_homogeneous", "m": 2, "n": 3}],
//        "contacts": [{"a": 0, "b": 1, "depth": 2}]}
//     ],
//     "complete": false
//   }
//
// Surface kinds: "plane" (with "n" blown-up points) and "quadric". Coeff
// fields "const", "beta", "lambda_beta" default to 0 and accept integers or
// rational strings like "1/2". Branch types: "smooth" (default),
// "quasi_homogeneous" with "m" and "n", or an explicit "mults" array.
// Contacts index the point's branch list. The result is validated; an
// inconsistent configuration raises ConfigError with the diagnostic.
PairConfig parse_config_json(const std::string& text);

// parse_config_json applied to the contents of a file.
PairConfig load_config(const std::string& path);

// Inverse of parse_config_json, suitable for round trips.
std::string config_to_json(const PairConfig& cfg);

}  // namespace delpezzo
