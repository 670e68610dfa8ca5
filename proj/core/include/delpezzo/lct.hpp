#pragma once

#include <optional>
#include <vector>

#include "delpezzo/piecewise.hpp"
#include "delpezzo/rational.hpp"
#include "delpezzo/resolution.hpp"

namespace delpezzo {

// Largest lambda with the scaled configuration log canonical at the given
// beta; the supremum is attained (the condition is a closed one). Returns
// nullopt when no divisor carries a lambda weight, so every lambda works.
// Throws std::domain_error when the lambda-free part already fails.
std::optional<Rat> lct_numeric(const PairConfig& cfg, const Rat& beta = 1);

// The same threshold as an exact function of beta on (0, 1], uncapped.
std::optional<PiecewiseFL> lct_dynamic(const PairConfig& cfg);

// min(1, min over the witnesses of lct_dynamic); an empty list gives the
// constant 1.
PiecewiseFL alpha_from_witnesses(const std::vector<PairConfig>& witnesses);

}  // namespace delpezzo
