#pragma once

#include <optional>
#include <string>
#include <vector>

#include "delpezzo/lct.hpp"
#include "delpezzo/piecewise.hpp"
#include "delpezzo/rational.hpp"
#include "delpezzo/resolution.hpp"

namespace delpezzo {

// One global-threshold case: the worst configurations on the surface and the
// resulting value of min(1, lct at beta = 1).
struct GlctRow {
  int degree = 0;
  std::string variant;  // empty when the degree has a single case
  std::vector<PairConfig> configs;
  Rat expected;
};

// One dynamic alpha case: witness configurations, the closed-form function
// they produce, and the interval where it stays above 2/3. `kee_listed`
// preserves the catalogued interval verbatim so disagreements with the
// computed one are visible in reports.
struct AlphaRow {
  int degree = 0;
  std::string surface_variant;  // "", "f1", "quadric"
  std::string case_name;
  std::vector<PairConfig> witnesses;
  PiecewiseFL stated;
  std::string kee_listed;
  KeeInterval kee_expected;
  std::string glct_variant;  // matching GlctRow variant, for cross checks
  std::string note;
};

// Single-point threshold with an exact closed form, uncapped.
struct LocalLemma {
  std::string name;
  PairConfig config;
  FL expected;
};

// Configuration whose capped threshold must dominate the stated function;
// `exact` additionally pins the capped threshold itself.
struct ConfigLemma {
  std::string name;
  PairConfig config;
  PiecewiseFL threshold;
  std::optional<PiecewiseFL> exact;
};

const std::vector<GlctRow>& glct_table();
const std::vector<AlphaRow>& alpha_table();
const std::vector<LocalLemma>& local_lemmas();
const std::vector<ConfigLemma>& config_lemmas();

// min(1, min over the configs of lct_numeric at beta = 1); 1 when nothing
// carries a lambda weight.
Rat glct_value(const std::vector<PairConfig>& configs);

// min(1, lct_dynamic); the constant 1 when the threshold is unbounded.
PiecewiseFL capped_dynamic_threshold(const PairConfig& cfg);

const GlctRow* find_glct(int degree, const std::string& variant);
const AlphaRow* find_alpha(int degree, const std::string& case_name);
std::vector<const AlphaRow*> alpha_rows(int degree);

struct CheckReport {
  bool ok = true;
  int checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> kee_notes;  // listed-vs-computed interval mismatches
};

// Recomputes every table entry and compares against the stored values.
CheckReport check_catalog();

std::string emit_tables_markdown();
std::string emit_tables_json();

}  // namespace delpezzo
