#include "delpezzo/lct.hpp"

#include <stdexcept>

namespace delpezzo {

namespace {

std::vector<CoeffForm> all_coefficients(const PairConfig& cfg) {
  ResolutionResult res = minimal_log_resolution(cfg);
  std::vector<CoeffForm> forms;
  for (const auto& c : cfg.curves) forms.push_back(c.coeff);
  for (const auto& e : res.exceptionals) forms.push_back(e.coeff);
  return forms;
}

}  // namespace

std::optional<Rat> lct_numeric(const PairConfig& cfg, const Rat& beta) {
  if (beta <= 0 || beta > 1) throw std::invalid_argument("lct_numeric: beta outside (0,1]");
  std::optional<Rat> best;
  for (const auto& form : all_coefficients(cfg)) {
    Rat fixed = form.c0 + form.c1 * beta;  // coefficient is fixed + lambda * scale
    Rat scale = form.c2 * beta;
    if (scale == 0) {
      if (fixed > 1)
        throw std::domain_error("lct_numeric: the lambda-free part is not log canonical");
      continue;
    }
    Rat bound = (1 - fixed) / scale;
    if (!best || bound < *best) best = bound;
  }
  return best;
}

std::optional<PiecewiseFL> lct_dynamic(const PairConfig& cfg) {
  std::optional<PiecewiseFL> best;
  for (const auto& form : all_coefficients(cfg)) {
    if (form.c2 == 0) {
      if (form.c0 > 1 || form.c0 + form.c1 > 1)
        throw std::domain_error("lct_dynamic: the lambda-free part is not log canonical");
      continue;
    }
    FL bound = FL::of(1 - form.c0, -form.c1, 0, form.c2);
    PiecewiseFL g({Piece{0, 1, bound}});
    best = best ? piecewise_min(*best, g) : g;
  }
  return best;
}

PiecewiseFL alpha_from_witnesses(const std::vector<PairConfig>& witnesses) {
  PiecewiseFL acc = PiecewiseFL::constant(1);
  for (const auto& w : witnesses) {
    auto t = lct_dynamic(w);
    if (t) acc = piecewise_min(acc, *t);
  }
  return acc;
}

}  // namespace delpezzo
