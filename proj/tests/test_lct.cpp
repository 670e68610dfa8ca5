#include <doctest.h>

#include <optional>
#include <stdexcept>

#include "delpezzo/lct.hpp"

using namespace delpezzo;

namespace {

SurfaceModel plane() { return SurfaceModel::blowup_of_p2(0); }

PairConfig one_branch_config(long long d, Branch b, Rat weight = 1) {
  PairConfig cfg;
  cfg.surface = plane();
  cfg.curves = {WeightedCurve{"C", DivisorClass(plane(), {d}), CoeffForm::scaled(weight), false}};
  cfg.points = {DeclaredPoint{"p", {PointBranch{0, std::move(b)}}, {}}};
  return cfg;
}

PairConfig tacnodal_quartic() {
  PairConfig cfg;
  cfg.surface = plane();
  cfg.curves = {WeightedCurve{"C", DivisorClass(plane(), {4}), CoeffForm::scaled(1), false}};
  cfg.points = {DeclaredPoint{
      "p", {PointBranch{0, smooth_branch()}, PointBranch{0, smooth_branch()}}, {Contact{0, 1, 2}}}};
  return cfg;
}

PairConfig concurrent_lines() {
  PairConfig cfg;
  cfg.surface = plane();
  for (char c : {'A', 'B', 'D'})
    cfg.curves.push_back(
        WeightedCurve{std::string(1, c), DivisorClass(plane(), {1}), CoeffForm::scaled(1)});
  cfg.points = {DeclaredPoint{"p",
                              {PointBranch{0, smooth_branch()}, PointBranch{1, smooth_branch()},
                               PointBranch{2, smooth_branch()}},
                              {}}};
  return cfg;
}

// Independent bracket: the largest multiple of 1/1000 that keeps the pair log
// canonical, found by bisection on that grid.
Rat grid_threshold(const PairConfig& cfg, const Rat& beta) {
  long long lo = 0, hi = 3000;
  REQUIRE(is_log_canonical(cfg, beta, Rat(lo, 1000)));
  REQUIRE_FALSE(is_log_canonical(cfg, beta, Rat(hi, 1000)));
  while (hi - lo > 1) {
    long long mid = (lo + hi) / 2;
    (is_log_canonical(cfg, beta, Rat(mid, 1000)) ? lo : hi) = mid;
  }
  return Rat(lo, 1000);
}

void check_threshold(const PairConfig& cfg, const Rat& beta, const Rat& expected) {
  auto t = lct_numeric(cfg, beta);
  REQUIRE(t.has_value());
  CHECK(*t == expected);

  // The grid bracket floors the threshold to the nearest 1/1000 below.
  Rat floored = grid_threshold(cfg, beta);
  CHECK(floored <= *t);
  CHECK(*t < floored + Rat(1, 1000));

  // The supremum itself is attained.
  CHECK(is_log_canonical(cfg, beta, *t));
  CHECK_FALSE(is_log_canonical(cfg, beta, *t + Rat(1, 1000)));
}

PiecewiseFL whole(const FL& f) { return PiecewiseFL({Piece{0, 1, f}}); }

}  // namespace

TEST_CASE("thresholds of the classical plane singularities") {
  check_threshold(one_branch_config(3, quasi_homogeneous_branch(2, 3)), 1, Rat(5, 6));
  check_threshold(one_branch_config(3, quasi_homogeneous_branch(2, 3)), Rat(1, 2), Rat(5, 3));
  check_threshold(tacnodal_quartic(), 1, Rat(3, 4));
  check_threshold(concurrent_lines(), 1, Rat(2, 3));
  check_threshold(one_branch_config(5, quasi_homogeneous_branch(2, 5)), 1, Rat(7, 10));
  check_threshold(one_branch_config(7, quasi_homogeneous_branch(5, 7)), 1, Rat(12, 35));
}

TEST_CASE("thresholds scale fractionally linearly in beta") {
  PairConfig cusp = one_branch_config(3, quasi_homogeneous_branch(2, 3));
  auto f = lct_dynamic(cusp);
  REQUIRE(f.has_value());
  CHECK(*f == whole(FL::of(5, 0, 0, 6)));

  for (int k = 1; k <= 10; ++k) {
    Rat beta(k, 10);
    CHECK(f->eval(beta) == lct_numeric(cusp, beta));
  }

  auto tac = lct_dynamic(tacnodal_quartic());
  REQUIRE(tac.has_value());
  CHECK(*tac == whole(FL::of(3, 0, 0, 4)));

  auto lines = lct_dynamic(concurrent_lines());
  REQUIRE(lines.has_value());
  CHECK(*lines == whole(FL::of(2, 0, 0, 3)));
}

TEST_CASE("unbounded and invalid inputs") {
  PairConfig boundary_only;
  boundary_only.surface = plane();
  boundary_only.curves = {
      WeightedCurve{"B", DivisorClass(plane(), {3}), CoeffForm::boundary()}};
  CHECK(lct_numeric(boundary_only) == std::nullopt);
  CHECK(lct_dynamic(boundary_only) == std::nullopt);

  PairConfig cusp = one_branch_config(3, quasi_homogeneous_branch(2, 3));
  CHECK_THROWS_AS((void)lct_numeric(cusp, 0), std::invalid_argument);
  CHECK_THROWS_AS((void)lct_numeric(cusp, 2), std::invalid_argument);
  CHECK_THROWS_AS((void)lct_numeric(cusp, Rat(-1, 2)), std::invalid_argument);

  PairConfig heavy;
  heavy.surface = plane();
  heavy.curves = {
      WeightedCurve{"H", DivisorClass(plane(), {1}), CoeffForm::constant(Rat(3, 2))}};
  CHECK_THROWS_AS((void)lct_numeric(heavy), std::domain_error);
  CHECK_THROWS_AS((void)lct_dynamic(heavy), std::domain_error);

  // A weight that only exceeds one near beta = 1 still poisons the whole
  // domain for the dynamic threshold, while small beta stays fine pointwise.
  PairConfig tilted;
  tilted.surface = plane();
  tilted.curves = {
      WeightedCurve{"T", DivisorClass(plane(), {1}), CoeffForm{Rat(1, 2), Rat(3, 4), 0}}};
  CHECK(lct_numeric(tilted, Rat(1, 4)) == std::nullopt);
  CHECK_THROWS_AS((void)lct_numeric(tilted, 1), std::domain_error);
  CHECK_THROWS_AS((void)lct_dynamic(tilted), std::domain_error);
}

TEST_CASE("alpha assembly caps at one and folds minima") {
  CHECK(alpha_from_witnesses({}) == PiecewiseFL::constant(1));

  PairConfig cusp = one_branch_config(3, quasi_homogeneous_branch(2, 3));
  PiecewiseFL a = alpha_from_witnesses({cusp});
  CHECK(a == PiecewiseFL::from_breaks({{Rat(5, 6), FL::constant(1)}, {1, FL::of(5, 0, 0, 6)}}));
  CHECK(a.eval(1) == Rat(5, 6));
  CHECK(a.eval(Rat(1, 2)) == 1);

  PiecewiseFL b = alpha_from_witnesses({cusp, concurrent_lines()});
  CHECK(b == PiecewiseFL::from_breaks({{Rat(2, 3), FL::constant(1)}, {1, FL::of(2, 0, 0, 3)}}));

  // A lambda-free witness contributes nothing.
  PairConfig boundary_only;
  boundary_only.surface = plane();
  boundary_only.curves = {
      WeightedCurve{"B", DivisorClass(plane(), {3}), CoeffForm::boundary()}};
  CHECK(alpha_from_witnesses({boundary_only, cusp}) == a);
}
