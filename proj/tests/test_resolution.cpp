#include <doctest.h>

#include <stdexcept>

#include "delpezzo/resolution.hpp"

using namespace delpezzo;

namespace {

SurfaceModel plane() { return SurfaceModel::blowup_of_p2(0); }

DivisorClass plane_curve(long long d) { return DivisorClass(plane(), {d}); }

WeightedCurve curve(std::string id, DivisorClass cls, CoeffForm coeff, bool smooth = true) {
  return WeightedCurve{std::move(id), std::move(cls), std::move(coeff), smooth};
}

DeclaredPoint point(std::string id, std::vector<PointBranch> branches,
                    std::vector<Contact> contacts = {}) {
  return DeclaredPoint{std::move(id), std::move(branches), std::move(contacts)};
}

// One curve of degree d with a single singular branch at one point.
PairConfig one_branch_config(long long d, Branch b) {
  PairConfig cfg;
  cfg.surface = plane();
  cfg.curves = {curve("C", plane_curve(d), CoeffForm::scaled(1), false)};
  cfg.points = {point("p", {PointBranch{0, std::move(b)}})};
  return cfg;
}

std::vector<CoeffForm> coeffs_of(const ResolutionResult& r) {
  std::vector<CoeffForm> out;
  for (const auto& e : r.exceptionals) out.push_back(e.coeff);
  return out;
}

}  // namespace

TEST_CASE("coefficient forms are an affine line in two symbols") {
  CoeffForm b = CoeffForm::boundary();
  CHECK(b == CoeffForm{1, -1, 0});
  CHECK(b.eval(Rat(1, 3), 7) == Rat(2, 3));

  CoeffForm w = CoeffForm::scaled(Rat(1, 2));
  CHECK(w.eval(Rat(1, 2), Rat(4, 3)) == Rat(1, 3));

  CHECK(b + w == CoeffForm{1, -1, Rat(1, 2)});
  CHECK(b - b == CoeffForm{0, 0, 0});
  CHECK(Rat(2) * w == CoeffForm::scaled(1));
  CHECK(CoeffForm::constant(Rat(5, 6)).eval(1, 0) == Rat(5, 6));
}

TEST_CASE("coefficient forms print with ordered terms") {
  CHECK(to_string(CoeffForm{-1, 0, 2}) == "2\xce\xbb\xce\xb2-1");
  CHECK(to_string(CoeffForm{-4, 0, 6}) == "6\xce\xbb\xce\xb2-4");
  CHECK(to_string(CoeffForm::boundary()) == "-\xce\xb2+1");
  CHECK(to_string(CoeffForm{0, 0, Rat(7, 3)}) == "(7/3)\xce\xbb\xce\xb2");
  CHECK(to_string(CoeffForm{0, 0, 1}) == "\xce\xbb\xce\xb2");
  CHECK(to_string(CoeffForm{}) == "0");
}

TEST_CASE("configuration validation reports the first defect") {
  PairConfig cfg = one_branch_config(3, quasi_homogeneous_branch(2, 3));
  CHECK(validate_config(cfg).ok);

  SUBCASE("duplicate curve ids") {
    cfg.curves.push_back(curve("C", plane_curve(1), CoeffForm::scaled(1)));
    auto check = validate_config(cfg);
    CHECK_FALSE(check.ok);
    CHECK(check.diagnostic.find("duplicate curve id") != std::string::npos);
  }
  SUBCASE("class from the wrong lattice") {
    cfg.curves[0].cls = DivisorClass(SurfaceModel::blowup_of_p2(2), {1, 0, 0});
    auto check = validate_config(cfg);
    CHECK_FALSE(check.ok);
    CHECK(check.diagnostic.find("lattice") != std::string::npos);
  }
  SUBCASE("negative lambda weight") {
    cfg.curves[0].coeff = CoeffForm::scaled(Rat(-1, 2));
    CHECK_FALSE(validate_config(cfg).ok);
  }
  SUBCASE("singular branch on a curve marked smooth") {
    cfg.curves[0].smooth = true;
    auto check = validate_config(cfg);
    CHECK_FALSE(check.ok);
    CHECK(check.diagnostic.find("singular branch") != std::string::npos);
  }
  SUBCASE("branch pointing at a missing curve") {
    cfg.points[0].branches[0].curve = 3;
    CHECK_FALSE(validate_config(cfg).ok);
  }
  SUBCASE("invalid germ data is relayed with the point id") {
    cfg.points[0].branches[0].branch = Branch{{1, 2}};
    auto check = validate_config(cfg);
    CHECK_FALSE(check.ok);
    CHECK(check.diagnostic.find("'p'") != std::string::npos);
  }
}

TEST_CASE("declared intersections are bounded by the pairing") {
  PairConfig cfg;
  cfg.surface = plane();
  cfg.curves = {curve("A", plane_curve(1), CoeffForm::scaled(1)),
                curve("B", plane_curve(1), CoeffForm::scaled(1))};
  cfg.points = {point("p", {PointBranch{0, smooth_branch()}, PointBranch{1, smooth_branch()}},
                      {Contact{0, 1, 2}})};

  // Two lines pair to 1 but a depth-2 tangency claims 2.
  auto check = validate_config(cfg);
  CHECK_FALSE(check.ok);
  CHECK(check.diagnostic.find("pair to 1") != std::string::npos);

  cfg.points[0].contacts.clear();
  CHECK(validate_config(cfg).ok);

  // With completeness asserted, a conic meeting a line only once is a deficit.
  cfg.curves[1].cls = plane_curve(2);
  cfg.complete = true;
  check = validate_config(cfg);
  CHECK_FALSE(check.ok);
  CHECK(check.diagnostic.find("undeclared intersections") != std::string::npos);

  cfg.complete = false;
  CHECK(validate_config(cfg).ok);
}

TEST_CASE("cuspidal cubic resolves in three steps") {
  PairConfig cfg = one_branch_config(3, quasi_homogeneous_branch(2, 3));
  ResolutionResult r = minimal_log_resolution(cfg);

  CHECK(r.blow_up_count == 3);
  CHECK(coeffs_of(r) ==
        std::vector<CoeffForm>{{-1, 0, 2}, {-2, 0, 3}, {-4, 0, 6}});
  for (const auto& e : r.exceptionals) CHECK(e.point_id == "p");
  CHECK(r.exceptionals[0].depth == 0);
  CHECK(r.exceptionals[1].depth == 1);
  CHECK(r.exceptionals[2].depth == 2);

  CHECK(r.final_surface.rank() == 4);
  CHECK(r.final_surface.degree() == 6);

  // Exceptional chain: the first divisor absorbs both later centres.
  const auto& E = r.exceptional_classes;
  REQUIRE(E.size() == 3);
  CHECK(self_intersection(E[0]) == -3);
  CHECK(self_intersection(E[1]) == -2);
  CHECK(self_intersection(E[2]) == -1);
  CHECK(intersect(E[0], E[1]) == 0);
  CHECK(intersect(E[0], E[2]) == 1);
  CHECK(intersect(E[1], E[2]) == 1);

  // The strict transform of the cubic meets only the last divisor, once.
  REQUIRE(r.curve_classes.size() == 1);
  const auto& C = r.curve_classes[0];
  CHECK(C == DivisorClass(r.final_surface, {3, 2, 1, 1}));
  CHECK(intersect(C, E[0]) == 0);
  CHECK(intersect(C, E[1]) == 0);
  CHECK(intersect(C, E[2]) == 1);
}

TEST_CASE("higher cusps produce the classical coefficient chains") {
  ResolutionResult r25 =
      minimal_log_resolution(one_branch_config(5, quasi_homogeneous_branch(2, 5)));
  CHECK(r25.blow_up_count == 4);
  CHECK(coeffs_of(r25) == std::vector<CoeffForm>{
                              {-1, 0, 2}, {-2, 0, 4}, {-3, 0, 5}, {-6, 0, 10}});

  ResolutionResult r34 =
      minimal_log_resolution(one_branch_config(4, quasi_homogeneous_branch(3, 4)));
  CHECK(r34.blow_up_count == 4);
  CHECK(coeffs_of(r34).back() == CoeffForm{-6, 0, 12});

  ResolutionResult r57 =
      minimal_log_resolution(one_branch_config(7, quasi_homogeneous_branch(5, 7)));
  CHECK(r57.blow_up_count == 5);
  CHECK(coeffs_of(r57).back() == CoeffForm{-11, 0, 35});
}

TEST_CASE("nodes, tacnodes, and transverse pairs") {
  PairConfig node;
  node.surface = plane();
  node.curves = {curve("C", plane_curve(3), CoeffForm::scaled(1), false)};
  node.points = {point("p", {PointBranch{0, smooth_branch()}, PointBranch{0, smooth_branch()}})};
  ResolutionResult rn = minimal_log_resolution(node);
  CHECK(rn.blow_up_count == 1);
  CHECK(coeffs_of(rn) == std::vector<CoeffForm>{{-1, 0, 2}});

  PairConfig tac = node;
  tac.curves[0].cls = plane_curve(4);
  tac.points[0].contacts = {Contact{0, 1, 2}};
  ResolutionResult rt = minimal_log_resolution(tac);
  CHECK(rt.blow_up_count == 2);
  CHECK(coeffs_of(rt) == std::vector<CoeffForm>{{-1, 0, 2}, {-2, 0, 4}});

  PairConfig cross;
  cross.surface = plane();
  cross.curves = {curve("A", plane_curve(1), CoeffForm::scaled(1)),
                  curve("B", plane_curve(1), CoeffForm::scaled(1))};
  cross.points = {point("p", {PointBranch{0, smooth_branch()}, PointBranch{1, smooth_branch()}})};
  cross.complete = true;
  ResolutionResult rc = minimal_log_resolution(cross);
  CHECK(rc.blow_up_count == 0);
  CHECK(rc.final_surface.rank() == 1);

  PairConfig triple = cross;
  triple.complete = false;
  triple.curves.push_back(curve("D", plane_curve(1), CoeffForm::scaled(1)));
  triple.points[0].branches.push_back(PointBranch{2, smooth_branch()});
  ResolutionResult r3 = minimal_log_resolution(triple);
  CHECK(r3.blow_up_count == 1);
  CHECK(coeffs_of(r3) == std::vector<CoeffForm>{{-1, 0, 3}});
}

TEST_CASE("the engine steps deterministically and then refuses") {
  PairConfig cfg = one_branch_config(3, quasi_homogeneous_branch(2, 3));
  ResolutionEngine engine(cfg);
  CHECK_FALSE(engine.done());

  ExceptionalRecord first = engine.blow_up_once();
  CHECK(first.coeff == CoeffForm{-1, 0, 2});
  CHECK(first.depth == 0);

  ResolutionResult rest = engine.finish();
  CHECK(rest.blow_up_count == 3);

  ResolutionEngine drained(cfg);
  (void)drained.finish();
  CHECK(drained.done());
  CHECK_THROWS_AS((void)drained.blow_up_once(), std::logic_error);

  PairConfig bad = cfg;
  bad.curves[0].smooth = true;
  CHECK_THROWS_AS(ResolutionEngine{bad}, std::invalid_argument);
}

TEST_CASE("log canonicity thresholds at the cusp") {
  PairConfig cfg = one_branch_config(3, quasi_homogeneous_branch(2, 3));

  CHECK(is_log_canonical(cfg, 1, Rat(5, 6)));
  CHECK_FALSE(is_log_canonical(cfg, 1, Rat(5, 6) + Rat(1, 1000)));
  CHECK(is_log_canonical(cfg, Rat(1, 2), Rat(5, 3)));
  CHECK_FALSE(is_log_canonical(cfg, Rat(1, 2), Rat(5, 3) + Rat(1, 1000)));

  CHECK_THROWS_AS((void)is_log_canonical(cfg, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS((void)is_log_canonical(cfg, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS((void)is_log_canonical(cfg, 1, -1), std::invalid_argument);
  CHECK_THROWS_AS((void)is_log_canonical(cfg, 1, 1, "nowhere"), std::invalid_argument);
}

TEST_CASE("the point filter restricts the divisors examined") {
  // A quartic with a cusp at p and a node at q; the cusp caps lambda at 5/6
  // while the node alone allows lambda up to 1.
  PairConfig cfg;
  cfg.surface = plane();
  cfg.curves = {curve("C", plane_curve(4), CoeffForm::scaled(1), false)};
  cfg.points = {
      point("p", {PointBranch{0, quasi_homogeneous_branch(2, 3)}}),
      point("q", {PointBranch{0, smooth_branch()}, PointBranch{0, smooth_branch()}})};

  CHECK_FALSE(is_log_canonical(cfg, 1, Rat(9, 10)));
  CHECK(is_log_canonical(cfg, 1, Rat(9, 10), "q"));
  CHECK_FALSE(is_log_canonical(cfg, 1, Rat(9, 10), "p"));
  CHECK(is_log_canonical(cfg, 1, Rat(5, 6), "p"));
}
