#include "delpezzo/catalog.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace delpezzo {

namespace {

using Curves = std::vector<WeightedCurve>;
using Points = std::vector<DeclaredPoint>;

SurfaceModel plane(int n) { return SurfaceModel::blowup_of_p2(n); }

DivisorClass dc(const SurfaceModel& s, std::vector<long long> v) {
  return DivisorClass(s, std::move(v));
}

DivisorClass anticanonical(const SurfaceModel& s) { return -canonical_class(s); }

WeightedCurve wc(std::string id, DivisorClass cls, CoeffForm coeff, bool smooth = true) {
  return WeightedCurve{std::move(id), std::move(cls), coeff, smooth};
}

WeightedCurve boundary_curve(const SurfaceModel& s) {
  return wc("C", anticanonical(s), CoeffForm::boundary());
}

CoeffForm w(long long num, long long den = 1) { return CoeffForm::scaled(Rat(num, den)); }

PointBranch sb(int curve) { return PointBranch{curve, smooth_branch()}; }
PointBranch cusp_branch(int curve) { return PointBranch{curve, quasi_homogeneous_branch(2, 3)}; }

Contact ct(int a, int b, int depth) { return Contact{a, b, depth}; }

DeclaredPoint pt(std::string id, std::vector<PointBranch> branches,
                 std::vector<Contact> contacts = {}) {
  return DeclaredPoint{std::move(id), std::move(branches), std::move(contacts)};
}

PairConfig make(SurfaceModel s, Curves curves, Points points, bool complete) {
  return PairConfig{std::move(s), std::move(curves), std::move(points), complete};
}

// ---- global threshold table -------------------------------------------

std::vector<GlctRow> build_glct() {
  std::vector<GlctRow> rows;

  {
    auto s = plane(0);
    rows.push_back({9, "", {make(s, {wc("L", dc(s, {1}), w(3))}, {}, true)}, Rat(1, 3)});
  }
  {
    auto s = plane(1);
    Curves cs{wc("F", dc(s, {1, 1}), w(3)), wc("E", exceptional_class(s, 1), w(2))};
    rows.push_back(
        {8, "f1", {make(s, cs, {pt("p", {sb(0), sb(1)})}, true)}, Rat(1, 3)});
  }
  {
    auto s = SurfaceModel::quadric();
    Curves cs{wc("L1", dc(s, {1, 0}), w(2)), wc("L2", dc(s, {0, 1}), w(2))};
    rows.push_back(
        {8, "quadric", {make(s, cs, {pt("p", {sb(0), sb(1)})}, true)}, Rat(1, 2)});
  }
  {
    auto s = plane(2);
    Curves cs{wc("L", dc(s, {1, 1, 1}), w(3)), wc("E1", exceptional_class(s, 1), w(2)),
              wc("E2", exceptional_class(s, 2), w(2))};
    Points ps{pt("p1", {sb(0), sb(1)}), pt("p2", {sb(0), sb(2)})};
    rows.push_back({7, "", {make(s, cs, ps, true)}, Rat(1, 3)});
  }
  {
    auto s = plane(3);
    Curves cs{wc("E1", exceptional_class(s, 1), w(2)), wc("L12", dc(s, {1, 1, 1, 0}), w(2)),
              wc("L13", dc(s, {1, 1, 0, 1}), w(1)), wc("E2", exceptional_class(s, 2), w(1))};
    rows.push_back({6, "", {make(s, cs, {pt("p", {sb(0), sb(1)})}, false)}, Rat(1, 2)});
  }
  {
    auto s = plane(4);
    Curves cs{wc("E1", exceptional_class(s, 1), w(2)),
              wc("L12", dc(s, {1, 1, 1, 0, 0}), w(1)),
              wc("L13", dc(s, {1, 1, 0, 1, 0}), w(1)),
              wc("L14", dc(s, {1, 1, 0, 0, 1}), w(1))};
    rows.push_back({5, "", {make(s, cs, {}, false)}, Rat(1, 2)});
  }
  {
    auto s = plane(5);
    Curves cs{wc("E1", exceptional_class(s, 1), w(1)),
              wc("L12", dc(s, {1, 1, 1, 0, 0, 0}), w(1)),
              wc("A2", dc(s, {2, 1, 0, 1, 1, 1}), w(1))};
    rows.push_back(
        {4, "", {make(s, cs, {pt("p", {sb(0), sb(1), sb(2)})}, true)}, Rat(2, 3)});
  }
  {
    auto s = plane(6);
    Curves cs{wc("E1", exceptional_class(s, 1), w(1)),
              wc("L12", dc(s, {1, 1, 1, 0, 0, 0, 0}), w(1)),
              wc("C2", dc(s, {2, 1, 0, 1, 1, 1, 1}), w(1))};
    rows.push_back(
        {3, "eckardt", {make(s, cs, {pt("p", {sb(0), sb(1), sb(2)})}, true)}, Rat(2, 3)});

    Curves ct2{wc("L12", dc(s, {1, 1, 1, 0, 0, 0, 0}), w(1)),
               wc("Q", dc(s, {2, 0, 0, 1, 1, 1, 1}), w(1))};
    rows.push_back({3,
                    "no-eckardt",
                    {make(s, ct2, {pt("p", {sb(0), sb(1)}, {ct(0, 1, 2)})}, true)},
                    Rat(3, 4)});
  }
  {
    auto s = plane(7);
    Curves cs{wc("E1", exceptional_class(s, 1), w(1)),
              wc("M", dc(s, {3, 2, 1, 1, 1, 1, 1, 1}), w(1))};
    rows.push_back({2,
                    "tacnodal",
                    {make(s, cs, {pt("p", {sb(0), sb(1)}, {ct(0, 1, 2)})}, true)},
                    Rat(3, 4)});

    Curves cusp_cs{wc("T", dc(s, {3, 1, 1, 1, 1, 1, 1, 1}), w(1), false)};
    rows.push_back(
        {2, "no-tacnode", {make(s, cusp_cs, {pt("p", {cusp_branch(0)})}, true)}, Rat(5, 6)});
  }
  {
    auto s = plane(8);
    Curves cs{wc("T", dc(s, {3, 1, 1, 1, 1, 1, 1, 1, 1}), w(1), false)};
    rows.push_back(
        {1, "cusp", {make(s, cs, {pt("p", {cusp_branch(0)})}, true)}, Rat(5, 6)});
    rows.push_back({1, "no-cusp", {make(s, {}, {}, true)}, Rat(1)});
  }

  return rows;
}

// ---- alpha table -------------------------------------------------------

std::vector<AlphaRow> build_alpha() {
  std::vector<AlphaRow> rows;
  const FL one = FL::constant(1);

  {  // degree 9
    auto s = plane(0);
    PairConfig self = make(s, {wc("C", dc(s, {3}), CoeffForm{1, -1, 1})}, {}, true);
    PairConfig flex = make(s, {boundary_curve(s), wc("L", dc(s, {1}), w(3))},
                           {pt("p", {sb(0), sb(1)}, {ct(0, 1, 3)})}, true);
    rows.push_back({9,
                    "",
                    "smooth",
                    {self, flex},
                    PiecewiseFL::from_breaks({{Rat(1, 6), one},
                                              {Rat(2, 3), FL::of(1, 3, 0, 9)},
                                              {1, FL::of(1, 0, 0, 3)}}),
                    "(0,1/3)",
                    {Rat(1, 3), false},
                    "",
                    ""});
  }
  {  // degree 8, quadric
    auto s = SurfaceModel::quadric();
    Curves cs{boundary_curve(s), wc("F1", dc(s, {1, 0}), w(2)), wc("F2", dc(s, {0, 1}), w(2))};
    PairConfig c = make(s, cs, {pt("p", {sb(0), sb(1), sb(2)}, {ct(0, 1, 2)})}, false);
    rows.push_back({8,
                    "quadric",
                    "smooth",
                    {c},
                    PiecewiseFL::from_breaks({{Rat(1, 4), one}, {1, FL::of(1, 2, 0, 6)}}),
                    "(0,1/2)",
                    {Rat(1, 2), false},
                    "quadric",
                    ""});
  }
  {  // degree 8, F1
    auto s = plane(1);
    Curves cs{boundary_curve(s), wc("F", dc(s, {1, 1}), w(3)),
              wc("E", exceptional_class(s, 1), w(2))};
    PairConfig special = make(s, cs, {pt("r", {sb(0), sb(1), sb(2)}, {ct(0, 1, 2)})}, true);
    rows.push_back({8,
                    "f1",
                    "special",
                    {special},
                    PiecewiseFL::from_breaks({{Rat(1, 6), one},
                                              {Rat(5, 6), FL::of(1, 2, 0, 8)},
                                              {1, FL::of(1, 0, 0, 3)}}),
                    "(0,3/10)",
                    {Rat(3, 10), false},
                    "f1",
                    ""});

    PairConfig generic = make(s, cs, {pt("r", {sb(0), sb(1), sb(2)})}, false);
    rows.push_back({8,
                    "f1",
                    "generic",
                    {generic},
                    PiecewiseFL::from_breaks({{Rat(1, 4), one},
                                              {Rat(2, 3), FL::of(1, 1, 0, 5)},
                                              {1, FL::of(1, 0, 0, 3)}}),
                    "(0,3/7)",
                    {Rat(3, 7), false},
                    "f1",
                    ""});
  }
  {  // degree 7
    auto s = plane(2);
    Curves base{boundary_curve(s), wc("L", dc(s, {1, 1, 1}), w(3)),
                wc("E1", exceptional_class(s, 1), w(2)),
                wc("E2", exceptional_class(s, 2), w(2))};
    PairConfig generic = make(s, base, {}, false);
    rows.push_back({7,
                    "",
                    "generic",
                    {generic},
                    PiecewiseFL::from_breaks({{Rat(1, 3), one}, {1, FL::of(1, 0, 0, 3)}}),
                    "(0,1/2)",
                    {Rat(1, 2), false},
                    "",
                    ""});

    PairConfig pe = make(s, base, {pt("p", {sb(0), sb(1), sb(2)})}, false);
    rows.push_back({7,
                    "",
                    "pseudo-eckardt",
                    {pe},
                    PiecewiseFL::from_breaks({{Rat(1, 4), one},
                                              {Rat(2, 3), FL::of(1, 1, 0, 5)},
                                              {1, FL::of(1, 0, 0, 3)}}),
                    "(0,3/10)",
                    {Rat(3, 7), false},
                    "",
                    ""});

    Curves tangent_cs{boundary_curve(s), wc("L1", dc(s, {1, 1, 0}), w(2)),
                      wc("E1", exceptional_class(s, 1), w(2)), wc("L", dc(s, {1, 1, 1}), w(1))};
    PairConfig tangent =
        make(s, tangent_cs, {pt("r1", {sb(0), sb(1), sb(2)}, {ct(0, 1, 2)})}, false);
    rows.push_back({7,
                    "",
                    "tangent-line",
                    {generic, tangent},
                    PiecewiseFL::from_breaks({{Rat(1, 4), one},
                                              {Rat(1, 2), FL::of(1, 2, 0, 6)},
                                              {1, FL::of(1, 0, 0, 3)}}),
                    "(0,1/2)",
                    {Rat(1, 2), false},
                    "",
                    ""});

    Curves flex_cs{boundary_curve(s), wc("L", dc(s, {1, 1, 1}), w(1)),
                   wc("R", dc(s, {1, 0, 0}), w(2))};
    PairConfig flex = make(s, flex_cs, {pt("r", {sb(0), sb(1), sb(2)}, {ct(0, 2, 3)})}, true);
    rows.push_back({7,
                    "",
                    "flex-line",
                    {generic, flex},
                    PiecewiseFL::from_breaks({{Rat(1, 4), one},
                                              {Rat(4, 9), FL::of(1, 3, 0, 7)},
                                              {1, FL::of(1, 0, 0, 3)}}),
                    "(0,1/2)",
                    {Rat(1, 2), false},
                    "",
                    ""});
  }
  {  // degree 6
    auto s = plane(3);
    Curves base{boundary_curve(s), wc("E1", exceptional_class(s, 1), w(2)),
                wc("L12", dc(s, {1, 1, 1, 0}), w(2)), wc("L13", dc(s, {1, 1, 0, 1}), w(1)),
                wc("E2", exceptional_class(s, 2), w(1))};
    PairConfig generic = make(s, base, {}, false);
    rows.push_back({6,
                    "",
                    "generic",
                    {generic},
                    PiecewiseFL::from_breaks({{Rat(1, 2), one}, {1, FL::of(1, 0, 0, 2)}}),
                    "(0,3/4)",
                    {Rat(3, 4), false},
                    "",
                    ""});

    PairConfig pe = make(s, base, {pt("p", {sb(0), sb(1), sb(2)})}, false);
    rows.push_back({6,
                    "",
                    "pseudo-eckardt",
                    {pe},
                    PiecewiseFL::from_breaks({{Rat(1, 3), one}, {1, FL::of(1, 1, 0, 4)}}),
                    "(0,3/5)",
                    {Rat(3, 5), false},
                    "",
                    ""});

    Curves tangent_cs{boundary_curve(s), wc("L", dc(s, {1, 1, 0, 0}), w(2)),
                      wc("L23", dc(s, {1, 0, 1, 1}), w(1)),
                      wc("E1", exceptional_class(s, 1), w(1))};
    PairConfig tangent =
        make(s, tangent_cs, {pt("p", {sb(0), sb(1), sb(3)}, {ct(0, 1, 2)})}, false);
    rows.push_back({6,
                    "",
                    "tangent",
                    {generic, tangent},
                    PiecewiseFL::from_breaks({{Rat(1, 3), one},
                                              {Rat(3, 4), FL::of(1, 2, 0, 5)},
                                              {1, FL::of(1, 0, 0, 2)}}),
                    "(0,3/4)",
                    {Rat(3, 4), false},
                    "",
                    ""});
  }
  {  // degree 5
    auto s = plane(4);
    Curves cs{boundary_curve(s), wc("E1", exceptional_class(s, 1), w(2)),
              wc("L12", dc(s, {1, 1, 1, 0, 0}), w(1)), wc("L13", dc(s, {1, 1, 0, 1, 0}), w(1)),
              wc("L14", dc(s, {1, 1, 0, 0, 1}), w(1))};
    rows.push_back({5,
                    "",
                    "generic",
                    {make(s, cs, {}, false)},
                    PiecewiseFL::from_breaks({{Rat(1, 2), one}, {1, FL::of(1, 0, 0, 2)}}),
                    "(0,3/4)",
                    {Rat(3, 4), false},
                    "",
                    ""});
  }
  {  // degree 4
    auto s = plane(5);
    Curves gen_cs{boundary_curve(s), wc("E1", exceptional_class(s, 1), w(1)),
                  wc("L12", dc(s, {1, 1, 1, 0, 0, 0}), w(1)),
                  wc("A2", dc(s, {2, 1, 0, 1, 1, 1}), w(1))};
    PairConfig generic = make(s, gen_cs, {pt("p", {sb(1), sb(2), sb(3)})}, false);
    rows.push_back({4,
                    "",
                    "generic",
                    {generic},
                    PiecewiseFL::from_breaks({{Rat(2, 3), one}, {1, FL::of(2, 0, 0, 3)}}),
                    "(0,1)",
                    {Rat(1), false},
                    "",
                    ""});

    Curves tc_cs{boundary_curve(s), wc("B5", dc(s, {1, 0, 0, 0, 0, 1}), w(1)),
                 wc("A5", dc(s, {2, 1, 1, 1, 1, 0}), w(1))};
    PairConfig tc = make(
        s, tc_cs,
        {pt("p", {sb(0), sb(1), sb(2)}, {ct(0, 1, 2), ct(0, 2, 2), ct(1, 2, 2)})}, true);
    rows.push_back({4,
                    "",
                    "tangent-conics",
                    {generic, tc},
                    PiecewiseFL::from_breaks({{Rat(1, 2), one},
                                              {Rat(5, 6), FL::of(1, 2, 0, 4)},
                                              {1, FL::of(2, 0, 0, 3)}}),
                    "(0,1)",
                    {Rat(1), false},
                    "",
                    ""});

    PairConfig pe =
        make(s, gen_cs, {pt("p", {sb(0), sb(1), sb(2), sb(3)}, {ct(0, 3, 2)})}, true);
    rows.push_back({4,
                    "",
                    "pseudo-eckardt",
                    {pe},
                    PiecewiseFL::from_breaks({{Rat(1, 2), one}, {1, FL::of(1, 1, 0, 3)}}),
                    "(0,1)",
                    {Rat(1), false},
                    "",
                    ""});
  }
  {  // degree 3
    auto s = plane(6);
    PairConfig cusp_snc =
        make(s, {wc("T", dc(s, {3, 1, 1, 1, 1, 1, 1}), w(1), false)},
             {pt("q", {cusp_branch(0)})}, false);
    PairConfig cusp_n2 =
        make(s, {boundary_curve(s), wc("T", dc(s, {3, 1, 1, 1, 1, 1, 1}), w(1), false)},
             {pt("q", {sb(0), cusp_branch(1)})}, false);
    PairConfig cusp_n3 =
        make(s, {boundary_curve(s), wc("T", dc(s, {3, 1, 1, 1, 1, 1, 1}), w(1), false)},
             {pt("q", {sb(0), cusp_branch(1)}, {ct(0, 1, 2)})}, true);
    PairConfig tac_snc = make(s,
                              {wc("L", dc(s, {1, 1, 1, 0, 0, 0, 0}), w(1)),
                               wc("Q", dc(s, {2, 0, 0, 1, 1, 1, 1}), w(1))},
                              {pt("q", {sb(0), sb(1)}, {ct(0, 1, 2)})}, false);
    PairConfig tac_normal = make(s,
                                 {boundary_curve(s), wc("L", dc(s, {1, 1, 1, 0, 0, 0, 0}), w(1)),
                                  wc("Q", dc(s, {2, 0, 0, 1, 1, 1, 1}), w(1))},
                                 {pt("q", {sb(0), sb(1), sb(2)}, {ct(1, 2, 2)})}, false);
    PairConfig lines_off = make(s,
                                {wc("E1", exceptional_class(s, 1), w(1)),
                                 wc("L12", dc(s, {1, 1, 1, 0, 0, 0, 0}), w(1)),
                                 wc("C2", dc(s, {2, 1, 0, 1, 1, 1, 1}), w(1))},
                                {pt("q", {sb(0), sb(1), sb(2)})}, false);
    PairConfig eck_on = make(s,
                             {boundary_curve(s), wc("E1", exceptional_class(s, 1), w(1)),
                              wc("L12", dc(s, {1, 1, 1, 0, 0, 0, 0}), w(1)),
                              wc("C2", dc(s, {2, 1, 0, 1, 1, 1, 1}), w(1))},
                             {pt("q", {sb(0), sb(1), sb(2), sb(3)})}, true);

    rows.push_back({3,
                    "",
                    "generic",
                    {cusp_snc, cusp_n2, tac_snc},
                    PiecewiseFL::from_breaks({{Rat(3, 4), one}, {1, FL::of(3, 0, 0, 4)}}),
                    "(0,1]",
                    {Rat(1), true},
                    "no-eckardt",
                    ""});
    rows.push_back({3,
                    "",
                    "cusp-flex",
                    {cusp_snc, cusp_n2, tac_snc, cusp_n3},
                    PiecewiseFL::from_breaks({{Rat(2, 3), one},
                                              {Rat(5, 6), FL::of(2, 3, 0, 6)},
                                              {1, FL::of(3, 0, 0, 4)}}),
                    "(0,1]",
                    {Rat(1), true},
                    "no-eckardt",
                    ""});
    rows.push_back({3,
                    "",
                    "tacnode-on-curve",
                    {cusp_snc, cusp_n2, tac_snc, tac_normal},
                    PiecewiseFL::from_breaks({{Rat(2, 3), one}, {1, FL::of(2, 1, 0, 4)}}),
                    "(0,1)",
                    {Rat(1), true},
                    "no-eckardt",
                    ""});
    rows.push_back({3,
                    "",
                    "eckardt-off-curve",
                    {cusp_snc, cusp_n2, tac_snc, lines_off},
                    PiecewiseFL::from_breaks({{Rat(2, 3), one}, {1, FL::of(2, 0, 0, 3)}}),
                    "(0,1]",
                    {Rat(1), false},
                    "eckardt",
                    ""});
    rows.push_back({3,
                    "",
                    "eckardt-on-curve",
                    {cusp_snc, cusp_n2, tac_snc, eck_on},
                    PiecewiseFL::from_breaks({{Rat(1, 2), one}, {1, FL::of(1, 1, 0, 3)}}),
                    "(0,1]",
                    {Rat(1), false},
                    "eckardt",
                    ""});
  }
  {  // degree 2
    auto s = plane(7);
    PairConfig cusp_snc =
        make(s, {wc("T", dc(s, {3, 1, 1, 1, 1, 1, 1, 1}), w(1), false)},
             {pt("q", {cusp_branch(0)})}, false);
    PairConfig cusp_on =
        make(s, {boundary_curve(s), wc("T", dc(s, {3, 1, 1, 1, 1, 1, 1, 1}), w(1), false)},
             {pt("q", {sb(0), cusp_branch(1)})}, true);
    PairConfig tac_snc = make(s,
                              {wc("E1", exceptional_class(s, 1), w(1)),
                               wc("M", dc(s, {3, 2, 1, 1, 1, 1, 1, 1}), w(1))},
                              {pt("q", {sb(0), sb(1)}, {ct(0, 1, 2)})}, false);
    PairConfig tac_on = make(s,
                             {boundary_curve(s), wc("E1", exceptional_class(s, 1), w(1)),
                              wc("M", dc(s, {3, 2, 1, 1, 1, 1, 1, 1}), w(1))},
                             {pt("q", {sb(0), sb(1), sb(2)}, {ct(1, 2, 2)})}, true);

    rows.push_back({2,
                    "",
                    "generic",
                    {cusp_snc},
                    PiecewiseFL::from_breaks({{Rat(5, 6), one}, {1, FL::of(5, 0, 0, 6)}}),
                    "(0,1]",
                    {Rat(1), true},
                    "no-tacnode",
                    ""});
    rows.push_back({2,
                    "",
                    "cusp-on-curve",
                    {cusp_snc, cusp_on},
                    PiecewiseFL::from_breaks({{Rat(3, 4), one}, {1, FL::of(3, 2, 0, 6)}}),
                    "(0,1]",
                    {Rat(1), true},
                    "no-tacnode",
                    ""});
    rows.push_back({2,
                    "",
                    "tacnodal-generic",
                    {tac_snc, cusp_on},
                    PiecewiseFL::from_breaks({{Rat(3, 4), one}, {1, FL::of(3, 0, 0, 4)}}),
                    "(0,1]",
                    {Rat(1), true},
                    "tacnodal",
                    ""});
    rows.push_back({2,
                    "",
                    "tacnode-on-curve",
                    {tac_on, cusp_on},
                    PiecewiseFL::from_breaks({{Rat(2, 3), one}, {1, FL::of(2, 1, 0, 4)}}),
                    "(0,1]",
                    {Rat(1), true},
                    "tacnodal",
                    ""});
  }
  {  // degree 1
    auto s = plane(8);
    PairConfig cusp_snc =
        make(s, {wc("T", dc(s, {3, 1, 1, 1, 1, 1, 1, 1, 1}), w(1), false)},
             {pt("q", {cusp_branch(0)})}, false);
    rows.push_back({1,
                    "",
                    "cusp",
                    {cusp_snc},
                    PiecewiseFL::from_breaks({{Rat(5, 6), one}, {1, FL::of(5, 0, 0, 6)}}),
                    "(0,1]",
                    {Rat(1), true},
                    "cusp",
                    "often catalogued as the constant 5/6; the function equals 1 below 5/6"});
    rows.push_back({1,
                    "",
                    "no-cusp",
                    {},
                    PiecewiseFL::constant(1),
                    "(0,1]",
                    {Rat(1), true},
                    "no-cusp",
                    ""});
  }

  return rows;
}

// ---- single-point threshold lemmas --------------------------------------

std::vector<LocalLemma> build_local() {
  std::vector<LocalLemma> rows;
  auto s = plane(0);
  DivisorClass cubic = dc(s, {3});

  rows.push_back({"cusp-plain",
                  make(s, {wc("T", cubic, w(1), false)}, {pt("q", {cusp_branch(0)})}, true),
                  FL::of(5, 0, 0, 6)});
  rows.push_back({"cusp-transverse-boundary",
                  make(s, {boundary_curve(s), wc("T", cubic, w(1), false)},
                       {pt("q", {sb(0), cusp_branch(1)})}, false),
                  FL::of(3, 2, 0, 6)});
  rows.push_back({"cusp-flex-boundary",
                  make(s, {boundary_curve(s), wc("T", cubic, w(1), false)},
                       {pt("q", {sb(0), cusp_branch(1)}, {ct(0, 1, 2)})}, false),
                  FL::of(2, 3, 0, 6)});
  rows.push_back({"tacnode-plain",
                  make(s, {wc("L", dc(s, {1}), w(1)), wc("Q", dc(s, {2}), w(1))},
                       {pt("q", {sb(0), sb(1)}, {ct(0, 1, 2)})}, true),
                  FL::of(3, 0, 0, 4)});
  rows.push_back(
      {"tacnode-transverse-boundary",
       make(s, {boundary_curve(s), wc("L", dc(s, {1}), w(1)), wc("Q", dc(s, {2}), w(1))},
            {pt("q", {sb(0), sb(1), sb(2)}, {ct(1, 2, 2)})}, false),
       FL::of(2, 1, 0, 4)});
  rows.push_back({"three-lines-concurrent",
                  make(s,
                       {wc("L1", dc(s, {1}), w(1)), wc("L2", dc(s, {1}), w(1)),
                        wc("L3", dc(s, {1}), w(1))},
                       {pt("q", {sb(0), sb(1), sb(2)})}, true),
                  FL::of(2, 0, 0, 3)});
  rows.push_back({"three-lines-on-boundary",
                  make(s,
                       {boundary_curve(s), wc("L1", dc(s, {1}), w(1)),
                        wc("L2", dc(s, {1}), w(1)), wc("L3", dc(s, {1}), w(1))},
                       {pt("q", {sb(0), sb(1), sb(2), sb(3)})}, false),
                  FL::of(1, 1, 0, 3)});

  return rows;
}

// ---- configuration bound lemmas -----------------------------------------

std::vector<ConfigLemma> build_config() {
  std::vector<ConfigLemma> rows;
  auto stated = [](int degree, const std::string& case_name) {
    const AlphaRow* row = find_alpha(degree, case_name);
    if (!row) throw std::logic_error("catalog: missing alpha row " + case_name);
    return row->stated;
  };

  {  // F1
    auto s = plane(1);
    rows.push_back({"f1-flex-pair",
                    make(s,
                         {boundary_curve(s), wc("H", dc(s, {1, 0}), w(2)),
                          wc("Lp", dc(s, {1, 1}), w(1))},
                         {pt("p", {sb(0), sb(1), sb(2)}, {ct(0, 1, 3)})}, false),
                    stated(8, "generic"),
                    std::nullopt});
  }
  {  // degree 7
    auto s = plane(2);
    DivisorClass H1 = dc(s, {1, 1, 0}), H2 = dc(s, {1, 0, 1}), H = dc(s, {1, 0, 0});
    DivisorClass L = dc(s, {1, 1, 1});
    DivisorClass E1 = exceptional_class(s, 1);
    auto generic = stated(7, "generic");

    rows.push_back({"deg7-three-concurrent",
                    make(s,
                         {boundary_curve(s), wc("H1", H1, w(1)), wc("H2", H2, w(1)),
                          wc("H", H, w(1))},
                         {pt("q", {sb(0), sb(1), sb(2), sb(3)}, {ct(0, 3, 3)})}, false),
                    generic,
                    std::nullopt});
    rows.push_back({"deg7-tangent-pencil",
                    make(s,
                         {boundary_curve(s), wc("H1", H1, w(2)), wc("H2", H2, w(1)),
                          wc("E1", E1, w(1))},
                         {pt("q", {sb(0), sb(1), sb(3)}, {ct(0, 1, 2)})}, false),
                    generic,
                    std::nullopt});
    rows.push_back({"deg7-conic-flex",
                    make(s, {boundary_curve(s), wc("H", H, w(2)), wc("L", L, w(1))},
                         {pt("q", {sb(0), sb(1)}, {ct(0, 1, 3)})}, false),
                    generic,
                    std::nullopt});
    rows.push_back({"deg7-line-flex-pair",
                    make(s, {boundary_curve(s), wc("L", L, w(1)), wc("R", H, w(2))},
                         {pt("r", {sb(0), sb(1), sb(2)}, {ct(0, 2, 3)})}, true),
                    stated(7, "flex-line"),
                    std::nullopt});
    rows.push_back({"deg7-line-tangent-pair",
                    make(s, {boundary_curve(s), wc("L", L, w(1)), wc("R", H, w(2))},
                         {pt("r", {sb(0), sb(1), sb(2)}, {ct(0, 2, 2)})}, false),
                    generic,
                    std::nullopt});
    rows.push_back({"deg7-double-line-tangent",
                    make(s,
                         {boundary_curve(s), wc("L1", H1, w(2)), wc("E1", E1, w(2)),
                          wc("L", L, w(1))},
                         {pt("r", {sb(0), sb(1), sb(2)}, {ct(0, 1, 2)})}, false),
                    stated(7, "tangent-line"),
                    std::nullopt});
    rows.push_back({"deg7-double-line-transverse",
                    make(s,
                         {boundary_curve(s), wc("L1", H1, w(2)), wc("E1", E1, w(2)),
                          wc("L", L, w(1))},
                         {pt("r", {sb(0), sb(1), sb(2)})}, false),
                    generic,
                    std::nullopt});
  }
  {  // degree 6
    auto s = plane(3);
    DivisorClass E1 = exceptional_class(s, 1), E2 = exceptional_class(s, 2);
    DivisorClass L12 = dc(s, {1, 1, 1, 0}), L13 = dc(s, {1, 1, 0, 1});
    auto generic = stated(6, "generic");

    rows.push_back({"deg6-fiber-tangent",
                    make(s,
                         {boundary_curve(s), wc("F", dc(s, {1, 0, 1, 0}), w(2)),
                          wc("L13", L13, w(1)), wc("E2", E2, w(1))},
                         {pt("p", {sb(0), sb(1)}, {ct(0, 1, 2)})}, false),
                    generic,
                    std::nullopt});
    rows.push_back({"deg6-tangent-conic-triple",
                    make(s,
                         {boundary_curve(s), wc("D", dc(s, {2, 0, 1, 1}), w(1)),
                          wc("E2", E2, w(1)), wc("L12", L12, w(1))},
                         {pt("p", {sb(0), sb(1), sb(2), sb(3)}, {ct(0, 1, 2)})}, false),
                    generic,
                    std::nullopt});
    rows.push_back({"deg6-conic-line-tangent",
                    make(s,
                         {boundary_curve(s), wc("G", dc(s, {2, 1, 1, 1}), w(1)),
                          wc("H", dc(s, {1, 0, 0, 0}), w(1))},
                         {pt("p", {sb(0), sb(1), sb(2)},
                             {ct(0, 1, 3), ct(0, 2, 2), ct(1, 2, 2)})},
                         false),
                    generic,
                    std::nullopt});
    rows.push_back({"deg6-triple-with-conic",
                    make(s,
                         {boundary_curve(s), wc("E1", E1, w(1)),
                          wc("Lq", dc(s, {1, 1, 0, 0}), w(1)),
                          wc("Cq", dc(s, {2, 1, 1, 1}), w(1))},
                         {pt("p", {sb(0), sb(1), sb(2), sb(3)}, {ct(0, 3, 2)})}, false),
                    generic,
                    std::nullopt});
    rows.push_back({"deg6-pseudo-eckardt-tangent",
                    make(s,
                         {boundary_curve(s), wc("L", dc(s, {1, 1, 0, 0}), w(2)),
                          wc("L23", dc(s, {1, 0, 1, 1}), w(1)), wc("E1", E1, w(1))},
                         {pt("p", {sb(0), sb(1), sb(3)}, {ct(0, 1, 2)})}, false),
                    stated(6, "tangent"),
                    std::nullopt});
    rows.push_back({"deg6-line-pair-triple",
                    make(s,
                         {boundary_curve(s), wc("Lq", dc(s, {1, 1, 0, 0}), w(1)),
                          wc("E1", E1, w(2)), wc("L12", L12, w(1)), wc("L13", L13, w(1))},
                         {pt("q", {sb(0), sb(1), sb(2)}, {ct(0, 1, 2)})}, false),
                    generic,
                    std::nullopt});
  }
  {  // degree 5
    auto s = plane(4);
    rows.push_back({"deg5-conic-pair",
                    make(s,
                         {boundary_curve(s), wc("A", dc(s, {2, 1, 1, 1, 1}), w(1)),
                          wc("B1", dc(s, {1, 1, 0, 0, 0}), w(1)),
                          wc("E1", exceptional_class(s, 1), w(1))},
                         {pt("q", {sb(0), sb(1), sb(2), sb(3)}, {ct(0, 2, 2)})}, false),
                    stated(5, "generic"),
                    std::nullopt});
  }
  {  // degree 4
    auto s = plane(5);
    DivisorClass E1 = exceptional_class(s, 1);
    DivisorClass L12 = dc(s, {1, 1, 1, 0, 0, 0});
    DivisorClass A2 = dc(s, {2, 1, 0, 1, 1, 1});
    DivisorClass B5 = dc(s, {1, 0, 0, 0, 0, 1});
    DivisorClass A5 = dc(s, {2, 1, 1, 1, 1, 0});
    auto generic = stated(4, "generic");

    rows.push_back({"deg4-triple-point-tangent",
                    make(s,
                         {boundary_curve(s), wc("E1", E1, w(1)), wc("L12", L12, w(1)),
                          wc("A2", A2, w(1))},
                         {pt("p", {sb(1), sb(2), sb(3)}),
                          pt("p2", {sb(0), sb(3)}, {ct(0, 1, 2)})},
                         false),
                    generic,
                    generic});
    rows.push_back(
        {"deg4-tangent-conics",
         make(s, {boundary_curve(s), wc("B5", B5, w(1)), wc("A5", A5, w(1))},
              {pt("p", {sb(0), sb(1), sb(2)}, {ct(0, 1, 2), ct(0, 2, 2), ct(1, 2, 2)})},
              true),
         stated(4, "tangent-conics"),
         PiecewiseFL::from_breaks({{Rat(1, 2), FL::constant(1)}, {1, FL::of(1, 2, 0, 4)}})});
    rows.push_back({"deg4-tacnode-transverse",
                    make(s, {boundary_curve(s), wc("B5", B5, w(1)), wc("A5", A5, w(1))},
                         {pt("p", {sb(0), sb(1), sb(2)}, {ct(1, 2, 2)})}, false),
                    stated(4, "tangent-conics"),
                    std::nullopt});
    rows.push_back({"deg4-pseudo-eckardt",
                    make(s,
                         {boundary_curve(s), wc("E1", E1, w(1)), wc("L12", L12, w(1)),
                          wc("A2", A2, w(1))},
                         {pt("p", {sb(0), sb(1), sb(2), sb(3)}, {ct(0, 3, 2)})}, true),
                    stated(4, "pseudo-eckardt"),
                    stated(4, "pseudo-eckardt")});
    rows.push_back({"deg4-cuspidal-flex",
                    make(s,
                         {boundary_curve(s),
                          wc("T", dc(s, {3, 1, 1, 1, 1, 1}), w(1), false)},
                         {pt("p", {sb(0), cusp_branch(1)}, {ct(0, 1, 2)})}, false),
                    generic,
                    std::nullopt});
    rows.push_back({"deg4-fractional-pencil",
                    make(s,
                         {boundary_curve(s), wc("B1", dc(s, {1, 1, 0, 0, 0, 0}), w(1, 3)),
                          wc("A2", A2, w(1, 3)), wc("A3", dc(s, {2, 1, 1, 0, 1, 1}), w(1, 3)),
                          wc("A4", dc(s, {2, 1, 1, 1, 0, 1}), w(1, 3)),
                          wc("A5", A5, w(1, 3)), wc("E1", E1, w(2, 3))},
                         {pt("q", {sb(0), sb(1), sb(2), sb(3), sb(4), sb(5), sb(6)},
                             {ct(0, 1, 2)})},
                         false),
                    generic,
                    std::nullopt});
    rows.push_back({"deg4-cubic-line-pair",
                    make(s,
                         {boundary_curve(s), wc("Q1", dc(s, {3, 2, 1, 1, 1, 1}), w(1)),
                          wc("E1", E1, w(1))},
                         {pt("q", {sb(0), sb(1), sb(2)}, {ct(1, 2, 2)})}, false),
                    generic,
                    std::nullopt});
    rows.push_back({"deg4-cubic-line-flex",
                    make(s,
                         {boundary_curve(s), wc("Q1", dc(s, {3, 2, 1, 1, 1, 1}), w(1)),
                          wc("E1", E1, w(1))},
                         {pt("q", {sb(0), sb(1), sb(2)}, {ct(0, 1, 3)})}, false),
                    generic,
                    std::nullopt});
    rows.push_back({"deg4-half-pencil",
                    make(s,
                         {boundary_curve(s), wc("C0", dc(s, {2, 1, 1, 1, 1, 1}), w(1, 2)),
                          wc("L12", L12, w(1, 2)), wc("L13", dc(s, {1, 1, 0, 1, 0, 0}), w(1, 2)),
                          wc("L14", dc(s, {1, 1, 0, 0, 1, 0}), w(1, 2)),
                          wc("L15", dc(s, {1, 1, 0, 0, 0, 1}), w(1, 2)), wc("E1", E1, w(3, 2))},
                         {pt("q", {sb(0), sb(2), sb(6)})}, false),
                    generic,
                    generic});
    rows.push_back(
        {"deg4-worst-quintuple",
         make(s,
              {boundary_curve(s), wc("A5", A5, w(3, 5)),
               wc("R125", dc(s, {2, 1, 1, 0, 0, 1}), w(1, 5)),
               wc("R135", dc(s, {2, 1, 0, 1, 0, 1}), w(1, 5)),
               wc("R145", dc(s, {2, 1, 0, 0, 1, 1}), w(1, 5)),
               wc("Q5", dc(s, {3, 1, 1, 1, 1, 2}), w(1, 5)), wc("E1", E1, w(2, 5))},
              {pt("q", {sb(0), sb(1), sb(2), sb(3), sb(4), sb(5), sb(6)},
                  {ct(0, 5, 3), ct(0, 1, 2), ct(0, 2, 2), ct(0, 3, 2), ct(0, 4, 2),
                   ct(1, 2, 2), ct(1, 3, 2), ct(1, 4, 2), ct(1, 5, 2), ct(2, 3, 2),
                   ct(2, 4, 2), ct(3, 4, 2), ct(2, 5, 2), ct(3, 5, 2), ct(4, 5, 2)})},
              false),
         generic,
         std::nullopt});
  }

  return rows;
}

}  // namespace

const std::vector<GlctRow>& glct_table() {
  static const std::vector<GlctRow> table = build_glct();
  return table;
}

const std::vector<AlphaRow>& alpha_table() {
  static const std::vector<AlphaRow> table = build_alpha();
  return table;
}

const std::vector<LocalLemma>& local_lemmas() {
  static const std::vector<LocalLemma> table = build_local();
  return table;
}

const std::vector<ConfigLemma>& config_lemmas() {
  static const std::vector<ConfigLemma> table = build_config();
  return table;
}

Rat glct_value(const std::vector<PairConfig>& configs) {
  Rat best = 1;
  for (const auto& cfg : configs) {
    auto t = lct_numeric(cfg, 1);
    if (t && *t < best) best = *t;
  }
  return best;
}

PiecewiseFL capped_dynamic_threshold(const PairConfig& cfg) {
  auto t = lct_dynamic(cfg);
  if (!t) return PiecewiseFL::constant(1);
  return piecewise_min(PiecewiseFL::constant(1), *t);
}

const GlctRow* find_glct(int degree, const std::string& variant) {
  for (const auto& row : glct_table())
    if (row.degree == degree && row.variant == variant) return &row;
  return nullptr;
}

const AlphaRow* find_alpha(int degree, const std::string& case_name) {
  for (const auto& row : alpha_table())
    if (row.degree == degree && row.case_name == case_name) return &row;
  return nullptr;
}

std::vector<const AlphaRow*> alpha_rows(int degree) {
  std::vector<const AlphaRow*> out;
  for (const auto& row : alpha_table())
    if (row.degree == degree) out.push_back(&row);
  return out;
}

CheckReport check_catalog() {
  CheckReport report;
  auto fail = [&](const std::string& message) {
    report.ok = false;
    report.failures.push_back(message);
  };

  for (const auto& row : glct_table()) {
    ++report.checks;
    Rat got = glct_value(row.configs);
    if (got != row.expected)
      fail("glct " + std::to_string(row.degree) + " " + row.variant + ": expected " +
           to_string(row.expected) + ", computed " + to_string(got));
  }

  for (const auto& row : alpha_table()) {
    const std::string tag =
        "alpha " + std::to_string(row.degree) + " " + row.case_name;
    ++report.checks;
    PiecewiseFL got = alpha_from_witnesses(row.witnesses);
    if (!(got == row.stated))
      fail(tag + ": stated " + to_string(row.stated) + ", computed " + to_string(got));
    ++report.checks;
    KeeInterval kee = kee_interval(row.stated);
    if (!(kee == row.kee_expected))
      fail(tag + ": interval expected " + to_string(row.kee_expected) + ", computed " +
           to_string(kee));
    if (to_string(row.kee_expected) != row.kee_listed)
      report.kee_notes.push_back(tag + ": listed " + row.kee_listed + ", computed " +
                                 to_string(row.kee_expected));
  }

  for (const auto& lemma : local_lemmas()) {
    ++report.checks;
    auto got = lct_dynamic(lemma.config);
    PiecewiseFL want({Piece{0, 1, lemma.expected}});
    if (!got || !(*got == want))
      fail("local " + lemma.name + ": expected " + to_string(want) +
           (got ? ", computed " + to_string(*got) : ", computed unbounded"));
  }

  for (const auto& lemma : config_lemmas()) {
    PiecewiseFL capped = capped_dynamic_threshold(lemma.config);
    ++report.checks;
    if (!pointwise_leq(lemma.threshold, capped))
      fail("bound " + lemma.name + ": threshold " + to_string(lemma.threshold) +
           " is not dominated by " + to_string(capped));
    if (lemma.exact) {
      ++report.checks;
      if (!(capped == *lemma.exact))
        fail("bound " + lemma.name + ": expected exactly " + to_string(*lemma.exact) +
             ", computed " + to_string(capped));
    }
  }

  return report;
}

std::string emit_tables_markdown() {
  std::ostringstream out;

  out << "# del Pezzo threshold tables\n\n";
  out << "## Global thresholds at \xce\xb2 = 1\n\n";
  out << "| degree | case | value |\n|---|---|---|\n";
  for (const auto& row : glct_table())
    out << "| " << row.degree << " | " << (row.variant.empty() ? "-" : row.variant) << " | "
        << to_string(glct_value(row.configs)) << " |\n";

  out << "\n## Dynamic alpha invariants\n\n";
  out << "| degree | case | function | interval | listed |\n|---|---|---|---|---|\n";
  for (const auto& row : alpha_table()) {
    PiecewiseFL alpha = alpha_from_witnesses(row.witnesses);
    KeeInterval kee = kee_interval(alpha);
    std::string computed = to_string(kee);
    out << "| " << row.degree << " | " << row.case_name << " | " << to_string(alpha) << " | "
        << computed << " | " << row.kee_listed
        << (computed == row.kee_listed ? "" : " (differs)") << " |\n";
  }

  out << "\n## Single-point thresholds\n\n";
  out << "| name | threshold |\n|---|---|\n";
  for (const auto& lemma : local_lemmas()) {
    auto got = lct_dynamic(lemma.config);
    out << "| " << lemma.name << " | " << (got ? to_string(*got) : "unbounded") << " |\n";
  }

  out << "\n## Configuration bounds\n\n";
  out << "| name | capped threshold | kind |\n|---|---|---|\n";
  for (const auto& lemma : config_lemmas())
    out << "| " << lemma.name << " | " << to_string(capped_dynamic_threshold(lemma.config))
        << " | " << (lemma.exact ? "exact" : "lower bound") << " |\n";

  CheckReport report = check_catalog();
  if (!report.kee_notes.empty()) {
    out << "\n## Interval discrepancies\n\n";
    for (const auto& note : report.kee_notes) out << "- " << note << "\n";
  }

  return out.str();
}

namespace {

nlohmann::json piecewise_json(const PiecewiseFL& f) {
  nlohmann::json pieces = nlohmann::json::array();
  for (const auto& piece : f.pieces()) {
    pieces.push_back({{"from", to_string(piece.lo)},
                      {"to", to_string(piece.hi)},
                      {"p", piece.f.p.str()},
                      {"q", piece.f.q.str()},
                      {"r", piece.f.r.str()},
                      {"s", piece.f.s.str()}});
  }
  return nlohmann::json{{"pieces", pieces}};
}

}  // namespace

std::string emit_tables_json() {
  nlohmann::json doc;

  doc["glct"] = nlohmann::json::array();
  for (const auto& row : glct_table())
    doc["glct"].push_back({{"degree", row.degree},
                           {"case", row.variant},
                           {"value", to_string(glct_value(row.configs))}});

  doc["alpha"] = nlohmann::json::array();
  for (const auto& row : alpha_table()) {
    PiecewiseFL alpha = alpha_from_witnesses(row.witnesses);
    KeeInterval kee = kee_interval(alpha);
    nlohmann::json entry{{"degree", row.degree},
                         {"case", row.case_name},
                         {"function", piecewise_json(alpha)},
                         {"interval", to_string(kee)},
                         {"interval_listed", row.kee_listed},
                         {"differs", to_string(kee) != row.kee_listed}};
    if (!row.surface_variant.empty()) entry["surface"] = row.surface_variant;
    if (!row.note.empty()) entry["note"] = row.note;
    doc["alpha"].push_back(entry);
  }

  doc["local"] = nlohmann::json::array();
  for (const auto& lemma : local_lemmas()) {
    auto got = lct_dynamic(lemma.config);
    doc["local"].push_back(
        {{"name", lemma.name},
         {"threshold", got ? piecewise_json(*got) : nlohmann::json()}});
  }

  doc["bounds"] = nlohmann::json::array();
  for (const auto& lemma : config_lemmas())
    doc["bounds"].push_back(
        {{"name", lemma.name},
         {"threshold", piecewise_json(capped_dynamic_threshold(lemma.config))},
         {"exact", lemma.exact.has_value()}});

  return doc.dump(2) + "\n";
}

}  // namespace delpezzo
