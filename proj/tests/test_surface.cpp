#include <doctest.h>

#include <random>

#include "delpezzo/surface.hpp"

using namespace delpezzo;

namespace {

DivisorClass cls(const SurfaceModel& s, std::vector<long long> v) {
  return DivisorClass(s, std::move(v));
}

}  // namespace

TEST_CASE("surface models expose rank and degree") {
  auto p2 = SurfaceModel::blowup_of_p2(0);
  CHECK(p2.rank() == 1);
  CHECK(p2.degree() == 9);

  auto five = SurfaceModel::blowup_of_p2(4);
  CHECK(five.rank() == 5);
  CHECK(five.degree() == 5);

  auto q = SurfaceModel::quadric();
  CHECK(q.rank() == 2);
  CHECK(q.degree() == 8);

  auto blown = blow_up_lattice(five);
  CHECK(blown.rank() == 6);
  CHECK(blown.degree() == 4);
  CHECK(blown.extra == 1);
}

TEST_CASE("pairing on the blown-up plane") {
  auto s = SurfaceModel::blowup_of_p2(5);
  CHECK(intersect(exceptional_class(s, 1), exceptional_class(s, 1)) == -1);
  CHECK(intersect(exceptional_class(s, 1), exceptional_class(s, 2)) == 0);

  auto s4 = SurfaceModel::blowup_of_p2(4);
  auto l12 = cls(s4, {1, 1, 1, 0, 0});
  auto l13 = cls(s4, {1, 1, 0, 1, 0});
  CHECK(intersect(l12, l13) == 0);
  CHECK(intersect(l12, l12) == -1);
  CHECK(degree(cls(s4, {2, 1, 1, 1, 1})) == 2);
}

TEST_CASE("pairing on the quadric") {
  auto q = SurfaceModel::quadric();
  auto f1 = ruling_class(q, 1);
  auto f2 = ruling_class(q, 2);
  CHECK(intersect(f1, f1) == 0);
  CHECK(intersect(f1, f2) == 1);
  CHECK(canonical_class(q) == cls(q, {-2, -2}));
  CHECK(degree(f1) == 2);
}

TEST_CASE("canonical class and genus formulas") {
  auto s = SurfaceModel::blowup_of_p2(6);
  auto K = canonical_class(s);
  CHECK(K == cls(s, {-3, -1, -1, -1, -1, -1, -1}));
  CHECK(intersect(K, K) == 3);

  CHECK(arithmetic_genus(-K) == Rat(1));
  CHECK(arithmetic_genus(exceptional_class(s, 1)) == Rat(0));
  CHECK(arithmetic_genus(cls(s, {1, 0, 0, 0, 0, 0, 0})) == Rat(0));
  CHECK(arithmetic_genus(cls(s, {4, 1, 1, 1, 1, 1, 1})) == Rat(3));
  CHECK(arithmetic_genus(cls(s, {4, 2, 2, 1, 1, 1, 1})) == Rat(1));

  CHECK(riemann_roch_lower_bound(cls(s, {1, 0, 0, 0, 0, 0, 0})) == 3);
  CHECK(riemann_roch_lower_bound(-K) == 4);
}

TEST_CASE("class arithmetic and ordering") {
  auto s = SurfaceModel::blowup_of_p2(2);
  auto a = cls(s, {1, 1, 0});
  auto b = cls(s, {1, 0, 1});
  CHECK(a + b == cls(s, {2, 1, 1}));
  CHECK(a - b == cls(s, {0, 1, -1}));
  CHECK(-a == cls(s, {-1, -1, 0}));
  CHECK(3 * a == cls(s, {3, 3, 0}));
  CHECK(a != b);
  CHECK((a < b) != (b < a));
  CHECK(to_string(a) == "(1;1,0)");
  CHECK(to_string(hyperplane_class(SurfaceModel::blowup_of_p2(0))) == "(1)");
}

TEST_CASE("strict transforms shift multiplicities onto the new direction") {
  auto s = SurfaceModel::blowup_of_p2(3);
  auto c = cls(s, {2, 1, 1, 0});
  auto t = strict_transform(c, 1);
  CHECK(t.surface == blow_up_lattice(s));
  CHECK(t.coords == std::vector<long long>{2, 1, 1, 0, 1});
  CHECK(total_transform(c).coords == std::vector<long long>{2, 1, 1, 0, 0});

  auto e = last_exceptional_class(blow_up_lattice(s));
  CHECK(intersect(e, e) == -1);
  CHECK(intersect(t, e) == 1);
}

// 200 random transforms: pairings drop by the product of the centre
// multiplicities and K^2 drops by exactly one.
TEST_CASE("blow-up bookkeeping holds on random classes") {
  std::mt19937_64 rng(20260816);
  std::uniform_int_distribution<int> pick_n(0, 8);
  std::uniform_int_distribution<long long> coord(-4, 4);
  std::uniform_int_distribution<long long> mult(-3, 3);
  std::uniform_int_distribution<int> coin(0, 3);

  for (int trial = 0; trial < 200; ++trial) {
    SurfaceModel s =
        coin(rng) == 0 ? SurfaceModel::quadric() : SurfaceModel::blowup_of_p2(pick_n(rng));
    std::vector<long long> va(s.rank()), vb(s.rank());
    for (auto& x : va) x = coord(rng);
    for (auto& x : vb) x = coord(rng);
    DivisorClass a(s, va), b(s, vb);
    long long ma = mult(rng), mb = mult(rng);

    auto at = strict_transform(a, ma);
    auto bt = strict_transform(b, mb);
    CHECK(intersect(at, bt) == intersect(a, b) - ma * mb);

    auto before = canonical_class(s);
    auto after = canonical_class(blow_up_lattice(s));
    CHECK(intersect(after, after) == intersect(before, before) - 1);

    auto e = last_exceptional_class(blow_up_lattice(s));
    CHECK(intersect(at, e) == ma);
    CHECK(intersect(after, e) == -1);
  }
}

TEST_CASE("classes on different surfaces do not mix") {
  auto a = hyperplane_class(SurfaceModel::blowup_of_p2(1));
  auto b = hyperplane_class(SurfaceModel::blowup_of_p2(2));
  CHECK_THROWS_AS((void)intersect(a, b), std::invalid_argument);
  CHECK_THROWS_AS((void)(a + b), std::invalid_argument);
}
