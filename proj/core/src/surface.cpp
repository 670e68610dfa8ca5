#include "delpezzo/surface.hpp"

#include <sstream>
#include <stdexcept>

namespace delpezzo {

SurfaceModel SurfaceModel::blowup_of_p2(int n) {
  if (n < 0 || n > 8) throw std::invalid_argument("blowup_of_p2: n must be in 0..8");
  return SurfaceModel{SurfaceKind::BlowupOfP2, n, 0};
}

SurfaceModel SurfaceModel::quadric() {
  return SurfaceModel{SurfaceKind::Quadric, 0, 0};
}

std::string to_string(const SurfaceModel& s) {
  std::ostringstream out;
  if (s.kind == SurfaceKind::Quadric)
    out << "P1xP1";
  else
    out << "Bl" << s.blown_up << "P2";
  if (s.extra > 0) out << "+" << s.extra;
  return out.str();
}

DivisorClass::DivisorClass(SurfaceModel s, std::vector<long long> c)
    : surface(s), coords(std::move(c)) {
  if (static_cast<int>(coords.size()) != surface.rank())
    throw std::invalid_argument("DivisorClass: coordinate count does not match lattice rank");
}

std::strong_ordering DivisorClass::operator<=>(const DivisorClass& other) const {
  if (!(surface == other.surface))
    throw std::invalid_argument("DivisorClass comparison across different surfaces");
  return coords <=> other.coords;
}

static void require_same_surface(const DivisorClass& a, const DivisorClass& b,
                                 const char* who) {
  if (!(a.surface == b.surface))
    throw std::invalid_argument(std::string(who) + ": classes live on different lattices");
}

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
  require_same_surface(a, b, "operator+");
  std::vector<long long> c(a.coords);
  for (size_t i = 0; i < c.size(); ++i) c[i] += b.coords[i];
  return DivisorClass(a.surface, std::move(c));
}

DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
  require_same_surface(a, b, "operator-");
  std::vector<long long> c(a.coords);
  for (size_t i = 0; i < c.size(); ++i) c[i] -= b.coords[i];
  return DivisorClass(a.surface, std::move(c));
}

DivisorClass operator-(const DivisorClass& a) {
  std::vector<long long> c(a.coords);
  for (auto& x : c) x = -x;
  return DivisorClass(a.surface, std::move(c));
}

DivisorClass operator*(long long k, const DivisorClass& a) {
  std::vector<long long> c(a.coords);
  for (auto& x : c) x *= k;
  return DivisorClass(a.surface, std::move(c));
}

std::string to_string(const DivisorClass& c) {
  std::ostringstream out;
  const size_t head = c.surface.kind == SurfaceKind::Quadric ? 2 : 1;
  out << "(";
  for (size_t i = 0; i < c.coords.size(); ++i) {
    if (i > 0) out << (i == head ? ";" : ",");
    out << c.coords[i];
  }
  out << ")";
  return out.str();
}

long long intersect(const DivisorClass& a, const DivisorClass& b) {
  require_same_surface(a, b, "intersect");
  const auto& s = a.surface;
  long long acc = 0;
  size_t first;
  if (s.kind == SurfaceKind::Quadric) {
    acc = a.coords[0] * b.coords[1] + a.coords[1] * b.coords[0];
    first = 2;
  } else {
    acc = a.coords[0] * b.coords[0];
    first = 1;
  }
  for (size_t i = first; i < a.coords.size(); ++i) acc -= a.coords[i] * b.coords[i];
  return acc;
}

DivisorClass canonical_class(const SurfaceModel& s) {
  std::vector<long long> c(s.rank());
  if (s.kind == SurfaceKind::Quadric) {
    c[0] = -2;
    c[1] = -2;
    for (int i = 2; i < s.rank(); ++i) c[i] = -1;
  } else {
    c[0] = -3;
    for (int i = 1; i < s.rank(); ++i) c[i] = -1;
  }
  return DivisorClass(s, std::move(c));
}

DivisorClass zero_class(const SurfaceModel& s) {
  return DivisorClass(s, std::vector<long long>(s.rank(), 0));
}

DivisorClass hyperplane_class(const SurfaceModel& s) {
  if (s.kind != SurfaceKind::BlowupOfP2)
    throw std::invalid_argument("hyperplane_class: not a plane model");
  std::vector<long long> c(s.rank(), 0);
  c[0] = 1;
  return DivisorClass(s, std::move(c));
}

DivisorClass ruling_class(const SurfaceModel& s, int which) {
  if (s.kind != SurfaceKind::Quadric)
    throw std::invalid_argument("ruling_class: not a quadric model");
  if (which != 1 && which != 2) throw std::invalid_argument("ruling_class: which must be 1 or 2");
  std::vector<long long> c(s.rank(), 0);
  c[which - 1] = 1;
  return DivisorClass(s, std::move(c));
}

DivisorClass exceptional_class(const SurfaceModel& s, int i) {
  int base = s.kind == SurfaceKind::Quadric ? 2 : 1;
  int count = (s.kind == SurfaceKind::Quadric ? 0 : s.blown_up) + s.extra;
  if (i < 1 || i > count)
    throw std::invalid_argument("exceptional_class: index out of range");
  std::vector<long long> c(s.rank(), 0);
  c[base + i - 1] = -1;
  return DivisorClass(s, std::move(c));
}

long long degree(const DivisorClass& c) {
  return intersect(-canonical_class(c.surface), c);
}

long long self_intersection(const DivisorClass& c) { return intersect(c, c); }

Rat arithmetic_genus(const DivisorClass& c) {
  long long kc = intersect(canonical_class(c.surface), c);
  long long cc = intersect(c, c);
  return Rat(kc + cc + 2, 2);
}

long long riemann_roch_lower_bound(const DivisorClass& c) {
  DivisorClass k = canonical_class(c.surface);
  long long v = intersect(c, c - k);
  // c.(c-K) is even on these lattices.
  return v / 2 + 1;
}

SurfaceModel blow_up_lattice(const SurfaceModel& s) {
  SurfaceModel t = s;
  t.extra += 1;
  return t;
}

DivisorClass strict_transform(const DivisorClass& c, long long m) {
  SurfaceModel t = blow_up_lattice(c.surface);
  std::vector<long long> v(c.coords);
  v.push_back(m);
  return DivisorClass(t, std::move(v));
}

DivisorClass total_transform(const DivisorClass& c) { return strict_transform(c, 0); }

DivisorClass last_exceptional_class(const SurfaceModel& s) {
  if (s.extra < 1)
    throw std::invalid_argument("last_exceptional_class: lattice has no extra directions");
  std::vector<long long> c(s.rank(), 0);
  c.back() = -1;
  return DivisorClass(s, std::move(c));
}

}  // namespace delpezzo
