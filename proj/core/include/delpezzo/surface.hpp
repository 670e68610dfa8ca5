#pragma once

#include <compare>
#include <string>
#include <vector>

#include "delpezzo/rational.hpp"

namespace delpezzo {

enum class SurfaceKind { BlowupOfP2, Quadric };

// A smooth rational surface presented as either P^2 blown up in n points in
// general position (degree 9-n) or P^1 x P^1 (degree 8), possibly carrying
// `extra` further exceptional directions produced by resolution blow-ups.
struct SurfaceModel {
  SurfaceKind kind = SurfaceKind::BlowupOfP2;
  int blown_up = 0;  // n; always 0 for the quadric
  int extra = 0;

  static SurfaceModel blowup_of_p2(int n);
  static SurfaceModel quadric();

  int rank() const {
    return (kind == SurfaceKind::Quadric ? 2 : 1 + blown_up) + extra;
  }
  long long degree() const {
    return (kind == SurfaceKind::Quadric ? 8 : 9 - blown_up) - extra;
  }

  friend bool operator==(const SurfaceModel&, const SurfaceModel&) = default;
};

std::string to_string(const SurfaceModel& s);

// Divisor class in the Picard lattice of `surface`.
//
// BlowupOfP2 coordinates (d; m1..mn, e1..e_extra) denote
// d*H - sum mi*Ei - sum ej*Fj, so E1 = (0;-1,0,...), L12 = (1;1,1,0,...),
// -K = (3;1,..,1). Pairing: d*d' - sum mi*mi' - sum ej*ej'.
// Quadric coordinates (a, b, e1..e_extra) pair as a*b' + a'*b - sum ej*ej'.
struct DivisorClass {
  SurfaceModel surface;
  std::vector<long long> coords;

  DivisorClass(SurfaceModel s, std::vector<long long> c);

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
  // Lexicographic on coordinates; only classes on equal surfaces compare.
  std::strong_ordering operator<=>(const DivisorClass& other) const;
};

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator-(const DivisorClass& a);
DivisorClass operator*(long long k, const DivisorClass& a);

std::string to_string(const DivisorClass& c);

long long intersect(const DivisorClass& a, const DivisorClass& b);
DivisorClass canonical_class(const SurfaceModel& s);
DivisorClass zero_class(const SurfaceModel& s);

// Basis accessors. `exceptional_class(s, i)` is 1-based over the n blown-up
// points followed by the extra directions.
DivisorClass hyperplane_class(const SurfaceModel& s);
DivisorClass ruling_class(const SurfaceModel& s, int which);
DivisorClass exceptional_class(const SurfaceModel& s, int i);

long long degree(const DivisorClass& c);  // (-K).c
long long self_intersection(const DivisorClass& c);
Rat arithmetic_genus(const DivisorClass& c);        // (K.c + c^2 + 2)/2
long long riemann_roch_lower_bound(const DivisorClass& c);  // c.(c-K)/2 + 1

SurfaceModel blow_up_lattice(const SurfaceModel& s);

// Class of c on the blown-up lattice when c passes through the centre with
// multiplicity m; m = 0 is the total transform.
DivisorClass strict_transform(const DivisorClass& c, long long m);
DivisorClass total_transform(const DivisorClass& c);

// The exceptional class of the last blow-up recorded in s (requires extra > 0).
DivisorClass last_exceptional_class(const SurfaceModel& s);

}  // namespace delpezzo
