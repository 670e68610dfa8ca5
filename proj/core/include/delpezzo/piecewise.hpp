#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "delpezzo/rational.hpp"

namespace delpezzo {

// Fractional-linear function (p + q*beta) / (r + s*beta) with integer
// coefficients, kept primitive with the first nonzero of (r, s) positive.
struct FL {
  Int p = 0;
  Int q = 0;
  Int r = 1;
  Int s = 0;

  static FL of(const Rat& p, const Rat& q, const Rat& r, const Rat& s);
  static FL constant(const Rat& v) { return of(v, 0, 1, 0); }

  Rat eval(const Rat& beta) const;

  friend bool operator==(const FL&, const FL&) = default;
};

std::string to_string(const FL& f);

// One piece of a piecewise function on (0, 1]: the interval (lo, hi].
struct Piece {
  Rat lo;
  Rat hi;
  FL f;

  friend bool operator==(const Piece&, const Piece&) = default;
};

// Piecewise fractional-linear function on (0, 1]. Pieces are contiguous,
// start at 0, end at 1, and agree at shared breakpoints; construction
// canonicalizes (primitive coefficients, equal neighbours merged) and
// throws std::logic_error on a discontinuity or bad interval structure.
class PiecewiseFL {
 public:
  PiecewiseFL() : PiecewiseFL(constant(1).pieces_) {}
  explicit PiecewiseFL(std::vector<Piece> pieces);

  static PiecewiseFL constant(const Rat& v);
  // Pieces listed as (hi, f) with lo chained from 0; the last hi must be 1.
  static PiecewiseFL from_breaks(std::initializer_list<std::pair<Rat, FL>> breaks);

  const std::vector<Piece>& pieces() const { return pieces_; }
  Rat eval(const Rat& beta) const;  // throws std::domain_error outside (0, 1]

  friend bool operator==(const PiecewiseFL&, const PiecewiseFL&) = default;

 private:
  std::vector<Piece> pieces_;
};

std::string to_string(const PiecewiseFL& f);

// Pointwise minimum. Crossings inside a piece are located exactly; an
// irrational crossing throws std::logic_error.
PiecewiseFL piecewise_min(const PiecewiseFL& a, const PiecewiseFL& b);

// Exact check of a(beta) <= b(beta) for every beta in (0, 1].
bool pointwise_leq(const PiecewiseFL& a, const PiecewiseFL& b);

// Largest interval (0, upper) or (0, upper] on which `alpha` stays strictly
// above the threshold. Requires `alpha` non-increasing.
struct KeeInterval {
  Rat upper;
  bool closed = false;

  friend bool operator==(const KeeInterval&, const KeeInterval&) = default;
};

KeeInterval kee_interval(const PiecewiseFL& alpha, const Rat& threshold = Rat(2, 3));

std::string to_string(const KeeInterval& k);

}  // namespace delpezzo
