#include "delpezzo/piecewise.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace delpezzo {

namespace {

Int num(const Rat& v) { return boost::multiprecision::numerator(v); }
Int den(const Rat& v) { return boost::multiprecision::denominator(v); }

int sign(const Rat& v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); }
int sign(const Int& v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); }

}  // namespace

FL FL::of(const Rat& p, const Rat& q, const Rat& r, const Rat& s) {
  if (r == 0 && s == 0) throw std::invalid_argument("FL: zero denominator");
  if (p * s == q * r) {  // constant function; store it as one
    Rat v = r != 0 ? p / r : q / s;
    return FL{num(v), 0, den(v), 0};
  }
  Int l = boost::multiprecision::lcm(boost::multiprecision::lcm(den(p), den(q)),
                                     boost::multiprecision::lcm(den(r), den(s)));
  FL f;
  f.p = num(p * l);
  f.q = num(q * l);
  f.r = num(r * l);
  f.s = num(s * l);
  Int g = boost::multiprecision::gcd(boost::multiprecision::gcd(abs(f.p), abs(f.q)),
                                     boost::multiprecision::gcd(abs(f.r), abs(f.s)));
  if (g > 1) {
    f.p /= g;
    f.q /= g;
    f.r /= g;
    f.s /= g;
  }
  if (f.r < 0 || (f.r == 0 && f.s < 0)) {
    f.p = -f.p;
    f.q = -f.q;
    f.r = -f.r;
    f.s = -f.s;
  }
  return f;
}

Rat FL::eval(const Rat& beta) const {
  Rat d = Rat(r) + Rat(s) * beta;
  if (d == 0) throw std::domain_error("FL: pole at the evaluation point");
  return (Rat(p) + Rat(q) * beta) / d;
}

std::string to_string(const FL& f) {
  static const char* kBeta = "\xce\xb2";
  auto linear = [&](const Int& a, const Int& b) {  // a + b*beta
    std::ostringstream out;
    if (a == 0 && b == 0) return std::string("0");
    if (a != 0) out << a.str();
    if (b != 0) {
      if (b > 0 && a != 0) out << "+";
      if (b == -1)
        out << "-";
      else if (b != 1)
        out << b.str();
      out << kBeta;
    }
    return out.str();
  };
  std::string numerator = linear(f.p, f.q);
  if (f.r == 1 && f.s == 0) return numerator;
  if (f.p != 0 && f.q != 0) numerator = "(" + numerator + ")";
  std::string denominator = linear(f.r, f.s);
  if (f.r != 0 && f.s != 0)
    denominator = "(" + denominator + ")";
  else if (f.s != 0 && f.s != 1)
    denominator = "(" + denominator + ")";
  return numerator + "/" + denominator;
}

PiecewiseFL::PiecewiseFL(std::vector<Piece> pieces) {
  if (pieces.empty()) throw std::logic_error("piecewise: no pieces");
  if (pieces.front().lo != 0) throw std::logic_error("piecewise: domain must start at 0");
  if (pieces.back().hi != 1) throw std::logic_error("piecewise: domain must end at 1");
  for (size_t i = 0; i < pieces.size(); ++i) {
    if (!(pieces[i].lo < pieces[i].hi)) throw std::logic_error("piecewise: empty piece");
    if (i + 1 < pieces.size()) {
      if (pieces[i].hi != pieces[i + 1].lo)
        throw std::logic_error("piecewise: pieces must be contiguous");
      if (pieces[i].f.eval(pieces[i].hi) != pieces[i + 1].f.eval(pieces[i].hi))
        throw std::logic_error("piecewise: discontinuity at " + to_string(pieces[i].hi));
    }
  }
  for (const auto& piece : pieces) {
    if (!pieces_.empty() && pieces_.back().f == piece.f)
      pieces_.back().hi = piece.hi;
    else
      pieces_.push_back(piece);
  }
}

PiecewiseFL PiecewiseFL::constant(const Rat& v) {
  return PiecewiseFL({Piece{0, 1, FL::constant(v)}});
}

PiecewiseFL PiecewiseFL::from_breaks(std::initializer_list<std::pair<Rat, FL>> breaks) {
  std::vector<Piece> pieces;
  Rat lo = 0;
  for (const auto& [hi, f] : breaks) {
    pieces.push_back(Piece{lo, hi, f});
    lo = hi;
  }
  return PiecewiseFL(std::move(pieces));
}

Rat PiecewiseFL::eval(const Rat& beta) const {
  if (beta <= 0 || beta > 1) throw std::domain_error("piecewise: beta outside (0,1]");
  for (const auto& piece : pieces_)
    if (beta <= piece.hi) return piece.f.eval(beta);
  throw std::logic_error("piecewise: unreachable");
}

std::string to_string(const PiecewiseFL& f) {
  std::ostringstream out;
  bool first = true;
  for (const auto& piece : f.pieces()) {
    if (!first) out << "; ";
    out << to_string(piece.f) << " for \xce\xb2\xe2\x88\x88";
    if (first)
      out << "(0," << to_string(piece.hi) << "]";
    else
      out << "[" << to_string(piece.lo) << "," << to_string(piece.hi) << "]";
    first = false;
  }
  return out.str();
}

namespace {

struct Span {
  Rat lo;
  Rat hi;
  FL a;
  FL b;
};

// Common refinement of two piecewise functions by their breakpoint union.
std::vector<Span> refine(const PiecewiseFL& a, const PiecewiseFL& b) {
  std::vector<Rat> cuts{0};
  for (const auto& piece : a.pieces()) cuts.push_back(piece.hi);
  for (const auto& piece : b.pieces()) cuts.push_back(piece.hi);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  auto piece_over = [](const PiecewiseFL& f, const Rat& lo, const Rat& hi) -> const FL& {
    for (const auto& piece : f.pieces())
      if (piece.lo <= lo && hi <= piece.hi) return piece.f;
    throw std::logic_error("piecewise: refinement gap");
  };

  std::vector<Span> spans;
  for (size_t i = 0; i + 1 < cuts.size(); ++i)
    spans.push_back(Span{cuts[i], cuts[i + 1], piece_over(a, cuts[i], cuts[i + 1]),
                         piece_over(b, cuts[i], cuts[i + 1])});
  return spans;
}

void require_positive_denominator(const FL& f, const Rat& lo, const Rat& hi) {
  Rat at_lo = Rat(f.r) + Rat(f.s) * lo;
  Rat at_hi = Rat(f.r) + Rat(f.s) * hi;
  bool ok = at_hi > 0 && (at_lo > 0 || (at_lo == 0 && f.s > 0));
  if (!ok) throw std::logic_error("piecewise: denominator not positive on a piece");
}

// Numerator of a - b over the span: A*beta^2 + B*beta + C.
struct Quad {
  Int A;
  Int B;
  Int C;

  Rat eval(const Rat& beta) const { return (Rat(A) * beta + Rat(B)) * beta + Rat(C); }
};

Quad difference_numerator(const FL& a, const FL& b) {
  return Quad{a.q * b.s - b.q * a.s, a.p * b.s + a.q * b.r - b.p * a.s - b.q * a.r,
              a.p * b.r - b.p * a.r};
}

// Roots of the quadratic inside the open interval, exact. Throws when a sign
// change happens at an irrational point.
std::vector<Rat> interior_roots(const Quad& n, const Rat& lo, const Rat& hi) {
  std::vector<Rat> roots;
  if (n.A == 0) {
    if (n.B != 0) roots.push_back(Rat(-n.C) / Rat(n.B));
  } else {
    Int disc = n.B * n.B - 4 * n.A * n.C;
    if (disc < 0) return {};
    Int root = boost::multiprecision::sqrt(disc);
    if (root * root == disc) {
      roots.push_back(Rat(-n.B + root) / Rat(2 * n.A));
      roots.push_back(Rat(-n.B - root) / Rat(2 * n.A));
    } else {
      // Irrational roots: acceptable only if none lies inside the span.
      Rat v_lo = n.eval(lo);
      Rat v_hi = n.eval(hi);
      Rat vertex = Rat(-n.B) / Rat(2 * n.A);
      bool change = sign(v_lo) * sign(v_hi) < 0;
      if (!change && lo < vertex && vertex < hi)
        change = sign(n.eval(vertex)) * sign(v_lo) < 0;
      if (change) throw std::logic_error("piecewise: irrational crossing");
      return {};
    }
  }
  std::vector<Rat> inside;
  for (const auto& x : roots)
    if (lo < x && x < hi) inside.push_back(x);
  std::sort(inside.begin(), inside.end());
  inside.erase(std::unique(inside.begin(), inside.end()), inside.end());
  return inside;
}

}  // namespace

PiecewiseFL piecewise_min(const PiecewiseFL& a, const PiecewiseFL& b) {
  std::vector<Piece> pieces;
  for (const auto& span : refine(a, b)) {
    require_positive_denominator(span.a, span.lo, span.hi);
    require_positive_denominator(span.b, span.lo, span.hi);
    Quad n = difference_numerator(span.a, span.b);
    std::vector<Rat> cuts{span.lo};
    for (auto& x : interior_roots(n, span.lo, span.hi)) cuts.push_back(x);
    cuts.push_back(span.hi);
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
      Rat mid = (cuts[i] + cuts[i + 1]) / 2;
      pieces.push_back(Piece{cuts[i], cuts[i + 1], n.eval(mid) <= 0 ? span.a : span.b});
    }
  }
  return PiecewiseFL(std::move(pieces));
}

bool pointwise_leq(const PiecewiseFL& a, const PiecewiseFL& b) {
  for (const auto& span : refine(a, b)) {
    require_positive_denominator(span.a, span.lo, span.hi);
    require_positive_denominator(span.b, span.lo, span.hi);
    Quad n = difference_numerator(span.b, span.a);  // need n >= 0 throughout
    if (n.eval(span.lo) < 0 || n.eval(span.hi) < 0) return false;
    if (n.A > 0) {
      Rat vertex = Rat(-n.B) / Rat(2 * n.A);
      if (span.lo < vertex && vertex < span.hi && n.eval(vertex) < 0) return false;
    }
  }
  return true;
}

KeeInterval kee_interval(const PiecewiseFL& alpha, const Rat& threshold) {
  for (const auto& piece : alpha.pieces()) {
    require_positive_denominator(piece.f, piece.lo, piece.hi);
    if (piece.f.q * piece.f.r - piece.f.p * piece.f.s > 0)
      throw std::invalid_argument("kee_interval: function must be non-increasing");
  }
  for (const auto& piece : alpha.pieces()) {
    if (piece.f.eval(piece.hi) > threshold) continue;
    // First piece dipping to the threshold; locate the crossing exactly.
    Int tn = num(threshold), td = den(threshold);
    Int coeff = td * piece.f.q - tn * piece.f.s;
    Int rhs = tn * piece.f.r - td * piece.f.p;
    Rat star = coeff == 0 ? piece.lo : Rat(rhs) / Rat(coeff);
    if (star < piece.lo) star = piece.lo;
    return KeeInterval{star, false};
  }
  return KeeInterval{1, true};
}

std::string to_string(const KeeInterval& k) {
  return "(0," + to_string(k.upper) + (k.closed ? "]" : ")");
}

}  // namespace delpezzo
