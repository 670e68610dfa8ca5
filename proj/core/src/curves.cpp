#include "delpezzo/curves.hpp"

#include <algorithm>
#include <stdexcept>

namespace delpezzo {

namespace {

void require_base_model(const SurfaceModel& s, const char* who) {
  if (s.extra != 0)
    throw std::domain_error(std::string(who) + ": unsupported on extended lattices");
}

// All tuples (m1..mn) with mi >= 0, sum = target_sum, sum of squares =
// target_sq, appended to `out` behind the fixed head coordinate d.
void search_multiplicities(int n, long long target_sum, long long target_sq,
                           std::vector<long long>& partial,
                           std::vector<std::vector<long long>>& out) {
  int slot = static_cast<int>(partial.size()) - 1;
  if (slot == n) {
    if (target_sum == 0 && target_sq == 0) out.push_back(partial);
    return;
  }
  for (long long m = 0; m <= target_sum; ++m) {
    if (m * m > target_sq) break;
    partial.push_back(m);
    search_multiplicities(n, target_sum - m, target_sq - m * m, partial, out);
    partial.pop_back();
  }
}

std::vector<DivisorClass> plane_classes(const SurfaceModel& s, int deg, int self_int) {
  const int n = s.blown_up;
  std::vector<std::vector<long long>> raw;
  for (long long d = 1; d <= 100; ++d) {
    // Schwarz: (sum mi)^2 <= n * sum mi^2.
    long long lin = 3 * d - deg;
    long long quad = d * d - self_int;
    if (lin < 0 || quad < 0) continue;
    if (lin * lin > static_cast<long long>(n) * quad) {
      if (3 * d > deg && (9 - n) * d > 3 * deg) break;  // past the feasible root
      continue;
    }
    std::vector<long long> partial{d};
    search_multiplicities(n, lin, quad, partial, raw);
  }
  std::vector<DivisorClass> out;
  out.reserve(raw.size());
  for (auto& v : raw) out.emplace_back(s, std::move(v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<DivisorClass> enumerate_lines(const SurfaceModel& s) {
  require_base_model(s, "enumerate_lines");
  if (s.kind == SurfaceKind::Quadric) return {};
  std::vector<DivisorClass> out;
  for (int i = 1; i <= s.blown_up; ++i) out.push_back(exceptional_class(s, i));
  auto positive = plane_classes(s, 1, -1);
  out.insert(out.end(), positive.begin(), positive.end());
  std::sort(out.begin(), out.end());
  return out;
}

LineType classify_line(const DivisorClass& c) {
  if (c.surface.kind != SurfaceKind::BlowupOfP2)
    throw std::invalid_argument("classify_line: plane model required");
  switch (c.coords[0]) {
    case 0: return LineType::E;
    case 1: return LineType::L;
    case 2: return LineType::C;
    case 3: return LineType::Q;
    case 4: return LineType::R;
    case 5: return LineType::T;
    case 6: return LineType::Z;
    default: throw std::invalid_argument("classify_line: not a line class");
  }
}

std::string to_string(LineType t) {
  switch (t) {
    case LineType::E: return "E";
    case LineType::L: return "L";
    case LineType::C: return "C";
    case LineType::Q: return "Q";
    case LineType::R: return "R";
    case LineType::T: return "T";
    case LineType::Z: return "Z";
  }
  return "?";
}

std::map<LineType, int> line_type_counts(const SurfaceModel& s) {
  std::map<LineType, int> counts;
  for (const auto& line : enumerate_lines(s)) ++counts[classify_line(line)];
  return counts;
}

std::vector<DivisorClass> enumerate_classes(const SurfaceModel& s, int deg, int self_int) {
  require_base_model(s, "enumerate_classes");
  if (deg < 1 || deg > 4)
    throw std::domain_error("enumerate_classes: degree must be in 1..4");
  if (self_int < -20 || self_int > 20)
    throw std::domain_error("enumerate_classes: self-intersection out of supported range");
  if (s.kind == SurfaceKind::Quadric) {
    std::vector<DivisorClass> out;
    if (deg % 2 != 0) return out;
    for (long long a = 0; 2 * a <= deg; ++a) {
      long long b = deg / 2 - a;
      if (2 * a * b == self_int) out.emplace_back(s, std::vector<long long>{a, b});
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  return plane_classes(s, deg, self_int);
}

std::vector<DivisorClass> mori_generators(const SurfaceModel& s) {
  require_base_model(s, "mori_generators");
  if (s.kind == SurfaceKind::Quadric) return {ruling_class(s, 1), ruling_class(s, 2)};
  if (s.blown_up == 0) return {hyperplane_class(s)};
  if (s.blown_up == 1) {
    DivisorClass fibre(s, {1, 1});
    return {exceptional_class(s, 1), fibre};
  }
  return enumerate_lines(s);
}

bool is_nef(const DivisorClass& c) {
  for (const auto& g : mori_generators(c.surface))
    if (intersect(c, g) < 0) return false;
  return true;
}

bool is_ample(const DivisorClass& c) {
  if (self_intersection(c) <= 0) return false;
  for (const auto& g : mori_generators(c.surface))
    if (intersect(c, g) <= 0) return false;
  return true;
}

namespace {

// q(beta) = A beta^2 + B beta + C > 0 on (0,1], decided exactly.
bool quadratic_positive_on_half_open_unit(long long A, long long B, long long C) {
  long long q0 = C;
  long long q1 = A + B + C;
  if (q1 <= 0) return false;
  if (q0 < 0) return false;
  // Concave or linear: the graph lies above the chord, and q0 >= 0, q1 > 0
  // force positivity on the open part.
  if (A <= 0) return true;
  // Convex: an interior minimum exists only when the vertex lies in (0,1).
  // vertex v = -B / (2A); membership checked without division.
  if (-B > 0 && -B < 2 * A) {
    // min value has the sign of 4AC - B^2.
    if (4 * A * C - B * B <= 0) return false;
  }
  return true;
}

}  // namespace

bool ample_window_check(const DivisorClass& c) {
  if (arithmetic_genus(c) != 0)
    throw std::invalid_argument("ample_window_check: class must have arithmetic genus 0");
  const DivisorClass minus_k = -canonical_class(c.surface);
  const DivisorClass limit = minus_k - c;  // beta -> 0 endpoint of -(K + (1-beta)c)
  for (const auto& g : mori_generators(c.surface)) {
    // Affine in beta with value (-K).g >= 1 at beta = 1.
    if (intersect(limit, g) < 0) return false;
  }
  // Self-intersection of beta*(-K) + (1-beta)*(-K-c).
  const long long k2 = intersect(minus_k, minus_k);
  const long long mixed = intersect(minus_k, limit);
  const long long lim2 = intersect(limit, limit);
  const long long A = k2 - 2 * mixed + lim2;
  const long long B = 2 * mixed - 2 * lim2;
  const long long C = lim2;
  return quadratic_positive_on_half_open_unit(A, B, C);
}

}  // namespace delpezzo
