#pragma once

#include <map>
#include <string>
#include <vector>

#include "delpezzo/surface.hpp"

namespace delpezzo {

// Classes of (-1)-curves, sorted lexicographically. Empty on the quadric.
std::vector<DivisorClass> enumerate_lines(const SurfaceModel& s);

// Letter tags for the (-1)-curve shapes, keyed by (d, sorted multiplicities):
// E exceptional, L line through 2 points, C conic through 5, Q cubic with one
// double point, R quartic with three, T quintic with six, Z sextic.
enum class LineType { E, L, C, Q, R, T, Z };
LineType classify_line(const DivisorClass& c);
std::string to_string(LineType t);
std::map<LineType, int> line_type_counts(const SurfaceModel& s);

// All classes of given anticanonical degree (1..4) and self-intersection,
// with nonnegative multiplicities; the search is exhaustive within the
// Schwarz bound. Throws std::domain_error outside the supported range.
std::vector<DivisorClass> enumerate_classes(const SurfaceModel& s, int deg, int self_int);

// Extremal generators of the effective cone: lines for n >= 2, with the
// fibre/hyperplane classes added on the low-rank models.
std::vector<DivisorClass> mori_generators(const SurfaceModel& s);

bool is_nef(const DivisorClass& c);
bool is_ample(const DivisorClass& c);

// Whether -(K + (1-beta)c) is ample for every beta in (0,1].
// Requires arithmetic_genus(c) == 0; throws std::invalid_argument otherwise.
// Positivity against each extremal generator is affine in beta (checked at
// both endpoints); the self-intersection is a quadratic in beta whose
// positivity on (0,1] is decided exactly.
bool ample_window_check(const DivisorClass& c);

}  // namespace delpezzo
