#pragma once

#include <optional>
#include <string>
#include <vector>

namespace delpezzo {

// One local branch of a curve at a point, described by its multiplicity
// sequence at the chain of infinitely near points. The stored sequence is
// positive and non-increasing; positions past the end are implicitly 1
// (the branch is eventually smooth).
struct Branch {
  std::vector<int> mults;  // empty means smooth from the start

  long long mult_at(int pos) const {
    return pos < static_cast<int>(mults.size()) ? mults[pos] : 1;
  }
  bool smooth_from(int pos) const {
    for (int i = pos; i < static_cast<int>(mults.size()); ++i)
      if (mults[i] > 1) return false;
    return true;
  }

  friend bool operator==(const Branch&, const Branch&) = default;
};

inline Branch smooth_branch() { return Branch{}; }

// Branch of x^m = y^n (2 <= m < n): multiplicities by the subtractive
// Euclidean algorithm on (m, n). Throws std::invalid_argument otherwise.
Branch quasi_homogeneous_branch(int m, int n);

// Index of the earlier point (if any) the point at `pos` is proximate to
// besides its immediate predecessor; satellite points lie on exactly two
// exceptional divisors. Enriques rule: the unique i < pos-1 whose
// multiplicity still covers the block sum through `pos`.
std::optional<int> proximity_extra(const Branch& b, int pos);

// Contact between branches `a` and `b`: they pass through the same first
// `depth` infinitely near points. Unlisted pairs at a common point default
// to depth 1.
struct Contact {
  int a = 0;
  int b = 0;
  int depth = 1;

  friend bool operator==(const Contact&, const Contact&) = default;
};

// Local configuration at one point: branches and their pairwise contacts.
struct Germ {
  std::vector<Branch> branches;
  std::vector<Contact> contacts;

  int shared_depth(int a, int b) const;
};

// Local intersection number of two branches: sum over the shared infinitely
// near points of the multiplicity products.
long long local_intersection(const Germ& g, int a, int b);

struct GermCheck {
  bool ok = true;
  std::string diagnostic;
};

// Diagnostic validation; never throws. Checks sequence validity, contact
// sanity, the tree condition (the minimum of the three pairwise depths of
// any triple is attained at least twice), and proximity agreement along
// shared prefixes (two branches through the same chain of points must agree
// on which of those points are satellite).
GermCheck validate_germ(const Germ& g);

}  // namespace delpezzo
