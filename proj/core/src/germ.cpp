#include "delpezzo/germ.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace delpezzo {

Branch quasi_homogeneous_branch(int m, int n) {
  if (m < 2) throw std::invalid_argument("quasi_homogeneous_branch: m must be at least 2");
  if (n <= m) throw std::invalid_argument("quasi_homogeneous_branch: need m < n");
  Branch b;
  int x = m, y = n;
  while (x > 0 && y > 0) {
    if (x <= y) {
      b.mults.push_back(x);
      y -= x;
    } else {
      b.mults.push_back(y);
      x -= y;
    }
  }
  return b;
}

std::optional<int> proximity_extra(const Branch& b, int pos) {
  if (pos < 2) return std::nullopt;
  for (int i = pos - 2; i >= 0; --i) {
    long long cap = b.mult_at(i);
    long long before = 0;
    for (int k = i + 1; k < pos; ++k) before += b.mult_at(k);
    if (before >= cap) continue;  // the budget of point i is already exhausted
    if (before + b.mult_at(pos) <= cap) return i;
  }
  return std::nullopt;
}

int Germ::shared_depth(int a, int b) const {
  for (const auto& c : contacts) {
    if ((c.a == a && c.b == b) || (c.a == b && c.b == a)) return c.depth;
  }
  return 1;
}

long long local_intersection(const Germ& g, int a, int b) {
  const int count = static_cast<int>(g.branches.size());
  if (a < 0 || a >= count || b < 0 || b >= count)
    throw std::out_of_range("local_intersection: branch index out of range");
  if (a == b) throw std::invalid_argument("local_intersection: branches must differ");
  long long acc = 0;
  const int depth = g.shared_depth(a, b);
  for (int l = 0; l < depth; ++l) acc += g.branches[a].mult_at(l) * g.branches[b].mult_at(l);
  return acc;
}

namespace {

GermCheck fail(std::string message) { return GermCheck{false, std::move(message)}; }

}  // namespace

GermCheck validate_germ(const Germ& g) {
  const int count = static_cast<int>(g.branches.size());
  if (count == 0) return fail("no branches at the point");

  for (int i = 0; i < count; ++i) {
    const auto& m = g.branches[i].mults;
    for (size_t k = 0; k < m.size(); ++k) {
      if (m[k] < 1) {
        std::ostringstream out;
        out << "branch " << i << ": multiplicity at position " << k << " is not positive";
        return fail(out.str());
      }
      if (k > 0 && m[k] > m[k - 1]) {
        std::ostringstream out;
        out << "branch " << i << ": multiplicity sequence increases at position " << k;
        return fail(out.str());
      }
    }
  }

  std::vector<std::vector<int>> depth(count, std::vector<int>(count, 1));
  std::vector<std::vector<bool>> listed(count, std::vector<bool>(count, false));
  for (const auto& c : g.contacts) {
    if (c.a < 0 || c.a >= count || c.b < 0 || c.b >= count)
      return fail("contact references a missing branch");
    if (c.a == c.b) return fail("contact pairs a branch with itself");
    if (c.depth < 1) return fail("contact depth must be at least 1");
    if (listed[c.a][c.b]) return fail("duplicate contact pair");
    listed[c.a][c.b] = listed[c.b][c.a] = true;
    depth[c.a][c.b] = depth[c.b][c.a] = c.depth;
  }

  for (int a = 0; a < count; ++a)
    for (int b = a + 1; b < count; ++b)
      for (int c = b + 1; c < count; ++c) {
        int ab = depth[a][b], ac = depth[a][c], bc = depth[b][c];
        int lo = std::min({ab, ac, bc});
        int hits = (ab == lo) + (ac == lo) + (bc == lo);
        if (hits < 2) {
          std::ostringstream out;
          out << "contact depths of branches " << a << "," << b << "," << c
              << " are (" << ab << "," << ac << "," << bc
              << "): the minimum must be attained at least twice";
          return fail(out.str());
        }
      }

  for (int a = 0; a < count; ++a)
    for (int b = a + 1; b < count; ++b) {
      for (int l = 1; l < depth[a][b]; ++l) {
        if (proximity_extra(g.branches[a], l) != proximity_extra(g.branches[b], l)) {
          std::ostringstream out;
          out << "branches " << a << " and " << b << " share the point at position " << l
              << " but disagree on its satellite structure";
          return fail(out.str());
        }
      }
    }

  return GermCheck{};
}

}  // namespace delpezzo
