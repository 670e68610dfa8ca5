#pragma once

#include <optional>
#include <string>
#include <vector>

#include "delpezzo/germ.hpp"
#include "delpezzo/rational.hpp"
#include "delpezzo/surface.hpp"

namespace delpezzo {

// Symbolic divisor coefficient c0 + c1*beta + c2*lambda*beta.
struct CoeffForm {
  Rat c0 = 0;
  Rat c1 = 0;
  Rat c2 = 0;

  static CoeffForm boundary() { return CoeffForm{1, -1, 0}; }  // (1-beta)
  static CoeffForm scaled(Rat w) { return CoeffForm{0, 0, std::move(w)}; }
  static CoeffForm constant(Rat a) { return CoeffForm{std::move(a), 0, 0}; }

  Rat eval(const Rat& beta, const Rat& lambda) const {
    return c0 + c1 * beta + c2 * lambda * beta;
  }

  friend bool operator==(const CoeffForm&, const CoeffForm&) = default;
};

CoeffForm operator+(const CoeffForm& a, const CoeffForm& b);
CoeffForm operator-(const CoeffForm& a, const CoeffForm& b);
CoeffForm operator*(const Rat& k, const CoeffForm& a);
std::string to_string(const CoeffForm& f);  // terms ordered lambda*beta, beta, const

struct WeightedCurve {
  std::string id;
  DivisorClass cls;
  CoeffForm coeff;
  bool smooth = true;  // globally smooth; singular branches are germ data
};

struct PointBranch {
  int curve = 0;  // index into PairConfig::curves
  Branch branch;
};

struct DeclaredPoint {
  std::string id;
  std::vector<PointBranch> branches;
  std::vector<Contact> contacts;  // indices into `branches`

  Germ germ() const;
};

// A log pair (S, sum coeff_i * C_i) with its singular incidence data.
// `complete` asserts that the declared points carry the full intersection
// of every pair of listed curves.
struct PairConfig {
  SurfaceModel surface;
  std::vector<WeightedCurve> curves;
  std::vector<DeclaredPoint> points;
  bool complete = false;
};

struct ConfigCheck {
  bool ok = true;
  std::string diagnostic;
};

// Germ validation at every point, index sanity, lambda-weight sanity
// (c2 >= 0), and class/incidence consistency: summed local intersections
// never exceed the lattice pairing, with equality when `complete`.
ConfigCheck validate_config(const PairConfig& cfg);

struct ExceptionalRecord {
  CoeffForm coeff;
  std::string point_id;  // the declared point this divisor lies over
  int depth = 0;         // 0 for the first blow-up at the point
};

struct ResolutionResult {
  int blow_up_count = 0;
  std::vector<ExceptionalRecord> exceptionals;  // in blow-up order
  SurfaceModel final_surface;
  std::vector<DivisorClass> curve_classes;        // strict transforms
  std::vector<DivisorClass> exceptional_classes;  // parallel to `exceptionals`

  ResolutionResult() : final_surface(SurfaceModel::blowup_of_p2(0)) {}
};

// Stepwise minimal log resolution. Centres are processed depth-first in
// declaration order, so the output is deterministic. A blow-up happens only
// where normal crossings fail: a multiple branch, three or more divisors
// through one point, a tangency (shared depth >= 2, or a branch continuing
// along an exceptional divisor), or two branches of one curve.
class ResolutionEngine {
 public:
  explicit ResolutionEngine(const PairConfig& cfg);  // throws on invalid config

  bool done();
  // Performs the next blow-up and returns its record.
  // Throws std::logic_error when the configuration is already resolved.
  ExceptionalRecord blow_up_once();
  ResolutionResult finish();

 private:
  struct BranchState {
    int curve = 0;
    Branch data;
    int pos = 0;
    std::vector<int> exc_at_pos;  // exceptional index created at each position
  };
  struct Centre {
    std::string point_id;
    int depth = 0;
    std::vector<int> branches;
    std::vector<int> excs;
  };

  bool violates_snc(const Centre& c) const;

  PairConfig cfg_;
  std::vector<BranchState> branches_;
  std::vector<std::vector<int>> remaining_;  // pairwise remaining shared depth
  std::vector<Centre> stack_;
  ResolutionResult result_;
  int safety_ = 0;
};

ResolutionResult minimal_log_resolution(const PairConfig& cfg);

// All coefficients (curves and exceptionals over the minimal log resolution)
// at the given parameter values are <= 1. With `at` set, only the divisors
// meeting the fibre over that declared point are examined.
bool is_log_canonical(const PairConfig& cfg, const Rat& beta, const Rat& lambda,
                      const std::optional<std::string>& at = std::nullopt);

}  // namespace delpezzo
