#include "delpezzo/resolution.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace delpezzo {

CoeffForm operator+(const CoeffForm& a, const CoeffForm& b) {
  return CoeffForm{a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2};
}

CoeffForm operator-(const CoeffForm& a, const CoeffForm& b) {
  return CoeffForm{a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2};
}

CoeffForm operator*(const Rat& k, const CoeffForm& a) {
  return CoeffForm{k * a.c0, k * a.c1, k * a.c2};
}

std::string to_string(const CoeffForm& f) {
  std::ostringstream out;
  bool first = true;
  auto emit = [&](const Rat& c, const char* unit) {
    if (c == 0) return;
    Rat mag = c < 0 ? Rat(-c) : c;
    if (c < 0)
      out << "-";
    else if (!first)
      out << "+";
    bool unit_term = unit[0] != '\0';
    if (!unit_term || mag != 1) {
      if (boost::multiprecision::denominator(mag) != 1 && unit_term)
        out << "(" << to_string(mag) << ")";
      else
        out << to_string(mag);
    }
    out << unit;
    first = false;
  };
  emit(f.c2, "\xce\xbb\xce\xb2");  // lambda beta
  emit(f.c1, "\xce\xb2");
  emit(f.c0, "");
  if (first) out << "0";
  return out.str();
}

Germ DeclaredPoint::germ() const {
  Germ g;
  g.branches.reserve(branches.size());
  for (const auto& pb : branches) g.branches.push_back(pb.branch);
  g.contacts = contacts;
  return g;
}

namespace {

ConfigCheck config_fail(std::string message) { return ConfigCheck{false, std::move(message)}; }

}  // namespace

ConfigCheck validate_config(const PairConfig& cfg) {
  std::set<std::string> curve_ids;
  for (size_t i = 0; i < cfg.curves.size(); ++i) {
    const auto& c = cfg.curves[i];
    if (c.id.empty()) return config_fail("curve " + std::to_string(i) + ": empty id");
    if (!curve_ids.insert(c.id).second)
      return config_fail("duplicate curve id '" + c.id + "'");
    if (!(c.cls.surface == cfg.surface))
      return config_fail("curve '" + c.id + "': class lattice does not match the surface");
    if (c.coeff.c2 < 0)
      return config_fail("curve '" + c.id + "': negative lambda weight");
  }

  std::set<std::string> point_ids;
  for (const auto& p : cfg.points) {
    if (p.id.empty()) return config_fail("point with empty id");
    if (!point_ids.insert(p.id).second)
      return config_fail("duplicate point id '" + p.id + "'");
    for (const auto& pb : p.branches) {
      if (pb.curve < 0 || pb.curve >= static_cast<int>(cfg.curves.size()))
        return config_fail("point '" + p.id + "': branch references a missing curve");
      if (cfg.curves[pb.curve].smooth && !pb.branch.smooth_from(0))
        return config_fail("point '" + p.id + "': singular branch on curve '" +
                           cfg.curves[pb.curve].id + "' marked smooth");
    }
    GermCheck germ_check = validate_germ(p.germ());
    if (!germ_check.ok)
      return config_fail("point '" + p.id + "': " + germ_check.diagnostic);
  }

  for (size_t i = 0; i < cfg.curves.size(); ++i)
    for (size_t j = i + 1; j < cfg.curves.size(); ++j) {
      long long pairing = intersect(cfg.curves[i].cls, cfg.curves[j].cls);
      long long local_total = 0;
      for (const auto& p : cfg.points) {
        Germ g = p.germ();
        for (size_t a = 0; a < p.branches.size(); ++a)
          for (size_t b = a + 1; b < p.branches.size(); ++b) {
            size_t lo = static_cast<size_t>(p.branches[a].curve);
            size_t hi = static_cast<size_t>(p.branches[b].curve);
            if (lo > hi) std::swap(lo, hi);
            if (lo == i && hi == j)
              local_total += local_intersection(g, static_cast<int>(a), static_cast<int>(b));
          }
      }
      if (local_total > pairing) {
        std::ostringstream out;
        out << "curves '" << cfg.curves[i].id << "' and '" << cfg.curves[j].id
            << "': declared local intersections total " << local_total
            << " but the classes pair to " << pairing;
        return config_fail(out.str());
      }
      if (cfg.complete && local_total < pairing) {
        std::ostringstream out;
        out << "complete configuration, but curves '" << cfg.curves[i].id << "' and '"
            << cfg.curves[j].id << "' have undeclared intersections (" << local_total
            << " of " << pairing << ")";
        return config_fail(out.str());
      }
    }

  return ConfigCheck{};
}

ResolutionEngine::ResolutionEngine(const PairConfig& cfg) : cfg_(cfg) {
  ConfigCheck check = validate_config(cfg_);
  if (!check.ok) throw std::invalid_argument("invalid configuration: " + check.diagnostic);

  result_.final_surface = cfg_.surface;
  for (const auto& c : cfg_.curves) result_.curve_classes.push_back(c.cls);

  std::vector<std::vector<int>> centre_branches;
  for (const auto& p : cfg_.points) {
    std::vector<int> ids;
    for (const auto& pb : p.branches) {
      ids.push_back(static_cast<int>(branches_.size()));
      branches_.push_back(BranchState{pb.curve, pb.branch, 0, {}});
    }
    centre_branches.push_back(std::move(ids));
  }

  remaining_.assign(branches_.size(), std::vector<int>(branches_.size(), 0));
  for (size_t pi = 0; pi < cfg_.points.size(); ++pi) {
    const auto& p = cfg_.points[pi];
    Germ g = p.germ();
    const auto& ids = centre_branches[pi];
    for (size_t a = 0; a < ids.size(); ++a)
      for (size_t b = a + 1; b < ids.size(); ++b) {
        int d = g.shared_depth(static_cast<int>(a), static_cast<int>(b));
        remaining_[ids[a]][ids[b]] = remaining_[ids[b]][ids[a]] = d;
      }
  }

  for (size_t pi = cfg_.points.size(); pi-- > 0;) {
    stack_.push_back(Centre{cfg_.points[pi].id, 0, centre_branches[pi], {}});
  }
}

bool ResolutionEngine::violates_snc(const Centre& c) const {
  std::set<int> curves_here;
  for (int b : c.branches) {
    const auto& st = branches_[b];
    if (st.data.mult_at(st.pos) >= 2) return true;
    if (!curves_here.insert(st.curve).second) return true;  // two branches, one curve
  }
  if (curves_here.size() + c.excs.size() >= 3) return true;
  for (size_t a = 0; a < c.branches.size(); ++a)
    for (size_t b = a + 1; b < c.branches.size(); ++b)
      if (remaining_[c.branches[a]][c.branches[b]] >= 2) return true;
  for (int b : c.branches) {
    const auto& st = branches_[b];
    auto sat = proximity_extra(st.data, st.pos + 1);
    if (sat && *sat < static_cast<int>(st.exc_at_pos.size())) {
      int target = st.exc_at_pos[*sat];
      if (std::find(c.excs.begin(), c.excs.end(), target) != c.excs.end()) return true;
    }
  }
  return false;
}

bool ResolutionEngine::done() {
  while (!stack_.empty() && !violates_snc(stack_.back())) stack_.pop_back();
  return stack_.empty();
}

ExceptionalRecord ResolutionEngine::blow_up_once() {
  if (done()) throw std::logic_error("blow_up_once: configuration is already resolved");
  if (++safety_ > 10000) throw std::logic_error("blow_up_once: runaway resolution");

  Centre centre = stack_.back();
  stack_.pop_back();

  CoeffForm coeff;
  for (int b : centre.branches) {
    const auto& st = branches_[b];
    coeff = coeff + Rat(st.data.mult_at(st.pos)) * cfg_.curves[st.curve].coeff;
  }
  for (int e : centre.excs) coeff = coeff + result_.exceptionals[e].coeff;
  coeff = coeff - CoeffForm::constant(1);

  // Lattice bookkeeping: the centre's multiplicity on each tracked class.
  result_.final_surface = blow_up_lattice(result_.final_surface);
  std::map<int, long long> curve_mult;
  for (int b : centre.branches) {
    const auto& st = branches_[b];
    curve_mult[st.curve] += st.data.mult_at(st.pos);
  }
  for (size_t i = 0; i < result_.curve_classes.size(); ++i) {
    auto it = curve_mult.find(static_cast<int>(i));
    result_.curve_classes[i] =
        strict_transform(result_.curve_classes[i], it == curve_mult.end() ? 0 : it->second);
  }
  for (size_t e = 0; e < result_.exceptional_classes.size(); ++e) {
    bool through = std::find(centre.excs.begin(), centre.excs.end(), static_cast<int>(e)) !=
                   centre.excs.end();
    result_.exceptional_classes[e] =
        strict_transform(result_.exceptional_classes[e], through ? 1 : 0);
  }
  result_.exceptional_classes.push_back(last_exceptional_class(result_.final_surface));

  ExceptionalRecord record{coeff, centre.point_id, centre.depth};
  result_.exceptionals.push_back(record);
  result_.blow_up_count += 1;
  const int new_exc = static_cast<int>(result_.exceptionals.size()) - 1;

  // Advance every branch through the centre and split into the child centres.
  for (int b : centre.branches) {
    auto& st = branches_[b];
    st.exc_at_pos.resize(st.pos + 1, -1);
    st.exc_at_pos[st.pos] = new_exc;
    st.pos += 1;
  }
  for (size_t a = 0; a < centre.branches.size(); ++a)
    for (size_t b = a + 1; b < centre.branches.size(); ++b) {
      int& r1 = remaining_[centre.branches[a]][centre.branches[b]];
      int& r2 = remaining_[centre.branches[b]][centre.branches[a]];
      r1 -= 1;
      r2 = r1;
    }

  std::vector<std::vector<int>> groups;
  for (int b : centre.branches) {
    bool placed = false;
    for (auto& g : groups)
      if (remaining_[g.front()][b] >= 1) {  // shared depth is an ultrametric
        g.push_back(b);
        placed = true;
        break;
      }
    if (!placed) groups.push_back({b});
  }
  for (size_t gi = groups.size(); gi-- > 0;) {
    const auto& g = groups[gi];
    Centre child{centre.point_id, centre.depth + 1, g, {new_exc}};
    std::optional<int> satellite;
    bool have = false;
    for (int b : g) {
      const auto& st = branches_[b];
      auto sat = proximity_extra(st.data, st.pos);
      std::optional<int> target;
      if (sat && *sat < static_cast<int>(st.exc_at_pos.size()) && st.exc_at_pos[*sat] >= 0)
        target = st.exc_at_pos[*sat];
      if (!have) {
        satellite = target;
        have = true;
      } else if (satellite != target) {
        throw std::logic_error("blow_up_once: branches sharing a point disagree on satellites");
      }
    }
    if (satellite) child.excs.push_back(*satellite);
    stack_.push_back(std::move(child));
  }

  return record;
}

ResolutionResult ResolutionEngine::finish() {
  while (!done()) blow_up_once();
  return result_;
}

ResolutionResult minimal_log_resolution(const PairConfig& cfg) {
  ResolutionEngine engine(cfg);
  return engine.finish();
}

bool is_log_canonical(const PairConfig& cfg, const Rat& beta, const Rat& lambda,
                      const std::optional<std::string>& at) {
  if (beta <= 0 || beta > 1)
    throw std::invalid_argument("is_log_canonical: beta must lie in (0,1]");
  if (lambda < 0) throw std::invalid_argument("is_log_canonical: lambda must be nonnegative");

  std::set<int> curve_filter;
  if (at) {
    const DeclaredPoint* found = nullptr;
    for (const auto& p : cfg.points)
      if (p.id == *at) found = &p;
    if (!found) throw std::invalid_argument("is_log_canonical: unknown point '" + *at + "'");
    for (const auto& pb : found->branches) curve_filter.insert(pb.curve);
  }

  ResolutionResult res = minimal_log_resolution(cfg);
  for (size_t i = 0; i < cfg.curves.size(); ++i) {
    if (at && !curve_filter.count(static_cast<int>(i))) continue;
    if (cfg.curves[i].coeff.eval(beta, lambda) > 1) return false;
  }
  for (const auto& e : res.exceptionals) {
    if (at && e.point_id != *at) continue;
    if (e.coeff.eval(beta, lambda) > 1) return false;
  }
  return true;
}

}  // namespace delpezzo
