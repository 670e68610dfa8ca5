#include "delpezzo/config_io.hpp"

#include <json.hpp>

#include <fstream>
#include <limits>
#include <sstream>

namespace delpezzo {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ConfigError(path + ": " + what);
}

std::string join(const std::string& path, const char* key) {
  return path.empty() ? key : path + "." + key;
}

const json& member(const json& obj, const std::string& path, const char* key) {
  if (!obj.is_object()) fail(path.empty() ? "config" : path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(join(path, key), "missing");
  return *it;
}

std::string text_of(const json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected a string");
  return v.get<std::string>();
}

int int_of(const json& v, const std::string& path) {
  if (!v.is_number_integer()) fail(path, "expected an integer");
  return v.get<int>();
}

bool bool_of(const json& v, const std::string& path) {
  if (!v.is_boolean()) fail(path, "expected true or false");
  return v.get<bool>();
}

Rat rat_of(const json& v, const std::string& path) {
  if (v.is_number_integer()) return Rat(v.get<long long>());
  if (v.is_string()) {
    auto parsed = parse_rational(v.get<std::string>());
    if (parsed) return *parsed;
  }
  fail(path, "expected a rational (integer or \"p/q\")");
}

SurfaceModel surface_of(const json& v, const std::string& path) {
  std::string kind = text_of(member(v, path, "kind"), path + ".kind");
  if (kind == "quadric") return SurfaceModel::quadric();
  if (kind != "plane") fail(path + ".kind", "expected \"plane\" or \"quadric\"");
  int n = int_of(member(v, path, "n"), path + ".n");
  if (n < 0 || n > 8) fail(path + ".n", "expected 0..8 blown-up points");
  return SurfaceModel::blowup_of_p2(n);
}

CoeffForm coeff_of(const json& v, const std::string& path) {
  if (!v.is_object()) fail(path, "expected an object");
  CoeffForm c;
  for (auto it = v.begin(); it != v.end(); ++it) {
    const std::string sub = path + "." + it.key();
    if (it.key() == "const")
      c.c0 = rat_of(it.value(), sub);
    else if (it.key() == "beta")
      c.c1 = rat_of(it.value(), sub);
    else if (it.key() == "lambda_beta")
      c.c2 = rat_of(it.value(), sub);
    else
      fail(sub, "unknown field (use const, beta, lambda_beta)");
  }
  return c;
}

WeightedCurve curve_of(const json& v, const SurfaceModel& s, const std::string& path) {
  WeightedCurve curve{"", zero_class(s), CoeffForm{}, true};
  curve.id = text_of(member(v, path, "id"), path + ".id");

  const json& cls = member(v, path, "class");
  if (!cls.is_array()) fail(path + ".class", "expected an array");
  std::vector<long long> coords;
  for (size_t i = 0; i < cls.size(); ++i) {
    const std::string sub = path + ".class[" + std::to_string(i) + "]";
    if (!cls[i].is_number_integer()) fail(sub, "expected an integer");
    coords.push_back(cls[i].get<long long>());
  }
  if (static_cast<int>(coords.size()) != s.rank())
    fail(path + ".class",
         "expected " + std::to_string(s.rank()) + " coordinates for this surface");
  curve.cls = DivisorClass(s, std::move(coords));

  curve.coeff = coeff_of(member(v, path, "coeff"), path + ".coeff");
  if (auto it = v.find("smooth"); it != v.end())
    curve.smooth = bool_of(*it, path + ".smooth");
  return curve;
}

PointBranch branch_of(const json& v, const std::vector<WeightedCurve>& curves,
                      const std::string& path) {
  if (!v.is_object()) fail(path, "expected an object");
  std::string id = text_of(member(v, path, "curve"), path + ".curve");
  int index = -1;
  for (size_t i = 0; i < curves.size(); ++i)
    if (curves[i].id == id) index = static_cast<int>(i);
  if (index < 0) fail(path + ".curve", "no curve with id \"" + id + "\"");

  if (auto it = v.find("mults"); it != v.end()) {
    if (!it->is_array()) fail(path + ".mults", "expected an array");
    Branch b;
    for (size_t i = 0; i < it->size(); ++i) {
      const std::string sub = path + ".mults[" + std::to_string(i) + "]";
      if (!(*it)[i].is_number_integer()) fail(sub, "expected an integer");
      b.mults.push_back((*it)[i].get<int>());
    }
    return PointBranch{index, std::move(b)};
  }

  std::string type = "smooth";
  if (auto it = v.find("type"); it != v.end()) type = text_of(*it, path + ".type");
  if (type == "smooth") return PointBranch{index, smooth_branch()};
  if (type != "quasi_homogeneous")
    fail(path + ".type", "expected \"smooth\" or \"quasi_homogeneous\"");
  int m = int_of(member(v, path, "m"), path + ".m");
  int n = int_of(member(v, path, "n"), path + ".n");
  if (m < 2 || n <= m) fail(path, "quasi_homogeneous needs 2 <= m < n");
  return PointBranch{index, quasi_homogeneous_branch(m, n)};
}

DeclaredPoint point_of(const json& v, const std::vector<WeightedCurve>& curves,
                       const std::string& path) {
  DeclaredPoint point;
  point.id = text_of(member(v, path, "id"), path + ".id");

  const json& branches = member(v, path, "branches");
  if (!branches.is_array() || branches.empty())
    fail(path + ".branches", "expected a nonempty array");
  for (size_t i = 0; i < branches.size(); ++i)
    point.branches.push_back(
        branch_of(branches[i], curves, path + ".branches[" + std::to_string(i) + "]"));

  if (auto it = v.find("contacts"); it != v.end()) {
    if (!it->is_array()) fail(path + ".contacts", "expected an array");
    for (size_t i = 0; i < it->size(); ++i) {
      const std::string sub = path + ".contacts[" + std::to_string(i) + "]";
      const json& c = (*it)[i];
      Contact contact;
      contact.a = int_of(member(c, sub, "a"), sub + ".a");
      contact.b = int_of(member(c, sub, "b"), sub + ".b");
      contact.depth = int_of(member(c, sub, "depth"), sub + ".depth");
      int count = static_cast<int>(point.branches.size());
      if (contact.a < 0 || contact.a >= count || contact.b < 0 || contact.b >= count)
        fail(sub, "branch index out of range");
      if (contact.depth < 1) fail(sub + ".depth", "expected depth >= 1");
      point.contacts.push_back(contact);
    }
  }
  return point;
}

}  // namespace

PairConfig parse_config_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }

  PairConfig cfg{SurfaceModel::blowup_of_p2(0), {}, {}, false};
  cfg.surface = surface_of(member(doc, "", "surface"), "surface");

  if (auto it = doc.find("curves"); it != doc.end()) {
    if (!it->is_array()) fail("curves", "expected an array");
    for (size_t i = 0; i < it->size(); ++i)
      cfg.curves.push_back(
          curve_of((*it)[i], cfg.surface, "curves[" + std::to_string(i) + "]"));
  }
  if (auto it = doc.find("points"); it != doc.end()) {
    if (!it->is_array()) fail("points", "expected an array");
    for (size_t i = 0; i < it->size(); ++i)
      cfg.points.push_back(
          point_of((*it)[i], cfg.curves, "points[" + std::to_string(i) + "]"));
  }
  if (auto it = doc.find("complete"); it != doc.end())
    cfg.complete = bool_of(*it, "complete");

  ConfigCheck check = validate_config(cfg);
  if (!check.ok) throw ConfigError(check.diagnostic);
  return cfg;
}

PairConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_json(buffer.str());
}

namespace {

json rat_json(const Rat& v) {
  if (denominator(v) == 1 && numerator(v) >= std::numeric_limits<long long>::min() &&
      numerator(v) <= std::numeric_limits<long long>::max())
    return json(static_cast<long long>(numerator(v)));
  return json(to_string(v));
}

}  // namespace

std::string config_to_json(const PairConfig& cfg) {
  json doc;
  if (cfg.surface.kind == SurfaceKind::Quadric) {
    doc["surface"] = {{"kind", "quadric"}};
  } else {
    doc["surface"] = {{"kind", "plane"}, {"n", cfg.surface.blown_up}};
  }

  doc["curves"] = json::array();
  for (const auto& curve : cfg.curves) {
    json coeff = json::object();
    if (curve.coeff.c0 != 0) coeff["const"] = rat_json(curve.coeff.c0);
    if (curve.coeff.c1 != 0) coeff["beta"] = rat_json(curve.coeff.c1);
    if (curve.coeff.c2 != 0) coeff["lambda_beta"] = rat_json(curve.coeff.c2);
    json entry{{"id", curve.id}, {"class", curve.cls.coords}, {"coeff", coeff}};
    if (!curve.smooth) entry["smooth"] = false;
    doc["curves"].push_back(entry);
  }

  doc["points"] = json::array();
  for (const auto& point : cfg.points) {
    json branches = json::array();
    for (const auto& branch : point.branches) {
      json entry{{"curve", cfg.curves[branch.curve].id}};
      if (branch.branch.mults.empty())
        entry["type"] = "smooth";
      else
        entry["mults"] = branch.branch.mults;
      branches.push_back(entry);
    }
    json contacts = json::array();
    for (const auto& contact : point.contacts)
      contacts.push_back({{"a", contact.a}, {"b", contact.b}, {"depth", contact.depth}});
    json entry{{"id", point.id}, {"branches", branches}};
    if (!contacts.empty()) entry["contacts"] = contacts;
    doc["points"].push_back(entry);
  }

  doc["complete"] = cfg.complete;
  return doc.dump(2) + "\n";
}

}  // namespace delpezzo
