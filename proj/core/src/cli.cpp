#include "delpezzo/cli.hpp"

#include <CLI11.hpp>

#include <exception>
#include <optional>

#include "delpezzo/catalog.hpp"
#include "delpezzo/config_io.hpp"
#include "delpezzo/curves.hpp"
#include "delpezzo/lct.hpp"
#include "delpezzo/surface.hpp"

namespace delpezzo {

namespace {

SurfaceModel pick_surface(int n, bool quadric) {
  return quadric ? SurfaceModel::quadric() : SurfaceModel::blowup_of_p2(n);
}

int cmd_lines(int n, bool quadric, std::ostream& out) {
  auto classes = enumerate_lines(pick_surface(n, quadric));
  for (const auto& c : classes) out << to_string(c) << "\n";
  out << classes.size() << " classes\n";
  return 0;
}

int cmd_classes(int n, bool quadric, long long degree, long long self, std::ostream& out) {
  auto classes = enumerate_classes(pick_surface(n, quadric), degree, self);
  for (const auto& c : classes) out << to_string(c) << "\n";
  out << classes.size() << " classes\n";
  return 0;
}

int cmd_resolve(const std::string& path, std::ostream& out) {
  PairConfig cfg = load_config(path);
  ResolutionResult res = minimal_log_resolution(cfg);
  out << res.blow_up_count << " blow-ups, final surface " << to_string(res.final_surface)
      << "\n";
  for (size_t i = 0; i < res.exceptionals.size(); ++i) {
    const auto& e = res.exceptionals[i];
    out << "E" << i + 1 << " over " << e.point_id << ": " << to_string(e.coeff) << "\n";
  }
  return 0;
}

int cmd_lct(const std::string& path, const std::string& beta_text, std::ostream& out,
            std::ostream& err) {
  auto beta = parse_rational(beta_text);
  if (!beta) {
    err << "invalid beta: " << beta_text << "\n";
    return 1;
  }
  PairConfig cfg = load_config(path);
  auto t = lct_numeric(cfg, *beta);
  out << (t ? to_string(*t) : "unbounded") << "\n";
  return 0;
}

int cmd_dynamic(const std::string& path, std::ostream& out) {
  PairConfig cfg = load_config(path);
  auto t = lct_dynamic(cfg);
  out << (t ? to_string(*t) : "unbounded") << "\n";
  return 0;
}

int cmd_alpha(int degree, const std::string& case_name, std::ostream& out,
              std::ostream& err) {
  auto rows = alpha_rows(degree);
  if (rows.empty()) {
    err << "no catalogued cases for degree " << degree << "\n";
    return 1;
  }
  if (case_name.empty()) {
    for (const AlphaRow* row : rows) {
      PiecewiseFL alpha = alpha_from_witnesses(row->witnesses);
      out << row->case_name << ": " << to_string(alpha)
          << "; KEE: " << to_string(kee_interval(alpha)) << "\n";
    }
    return 0;
  }
  const AlphaRow* row = find_alpha(degree, case_name);
  if (!row) {
    err << "unknown case \"" << case_name << "\" for degree " << degree
        << "; catalogued cases:";
    for (const AlphaRow* r : rows) err << " " << r->case_name;
    err << "\n";
    return 1;
  }
  PiecewiseFL alpha = alpha_from_witnesses(row->witnesses);
  out << to_string(alpha) << "; KEE: " << to_string(kee_interval(alpha)) << "\n";
  return 0;
}

int cmd_tables(bool as_json, std::ostream& out) {
  out << (as_json ? emit_tables_json() : emit_tables_markdown());
  return 0;
}

int cmd_check(std::ostream& out) {
  CheckReport report = check_catalog();
  out << report.checks << " checks, " << report.failures.size() << " failures\n";
  for (const auto& f : report.failures) out << "FAIL " << f << "\n";
  for (const auto& n : report.kee_notes) out << "note " << n << "\n";
  return report.ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact intersection theory and log canonical thresholds on del Pezzo "
               "surfaces"};
  app.require_subcommand(1);

  int n = 0;
  bool quadric = false;
  long long degree = 1, self = 0;
  std::string config_path, beta_text = "1", case_name;
  int alpha_degree = 0;
  bool as_json = false;

  auto* lines = app.add_subcommand("lines", "lines on a del Pezzo surface");
  lines->add_option("n", n, "blown-up points (0..8)")->required();
  lines->add_flag("--quadric", quadric, "use P^1 x P^1 instead");

  auto* classes = app.add_subcommand("classes", "smooth rational classes");
  classes->add_option("n", n, "blown-up points (0..8)")->required();
  classes->add_option("degree", degree, "anticanonical degree (1..4)")->required();
  classes->add_option("self", self, "self-intersection")->required();
  classes->add_flag("--quadric", quadric, "use P^1 x P^1 instead");

  auto* resolve = app.add_subcommand("resolve", "log resolution of a configuration");
  resolve->add_option("config", config_path, "configuration JSON file")->required();

  auto* lct = app.add_subcommand("lct", "threshold at a fixed beta");
  lct->add_option("config", config_path, "configuration JSON file")->required();
  lct->add_option("--beta", beta_text, "beta in (0,1], default 1");

  auto* dynamic = app.add_subcommand("dynamic", "threshold as a function of beta");
  dynamic->add_option("config", config_path, "configuration JSON file")->required();

  auto* alpha = app.add_subcommand("alpha", "catalogued dynamic alpha invariants");
  alpha->add_option("degree", alpha_degree, "surface degree (1..9)")->required();
  alpha->add_option("case", case_name, "catalogued case name");

  auto* tables = app.add_subcommand("tables", "emit every catalogued table");
  tables->add_flag("--json", as_json, "JSON instead of markdown");

  app.add_subcommand("check", "recompute the catalog and compare");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (lines->parsed()) return cmd_lines(n, quadric, out);
    if (classes->parsed()) return cmd_classes(n, quadric, degree, self, out);
    if (resolve->parsed()) return cmd_resolve(config_path, out);
    if (lct->parsed()) return cmd_lct(config_path, beta_text, out, err);
    if (dynamic->parsed()) return cmd_dynamic(config_path, out);
    if (alpha->parsed()) return cmd_alpha(alpha_degree, case_name, out, err);
    if (tables->parsed()) return cmd_tables(as_json, out);
    return cmd_check(out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace delpezzo
