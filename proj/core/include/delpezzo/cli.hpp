#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace delpezzo {

// Command-line front end. `args` excludes the program name. Returns the
// process exit code; all output goes to the supplied streams.
//
// Subcommands:
//   lines <n> [--quadric]          lines on P^2 blown up in n points
//   classes <n> <degree> <self>    smooth rational classes of the given
//                                  degree and self-intersection
//   resolve <config.json>          blow-up chain for a configuration
//   lct <config.json> [--beta B]   threshold at fixed beta (default 1)
//   dynamic <config.json>          threshold as a function of beta
//   alpha <degree> [case]          catalogued dynamic alpha invariants
//   tables [--json]                every catalogued table, recomputed
//   check                          recompute the catalog and compare
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace delpezzo
