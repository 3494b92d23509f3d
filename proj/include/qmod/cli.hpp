#pragma once

/* Command-line front end. Subcommands compute named q-expansions, trace
   and class number tables, residue tallies, Hecke prime scans, and the
   end-to-end verification suite. All output is deterministic for a fixed
   argument list: reports go to `out`, warnings and errors to `err`. */

#include <ostream>
#include <string>
#include <vector>

namespace qmod {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qmod
