#pragma once

/* End-to-end verification checks tying the modules together: exact
   congruences, operator identities against independent routes, pinned
   values, oracle agreement sweeps, residue coverage with frozen counts,
   and the Hecke prime scan with its recorded result. */

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qmod {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct VerifyOptions {
    /* Shrinks the sweep bounds (coverage and oracle sweeps to 2000, trace
       identity to the two smallest indices, scan to depth 12 at bound 250)
       so the whole suite finishes in seconds. */
    bool quick = false;
    /* Restricts the checks that iterate over prime sets to this prime;
       checks whose set does not contain it report as not applicable. */
    std::optional<std::uint32_t> only_prime;
};

/* Runs every check, streaming one PASS/FAIL line per check to progress
   when a stream is given. */
std::vector<CheckResult> run_verification(const VerifyOptions& opt,
                                          std::ostream* progress = nullptr);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace qmod
