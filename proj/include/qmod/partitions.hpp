#pragma once

#include "qmod/arith.hpp"
#include "qmod/errors.hpp"
#include "qmod/series.hpp"

namespace qmod {

struct OverpartitionCount {
    long long n;
    Int count;
};

/* Generating series of overpartition counts: partitions in which the
   first occurrence of each part size may additionally be overlined.
   Computed as the eta quotient eta(2z) / eta(z)^2. */
Series<ZRing> overpartition_series(long long N);

/* Backtracking count over (part, multiplicity) choices, doubling once
   per distinct part size for the overline choice. Guarded to n <= 40. */
OverpartitionCount overpartition_enumerate(long long n);

/* Overpartition series minus its quadratic twist by the mod p character,
   signed so that coefficients with kronecker(-n, p) = +1 cancel, reduced
   mod p. The optional factor multiplies in the p^beta power of the eta
   quotient from fp_series, which is congruent to 1 mod p and only changes
   the underlying holomorphic object. */
Series<FpRing> g_twist_series(std::uint32_t p, long long N, bool with_eta_power = false,
                              long long beta = 1);

}  // namespace qmod
