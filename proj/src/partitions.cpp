#include "qmod/partitions.hpp"

#include <algorithm>

#include "qmod/moduli.hpp"
#include "qmod/qforms.hpp"

namespace qmod {

Series<ZRing> overpartition_series(long long N) {
    if (N < 1) throw InvalidArgument("N must be positive");
    EtaQuotientSpec spec{{{2, 1}, {1, -2}}};
    return eta_quotient(spec, N);
}

namespace {

Int overline_walk(long long remaining, long long max_part) {
    if (remaining == 0) return 1;
    Int total = 0;
    for (long long part = std::min(max_part, remaining); part >= 1; --part)
        for (long long used = part; used <= remaining; used += part)
            total += 2 * overline_walk(remaining - used, part - 1);
    return total;
}

}  // namespace

OverpartitionCount overpartition_enumerate(long long n) {
    if (n < 0) throw InvalidArgument("n must be nonnegative");
    if (n > 40) throw TooLarge("enumeration is guarded to n <= 40");
    return OverpartitionCount{n, overline_walk(n, n)};
}

Series<FpRing> g_twist_series(std::uint32_t p, long long N, bool with_eta_power,
                              long long beta) {
    if (p < 5 || !is_prime(p)) throw InvalidArgument("p must be a prime at least 5");
    if (beta < 0) throw InvalidArgument("beta must be nonnegative");
    Series<ZRing> w = overpartition_series(N);
    Series<ZRing> tw = w.twist(QuadraticChar::kronecker_bottom(p));
    Series<ZRing> comb = kronecker(-1, p) == 1 ? w.sub(tw) : w.add(tw);
    Series<FpRing> g = reduce_mod(comb, p);
    if (with_eta_power) {
        long long e = 1;
        for (long long i = 0; i < beta; ++i) {
            if (e > (1LL << 40) / p) throw TooLarge("eta power exponent overflows");
            e *= p;
        }
        g = g.mul(pow_series(reduce_mod(fp_series(p, N), p), e));
    }
    return g;
}

}  // namespace qmod
