#pragma once

/* The concrete q-expansions the rest of the library is built from: eta
   quotients via the pentagonal-number Euler product, normalized Eisenstein
   series over the exact rationals (with a direct mod-p variant), and the
   Jacobi theta function. */

#include <cstdint>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "qmod/arith.hpp"
#include "qmod/errors.hpp"
#include "qmod/series.hpp"

namespace qmod {

/* base^e by repeated squaring; meant for valuation-0 series, where every
   intermediate product keeps the operands' precision. */
template <class R>
Series<R> pow_series(const Series<R>& base, unsigned long long e) {
    Series<R> acc = Series<R>::one(base.ring(), base.precision());
    Series<R> sq = base;
    while (e) {
        if (e & 1) acc = acc.mul(sq);
        e >>= 1;
        if (e) sq = sq.mul(sq);
    }
    return acc;
}

/* One factor eta(delta z)^exponent of an eta quotient. */
struct EtaFactor {
    long long delta;
    long long exponent;
};

struct EtaQuotientSpec {
    std::vector<EtaFactor> factors;
};

namespace detail {

/* prod_{n>=1} (1 - q^n) truncated below prec: exponents k(3k-1)/2 and
   k(3k+1)/2 carry (-1)^k, everything else vanishes. */
inline Series<ZRing> pentagonal_euler(long long prec) {
    if (prec <= 0) return Series<ZRing>(ZRing(), prec);
    std::vector<Int> c(static_cast<std::size_t>(prec), Int(0));
    c[0] = 1;
    for (long long k = 1;; ++k) {
        long long g1 = k * (3 * k - 1) / 2;
        long long g2 = k * (3 * k + 1) / 2;
        if (g1 >= prec) break;
        Int sign = (k % 2) ? Int(-1) : Int(1);
        c[static_cast<std::size_t>(g1)] = sign;
        if (g2 < prec) c[static_cast<std::size_t>(g2)] = sign;
    }
    return Series<ZRing>::from_coeffs(ZRing(), 0, std::move(c), prec);
}

}  // namespace detail

/* Expansion of prod eta(delta z)^{r_delta} trusted below N.  The leading
   exponent sum(delta r)/24 must come out integral. */
inline Series<ZRing> eta_quotient(const EtaQuotientSpec& spec, long long N) {
    long long exp24 = 0;
    for (std::size_t i = 0; i < spec.factors.size(); ++i) {
        const EtaFactor& f = spec.factors[i];
        if (f.delta < 1) throw InvalidArgument("eta multiplier must be positive");
        for (std::size_t j = 0; j < i; ++j)
            if (spec.factors[j].delta == f.delta)
                throw InvalidArgument("eta multipliers must be distinct");
        exp24 += f.delta * f.exponent;
    }
    if (exp24 % 24 != 0)
        throw FractionalExponent("leading exponent " + std::to_string(exp24) +
                                 "/24 of the eta quotient is not an integer");
    long long e0 = exp24 / 24;
    long long T = N - e0;
    if (T <= 0) return Series<ZRing>(ZRing(), N);

    Series<ZRing> acc = Series<ZRing>::one(ZRing(), T);
    for (const EtaFactor& f : spec.factors) {
        if (f.exponent == 0) continue;
        long long M = (T + f.delta - 1) / f.delta;
        Series<ZRing> base = detail::pentagonal_euler(M);
        if (f.exponent < 0) base = base.invert(M);
        acc = acc.mul(pow_series(base, static_cast<unsigned long long>(std::llabs(f.exponent)))
                          .dilate(f.delta));
    }
    return acc.truncate(T).shift(e0);
}

/* Discriminant cusp form eta(z)^24. */
inline Series<ZRing> delta_series(long long N) { return eta_quotient({{{1, 24}}}, N); }

/* Normalized Eisenstein series E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n
   over the exact rationals. */
inline Series<QRing> eisenstein(long long k, long long N) {
    if (k < 4 || k % 2 != 0) throw InvalidArgument("Eisenstein weight must be even and at least 4");
    Rat scalar = Rat(static_cast<long>(-2 * k)) / bernoulli(static_cast<unsigned>(k));
    std::vector<Rat> c(static_cast<std::size_t>(std::max<long long>(N, 0)), Rat(0));
    if (N <= 0) return Series<QRing>(QRing(), N);
    c[0] = 1;
    for (long long d = 1; d < N; ++d) {
        Int dk;
        mpz_ui_pow_ui(dk.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k - 1));
        Rat term = scalar * Rat(dk);
        for (long long n = d; n < N; n += d) c[static_cast<std::size_t>(n)] += term;
    }
    return Series<QRing>::from_coeffs(QRing(), 0, std::move(c), N);
}

/* E_k reduced mod p without building the rational series.  When the scalar
   2k/B_k vanishes mod p (in particular for k = p-1) the series is exactly 1
   and the divisor sieve is skipped. */
inline Series<FpRing> eisenstein_mod(long long k, long long N, std::uint32_t p) {
    if (k < 4 || k % 2 != 0) throw InvalidArgument("Eisenstein weight must be even and at least 4");
    FpRing F(p);
    Residue scalar = reduce_mod(Rat(static_cast<long>(-2 * k)) / bernoulli(static_cast<unsigned>(k)), p);
    if (scalar.value == 0 || N <= 0) return Series<FpRing>::one(F, N);
    std::vector<std::uint32_t> c(static_cast<std::size_t>(N), 0);
    c[0] = 1 % p;
    for (long long d = 1; d < N; ++d) {
        std::uint32_t term =
            F.mul(scalar.value, static_cast<std::uint32_t>(powmod(d % p, k - 1, p)));
        if (term == 0) continue;
        for (long long n = d; n < N; n += d) c[static_cast<std::size_t>(n)] = F.add(c[n], term);
    }
    return Series<FpRing>::from_coeffs(F, 0, std::move(c), N);
}

/* T(z) = 1 + 2 sum q^{n^2}. */
inline Series<ZRing> jacobi_theta(long long N) {
    if (N < 1) throw InvalidArgument("theta series needs positive precision");
    std::vector<Int> c(static_cast<std::size_t>(N), Int(0));
    c[0] = 1;
    for (long long n = 1; n * n < N; ++n) c[static_cast<std::size_t>(n * n)] = 2;
    return Series<ZRing>::from_coeffs(ZRing(), 0, std::move(c), N);
}

/* Advisory weight/level/character tag carried alongside a series; never
   verified by transformation checks. */
struct FormMeta {
    long long twice_weight;
    long long level;
    QuadraticChar character;

    FormMeta(long long w, long long n, QuadraticChar chi)
        : twice_weight(w), level(n), character(std::move(chi)) {
        if (w < 0) throw InvalidArgument("twice-weight must be nonnegative");
        if (n < 1) throw InvalidArgument("level must be positive");
    }
};

}  // namespace qmod
