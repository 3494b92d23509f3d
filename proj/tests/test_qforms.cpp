#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <vector>

#include "qmod/qforms.hpp"
#include "qmod/series.hpp"

using namespace qmod;

namespace {

using SZ = Series<ZRing>;

/* Independent Euler-product oracle: prod_{n=1}^{L} (1 - q^{delta n})^r for
   r >= 0 by direct repeated binomial multiplication, no pentagonal theorem. */
SZ naive_euler_power(long long delta, long long r, long long L) {
    std::vector<Int> c(static_cast<std::size_t>(L), Int(0));
    c[0] = 1;
    for (long long n = delta; n < L; n += delta)
        for (long long rep = 0; rep < r; ++rep)
            for (long long i = L - 1; i >= n; --i) c[i] -= c[i - n];
    return SZ::from_coeffs(ZRing(), 0, std::move(c), L);
}

/* Trial-division divisor power sum. */
Int sigma_oracle(long long n, long long k) {
    Int s = 0;
    for (long long d = 1; d <= n; ++d) {
        if (n % d) continue;
        Int dk;
        mpz_ui_pow_ui(dk.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k));
        s += dk;
    }
    return s;
}

}  // namespace

TEST_CASE("discriminant form expansion matches the direct product oracle") {
    const long long N = 101;
    SZ d = delta_series(N);
    CHECK(d.offset() == 1);
    CHECK(d.precision() == N);
    CHECK(d.coeff(1) == 1);
    CHECK(d.coeff(2) == -24);
    CHECK(d.coeff(3) == 252);

    SZ oracle = naive_euler_power(1, 24, N - 1).shift(1);
    CHECK(d == oracle);
}

TEST_CASE("squared discriminant form agrees with the 48th power expansion") {
    const long long N = 80;
    SZ d2 = delta_series(N) * delta_series(N);
    CHECK(d2.coeff(2) == 1);
    CHECK(d2.coeff(3) == -48);
    CHECK(d2.congruent_to(eta_quotient({{{1, 48}}}, N)));
}

TEST_CASE("tau satisfies the mod 691 divisor congruence") {
    SZ d = delta_series(101);
    for (long long n = 1; n <= 100; ++n) {
        Int diff = d.coeff(n) - sigma_oracle(n, 11);
        CHECK(diff % 691 == 0);
    }
}

TEST_CASE("overpartition generating quotient") {
    const long long N = 200;
    SZ w = eta_quotient({{{2, 1}, {1, -2}}}, N);
    CHECK(w.offset() == 0);
    CHECK(w.coeff(0) == 1);
    CHECK(w.coeff(1) == 2);
    CHECK(w.coeff(2) == 4);
    CHECK(w.coeff(3) == 8);

    /* Cross-multiplied oracle: w * (eta(z) Euler part)^2 = eta(2z) Euler part. */
    SZ lhs = w * naive_euler_power(1, 2, N);
    CHECK(lhs.congruent_to(naive_euler_power(2, 1, N)));
}

TEST_CASE("mixed-sign eta quotient against cross-multiplication") {
    const long long N = 60;
    SZ f = eta_quotient({{{1, 26}, {2, -1}}}, N);
    CHECK(f.offset() == 1);
    SZ lhs = f * naive_euler_power(2, 1, N).shift(1);
    SZ rhs = naive_euler_power(1, 26, N).shift(2);
    CHECK(lhs.congruent_to(rhs));
}

TEST_CASE("eta quotient input validation") {
    CHECK_THROWS_AS(eta_quotient({{{1, 1}}}, 10), FractionalExponent);
    CHECK_THROWS_AS(eta_quotient({{{1, 12}, {1, 12}}}, 10), InvalidArgument);
    CHECK_THROWS_AS(eta_quotient({{{0, 24}}}, 10), InvalidArgument);

    SZ tiny = eta_quotient({{{1, 24}}}, 1);
    CHECK(tiny.is_zero());
    CHECK(tiny.precision() == 1);
}

TEST_CASE("weight four Eisenstein series") {
    Series<QRing> e4 = eisenstein(4, 60);
    CHECK(e4.coeff(0) == 1);
    CHECK(e4.coeff(1) == 240);
    CHECK(e4.coeff(2) == 2160);
    CHECK(e4.coeff(3) == 6720);
    for (long long n = 1; n < 60; ++n) {
        Int expected = 240 * sigma_oracle(n, 3);
        CHECK(e4.coeff(n) == Rat(expected));
    }
}

TEST_CASE("Eisenstein coefficients match the divisor-sum oracle") {
    for (long long k : {6, 8, 10, 12, 14}) {
        Series<QRing> e = eisenstein(k, 51);
        Rat scalar = Rat(static_cast<long>(-2 * k)) / bernoulli(static_cast<unsigned>(k));
        CHECK(e.coeff(0) == 1);
        for (long long n = 1; n <= 50; ++n) CHECK(e.coeff(n) == scalar * Rat(sigma_oracle(n, k - 1)));
    }
    CHECK_THROWS_AS(eisenstein(5, 10), InvalidArgument);
    CHECK_THROWS_AS(eisenstein(2, 10), InvalidArgument);
}

TEST_CASE("mod-p Eisenstein path agrees with reducing the rational series") {
    const long long N = 200;
    for (auto [k, p] : std::vector<std::pair<long long, std::uint32_t>>{
             {4, 5}, {4, 7}, {6, 5}, {10, 11}, {12, 7}, {12, 13}}) {
        CHECK(eisenstein_mod(k, N, p) == reduce_mod(eisenstein(k, N), p));
    }
}

TEST_CASE("weight p-1 Eisenstein series is 1 mod p") {
    const long long N = 2000;
    for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
        Series<FpRing> direct = eisenstein_mod(p - 1, N, p);
        CHECK(direct == Series<FpRing>::one(FpRing(p), N));
        CHECK(reduce_mod(eisenstein(p - 1, N), p) == direct);
    }
}

TEST_CASE("Jacobi theta series") {
    SZ t = jacobi_theta(5);
    CHECK(t.coeff(0) == 1);
    CHECK(t.coeff(1) == 2);
    CHECK(t.coeff(2) == 0);
    CHECK(t.coeff(3) == 0);
    CHECK(t.coeff(4) == 2);
}

TEST_CASE("theta cube counts lattice points on spheres") {
    const long long N = 31;
    SZ t = jacobi_theta(N);
    SZ r3 = t * t * t;
    CHECK(r3.coeff(0) == 1);
    CHECK(r3.coeff(1) == 6);
    for (long long n = 0; n < N; ++n) {
        long long count = 0;
        for (long long x = -6; x <= 6; ++x)
            for (long long y = -6; y <= 6; ++y)
                for (long long z = -6; z <= 6; ++z)
                    if (x * x + y * y + z * z == n) ++count;
        CHECK(r3.coeff(n) == static_cast<long>(count));
    }
}

TEST_CASE("series powering by repeated squaring") {
    SZ f = SZ::from_coeffs(ZRing(), 0, {Int(1), Int(1)}, 12);
    SZ p5 = pow_series(f, 5);
    CHECK(p5.coeff(0) == 1);
    CHECK(p5.coeff(1) == 5);
    CHECK(p5.coeff(2) == 10);
    CHECK(p5.coeff(5) == 1);
    CHECK(pow_series(f, 0) == SZ::one(ZRing(), 12));
    CHECK(pow_series(f, 1) == f);
}

TEST_CASE("generating series of the trace family assembles with offset -1") {
    const long long N = 97;
    SZ quot = eta_quotient({{{1, 2}, {2, -1}, {4, -6}}}, N);
    SZ e4z4 = to_integer(eisenstein(4, (N + 3) / 4)).dilate(4);
    SZ h = quot * e4z4;
    CHECK(h.precision() >= N - 1);
    CHECK(h.offset() == -1);
    CHECK(h.coeff(-1) == 1);
    for (long long d = 1; d < N - 1; ++d)
        if (d % 4 == 1 || d % 4 == 2) CHECK(h.coeff(d) == 0);
}

TEST_CASE("form metadata validation") {
    FormMeta meta(1, 4, QuadraticChar::trivial());
    CHECK(meta.twice_weight == 1);
    CHECK(meta.level == 4);
    CHECK_THROWS_AS(FormMeta(-1, 4, QuadraticChar::trivial()), InvalidArgument);
    CHECK_THROWS_AS(FormMeta(1, 0, QuadraticChar::trivial()), InvalidArgument);
}
