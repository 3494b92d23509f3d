#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "qmod/partitions.hpp"

using namespace qmod;

namespace {

/* Product over n of (1 + q^n) / (1 - q^n), multiplied out coefficient by
   coefficient without any eta machinery. */
std::vector<Int> product_oracle(long long N) {
    std::vector<Int> c(static_cast<std::size_t>(N));
    c[0] = 1;
    for (long long n = 1; n < N; ++n) {
        for (long long i = N - 1 - n; i >= 0; --i)
            c[static_cast<std::size_t>(i + n)] += c[static_cast<std::size_t>(i)];
        for (long long i = 0; i + n < N; ++i)
            c[static_cast<std::size_t>(i + n)] += c[static_cast<std::size_t>(i)];
    }
    return c;
}

}  // namespace

TEST_CASE("overpartition series pins") {
    Series<ZRing> w = overpartition_series(10);
    CHECK(w.offset() == 0);
    CHECK(w.coeff(0) == 1);
    CHECK(w.coeff(1) == 2);
    CHECK(w.coeff(2) == 4);
    CHECK(w.coeff(3) == 8);
    CHECK(w.coeff(4) == 14);
    CHECK(w.coeff(5) == 24);
    CHECK(w.coeff(6) == 40);
}

TEST_CASE("enumeration agrees with the series") {
    Series<ZRing> w = overpartition_series(41);
    for (long long n = 0; n <= 40; ++n) {
        OverpartitionCount c = overpartition_enumerate(n);
        CHECK(c.n == n);
        CHECK(c.count == w.coeff(n));
    }
    CHECK(overpartition_enumerate(0).count == 1);
    CHECK(overpartition_enumerate(3).count == 8);
    CHECK(overpartition_enumerate(4).count == 14);
    CHECK_THROWS_AS(overpartition_enumerate(41), TooLarge);
    CHECK_THROWS_AS(overpartition_enumerate(-1), InvalidArgument);
}

TEST_CASE("independent product expansion and parity") {
    const long long N = 10000;
    Series<ZRing> w = overpartition_series(N);
    std::vector<Int> oracle = product_oracle(N);
    for (long long n = 0; n < N; ++n) CHECK(w.coeff(n) == oracle[static_cast<std::size_t>(n)]);
    for (long long n = 1; n < N; ++n) CHECK(w.coeff(n) % 2 == 0);
}

TEST_CASE("twisted overpartition series keeps the advertised branches") {
    const long long N = 500;
    Series<ZRing> w = overpartition_series(N);
    for (std::uint32_t p : {5u, 11u}) {
        Series<FpRing> g = g_twist_series(p, N);
        FpRing F(p);
        for (long long n = 0; n < N; ++n) {
            std::uint32_t pn = F.from_long(static_cast<long>(mpz_fdiv_ui(
                w.coeff(n).get_mpz_t(), p)));
            int symbol = kronecker(-n, p);
            if (symbol == 1)
                CHECK(g.coeff(n) == 0);
            else if (symbol == -1)
                CHECK(g.coeff(n) == F.mul(2, pn));
            else
                CHECK(g.coeff(n) == pn);
        }
    }
    Series<FpRing> g5 = g_twist_series(5, 10);
    CHECK(g5.coeff(3) == 1);
    CHECK(g5.coeff(4) == 0);
    CHECK(g5.coeff(5) == 4);
    CHECK_THROWS_AS(g_twist_series(4, 10), InvalidArgument);
}

TEST_CASE("eta power factor does not change the reduction") {
    Series<FpRing> plain = g_twist_series(5, 300);
    Series<FpRing> dressed = g_twist_series(5, 300, true, 1);
    CHECK(plain.congruent_to(dressed));
    Series<FpRing> dressed2 = g_twist_series(7, 200, true, 2);
    CHECK(g_twist_series(7, 200).congruent_to(dressed2));
}
