#include "qmod/classnum.hpp"

#include <cstdint>
#include <numeric>
#include <vector>

#include "qmod/moduli.hpp"
#include "qmod/qforms.hpp"

namespace qmod {

std::string hurwitz_display(const HurwitzValue& h) {
    long long g = std::gcd(h.six_times, 6LL);
    long long num = h.six_times / g;
    long long den = 6 / g;
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Series<ZRing> r3_series(long long N) {
    return pow_series(jacobi_theta(N), 3);
}

Series<FpRing> r3_mod_series(long long N, std::uint32_t p) {
    FpRing F(p);
    if (N < 1) throw InvalidArgument("N must be positive");

    /* Doubly weighted square counts: t2[n] = #{(x,y) : x^2 + y^2 = n} with
       signs, so entries stay below 2^16 for any reachable window. */
    std::vector<std::uint16_t> t2(static_cast<std::size_t>(N), 0);
    for (long long x = 0; x * x < N; ++x) {
        std::uint16_t wx = x == 0 ? 1 : 2;
        for (long long y = 0; x * x + y * y < N; ++y) {
            std::uint16_t wy = y == 0 ? 1 : 2;
            t2[static_cast<std::size_t>(x * x + y * y)] =
                static_cast<std::uint16_t>(t2[static_cast<std::size_t>(x * x + y * y)] + wx * wy);
        }
    }

    std::vector<std::uint32_t> out(static_cast<std::size_t>(N), 0);
    for (long long x = 0; x * x < N; ++x) {
        long long s = x * x;
        const std::uint16_t* src = t2.data();
        std::uint32_t* dst = out.data() + s;
        std::size_t len = static_cast<std::size_t>(N - s);
        if (x == 0)
            for (std::size_t i = 0; i < len; ++i) dst[i] += src[i];
        else
            for (std::size_t i = 0; i < len; ++i) dst[i] += 2u * src[i];
    }

    for (std::uint32_t& v : out) v %= p;
    return Series<FpRing>::from_coeffs(F, 0, std::move(out), N);
}

namespace {

long long six_times_from_table(long long n, const Series<ZRing>& r3) {
    if (n % 4 == 0) {
        long long m = n / 4;
        long long rec =
            (m >= 3 && (m % 4 == 0 || m % 4 == 3)) ? six_times_from_table(m, r3) : 0;
        return r3.coeff(m).get_si() / 2 + 2 * rec;
    }
    if (n % 8 == 3) return r3.coeff(n).get_si() / 4;
    return hurwitz_oracle(n).six_times;
}

}  // namespace

HurwitzValue hurwitz_from_r3(long long n, const Series<ZRing>& r3) {
    if (n < 3 || (n % 4 != 0 && n % 4 != 3))
        throw InvalidArgument("argument must be at least 3 and 0 or 3 mod 4");
    if (n % 8 != 7 && r3.precision() <= (n % 4 == 0 ? n / 4 : n))
        throw InsufficientPrecision("sphere count series is too short");
    return HurwitzValue{six_times_from_table(n, r3)};
}

HurwitzValue hurwitz_from_r3(long long n) {
    if (n < 3 || (n % 4 != 0 && n % 4 != 3))
        throw InvalidArgument("argument must be at least 3 and 0 or 3 mod 4");
    if (n % 8 == 7) return HurwitzValue{six_times_from_table(n, Series<ZRing>::one(ZRing(), 1))};
    long long need = (n % 4 == 0 ? n / 4 : n) + 1;
    return hurwitz_from_r3(n, r3_series(need));
}

HurwitzValue hurwitz_oracle(long long n) {
    long long six = 0;
    for (const BQF& f : reduced_forms(n)) six += 6 / omega(f);
    return HurwitzValue{six};
}

}  // namespace qmod
