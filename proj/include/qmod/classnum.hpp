#pragma once

#include <string>

#include "qmod/arith.hpp"
#include "qmod/errors.hpp"
#include "qmod/series.hpp"

namespace qmod {

/* Class number weighted by stabilizer order, stored as 6H(-n) to stay
   integral. The only fractional cases are thirds (n = 3t^2) and halves
   (n = 4t^2). */
struct HurwitzValue {
    long long six_times;
};

/* "2", "1/2", "4/3" style rendering of six_times / 6. */
std::string hurwitz_display(const HurwitzValue& h);

/* Counts of lattice points on spheres: coefficient n is the number of
   integer solutions of x^2 + y^2 + z^2 = n. */
Series<ZRing> r3_series(long long N);

/* Same coefficients reduced mod p, computed by streaming convolution in
   machine words so that windows in the tens of millions stay cheap. */
Series<FpRing> r3_mod_series(long long N, std::uint32_t p);

/* Class number read off the sphere counts: r3(n)/4 when n is 3 mod 8,
   the dyadic recursion six(4m) = r3(m)/2 + 2 six(m) when 4 | n, and a
   direct form count when n is 7 mod 8 (where r3 vanishes identically and
   carries no information). */
HurwitzValue hurwitz_from_r3(long long n);
HurwitzValue hurwitz_from_r3(long long n, const Series<ZRing>& r3);

/* Independent count over reduced forms of discriminant -n with weights
   6, 3, 2 by stabilizer order. */
HurwitzValue hurwitz_oracle(long long n);

}  // namespace qmod
