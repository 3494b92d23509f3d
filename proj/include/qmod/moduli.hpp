#pragma once

#include <vector>

#include "qmod/arith.hpp"
#include "qmod/errors.hpp"
#include "qmod/mpfloat.hpp"
#include "qmod/series.hpp"

namespace qmod {

/* Positive definite integral binary quadratic form a x^2 + b xy + c y^2. */
struct BQF {
    long long a;
    long long b;
    long long c;

    long long discriminant() const { return b * b - 4 * a * c; }
    bool is_reduced() const;
};

bool operator==(const BQF& f, const BQF& g);

/* One reduced representative per equivalence class of discriminant -d,
   imprimitive forms included. Requires d > 0 and d congruent to 0 or 3
   mod 4. */
std::vector<BQF> reduced_forms(long long d);

/* Order of the stabilizer quotient: 2 for [a,0,a], 3 for [a,a,a], else 1.
   Defined on reduced forms only. */
int omega(const BQF& f);

/* Translate by integers and invert until |Re| <= 1/2 and |tau| >= 1.
   Requires Im tau > 0. */
BigComplex reduce_to_fundamental_domain(BigComplex tau);

/* Modular j-function at tau, evaluated as E4^3/Delta on truncated
   q-expansions after moving tau to the fundamental domain. `terms` is the
   last retained q-exponent; the discarded tail is bounded rigorously and
   must stay below `accuracy`. bits = 0 picks a working precision from the
   reduced imaginary part. */
BigComplex j_numeric(const BigComplex& tau, long terms = 60, long bits = 0,
                     double accuracy = 1e-6);

struct TraceValue {
    Int value;
    double residual;
};

/* Weighted sum over reduced forms of discriminant -d of the level-m
   modular polynomial average of j, rounded to the nearest integer.
   Throws RoundingAmbiguous when the sum lands further than `tolerance`
   from an integer. */
TraceValue trace_numeric(long long m, long long d, long terms = 60,
                         double tolerance = 0.25);

/* Integer Laurent series of leading exponent -1 whose coefficient at q^d
   is minus the d-th trace value, assembled from an eta quotient times the
   weight four Eisenstein series at 4z. */
Series<ZRing> h_series(long long N);

/* Coefficient of q^d after applying the composite half-integral Hecke
   operator of index m^2 to h_series. Requires m squarefree and
   d < N / m^2. */
Int B_m(long long m, long long d, long long N);

/* h minus its quadratic twist by the mod p character, signed so that
   coefficients supported on kronecker(-d, p) = +1 cancel. */
Series<ZRing> h1p_series(std::uint32_t p, long long N);

/* Eta quotient eta(4z)^{p^2} / eta(4 p^2 z); congruent to 1 mod p
   coefficientwise. */
Series<ZRing> fp_series(std::uint32_t p, long long N);

/* Whether h1p * fp^alpha and h1p agree mod p on their shared window. */
bool fp_congruence_holds(std::uint32_t p, long long alpha, long long N);

/* Smallest alpha in [1, max_alpha] passing fp_congruence_holds, or -1. */
long long smallest_fp_exponent(std::uint32_t p, long long N, long long max_alpha);

}  // namespace qmod
