#pragma once

/* Operators acting on q-expansions: the Rankin-Cohen 1-bracket with exact
   half-integral weight scalars, the iterated bracket lift that reproduces
   theta powers mod p, and the half-integral-weight Hecke operator with its
   squarefree composite extension. */

#include <cstdint>
#include <string>
#include <type_traits>
#include <utility>

#include "qmod/arith.hpp"
#include "qmod/errors.hpp"
#include "qmod/qforms.hpp"
#include "qmod/series.hpp"

namespace qmod {

namespace detail {

template <class R>
typename R::Elem quarter_weight(const R& ring, long long w) {
    if (w < 0) throw InvalidArgument("twice-weights must be nonnegative");
    if constexpr (std::is_same_v<R, QRing>) {
        Rat q(static_cast<long>(w), 4);
        q.canonicalize();
        return q;
    } else {
        static_assert(std::is_same_v<R, FpRing>, "bracket scalars need division by 4");
        if (ring.modulus() == 2) throw InvalidArgument("bracket scalars need an odd modulus");
        return ring.mul(ring.from_long(w), ring.inverse(ring.from_long(4)));
    }
}

template <class R>
Series<R> bracket1(const Series<R>& F, long long w1, const Series<R>& G, long long w2) {
    const R& ring = F.ring();
    typename R::Elem half_k1 = quarter_weight(ring, w1);
    typename R::Elem half_k2 = quarter_weight(ring, w2);
    return F.theta().scalar_mul(half_k2).mul(G).sub(F.mul(G.theta().scalar_mul(half_k1)));
}

}  // namespace detail

/* [F, G]_1 = (k2/2) theta(F) G - (k1/2) F theta(G), with k_i = w_i/2 kept
   exact; w_i are twice-weights so half-integral weights stay in integers. */
inline Series<QRing> rc_bracket1(const Series<QRing>& F, long long w1, const Series<QRing>& G,
                                 long long w2) {
    return detail::bracket1(F, w1, G, w2);
}

inline Series<QRing> rc_bracket1(const Series<ZRing>& F, long long w1, const Series<ZRing>& G,
                                 long long w2) {
    return detail::bracket1(to_rational(F), w1, to_rational(G), w2);
}

inline Series<FpRing> rc_bracket1(const Series<FpRing>& F, long long w1, const Series<FpRing>& G,
                                  long long w2) {
    return detail::bracket1(F, w1, G, w2);
}

namespace detail {

inline Series<FpRing> theta_lift_core(Series<FpRing> g, std::uint32_t p, long long iterations) {
    if (p < 5 || !is_prime(p)) throw InvalidArgument("lift modulus must be a prime at least 5");
    if (g.ring().modulus() != p) throw RingMismatch("series modulus differs from the lift prime");
    if (iterations < 0) iterations = p - 1;
    FpRing F(p);

    long long eis_prec = g.precision() - std::min(g.valuation(), static_cast<long long>(0));
    Series<FpRing> eis = eisenstein_mod(p - 1, std::max(eis_prec, 2LL), p);

    /* The scalar relating one bracket application to theta is a unit that
       does not depend on the form; read it off a probe monomial once. */
    Series<FpRing> probe = Series<FpRing>::monomial(F, F.one(), 1, 2);
    std::uint32_t unit = rc_bracket1(eis, 2 * (p - 1), probe, 0).coeff(1);

    for (long long i = 0; i < iterations; ++i) g = rc_bracket1(eis, 2 * (p - 1), g, 0);
    std::uint32_t scale =
        static_cast<std::uint32_t>(powmod(F.inverse(unit), static_cast<unsigned long long>(iterations), p));
    return g.scalar_mul(scale);
}

}  // namespace detail

/* u^{-iterations} B^{iterations}(f) mod p, where B brackets against the
   weight p-1 Eisenstein series and u is the probe unit above.  The result
   agrees with theta^{iterations}(f) mod p; at the default iterations = p-1
   it keeps exactly the coefficients with exponent prime to p. */
inline Series<FpRing> theta_lift(const Series<FpRing>& f, std::uint32_t p, long long iterations = -1) {
    return detail::theta_lift_core(f, p, iterations);
}

inline Series<FpRing> theta_lift(const Series<ZRing>& f, std::uint32_t p, long long iterations = -1) {
    return detail::theta_lift_core(reduce_mod(f, p), p, iterations);
}

inline Series<FpRing> theta_lift(const Series<QRing>& f, std::uint32_t p, long long iterations = -1) {
    return detail::theta_lift_core(reduce_mod(f, p), p, iterations);
}

namespace detail {

template <class R>
typename R::Elem hecke_scalar(const R& ring, long long Q, long long e) {
    typename R::Elem x = ring.one();
    for (long long i = 0; i < std::llabs(e); ++i) x = ring.mul(x, ring.from_long(Q));
    if (e >= 0) return x;
    if constexpr (std::is_same_v<R, ZRing>) {
        throw NonIntegralScalar("integer series cannot absorb 1/" + std::to_string(Q) +
                                "; use a rational or mod-p series");
    } else if constexpr (std::is_same_v<R, QRing>) {
        return Rat(1) / x;
    } else {
        if (ring.is_zero(x))
            throw NonIntegralScalar("1/" + std::to_string(Q) + " does not exist mod " +
                                    std::to_string(ring.modulus()));
        return ring.inverse(x);
    }
}

inline long long floor_div(long long a, long long b) {
    long long q = a / b;
    return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}

inline long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

}  // namespace detail

/* Half-integral-weight Hecke operator at the prime Q for integer weight
   part k (the form has weight k + 1/2):
     b(n) = a(Q^2 n) + chi*(Q) (n|Q) Q^{k-1} a(n) + chi*(Q^2) Q^{2k-1} a(n/Q^2)
   with a(n/Q^2) read as zero off multiples of Q^2. */
template <class R>
Series<R> hecke_half(const Series<R>& F, long long Q, long long k, const QuadraticChar& chi) {
    if (Q < 2 || !is_prime(static_cast<unsigned long long>(Q)))
        throw InvalidArgument("Hecke index must be prime");
    if (k < 0) throw InvalidArgument("integer weight part must be nonnegative");
    if (chi.modulus() % Q == 0)
        throw InvalidArgument("Hecke prime must not divide the character modulus");

    const R& ring = F.ring();
    long long Q2 = Q * Q;
    long long N = F.precision();
    long long np = detail::floor_div(N - 1, Q2) + 1;

    QuadraticChar star = hecke_star(chi, k);
    int cQ = star(Q);
    int cQ2 = star(Q2);
    typename R::Elem s1 = detail::hecke_scalar(ring, Q, k - 1);
    typename R::Elem s2 = detail::hecke_scalar(ring, Q, 2 * k - 1);

    long long v = F.valuation();
    long long off = std::min(detail::ceil_div(v, Q2), v * Q2);
    if (F.is_zero() || np <= off) return Series<R>(ring, np);

    std::vector<typename R::Elem> out;
    out.reserve(static_cast<std::size_t>(np - off));
    for (long long n = off; n < np; ++n) {
        typename R::Elem b = F.coeff(Q2 * n);
        if (cQ != 0) {
            int mid = cQ * kronecker(n, Q);
            if (mid != 0) {
                typename R::Elem t = ring.mul(s1, F.coeff(n));
                b = ring.add(b, mid > 0 ? t : ring.neg(t));
            }
        }
        if (cQ2 != 0 && n % Q2 == 0) {
            typename R::Elem t = ring.mul(s2, F.coeff(n / Q2));
            b = ring.add(b, cQ2 > 0 ? t : ring.neg(t));
        }
        out.push_back(std::move(b));
    }
    return Series<R>::from_coeffs(ring, off, std::move(out), np);
}

/* Composition of hecke_half over the prime factors of squarefree m. */
template <class R>
Series<R> hecke_half_composite(const Series<R>& F, long long m, long long k,
                               const QuadraticChar& chi) {
    if (m < 1) throw InvalidArgument("Hecke index must be positive");
    Series<R> g = F;
    for (const auto& [q, e] : factor(m)) {
        if (e > 1) throw NonSquarefree("Hecke index " + std::to_string(m) + " has a square factor");
        g = hecke_half(g, q, k, chi);
    }
    return g;
}

}  // namespace qmod
