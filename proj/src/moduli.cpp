#include "qmod/moduli.hpp"

#include <cmath>
#include <cstdlib>
#include <utility>

#include "qmod/operators.hpp"
#include "qmod/qforms.hpp"

namespace qmod {

namespace {

struct JTables {
    std::vector<Int> e4;
    std::vector<Int> tau;
    long top;
};

/* Exact q-expansion coefficients of E4 and Delta through q^top, with
   top >= 16 so the explicit part of the tail bound always reaches the
   range where the geometric majorants 240*2^n and 4^n are valid. */
JTables make_j_tables(long terms) {
    JTables t;
    t.top = std::max(terms, 16L);
    Series<ZRing> e4 = to_integer(eisenstein(4, t.top + 1));
    Series<ZRing> del = delta_series(t.top + 1);
    for (long n = 0; n <= t.top; ++n) t.e4.push_back(e4.coeff(n));
    for (long n = 1; n <= t.top; ++n) t.tau.push_back(del.coeff(n));
    return t;
}

BigComplex eval_j(const BigComplex& tau_in, const JTables& tab, long terms, long bits,
                  double accuracy) {
    BigComplex tau = reduce_to_fundamental_domain(tau_in.to_bits(bits));

    BigFloat two_pi = BigFloat::pi(bits).mul_long(2);
    BigFloat ang = two_pi * tau.re;
    BigFloat s(bits), c(bits);
    ang.sin_cos(s, c);
    BigFloat r = (two_pi * tau.im).neg().exp();
    BigComplex q(r * c, r * s);

    BigComplex e4(BigFloat::from_int(tab.e4[static_cast<std::size_t>(terms)], bits),
                  BigFloat(bits));
    for (long n = terms - 1; n >= 0; --n) {
        e4 = e4 * q;
        e4.re = e4.re + BigFloat::from_int(tab.e4[static_cast<std::size_t>(n)], bits);
    }
    BigComplex del(BigFloat::from_int(tab.tau[static_cast<std::size_t>(terms - 1)], bits),
                   BigFloat(bits));
    for (long n = terms - 2; n >= 0; --n) {
        del = del * q;
        del.re = del.re + BigFloat::from_int(tab.tau[static_cast<std::size_t>(n)], bits);
    }
    del = del * q;

    double rho = r.to_double();
    if (!(rho < 0.02)) throw PrecisionLoss("reduced point has |q| too close to 1");
    double tail_e = 0.0, tail_d = 0.0;
    for (long n = terms + 1; n <= tab.top; ++n) {
        double rn = std::pow(rho, static_cast<double>(n));
        tail_e += std::abs(tab.e4[static_cast<std::size_t>(n)].get_d()) * rn;
        tail_d += std::abs(tab.tau[static_cast<std::size_t>(n - 1)].get_d()) * rn;
    }
    tail_e += 240.0 * std::pow(2.0 * rho, static_cast<double>(tab.top + 1)) / (1.0 - 2.0 * rho);
    tail_d += std::pow(4.0 * rho, static_cast<double>(tab.top + 1)) / (1.0 - 4.0 * rho);

    BigFloat abs_e = e4.abs();
    BigFloat abs_d = del.abs();
    BigFloat err_e = BigFloat::from_double(tail_e, bits);
    BigFloat err_d = BigFloat::from_double(tail_d, bits);
    if (err_d.mul_long(2).compare(abs_d) >= 0)
        throw PrecisionLoss("series truncation dominates the denominator");
    BigFloat bound =
        (abs_e * abs_e * err_e).mul_long(3).add(abs_e * abs_e * abs_e * err_d / abs_d) / abs_d;
    double certified = bound.mul_long(4).to_double();
    if (!(certified < accuracy))
        throw PrecisionLoss("certified truncation error exceeds the requested accuracy");

    return (e4 * e4 * e4) / del;
}

std::vector<long long> divisors_of(long long m) {
    std::vector<long long> divs;
    for (long long a = 1; a <= m; ++a)
        if (m % a == 0) divs.push_back(a);
    return divs;
}

}  // namespace

bool BQF::is_reduced() const {
    if (a <= 0 || discriminant() >= 0) return false;
    long long ab = std::llabs(b);
    if (ab > a || a > c) return false;
    if (b < 0 && (ab == a || a == c)) return false;
    return true;
}

bool operator==(const BQF& f, const BQF& g) { return f.a == g.a && f.b == g.b && f.c == g.c; }

std::vector<BQF> reduced_forms(long long d) {
    if (d <= 0) throw InvalidDiscriminant("discriminant parameter must be positive");
    long long rem = d % 4;
    if (rem != 0 && rem != 3) throw InvalidDiscriminant("-d must be 0 or 3 mod 4");
    std::vector<BQF> out;
    for (long long a = 1; 3 * a * a <= d; ++a) {
        for (long long b = -a + 1; b <= a; ++b) {
            long long num = b * b + d;
            if (num % (4 * a) != 0) continue;
            long long c = num / (4 * a);
            if (c < a) continue;
            if (b < 0 && a == c) continue;
            out.push_back(BQF{a, b, c});
        }
    }
    return out;
}

int omega(const BQF& f) {
    if (!f.is_reduced()) throw NotReduced("omega is defined on reduced forms");
    if (f.a == f.b && f.b == f.c) return 3;
    if (f.b == 0 && f.a == f.c) return 2;
    return 1;
}

BigComplex reduce_to_fundamental_domain(BigComplex tau) {
    if (tau.im.sign() <= 0) throw InvalidArgument("tau must have positive imaginary part");
    long bits = tau.bits();
    BigFloat threshold =
        BigFloat::from_long(1, bits) - BigFloat::from_double(std::ldexp(1.0, -40), bits);
    for (int iter = 0; iter < 100000; ++iter) {
        BigFloat n = tau.re.round();
        if (n.sign() != 0) tau.re = tau.re - n;
        BigFloat a2 = tau.abs2();
        if (!(a2 < threshold)) return tau;
        tau = BigComplex(tau.re.neg() / a2, tau.im / a2);
    }
    throw PrecisionLoss("fundamental domain reduction did not converge");
}

BigComplex j_numeric(const BigComplex& tau, long terms, long bits, double accuracy) {
    if (terms < 1) throw InvalidArgument("terms must be positive");
    if (!(accuracy > 0)) throw InvalidArgument("accuracy must be positive");
    if (tau.im.sign() <= 0) throw InvalidArgument("tau must have positive imaginary part");
    if (bits == 0) {
        BigComplex probe = reduce_to_fundamental_domain(tau.to_bits(256));
        double y = probe.im.to_double();
        bits = 192 + static_cast<long>(std::ceil(2.0 * M_PI * y / std::log(2.0)));
    }
    if (bits < 64) throw InvalidArgument("bits must be 0 (automatic) or at least 64");
    JTables tab = make_j_tables(terms);
    return eval_j(tau, tab, terms, bits, accuracy);
}

TraceValue trace_numeric(long long m, long long d, long terms, double tolerance) {
    if (m < 1) throw InvalidArgument("m must be positive");
    if (terms < 1) throw InvalidArgument("terms must be positive");
    if (!(tolerance > 0.0) || tolerance > 0.5)
        throw InvalidArgument("tolerance must lie in (0, 0.5]");
    std::vector<BQF> forms = reduced_forms(d);
    std::vector<long long> divs = divisors_of(m);
    long long sigma1 = 0;
    for (long long t : divs) sigma1 += t;
    long long npoints = static_cast<long long>(forms.size()) * sigma1;

    double ymax = static_cast<double>(m) * std::sqrt(static_cast<double>(d)) / 2.0 + 1.0;
    long bits = 192 + static_cast<long>(std::ceil(2.0 * M_PI * ymax / std::log(2.0))) +
                static_cast<long>(std::ceil(std::log2(static_cast<double>(npoints) + 2.0)));
    JTables tab = make_j_tables(terms);
    double accuracy = tolerance / (4.0 * static_cast<double>(npoints));

    BigFloat sqrt_d = BigFloat::from_long(d, bits).sqrt();
    BigFloat tot_re(bits), tot_im(bits);
    Int shift = 744 * Int(static_cast<long>(sigma1));
    for (const BQF& f : forms) {
        BigFloat root_re = BigFloat::from_long(-f.b, bits).div_long(2 * f.a);
        BigFloat root_im = sqrt_d.div_long(2 * f.a);
        BigFloat f_re(bits), f_im(bits);
        for (long long a : divs) {
            long long dd = m / a;
            for (long long b = 0; b < dd; ++b) {
                BigComplex point(
                    (root_re.mul_long(a) + BigFloat::from_long(b, bits)).div_long(dd),
                    root_im.mul_long(a).div_long(dd));
                BigComplex j = eval_j(point, tab, terms, bits, accuracy);
                f_re = f_re + j.re;
                f_im = f_im + j.im;
            }
        }
        f_re = f_re - BigFloat::from_int(shift, bits);
        int w = omega(f);
        tot_re = tot_re + f_re.div_long(w);
        tot_im = tot_im + f_im.div_long(w);
    }

    BigFloat rounded = tot_re.round();
    double residual = (tot_re - rounded).abs().to_double();
    double residual_im = tot_im.abs().to_double();
    if (residual_im > residual) residual = residual_im;
    if (!(residual < tolerance))
        throw RoundingAmbiguous("trace sum is not close enough to an integer");
    return TraceValue{rounded.to_int(), residual};
}

Series<ZRing> h_series(long long N) {
    if (N < 1) throw InvalidArgument("N must be positive");
    EtaQuotientSpec spec{{{1, 2}, {2, -1}, {4, -6}}};
    Series<ZRing> eta = eta_quotient(spec, N);
    long long M = (N + 4) / 4;
    Series<ZRing> e4 = to_integer(eisenstein(4, M)).dilate(4);
    return eta.mul(e4).truncate(N);
}

Int B_m(long long m, long long d, long long N) {
    if (m < 1) throw InvalidArgument("m must be positive");
    if (N < 1) throw InvalidArgument("N must be positive");
    if (d >= 0 && d * m * m >= N)
        throw InsufficientPrecision("need d < N / m^2 to read the coefficient");
    Series<QRing> h = to_rational(h_series(N));
    Series<QRing> g = hecke_half_composite(h, m, 1, QuadraticChar::trivial());
    if (d >= g.precision()) throw InsufficientPrecision("Hecke image window is too short");
    Rat r = g.coeff(d);
    if (r.get_den() != 1) throw NonIntegral("Hecke image coefficient is not an integer");
    return r.get_num();
}

Series<ZRing> h1p_series(std::uint32_t p, long long N) {
    if (p < 5 || !is_prime(p)) throw InvalidArgument("p must be a prime at least 5");
    Series<ZRing> h = h_series(N);
    Series<ZRing> tw = h.twist(QuadraticChar::kronecker_bottom(p));
    return kronecker(-1, p) == 1 ? h.sub(tw) : h.add(tw);
}

Series<ZRing> fp_series(std::uint32_t p, long long N) {
    if (p < 5 || !is_prime(p)) throw InvalidArgument("p must be a prime at least 5");
    long long p2 = static_cast<long long>(p) * p;
    EtaQuotientSpec spec{{{4, p2}, {4 * p2, -1}}};
    return eta_quotient(spec, N);
}

bool fp_congruence_holds(std::uint32_t p, long long alpha, long long N) {
    if (alpha < 0) throw InvalidArgument("alpha must be nonnegative");
    Series<FpRing> h1 = reduce_mod(h1p_series(p, N), p);
    Series<FpRing> f = reduce_mod(fp_series(p, N), p);
    Series<FpRing> prod = h1.mul(pow_series(f, alpha));
    return prod.congruent_to(h1);
}

long long smallest_fp_exponent(std::uint32_t p, long long N, long long max_alpha) {
    for (long long alpha = 1; alpha <= max_alpha; ++alpha)
        if (fp_congruence_holds(p, alpha, N)) return alpha;
    return -1;
}

}  // namespace qmod
