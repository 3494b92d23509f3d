#pragma once

/* Truncated Laurent series over a selectable coefficient ring.

   A series stores the coefficient window [offset, offset + size) together
   with a precision bound: coefficients at exponents >= precision() are
   unknown, and every exponent below precision() that is not stored is
   exactly zero.  Arithmetic computes the exact precision achievable from
   its inputs instead of truncating to a global cap, so precision loss is
   always explicit in the result.  Series are immutable values. */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "qmod/arith.hpp"
#include "qmod/errors.hpp"
#include "qmod/rings.hpp"

namespace qmod {

template <class R>
class Series {
public:
    using Elem = typename R::Elem;

    /* Dense multiplication switches from schoolbook to Karatsuba when both
       operands are longer than this. */
    static inline long long karatsuba_cutoff = 512;

    /* The zero series known below the given precision. */
    explicit Series(R ring, long long prec) : ring_(std::move(ring)), offset_(prec), prec_(prec) {}

    static Series from_coeffs(R ring, long long offset, std::vector<Elem> coeffs, long long prec) {
        if (offset + static_cast<long long>(coeffs.size()) > prec)
            throw InvalidArgument("coefficient window extends beyond the precision bound");
        Series f(std::move(ring), prec);
        f.offset_ = offset;
        f.coeff_ = std::move(coeffs);
        f.normalize();
        return f;
    }

    static Series monomial(R ring, Elem c, long long exp, long long prec) {
        std::vector<Elem> v;
        v.push_back(std::move(c));
        return from_coeffs(std::move(ring), exp, std::move(v), prec);
    }

    static Series one(R ring, long long prec) {
        Elem c = ring.one();
        return monomial(std::move(ring), std::move(c), 0, prec);
    }

    const R& ring() const { return ring_; }
    long long precision() const { return prec_; }
    long long offset() const { return offset_; }
    bool is_zero() const { return coeff_.empty(); }

    /* Exponent of the first nonzero coefficient; the zero series reports its
       precision bound, which is the correct effective valuation for the
       precision formulas below. */
    long long valuation() const { return coeff_.empty() ? prec_ : offset_; }

    std::size_t size() const { return coeff_.size(); }

    /* Coefficient at exponent n.  Exponents at or beyond the precision bound
       are not known and asking for them is an error, not a zero. */
    Elem coeff(long long n) const {
        if (n >= prec_)
            throw PrecisionLoss("coefficient at exponent " + std::to_string(n) +
                                " requested from a series of precision " + std::to_string(prec_));
        if (n < offset_ || n >= offset_ + static_cast<long long>(coeff_.size())) return ring_.zero();
        return coeff_[static_cast<std::size_t>(n - offset_)];
    }

    /* All stored nonzero coefficients as (exponent, value), ascending. */
    std::vector<std::pair<long long, Elem>> nonzero_terms() const {
        std::vector<std::pair<long long, Elem>> out;
        for (std::size_t i = 0; i < coeff_.size(); ++i)
            if (!ring_.is_zero(coeff_[i])) out.emplace_back(offset_ + static_cast<long long>(i), coeff_[i]);
        return out;
    }

    Series add(const Series& g) const {
        check_ring(g);
        long long np = std::min(prec_, g.prec_);
        long long off = std::min(std::min(valuation(), g.valuation()), np);
        if (np <= off) return Series(ring_, np);
        std::vector<Elem> res(static_cast<std::size_t>(np - off), ring_.zero());
        accumulate_window(res, off, *this, np);
        accumulate_window(res, off, g, np);
        return from_coeffs(ring_, off, std::move(res), np);
    }

    Series negate() const {
        Series f(*this);
        for (Elem& c : f.coeff_) c = ring_.neg(c);
        return f;
    }

    Series sub(const Series& g) const { return add(g.negate()); }

    /* Product at the exact achievable precision
       min(precision(f) + valuation(g), precision(g) + valuation(f)). */
    Series mul(const Series& g) const {
        check_ring(g);
        long long vf = valuation(), vg = g.valuation();
        long long np = std::min(prec_ + vg, g.prec_ + vf);
        if (coeff_.empty() || g.coeff_.empty()) return Series(ring_, np);
        long long off = offset_ + g.offset_;
        long long lim = np - off;
        if (lim <= 0) return Series(ring_, np);
        std::size_t la = clip_length(coeff_.size(), np - g.offset_ - offset_);
        std::size_t lb = clip_length(g.coeff_.size(), np - offset_ - g.offset_);
        std::vector<Elem> res = mul_core(ring_, coeff_.data(), la, g.coeff_.data(), lb,
                                         static_cast<std::size_t>(lim));
        return from_coeffs(ring_, off, std::move(res), np);
    }

    /* Quotient by a series whose leading coefficient is a unit, at precision
       min(precision(f) - valuation(g), precision(g) + valuation(f) - 2 valuation(g)). */
    Series div(const Series& g) const {
        check_ring(g);
        if (g.coeff_.empty() || !ring_.is_unit(g.coeff_.front()))
            throw NonUnitLeading("division requires a unit leading coefficient");
        long long vg = g.offset_;
        long long np = std::min(prec_ - vg, g.prec_ + valuation() - 2 * vg);
        if (coeff_.empty()) return Series(ring_, np);
        long long vh = offset_ - vg;
        if (np <= vh) return Series(ring_, np);
        std::size_t L = static_cast<std::size_t>(np - vh);

        std::vector<Elem> rem(L, ring_.zero());
        for (std::size_t i = 0; i < coeff_.size() && i < L; ++i) rem[i] = coeff_[i];

        std::vector<std::pair<std::size_t, Elem>> tail;
        for (std::size_t j = 1; j < g.coeff_.size() && j < L; ++j)
            if (!ring_.is_zero(g.coeff_[j])) tail.emplace_back(j, g.coeff_[j]);

        Elem lead_inv = ring_.inverse(g.coeff_.front());
        std::vector<Elem> quo(L, ring_.zero());
        for (std::size_t k = 0; k < L; ++k) {
            if (ring_.is_zero(rem[k])) continue;
            quo[k] = ring_.mul(rem[k], lead_inv);
            for (const auto& [j, c] : tail) {
                if (k + j >= L) break;
                ring_.submul(rem[k + j], quo[k], c);
            }
        }
        return from_coeffs(ring_, vh, std::move(quo), np);
    }

    /* Multiplicative inverse carrying `terms` coefficients from its leading
       exponent -valuation(f), capped by what the input precision supports. */
    Series invert(long long terms) const {
        if (coeff_.empty() || !ring_.is_unit(coeff_.front()))
            throw NonUnitLeading("inversion requires a unit leading coefficient");
        long long np = std::min(terms - offset_, prec_ - 2 * offset_);
        if (np + offset_ <= 0) return Series(ring_, np);
        return one(ring_, np + offset_).div(*this);
    }

    /* q d/dq: the coefficient at q^n becomes n*a(n), negative n included. */
    Series theta() const {
        Series f(*this);
        for (std::size_t i = 0; i < f.coeff_.size(); ++i)
            f.coeff_[i] = ring_.mul(f.coeff_[i], ring_.from_long(f.offset_ + static_cast<long long>(i)));
        f.normalize();
        return f;
    }

    /* Coefficient-wise character twist a(n) -> chi(n) a(n). */
    Series twist(const QuadraticChar& chi) const {
        Series f(*this);
        for (std::size_t i = 0; i < f.coeff_.size(); ++i) {
            int v = chi(f.offset_ + static_cast<long long>(i));
            if (v == 0)
                f.coeff_[i] = ring_.zero();
            else if (v < 0)
                f.coeff_[i] = ring_.neg(f.coeff_[i]);
        }
        f.normalize();
        return f;
    }

    /* Substitute q -> q^t for t >= 1. */
    Series dilate(long long t) const {
        if (t < 1) throw InvalidArgument("dilation factor must be positive");
        if (t != 1 && (overflows_scale(prec_, t) || overflows_scale(offset_, t)))
            throw TooLarge("dilated exponents overflow");
        Series f(ring_, prec_ * t);
        if (coeff_.empty()) return f;
        f.offset_ = offset_ * t;
        f.coeff_.assign(static_cast<std::size_t>((coeff_.size() - 1) * t + 1), ring_.zero());
        for (std::size_t i = 0; i < coeff_.size(); ++i) f.coeff_[i * t] = coeff_[i];
        f.normalize();
        return f;
    }

    /* Multiply by q^s. */
    Series shift(long long s) const {
        Series f(*this);
        f.offset_ += s;
        f.prec_ += s;
        return f;
    }

    /* Lower the precision bound, dropping coefficients beyond it.  The bound
       never rises: unknown coefficients cannot be promoted to known zeros. */
    Series truncate(long long new_prec) const {
        if (new_prec >= prec_) return *this;
        Series f(*this);
        f.prec_ = new_prec;
        if (f.offset_ > new_prec) f.offset_ = new_prec;
        long long keep = new_prec - f.offset_;
        if (keep < static_cast<long long>(f.coeff_.size()))
            f.coeff_.resize(static_cast<std::size_t>(std::max<long long>(keep, 0)));
        f.normalize();
        return f;
    }

    Series scalar_mul(const Elem& c) const {
        if (ring_.is_zero(c)) return Series(ring_, prec_);
        Series f(*this);
        for (Elem& x : f.coeff_) x = ring_.mul(x, c);
        f.normalize();
        return f;
    }

    /* Coefficient-wise agreement at every exponent both series know. */
    bool congruent_to(const Series& g) const {
        check_ring(g);
        long long np = std::min(prec_, g.prec_);
        long long lo = std::min(std::min(valuation(), g.valuation()), np);
        for (long long n = lo; n < np; ++n)
            if (!ring_.eq(coeff(n), g.coeff(n))) return false;
        return true;
    }

    /* Structural equality: same window, precision, and coefficients. */
    bool operator==(const Series& g) const {
        if (!ring_.same(g.ring_) || offset_ != g.offset_ || prec_ != g.prec_ ||
            coeff_.size() != g.coeff_.size())
            return false;
        for (std::size_t i = 0; i < coeff_.size(); ++i)
            if (!ring_.eq(coeff_[i], g.coeff_[i])) return false;
        return true;
    }
    bool operator!=(const Series& g) const { return !(*this == g); }

    friend std::ostream& operator<<(std::ostream& os, const Series& f) {
        auto terms = f.nonzero_terms();
        std::size_t shown = 0;
        for (const auto& [n, c] : terms) {
            if (shown == 8) {
                os << " + ...";
                break;
            }
            if (shown) os << " + ";
            os << "(" << f.ring_.to_string(c) << ")q^" << n;
            ++shown;
        }
        if (terms.empty()) os << "0";
        os << " + O(q^" << f.prec_ << ")";
        return os;
    }

private:
    R ring_;
    long long offset_;
    long long prec_;
    std::vector<Elem> coeff_;

    void check_ring(const Series& g) const {
        if (!ring_.same(g.ring_)) throw RingMismatch("series live over different coefficient rings");
    }

    void normalize() {
        std::size_t lead = 0;
        while (lead < coeff_.size() && ring_.is_zero(coeff_[lead])) ++lead;
        if (lead == coeff_.size()) {
            coeff_.clear();
            offset_ = prec_;
            return;
        }
        std::size_t last = coeff_.size();
        while (last > lead && ring_.is_zero(coeff_[last - 1])) --last;
        if (lead > 0 || last < coeff_.size()) {
            std::vector<Elem> trimmed(coeff_.begin() + lead, coeff_.begin() + last);
            coeff_ = std::move(trimmed);
            offset_ += static_cast<long long>(lead);
        }
    }

    void accumulate_window(std::vector<Elem>& res, long long res_off, const Series& f,
                           long long np) const {
        for (std::size_t i = 0; i < f.coeff_.size(); ++i) {
            long long n = f.offset_ + static_cast<long long>(i);
            if (n >= np) break;
            std::size_t k = static_cast<std::size_t>(n - res_off);
            res[k] = ring_.add(res[k], f.coeff_[i]);
        }
    }

    static std::size_t clip_length(std::size_t len, long long lim) {
        if (lim <= 0) return 0;
        return std::min<std::size_t>(len, static_cast<std::size_t>(lim));
    }

    static bool overflows_scale(long long v, long long t) {
        const long long hi = std::numeric_limits<long long>::max() / t;
        return v > hi || v < -hi;
    }

    static std::size_t count_nonzero(const R& ring, const Elem* a, std::size_t n) {
        std::size_t k = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (!ring.is_zero(a[i])) ++k;
        return k;
    }

    /* Truncated product of the dense windows a[0..la) and b[0..lb), keeping
       the first `lim` output coefficients.  Chooses between a nonzero-pair
       schoolbook walk and Karatsuba by estimated cost: sparse operands (eta
       factors, theta series, Eisenstein dilations) make the pair walk far
       cheaper than any dense method, dense operands above the cutoff go to
       Karatsuba. */
    static std::vector<Elem> mul_core(const R& ring, const Elem* a, std::size_t la, const Elem* b,
                                      std::size_t lb, std::size_t lim) {
        std::vector<Elem> res(std::min(lim, la + lb - 1), ring.zero());
        if (la == 0 || lb == 0) return res;
        std::size_t nza = count_nonzero(ring, a, la);
        std::size_t nzb = count_nonzero(ring, b, lb);
        if (nza == 0 || nzb == 0) return res;

        double sparse_cost = static_cast<double>(nza) * static_cast<double>(nzb);
        double kara_cost = 3.0 * std::pow(static_cast<double>(std::max(la, lb)), 1.585);
        bool small = std::min(la, lb) <= static_cast<std::size_t>(karatsuba_cutoff);
        if (small || sparse_cost <= kara_cost) {
            schoolbook(ring, a, la, b, lb, res);
            return res;
        }
        std::vector<Elem> full = kara(ring, a, la, b, lb);
        for (std::size_t i = 0; i < res.size(); ++i) res[i] = std::move(full[i]);
        return res;
    }

    static void schoolbook(const R& ring, const Elem* a, std::size_t la, const Elem* b,
                           std::size_t lb, std::vector<Elem>& res) {
        /* Walk nonzeros of the sparser operand on the outside so eta-factor
           shapes cost O(nnz * len) and mutually sparse pairs O(nnz * nnz). */
        if (count_nonzero(ring, a, la) > count_nonzero(ring, b, lb)) {
            std::swap(a, b);
            std::swap(la, lb);
        }
        std::size_t lim = res.size();
        for (std::size_t i = 0; i < la && i < lim; ++i) {
            if (ring.is_zero(a[i])) continue;
            std::size_t jmax = std::min(lb, lim - i);
            for (std::size_t j = 0; j < jmax; ++j) {
                if (ring.is_zero(b[j])) continue;
                ring.addmul(res[i + j], a[i], b[j]);
            }
        }
    }

    static std::vector<Elem> kara(const R& ring, const Elem* a, std::size_t la, const Elem* b,
                                  std::size_t lb) {
        if (la == 0 || lb == 0) return {};
        std::vector<Elem> res(la + lb - 1, ring.zero());
        if (std::min(la, lb) <= static_cast<std::size_t>(karatsuba_cutoff)) {
            schoolbook(ring, a, la, b, lb, res);
            return res;
        }
        std::size_t m = (std::max(la, lb) + 1) / 2;
        std::size_t la0 = std::min(la, m), lb0 = std::min(lb, m);
        std::size_t la1 = la - la0, lb1 = lb - lb0;

        std::vector<Elem> z0 = kara(ring, a, la0, b, lb0);
        std::vector<Elem> z2 = kara(ring, a + la0, la1, b + lb0, lb1);

        std::vector<Elem> sa(std::max(la0, la1), ring.zero());
        for (std::size_t i = 0; i < la0; ++i) sa[i] = a[i];
        for (std::size_t i = 0; i < la1; ++i) sa[i] = ring.add(sa[i], a[la0 + i]);
        std::vector<Elem> sb(std::max(lb0, lb1), ring.zero());
        for (std::size_t i = 0; i < lb0; ++i) sb[i] = b[i];
        for (std::size_t i = 0; i < lb1; ++i) sb[i] = ring.add(sb[i], b[lb0 + i]);
        std::vector<Elem> z1 = kara(ring, sa.data(), sa.size(), sb.data(), sb.size());

        for (std::size_t i = 0; i < z1.size(); ++i) {
            if (i < z0.size()) z1[i] = ring.sub(z1[i], z0[i]);
            if (i < z2.size()) z1[i] = ring.sub(z1[i], z2[i]);
        }
        for (std::size_t i = 0; i < z0.size(); ++i) res[i] = ring.add(res[i], z0[i]);
        for (std::size_t i = 0; i < z1.size(); ++i)
            if (m + i < res.size()) res[m + i] = ring.add(res[m + i], z1[i]);
        for (std::size_t i = 0; i < z2.size(); ++i) res[2 * m + i] = ring.add(res[2 * m + i], z2[i]);
        return res;
    }
};

template <class R>
Series<R> operator+(const Series<R>& f, const Series<R>& g) { return f.add(g); }
template <class R>
Series<R> operator-(const Series<R>& f, const Series<R>& g) { return f.sub(g); }
template <class R>
Series<R> operator-(const Series<R>& f) { return f.negate(); }
template <class R>
Series<R> operator*(const Series<R>& f, const Series<R>& g) { return f.mul(g); }
template <class R>
Series<R> operator/(const Series<R>& f, const Series<R>& g) { return f.div(g); }

template <class R>
Series<R> theta_op(const Series<R>& f) { return f.theta(); }
template <class R>
Series<R> twist(const Series<R>& f, const QuadraticChar& chi) { return f.twist(chi); }

inline Series<QRing> to_rational(const Series<ZRing>& f) {
    std::vector<Rat> coeffs;
    coeffs.reserve(f.size());
    for (long long i = 0; i < static_cast<long long>(f.size()); ++i)
        coeffs.emplace_back(f.coeff(f.offset() + i));
    return Series<QRing>::from_coeffs(QRing(), f.is_zero() ? f.precision() : f.offset(),
                                      std::move(coeffs), f.precision());
}

/* Exact integer view of a rational series; any surviving denominator is an
   error rather than a rounding. */
inline Series<ZRing> to_integer(const Series<QRing>& f) {
    std::vector<Int> coeffs;
    coeffs.reserve(f.size());
    for (long long i = 0; i < static_cast<long long>(f.size()); ++i) {
        Rat c = f.coeff(f.offset() + i);
        if (c.get_den() != 1)
            throw NonIntegral("coefficient " + c.get_str() + " at exponent " +
                              std::to_string(f.offset() + i) + " is not an integer");
        coeffs.push_back(c.get_num());
    }
    return Series<ZRing>::from_coeffs(ZRing(), f.is_zero() ? f.precision() : f.offset(),
                                      std::move(coeffs), f.precision());
}

inline Series<FpRing> reduce_mod(const Series<ZRing>& f, std::uint32_t p) {
    FpRing ring(p);
    std::vector<std::uint32_t> coeffs;
    coeffs.reserve(f.size());
    for (long long i = 0; i < static_cast<long long>(f.size()); ++i) {
        Int c = f.coeff(f.offset() + i);
        coeffs.push_back(static_cast<std::uint32_t>(mpz_fdiv_ui(c.get_mpz_t(), p)));
    }
    return Series<FpRing>::from_coeffs(ring, f.is_zero() ? f.precision() : f.offset(),
                                       std::move(coeffs), f.precision());
}

inline Series<FpRing> reduce_mod(const Series<QRing>& f, std::uint32_t p) {
    FpRing ring(p);
    std::vector<std::uint32_t> coeffs;
    coeffs.reserve(f.size());
    for (long long i = 0; i < static_cast<long long>(f.size()); ++i)
        coeffs.push_back(reduce_mod(f.coeff(f.offset() + i), p).value);
    return Series<FpRing>::from_coeffs(ring, f.is_zero() ? f.precision() : f.offset(),
                                       std::move(coeffs), f.precision());
}

}  // namespace qmod
