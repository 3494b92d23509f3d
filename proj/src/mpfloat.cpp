#include "qmod/mpfloat.hpp"

#include <algorithm>

namespace qmod {

namespace {

long checked_bits(long bits) {
    if (bits < 2) throw InvalidArgument("precision must be at least 2 bits");
    return bits;
}

}  // namespace

BigFloat::BigFloat(long bits) { mpfr_init2(v_, checked_bits(bits)); mpfr_set_zero(v_, 1); }

BigFloat::BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

long BigFloat::bits() const { return mpfr_get_prec(v_); }

BigFloat BigFloat::to_bits(long bits) const {
    BigFloat r(bits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_long(long x, long bits) {
    BigFloat r(bits);
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_int(const Int& x, long bits) {
    BigFloat r(bits);
    mpfr_set_z(r.v_, x.get_mpz_t(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_double(double x, long bits) {
    BigFloat r(bits);
    mpfr_set_d(r.v_, x, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pi(long bits) {
    BigFloat r(bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::add(const BigFloat& o) const {
    BigFloat r(std::max(bits(), o.bits()));
    mpfr_add(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::sub(const BigFloat& o) const {
    BigFloat r(std::max(bits(), o.bits()));
    mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::mul(const BigFloat& o) const {
    BigFloat r(std::max(bits(), o.bits()));
    mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::div(const BigFloat& o) const {
    BigFloat r(std::max(bits(), o.bits()));
    mpfr_div(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::mul_long(long x) const {
    BigFloat r(bits());
    mpfr_mul_si(r.v_, v_, x, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::div_long(long x) const {
    BigFloat r(bits());
    mpfr_div_si(r.v_, v_, x, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::neg() const {
    BigFloat r(bits());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::abs() const {
    BigFloat r(bits());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::sqrt() const {
    BigFloat r(bits());
    mpfr_sqrt(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::exp() const {
    BigFloat r(bits());
    mpfr_exp(r.v_, v_, MPFR_RNDN);
    return r;
}

void BigFloat::sin_cos(BigFloat& s, BigFloat& c) const {
    mpfr_set_prec(s.v_, bits());
    mpfr_set_prec(c.v_, bits());
    mpfr_sin_cos(s.v_, c.v_, v_, MPFR_RNDN);
}

BigFloat BigFloat::round() const {
    BigFloat r(bits());
    mpfr_round(r.v_, v_);
    return r;
}

Int BigFloat::to_int() const {
    Int z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
    return z;
}

long BigFloat::to_long() const {
    if (!mpfr_fits_slong_p(v_, MPFR_RNDN)) throw TooLarge("value does not fit a machine integer");
    return mpfr_get_si(v_, MPFR_RNDN);
}

double BigFloat::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

int BigFloat::sign() const { return mpfr_sgn(v_); }

int BigFloat::compare(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }

BigComplex::BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

BigComplex BigComplex::from_doubles(double r, double i, long bits) {
    return BigComplex(BigFloat::from_double(r, bits), BigFloat::from_double(i, bits));
}

long BigComplex::bits() const { return std::max(re.bits(), im.bits()); }

BigComplex BigComplex::to_bits(long bits) const {
    return BigComplex(re.to_bits(bits), im.to_bits(bits));
}

BigComplex BigComplex::add(const BigComplex& o) const {
    return BigComplex(re + o.re, im + o.im);
}

BigComplex BigComplex::sub(const BigComplex& o) const {
    return BigComplex(re - o.re, im - o.im);
}

BigComplex BigComplex::mul(const BigComplex& o) const {
    return BigComplex(re * o.re - im * o.im, re * o.im + im * o.re);
}

BigComplex BigComplex::div(const BigComplex& o) const {
    BigFloat den = o.abs2();
    return BigComplex((re * o.re + im * o.im) / den, (im * o.re - re * o.im) / den);
}

BigComplex BigComplex::scale(const BigFloat& x) const {
    return BigComplex(re * x, im * x);
}

BigComplex BigComplex::neg() const { return BigComplex(re.neg(), im.neg()); }

BigFloat BigComplex::abs2() const { return re * re + im * im; }

BigFloat BigComplex::abs() const { return abs2().sqrt(); }

}  // namespace qmod
