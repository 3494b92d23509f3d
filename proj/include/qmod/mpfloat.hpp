#pragma once

#include <mpfr.h>

#include "qmod/arith.hpp"
#include "qmod/errors.hpp"

namespace qmod {

/* Arbitrary-precision real number. Binary operations round to the larger
   precision of the two operands. */
class BigFloat {
public:
    explicit BigFloat(long bits);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    long bits() const;
    BigFloat to_bits(long bits) const;

    static BigFloat from_long(long x, long bits);
    static BigFloat from_int(const Int& x, long bits);
    static BigFloat from_double(double x, long bits);
    static BigFloat pi(long bits);

    BigFloat add(const BigFloat& o) const;
    BigFloat sub(const BigFloat& o) const;
    BigFloat mul(const BigFloat& o) const;
    BigFloat div(const BigFloat& o) const;
    BigFloat mul_long(long x) const;
    BigFloat div_long(long x) const;
    BigFloat neg() const;
    BigFloat abs() const;
    BigFloat sqrt() const;
    BigFloat exp() const;
    void sin_cos(BigFloat& s, BigFloat& c) const;
    BigFloat round() const;

    Int to_int() const;
    long to_long() const;
    double to_double() const;
    int sign() const;
    int compare(const BigFloat& o) const;

private:
    mpfr_t v_;

    friend struct BigComplex;
};

inline BigFloat operator+(const BigFloat& a, const BigFloat& b) { return a.add(b); }
inline BigFloat operator-(const BigFloat& a, const BigFloat& b) { return a.sub(b); }
inline BigFloat operator*(const BigFloat& a, const BigFloat& b) { return a.mul(b); }
inline BigFloat operator/(const BigFloat& a, const BigFloat& b) { return a.div(b); }
inline bool operator<(const BigFloat& a, const BigFloat& b) { return a.compare(b) < 0; }
inline bool operator>(const BigFloat& a, const BigFloat& b) { return a.compare(b) > 0; }

struct BigComplex {
    BigFloat re;
    BigFloat im;

    BigComplex(BigFloat r, BigFloat i);
    static BigComplex from_doubles(double r, double i, long bits);

    long bits() const;
    BigComplex to_bits(long bits) const;

    BigComplex add(const BigComplex& o) const;
    BigComplex sub(const BigComplex& o) const;
    BigComplex mul(const BigComplex& o) const;
    BigComplex div(const BigComplex& o) const;
    BigComplex scale(const BigFloat& x) const;
    BigComplex neg() const;
    BigFloat abs2() const;
    BigFloat abs() const;
};

inline BigComplex operator+(const BigComplex& a, const BigComplex& b) { return a.add(b); }
inline BigComplex operator-(const BigComplex& a, const BigComplex& b) { return a.sub(b); }
inline BigComplex operator*(const BigComplex& a, const BigComplex& b) { return a.mul(b); }
inline BigComplex operator/(const BigComplex& a, const BigComplex& b) { return a.div(b); }

}  // namespace qmod
