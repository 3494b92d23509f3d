#pragma once

/* Coefficient rings for truncated Laurent series: arbitrary-precision
   integers, exact rationals, and prime fields with word-sized modulus.
   Ring objects are small values; series carry one by copy so that two
   mod-p series with different p can never be silently combined. */

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "qmod/arith.hpp"
#include "qmod/errors.hpp"

namespace qmod {

struct ZRing {
    using Elem = Int;

    static const char* name() { return "Z"; }

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_long(long long v) const { return Elem(static_cast<long>(v)); }

    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }

    /* acc += a*b and acc -= a*b without temporaries. */
    void addmul(Elem& acc, const Elem& a, const Elem& b) const {
        mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    }
    void submul(Elem& acc, const Elem& a, const Elem& b) const {
        mpz_submul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    }

    bool is_unit(const Elem& a) const { return a == 1 || a == -1; }
    Elem inverse(const Elem& a) const {
        if (!is_unit(a)) throw NonUnitLeading("integer " + to_string(a) + " is not invertible");
        return a;
    }

    std::string to_string(const Elem& a) const { return a.get_str(); }
    Elem from_string(const std::string& s) const {
        Elem a;
        if (a.set_str(s, 10) != 0) throw InvalidArgument("not a decimal integer: " + s);
        return a;
    }

    bool same(const ZRing&) const { return true; }
};

struct QRing {
    using Elem = Rat;

    static const char* name() { return "Q"; }

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_long(long long v) const { return Elem(static_cast<long>(v)); }

    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }

    void addmul(Elem& acc, const Elem& a, const Elem& b) const { acc += a * b; }
    void submul(Elem& acc, const Elem& a, const Elem& b) const { acc -= a * b; }

    bool is_unit(const Elem& a) const { return a != 0; }
    Elem inverse(const Elem& a) const {
        if (a == 0) throw NonUnitLeading("zero is not invertible");
        return Elem(1) / a;
    }

    std::string to_string(const Elem& a) const { return a.get_str(); }
    Elem from_string(const std::string& s) const {
        Elem a;
        if (a.set_str(s, 10) != 0) throw InvalidArgument("not a rational literal: " + s);
        a.canonicalize();
        return a;
    }

    bool same(const QRing&) const { return true; }
};

struct FpRing {
    using Elem = std::uint32_t;

    explicit FpRing(std::uint32_t p) : p_(p) {
        if (p < 2 || p >= (1u << 31) || !is_prime(p))
            throw InvalidArgument("modulus must be a prime below 2^31");
    }

    static const char* name() { return "Fp"; }
    std::uint32_t modulus() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p_; }
    Elem from_long(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return static_cast<Elem>(r);
    }

    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    Elem add(const Elem& a, const Elem& b) const {
        std::uint64_t s = static_cast<std::uint64_t>(a) + b;
        return static_cast<Elem>(s >= p_ ? s - p_ : s);
    }
    Elem sub(const Elem& a, const Elem& b) const { return a >= b ? a - b : a + p_ - b; }
    Elem neg(const Elem& a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(const Elem& a, const Elem& b) const {
        return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
    }

    void addmul(Elem& acc, const Elem& a, const Elem& b) const { acc = add(acc, mul(a, b)); }
    void submul(Elem& acc, const Elem& a, const Elem& b) const { acc = sub(acc, mul(a, b)); }

    bool is_unit(const Elem& a) const { return a != 0; }
    Elem inverse(const Elem& a) const {
        if (a == 0) throw NonUnitLeading("zero is not invertible");
        return static_cast<Elem>(powmod(a, p_ - 2, p_));
    }

    std::string to_string(const Elem& a) const { return std::to_string(a); }
    Elem from_string(const std::string& s) const {
        Int a;
        if (a.set_str(s, 10) != 0) throw InvalidArgument("not a decimal integer: " + s);
        return static_cast<Elem>(mpz_fdiv_ui(a.get_mpz_t(), p_));
    }

    bool same(const FpRing& other) const { return p_ == other.p_; }

private:
    std::uint32_t p_;
};

}  // namespace qmod
