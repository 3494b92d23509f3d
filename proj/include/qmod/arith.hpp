#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "qmod/errors.hpp"

namespace qmod {

typedef mpz_class Int;
typedef mpq_class Rat;

/*
 * Kronecker symbol (a|n), defined for all integers a and n.
 * Conventions:
 *   (a|0)  = 1 if a = +-1, else 0
 *   (a|-1) = -1 if a < 0, else +1
 *   (a|2)  = 0 for even a, else (-1)^((a^2-1)/8)
 * and completely multiplicative in both arguments.
 */
int kronecker(long long a, long long n);
int kronecker(const Int& a, const Int& n);

/* Deterministic primality test for 64-bit inputs. */
bool is_prime(unsigned long long n);

/* b^e mod m with 64-bit operands, m < 2^63. */
unsigned long long powmod(unsigned long long b, unsigned long long e,
                          unsigned long long m);

/* Prime factorization (p, multiplicity) by trial division, ascending p. */
std::vector<std::pair<long long, int>> factor(long long n);

bool is_squarefree(long long n);

/* Largest squarefree n1 with n = n1 * m^2, for n >= 1. */
long long squarefree_part(long long n);

/*
 * Bernoulli number B_k in the convention B_1 = -1/2, from the recurrence
 * sum_{j=0}^{m} C(m+1, j) B_j = 0.  Values are cached.
 */
Rat bernoulli(unsigned k);

/* An element of Z/p for prime p. */
struct Residue {
    std::uint32_t value = 0;  // in [0, p)
    std::uint32_t p = 0;

    Residue() = default;
    Residue(std::uint32_t v, std::uint32_t prime);

    Residue operator+(const Residue& o) const;
    Residue operator-(const Residue& o) const;
    Residue operator*(const Residue& o) const;
    Residue inverse() const;
    bool operator==(const Residue& o) const = default;
};

/* r mod p for rational r; throws NotPIntegral when p divides den(r). */
Residue reduce_mod(const Rat& r, std::uint32_t p);
Residue reduce_mod(const Int& z, std::uint32_t p);

/*
 * Real quadratic character built from Kronecker symbol factors.  Each factor
 * is either (n|Q) for a stored bottom Q, or (D|n) for a stored top D.  The
 * trivial character of modulus N sends n to 1 when gcd(n, N) = 1 and to 0
 * otherwise; every character carries such a modulus (default 1).
 */
class QuadraticChar {
public:
    QuadraticChar() = default;

    static QuadraticChar trivial(long long modulus = 1);
    /* chi_Q(n) = (n|Q). */
    static QuadraticChar kronecker_bottom(long long Q);
    /* chi_D(n) = (D|n). */
    static QuadraticChar kronecker_top(long long D);

    QuadraticChar operator*(const QuadraticChar& o) const;

    int operator()(long long n) const;

    /* Product of the factor moduli and the trivial modulus. */
    long long modulus() const;

private:
    struct Factor {
        long long v;
        bool top;
    };
    long long trivial_modulus_ = 1;
    std::vector<Factor> factors_;
};

int char_eval(const QuadraticChar& chi, long long n);

/*
 * chi*(n) = chi(n) * ((-1)^k | n), the character attached to a weight
 * k + 1/2 Hecke operator.
 */
QuadraticChar hecke_star(const QuadraticChar& chi, long long k);

}  // namespace qmod
