#include "qmod/arith.hpp"

#include <algorithm>
#include <numeric>

namespace qmod {

int kronecker(long long a, long long n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int sign = 1;
    if (n < 0) {
        if (a < 0) sign = -sign;
        n = -n;
    }
    if (n % 2 == 0) {
        if (a % 2 == 0) return 0;
        int e = 0;
        while (n % 2 == 0) {
            n /= 2;
            ++e;
        }
        // (a|2) = (-1)^((a^2-1)/8) for odd a
        long long am8 = ((a % 8) + 8) % 8;
        if (e % 2 == 1 && (am8 == 3 || am8 == 5)) sign = -sign;
    }
    // n is now odd and positive; run the Jacobi loop on a reduced mod n
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long long nm8 = n % 8;
            if (nm8 == 3 || nm8 == 5) sign = -sign;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) sign = -sign;
        a %= n;
    }
    return n == 1 ? sign : 0;
}

int kronecker(const Int& a, const Int& n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    Int nn = n;
    int sign = 1;
    if (nn < 0) {
        if (a < 0) sign = -sign;
        nn = -nn;
    }
    Int aa = a;
    if (mpz_even_p(nn.get_mpz_t())) {
        if (mpz_even_p(aa.get_mpz_t())) return 0;
        unsigned long e = mpz_scan1(nn.get_mpz_t(), 0);
        mpz_fdiv_q_2exp(nn.get_mpz_t(), nn.get_mpz_t(), e);
        unsigned long am8 = mpz_fdiv_ui(aa.get_mpz_t(), 8);
        if (e % 2 == 1 && (am8 == 3 || am8 == 5)) sign = -sign;
    }
    mpz_fdiv_r(aa.get_mpz_t(), aa.get_mpz_t(), nn.get_mpz_t());
    while (aa != 0) {
        unsigned long e = mpz_scan1(aa.get_mpz_t(), 0);
        if (e > 0) {
            mpz_fdiv_q_2exp(aa.get_mpz_t(), aa.get_mpz_t(), e);
            unsigned long nm8 = mpz_fdiv_ui(nn.get_mpz_t(), 8);
            if (e % 2 == 1 && (nm8 == 3 || nm8 == 5)) sign = -sign;
        }
        std::swap(aa, nn);
        if (mpz_fdiv_ui(aa.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(nn.get_mpz_t(), 4) == 3)
            sign = -sign;
        mpz_fdiv_r(aa.get_mpz_t(), aa.get_mpz_t(), nn.get_mpz_t());
    }
    return nn == 1 ? sign : 0;
}

static unsigned long long mulmod(unsigned long long a, unsigned long long b,
                                 unsigned long long m) {
    return static_cast<unsigned long long>(
        static_cast<unsigned __int128>(a) * b % m);
}

unsigned long long powmod(unsigned long long b, unsigned long long e,
                          unsigned long long m) {
    unsigned long long r = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

bool is_prime(unsigned long long n) {
    if (n < 2) return false;
    for (unsigned long long p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                                 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    unsigned long long d = n - 1;
    int s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    // deterministic witness set for all 64-bit inputs
    for (unsigned long long a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                                 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        unsigned long long x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::vector<std::pair<long long, int>> factor(long long n) {
    if (n <= 0) throw InvalidArgument("factor: input must be positive");
    std::vector<std::pair<long long, int>> out;
    for (long long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        int m = 0;
        while (n % p == 0) {
            n /= p;
            ++m;
        }
        out.emplace_back(p, m);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

bool is_squarefree(long long n) {
    if (n <= 0) return false;
    for (const auto& [p, m] : factor(n))
        if (m > 1) return false;
    return true;
}

long long squarefree_part(long long n) {
    if (n <= 0) throw InvalidArgument("squarefree_part: input must be positive");
    long long out = 1;
    for (const auto& [p, m] : factor(n))
        if (m % 2 == 1) out *= p;
    return out;
}

Rat bernoulli(unsigned k) {
    static std::vector<Rat> cache{Rat(1), Rat(-1, 2)};
    while (cache.size() <= k) {
        unsigned m = cache.size();
        // B_m = -1/(m+1) * sum_{j=0}^{m-1} C(m+1, j) B_j
        Rat acc(0);
        Int binom(1);  // C(m+1, j), updated incrementally
        for (unsigned j = 0; j < m; ++j) {
            acc += Rat(binom) * cache[j];
            binom *= static_cast<long>(m + 1 - j);
            binom /= static_cast<long>(j + 1);
        }
        Rat b = -acc / Rat(static_cast<long>(m + 1));
        b.canonicalize();
        cache.push_back(b);
    }
    return cache[k];
}

Residue::Residue(std::uint32_t v, std::uint32_t prime) : p(prime) {
    if (!is_prime(prime)) throw InvalidArgument("Residue: modulus must be prime");
    value = v % p;
}

static void check_same_modulus(const Residue& a, const Residue& b) {
    if (a.p != b.p) throw RingMismatch("Residue: mixed moduli");
}

Residue Residue::operator+(const Residue& o) const {
    check_same_modulus(*this, o);
    std::uint32_t s = value + o.value;
    if (s >= p) s -= p;
    Residue r;
    r.value = s;
    r.p = p;
    return r;
}

Residue Residue::operator-(const Residue& o) const {
    check_same_modulus(*this, o);
    Residue r;
    r.value = value >= o.value ? value - o.value : value + p - o.value;
    r.p = p;
    return r;
}

Residue Residue::operator*(const Residue& o) const {
    check_same_modulus(*this, o);
    Residue r;
    r.value = static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(value) * o.value % p);
    r.p = p;
    return r;
}

Residue Residue::inverse() const {
    if (value == 0) throw InvalidArgument("Residue: inverse of zero");
    Residue r;
    r.value = static_cast<std::uint32_t>(powmod(value, p - 2, p));
    r.p = p;
    return r;
}

Residue reduce_mod(const Int& z, std::uint32_t p) {
    Residue r(0, p);
    r.value = static_cast<std::uint32_t>(mpz_fdiv_ui(z.get_mpz_t(), p));
    return r;
}

Residue reduce_mod(const Rat& r, std::uint32_t p) {
    std::uint32_t den = static_cast<std::uint32_t>(
        mpz_fdiv_ui(r.get_den().get_mpz_t(), p));
    if (den == 0) throw NotPIntegral("reduce_mod: modulus divides denominator");
    Residue num = reduce_mod(r.get_num(), p);
    Residue d(den, p);
    return num * d.inverse();
}

QuadraticChar QuadraticChar::trivial(long long modulus) {
    if (modulus <= 0) throw InvalidArgument("QuadraticChar: modulus must be positive");
    QuadraticChar c;
    c.trivial_modulus_ = modulus;
    return c;
}

QuadraticChar QuadraticChar::kronecker_bottom(long long Q) {
    if (Q == 0) throw InvalidArgument("QuadraticChar: zero symbol argument");
    QuadraticChar c;
    c.factors_.push_back({Q, false});
    return c;
}

QuadraticChar QuadraticChar::kronecker_top(long long D) {
    if (D == 0) throw InvalidArgument("QuadraticChar: zero symbol argument");
    QuadraticChar c;
    c.factors_.push_back({D, true});
    return c;
}

QuadraticChar QuadraticChar::operator*(const QuadraticChar& o) const {
    QuadraticChar c = *this;
    c.trivial_modulus_ = std::lcm(trivial_modulus_, o.trivial_modulus_);
    c.factors_.insert(c.factors_.end(), o.factors_.begin(), o.factors_.end());
    return c;
}

int QuadraticChar::operator()(long long n) const {
    long long an = n < 0 ? -n : n;
    if (std::gcd(an, trivial_modulus_) != 1) return 0;
    int v = 1;
    for (const Factor& f : factors_) {
        int s = f.top ? kronecker(f.v, n) : kronecker(n, f.v);
        if (s == 0) return 0;
        v *= s;
    }
    return v;
}

long long QuadraticChar::modulus() const {
    long long m = trivial_modulus_;
    for (const Factor& f : factors_) m *= f.v < 0 ? -f.v : f.v;
    return m;
}

int char_eval(const QuadraticChar& chi, long long n) { return chi(n); }

QuadraticChar hecke_star(const QuadraticChar& chi, long long k) {
    if (k % 2 == 0) return chi;
    return chi * QuadraticChar::kronecker_top(-1);
}

}  // namespace qmod
