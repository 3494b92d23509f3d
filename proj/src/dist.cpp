#include "qmod/dist.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "qmod/classnum.hpp"
#include "qmod/errors.hpp"
#include "qmod/moduli.hpp"
#include "qmod/operators.hpp"
#include "qmod/partitions.hpp"

namespace qmod {

bool TallyReport::all_pass() const {
    for (const ResidueStat& s : conformance)
        if (!s.pass) return false;
    return true;
}

TallyReport tally(const std::vector<std::pair<long long, Int>>& seq, std::uint32_t p, long long X,
                  bool gcd_filter, double c) {
    if (p < 2 || !is_prime(p)) throw InvalidArgument("tally modulus must be prime");
    if (p > (1u << 20)) throw TooLarge("residue table for modulus " + std::to_string(p));
    if (X < 2) throw InvalidArgument("tally bound must be at least 2");
    if (!(c > 0)) throw InvalidArgument("conformance constant must be positive");

    TallyReport r;
    r.p = p;
    r.X = X;
    r.gcd_filtered = gcd_filter;
    r.c = c;
    r.counts.assign(p, 0);
    for (const auto& [n, v] : seq) {
        if (n < 1 || n > X) continue;
        if (gcd_filter && n % p == 0) continue;
        ++r.counts[mpz_fdiv_ui(v.get_mpz_t(), p)];
        ++r.total;
    }

    double xd = static_cast<double>(X);
    double side = c * std::sqrt(xd) / std::log(xd);
    r.conformance.reserve(p);
    for (std::uint32_t res = 0; res < p; ++res) {
        double th = res == 0 ? c * xd : side;
        r.conformance.push_back({r.counts[res], th, static_cast<double>(r.counts[res]) >= th});
    }
    return r;
}

nlohmann::ordered_json tally_to_json(const TallyReport& r) {
    nlohmann::ordered_json j;
    j["p"] = r.p;
    j["X"] = r.X;
    j["gcd_filtered"] = r.gcd_filtered;
    j["c"] = r.c;
    j["total"] = r.total;
    nlohmann::ordered_json counts, conf;
    for (std::uint32_t res = 0; res < r.p; ++res) {
        const std::string key = std::to_string(res);
        counts[key] = r.counts[res];
        nlohmann::ordered_json row;
        row["count"] = r.conformance[res].count;
        row["threshold"] = r.conformance[res].threshold;
        row["pass"] = r.conformance[res].pass;
        conf[key] = std::move(row);
    }
    j["counts"] = std::move(counts);
    j["conformance"] = std::move(conf);
    j["all_pass"] = r.all_pass();
    return j;
}

std::string tally_to_csv(const TallyReport& r) {
    std::ostringstream os;
    os << "residue,count,threshold,pass\n";
    for (std::uint32_t res = 0; res < r.p; ++res)
        os << res << ',' << r.counts[res] << ',' << r.conformance[res].threshold << ','
           << (r.conformance[res].pass ? "true" : "false") << '\n';
    return os.str();
}

SquareClassProfile square_class_support(const Series<FpRing>& f, long long X,
                                        std::size_t small_bound, long long level) {
    if (X < 1) throw InvalidArgument("support bound must be positive");
    if (X >= f.precision())
        throw InsufficientPrecision("support to exponent " + std::to_string(X) +
                                    " requested from a series of precision " +
                                    std::to_string(f.precision()));
    const std::uint32_t p = f.ring().modulus();

    SquareClassProfile pr;
    for (const auto& [n, c] : f.nonzero_terms()) {
        (void)c;
        if (n > X) break;
        if (n >= 1 && n % p != 0)
            pr.classes.push_back(squarefree_part(n));
        else
            pr.exceptional.push_back(n);
    }
    std::sort(pr.classes.begin(), pr.classes.end());
    pr.classes.erase(std::unique(pr.classes.begin(), pr.classes.end()), pr.classes.end());
    pr.small = pr.classes.size() <= small_bound;

    if (level > 0) {
        const long long pl = static_cast<long long>(p);
        for (long long n1 : pr.classes) {
            for (const auto& [ell, e] : factor(n1)) {
                (void)e;
                if (level % ell == 0) continue;
                long long prod = (ell - 1) % pl * (ell % pl) % pl * ((ell + 1) % pl) % pl *
                                 (level % pl) % pl;
                if (prod != 0) {
                    pr.inconsistent.push_back(n1);
                    break;
                }
            }
        }
    }
    return pr;
}

nlohmann::ordered_json profile_to_json(const SquareClassProfile& pr) {
    nlohmann::ordered_json j;
    j["classes"] = pr.classes;
    j["exceptional"] = pr.exceptional;
    j["small"] = pr.small;
    j["inconsistent"] = pr.inconsistent;
    return j;
}

namespace {

/* ell^(lambda-1) mod p, through the inverse when lambda = 0. */
std::uint32_t ell_power_down(const FpRing& F, long long ell, long long lambda) {
    if (lambda >= 1)
        return static_cast<std::uint32_t>(
            powmod(F.from_long(ell), static_cast<unsigned long long>(lambda - 1), F.modulus()));
    return F.inverse(F.from_long(ell));
}

void check_eigen_args(const FpRing& F, long long ell, long long lambda) {
    if (ell < 3 || !is_prime(static_cast<unsigned long long>(ell)))
        throw InvalidArgument("eigen prime must be an odd prime");
    if (lambda < 0) throw InvalidArgument("integer weight part must be nonnegative");
    if (ell == static_cast<long long>(F.modulus()))
        throw InvalidArgument("eigen prime must differ from the series modulus");
}

/* Both eigen comparisons share one Hecke application; the sign dichotomy
   consequence is verified whenever both of them hold. */
std::pair<bool, bool> eigen_pair(const Series<FpRing>& g, long long ell, long long lambda,
                                 const QuadraticChar& chi) {
    const FpRing& F = g.ring();
    check_eigen_args(F, ell, lambda);
    int unit = char_eval(chi, F.modulus()) * (lambda % 2 ? kronecker(-1, ell) : 1);
    if (unit == 0) throw InvalidArgument("character must be nonzero at the series modulus");

    std::uint32_t down = ell_power_down(F, ell, lambda);
    std::uint32_t base = F.add(F.mul(down, F.from_long(ell)), down);
    std::uint32_t lm1 = F.from_long(ell - 1);

    Series<FpRing> lhs = hecke_half(g, ell, lambda, chi).scalar_mul(lm1);
    Series<FpRing> gwin = g.truncate(lhs.precision());
    std::uint32_t scale = F.mul(F.mul(F.from_long(unit), base), lm1);
    bool plus = lhs.congruent_to(gwin.scalar_mul(scale));
    bool minus = lhs.congruent_to(gwin.scalar_mul(F.neg(scale)));
    if (plus && minus && !gwin.scalar_mul(F.mul(base, lm1)).is_zero())
        throw Error("eigen congruence held for both signs on a series the signs do not annihilate");
    return {plus, minus};
}

}  // namespace

Series<FpRing> single_class_series(const FpRing& F, long long n1, long long ell, long long lambda,
                                   const QuadraticChar& chi, int eps, long long N) {
    if (n1 < 1 || !is_squarefree(n1))
        throw InvalidArgument("class representative must be positive and squarefree");
    if (eps != 1 && eps != -1) throw InvalidArgument("sign must be +1 or -1");
    check_eigen_args(F, ell, lambda);
    if (chi.modulus() % ell == 0)
        throw InvalidArgument("eigen prime must not divide the character modulus");
    const std::uint32_t p = F.modulus();
    int unit = eps * char_eval(chi, p) * (lambda % 2 ? kronecker(-1, ell) : 1);
    if (unit == 0) throw InvalidArgument("character must be nonzero at the series modulus");
    if (N <= n1) return Series<FpRing>(F, N);

    std::uint32_t down = ell_power_down(F, ell, lambda);
    std::uint32_t A = F.mul(F.from_long(unit), F.add(F.mul(down, F.from_long(ell)), down));
    QuadraticChar star = hecke_star(chi, lambda);
    std::uint32_t s1 = F.mul(F.from_long(star(ell) * kronecker(n1, ell)), down);
    std::uint32_t s2 = F.mul(F.from_long(star(ell * ell)),
                             lambda >= 1 ? static_cast<std::uint32_t>(powmod(
                                               F.from_long(ell),
                                               static_cast<unsigned long long>(2 * lambda - 1), p))
                                         : F.inverse(F.from_long(ell)));

    std::vector<std::uint32_t> coef(static_cast<std::size_t>(N), 0);
    const long long step = ell * ell;
    for (long long m0 = 1; n1 <= (N - 1) / m0 / m0; ++m0) {
        if (m0 % ell == 0) continue;
        long long at = n1 * m0 * m0;
        std::uint32_t cur = F.one(), before = 0;
        coef[static_cast<std::size_t>(at)] = cur;
        for (bool first = true; at <= (N - 1) / step; first = false) {
            at *= step;
            std::uint32_t next = F.sub(F.mul(A, cur), first ? F.mul(s1, cur) : F.mul(s2, before));
            coef[static_cast<std::size_t>(at)] = next;
            before = cur;
            cur = next;
        }
    }
    return Series<FpRing>::from_coeffs(F, 0, std::move(coef), N);
}

bool eigen_congruence_check(const Series<FpRing>& g, long long ell, long long lambda,
                            const QuadraticChar& chi, int eps) {
    if (eps != 1 && eps != -1) throw InvalidArgument("sign must be +1 or -1");
    auto [plus, minus] = eigen_pair(g, ell, lambda, chi);
    return eps == 1 ? plus : minus;
}

std::pair<bool, bool> eigen_congruence_both(const Series<FpRing>& g, long long ell,
                                            long long lambda, const QuadraticChar& chi) {
    return eigen_pair(g, ell, lambda, chi);
}

std::vector<long long> find_hecke_primes(const Series<FpRing>& g, long long lambda,
                                         const QuadraticChar& chi, ScanMode mode, long long q_bound,
                                         long long cls, long long cls_mod, long long min_depth) {
    if (q_bound < 2) throw InvalidArgument("prime bound must be at least 2");
    if (min_depth < 1) throw InvalidArgument("scan depth must be positive");
    if (cls_mod < 0 || (cls_mod == 0 && cls != 0))
        throw InvalidArgument("congruence class needs a positive modulus");
    const FpRing& F = g.ring();
    long long worst = (g.precision() - 1) / (q_bound * q_bound) + 1;
    if (worst < min_depth)
        throw InsufficientPrecision("testable depth " + std::to_string(worst) + " at bound " +
                                    std::to_string(q_bound) + " is below the minimum " +
                                    std::to_string(min_depth));

    std::vector<long long> out;
    for (long long Q = 2; Q <= q_bound; ++Q) {
        if (!is_prime(static_cast<unsigned long long>(Q))) continue;
        if (Q == static_cast<long long>(F.modulus())) continue;
        if (chi.modulus() % Q == 0) continue;
        if (cls_mod > 0 && Q % cls_mod != ((cls % cls_mod) + cls_mod) % cls_mod) continue;
        Series<FpRing> h = hecke_half(g, Q, lambda, chi);
        bool hit = mode == ScanMode::annihilate
                       ? h.is_zero()
                       : h.congruent_to(g.truncate(h.precision()).scalar_mul(F.from_long(2)));
        if (hit) out.push_back(Q);
    }
    return out;
}

namespace {

void check_tally_prime(std::uint32_t p) {
    if (p < 5 || !is_prime(p)) throw InvalidArgument("tally modulus must be a prime at least 5");
}

void check_two_mod_three(std::uint32_t p, bool allow_any_prime, std::ostream* warnings) {
    if (p % 3 == 2) return;
    if (!allow_any_prime)
        throw InvalidArgument("modulus " + std::to_string(p) +
                              " is not 2 mod 3; set allow_any_prime to tally it anyway");
    if (warnings)
        *warnings << "note: modulus " << p
                  << " is not 2 mod 3; the tallied distribution is not covered by the congruence "
                     "results\n";
}

}  // namespace

TallyReport trace_tally(std::uint32_t p, long long X, double c, bool gcd_filter,
                        bool allow_any_prime, std::ostream* warnings) {
    check_tally_prime(p);
    check_two_mod_three(p, allow_any_prime, warnings);
    if (X < 3) throw InvalidArgument("bound must admit a valid discriminant");
    Series<ZRing> h = h_series(X + 1);
    std::vector<std::pair<long long, Int>> seq;
    for (long long d = 3; d <= X; ++d)
        if (d % 4 == 0 || d % 4 == 3) seq.emplace_back(d, -h.coeff(d));
    return tally(seq, p, X, gcd_filter, c);
}

TallyReport hurwitz_tally(std::uint32_t p, long long X, double c, bool gcd_filter) {
    check_tally_prime(p);
    if (X < 3) throw InvalidArgument("bound must admit a valid discriminant");
    Series<ZRing> r3 = r3_series(X + 1);
    std::vector<std::pair<long long, Int>> seq;
    for (long long n = 3; n <= X; ++n)
        if (n % 4 == 0 || n % 4 == 3)
            seq.emplace_back(n, Int(static_cast<long>(hurwitz_from_r3(n, r3).six_times)));
    return tally(seq, p, X, gcd_filter, c);
}

TallyReport overpartition_tally(std::uint32_t p, long long X, double c, bool gcd_filter,
                                bool allow_any_prime, std::ostream* warnings) {
    check_tally_prime(p);
    check_two_mod_three(p, allow_any_prime, warnings);
    if (X < 2) throw InvalidArgument("bound must be at least 2");
    Series<ZRing> w = overpartition_series(X + 1);
    std::vector<std::pair<long long, Int>> seq;
    seq.reserve(static_cast<std::size_t>(X));
    for (long long n = 1; n <= X; ++n) seq.emplace_back(n, w.coeff(n));
    return tally(seq, p, X, gcd_filter, c);
}

}  // namespace qmod
