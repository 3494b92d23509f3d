#pragma once

/* Residue statistics and structural probes for coefficient sequences mod p:
   exact histograms with density thresholds, square-class support detection,
   Hecke eigenvalue congruence checks with their sign dichotomy, and scans
   for primes whose Hecke operator annihilates or doubles a series. */

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "qmod/arith.hpp"
#include "qmod/rings.hpp"
#include "qmod/series.hpp"

namespace qmod {

/* One residue class in a TallyReport: its exact count, the density
   threshold it is measured against, and whether it meets the threshold. */
struct ResidueStat {
    long long count = 0;
    double threshold = 0.0;
    bool pass = false;
};

/* Exact histogram of a sequence mod p over indices 1..X.  The threshold
   for residue 0 is c*X; for every other residue it is c*sqrt(X)/ln(X). */
struct TallyReport {
    std::uint32_t p = 0;
    long long X = 0;
    bool gcd_filtered = false;
    double c = 0.0;
    long long total = 0;
    std::vector<long long> counts;         // indexed by residue
    std::vector<ResidueStat> conformance;  // indexed by residue

    bool all_pass() const;
};

/* Histogram of the (index, value) entries with 1 <= index <= X, values
   reduced mod p.  With gcd_filter set, indices divisible by p are skipped.
   The total always equals the number of entries kept. */
TallyReport tally(const std::vector<std::pair<long long, Int>>& seq, std::uint32_t p, long long X,
                  bool gcd_filter, double c = 0.01);

nlohmann::ordered_json tally_to_json(const TallyReport& r);

/* Counts table with header residue,count,threshold,pass. */
std::string tally_to_csv(const TallyReport& r);

/* Support of a mod-p series sorted into square classes n1*m^2.  Exponents
   n with 1 <= n <= X, p not dividing n, and nonzero coefficient contribute
   their squarefree part to classes; every other nonzero exponent up to X
   goes to the exceptional list verbatim. */
struct SquareClassProfile {
    std::vector<long long> classes;      // distinct squarefree parts, ascending
    std::vector<long long> exceptional;  // exponents outside the class decomposition
    bool small = false;                  // classes.size() <= the requested bound
    std::vector<long long> inconsistent; // see square_class_support
};

/* Profile of the exponents of f up to X.  When level > 0, a detected class
   n1 is listed as inconsistent if some prime ell | n1 has ell not dividing
   level and p not dividing (ell-1)*ell*(ell+1)*level. */
SquareClassProfile square_class_support(const Series<FpRing>& f, long long X,
                                        std::size_t small_bound = 10, long long level = 0);

nlohmann::ordered_json profile_to_json(const SquareClassProfile& pr);

/* Series supported on the square class of squarefree n1, with coefficients
   chosen so that hecke_half at ell acts on it by the scalar
   eps * chi(p) * ((-1)^lambda | ell) * (ell^lambda + ell^(lambda-1)). */
Series<FpRing> single_class_series(const FpRing& F, long long n1, long long ell, long long lambda,
                                   const QuadraticChar& chi, int eps, long long N);

/* Whether (ell-1) * hecke_half(g, ell, lambda, chi) agrees with
   eps * chi(p) * ((-1)^lambda | ell) * (ell^lambda + ell^(lambda-1)) * (ell-1) * g
   mod p on the shared coefficient window. */
bool eigen_congruence_check(const Series<FpRing>& g, long long ell, long long lambda,
                            const QuadraticChar& chi, int eps);

/* The check for eps = +1 and eps = -1 together.  Both holding forces
   (ell^lambda + ell^(lambda-1)) * (ell-1) * g to vanish mod p on the
   tested window; that consequence is verified on every call. */
std::pair<bool, bool> eigen_congruence_both(const Series<FpRing>& g, long long ell,
                                            long long lambda, const QuadraticChar& chi);

enum class ScanMode { annihilate, doubling };

/* Scans primes Q <= q_bound, skipping the modulus of g and primes dividing
   the character modulus, and restricted to Q = cls mod cls_mod when
   cls_mod > 0.  Returns the primes where hecke_half(g, Q, lambda, chi) is
   zero (annihilate) or congruent to 2g (doubling) on its window of
   floor((precision-1)/Q^2)+1 coefficients.  Throws InsufficientPrecision
   when that window at q_bound is shorter than min_depth. */
std::vector<long long> find_hecke_primes(const Series<FpRing>& g, long long lambda,
                                         const QuadraticChar& chi, ScanMode mode, long long q_bound,
                                         long long cls = 0, long long cls_mod = 0,
                                         long long min_depth = 50);

/* Tallies of the produced sequences mod p, p a prime at least 5.
     trace_tally:         -h_series coefficients over d = 0, 3 mod 4
     hurwitz_tally:       six times the Hurwitz numbers over n = 0, 3 mod 4
     overpartition_tally: overpartition counts over all n >= 1
   The trace and overpartition sequences carry a p = 2 mod 3 hypothesis;
   other primes are rejected unless allow_any_prime is set, in which case a
   note is written to warnings when a stream is supplied. */
TallyReport trace_tally(std::uint32_t p, long long X, double c = 0.01, bool gcd_filter = false,
                        bool allow_any_prime = false, std::ostream* warnings = nullptr);
TallyReport hurwitz_tally(std::uint32_t p, long long X, double c = 0.01, bool gcd_filter = false);
TallyReport overpartition_tally(std::uint32_t p, long long X, double c = 0.01,
                                bool gcd_filter = false, bool allow_any_prime = false,
                                std::ostream* warnings = nullptr);

}  // namespace qmod
