#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <sstream>
#include <vector>

#include "qmod/classnum.hpp"
#include "qmod/dist.hpp"
#include "qmod/moduli.hpp"
#include "qmod/operators.hpp"
#include "qmod/partitions.hpp"
#include "qmod/qforms.hpp"
#include "qmod/series.hpp"

using namespace qmod;

namespace {

std::vector<std::pair<long long, Int>> sequence_of(long long X, long long (*f)(long long)) {
    std::vector<std::pair<long long, Int>> seq;
    for (long long n = 1; n <= X; ++n) seq.emplace_back(n, Int(static_cast<long>(f(n))));
    return seq;
}

/* Keeps exactly the coefficients the profile claims to account for. */
Series<FpRing> rebuild_from_profile(const Series<FpRing>& f, const SquareClassProfile& pr,
                                    long long X) {
    const FpRing& F = f.ring();
    std::set<long long> exc(pr.exceptional.begin(), pr.exceptional.end());
    std::set<long long> cls(pr.classes.begin(), pr.classes.end());
    std::vector<std::uint32_t> out;
    for (long long n = f.offset(); n <= X; ++n) {
        bool keep = exc.count(n) != 0 ||
                    (n >= 1 && n % F.modulus() != 0 && cls.count(squarefree_part(n)) != 0);
        out.push_back(keep ? f.coeff(n) : 0);
    }
    return Series<FpRing>::from_coeffs(F, f.offset(), std::move(out), X + 1);
}

}  // namespace

TEST_CASE("tally counts exactly and judges thresholds") {
    SUBCASE("constant zero sequence lands everything in residue zero") {
        auto rep = tally(sequence_of(100, [](long long) -> long long { return 0; }), 5, 100, false);
        CHECK(rep.p == 5);
        CHECK(rep.X == 100);
        CHECK(rep.total == 100);
        CHECK(rep.counts == std::vector<long long>{100, 0, 0, 0, 0});
        CHECK(rep.conformance[0].threshold == doctest::Approx(1.0));
        CHECK(rep.conformance[0].pass);
        CHECK(rep.conformance[1].count == 0);
        CHECK_FALSE(rep.conformance[1].pass);
        CHECK_FALSE(rep.all_pass());
    }

    SUBCASE("the identity sequence is equidistributed") {
        auto rep = tally(sequence_of(100, [](long long n) { return n; }), 5, 100, false);
        CHECK(rep.total == 100);
        CHECK(rep.counts == std::vector<long long>{20, 20, 20, 20, 20});
        CHECK(rep.all_pass());
    }

    SUBCASE("the gcd filter drops indices divisible by p") {
        auto rep = tally(sequence_of(100, [](long long n) { return n; }), 5, 100, true);
        CHECK(rep.gcd_filtered);
        CHECK(rep.total == 80);
        CHECK(rep.counts == std::vector<long long>{0, 20, 20, 20, 20});
    }

    SUBCASE("entries outside 1..X are ignored") {
        std::vector<std::pair<long long, Int>> seq{{-3, Int(1)}, {0, Int(1)}, {7, Int(9)},
                                                   {101, Int(1)}};
        auto rep = tally(seq, 5, 100, false);
        CHECK(rep.total == 1);
        CHECK(rep.counts == std::vector<long long>{0, 0, 0, 0, 1});
    }

    SUBCASE("negative values reduce to canonical residues") {
        std::vector<std::pair<long long, Int>> seq{{1, Int(-1)}, {2, Int(-7)}};
        auto rep = tally(seq, 5, 10, false);
        CHECK(rep.counts == std::vector<long long>{0, 0, 0, 1, 1});
    }

    SUBCASE("validation") {
        std::vector<std::pair<long long, Int>> seq{{1, Int(0)}};
        CHECK_THROWS_AS(tally(seq, 6, 100, false), InvalidArgument);
        CHECK_THROWS_AS(tally(seq, 5, 1, false), InvalidArgument);
        CHECK_THROWS_AS(tally(seq, 5, 100, false, 0.0), InvalidArgument);
        std::uint32_t big = (1u << 20) + 1;
        while (!is_prime(big)) ++big;
        CHECK_THROWS_AS(tally(seq, big, 100, false), TooLarge);
    }
}

TEST_CASE("tally reports serialize to json and csv") {
    auto rep = tally(sequence_of(100, [](long long) -> long long { return 0; }), 5, 100, false);

    auto j = tally_to_json(rep);
    CHECK(j["p"] == 5);
    CHECK(j["X"] == 100);
    CHECK(j["gcd_filtered"] == false);
    CHECK(j["total"] == 100);
    CHECK(j["counts"]["0"] == 100);
    CHECK(j["counts"]["3"] == 0);
    CHECK(j["conformance"]["0"]["pass"] == true);
    CHECK(j["conformance"]["2"]["pass"] == false);
    CHECK(j["all_pass"] == false);
    CHECK(tally_to_json(rep).dump() == j.dump());

    std::string csv = tally_to_csv(rep);
    CHECK(csv.rfind("residue,count,threshold,pass\n", 0) == 0);
    CHECK(csv.find("0,100,1,true\n") != std::string::npos);
    CHECK(csv.find("1,0,") != std::string::npos);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
}

TEST_CASE("square class support sorts exponents into square classes") {
    FpRing F5(5);

    SUBCASE("theta power lift of the theta series is supported on one class") {
        Series<FpRing> g = theta_lift(jacobi_theta(2001), 5);
        auto pr = square_class_support(g, 2000);
        CHECK(pr.classes == std::vector<long long>{1});
        CHECK(pr.exceptional.empty());
        CHECK(pr.small);
        CHECK(pr.inconsistent.empty());
    }

    SUBCASE("theta power lift of the theta cube is supported on many classes") {
        Series<FpRing> g = theta_lift(r3_mod_series(2001, 5), 5);
        auto pr = square_class_support(g, 2000);
        CHECK_FALSE(pr.small);
        CHECK(pr.classes.size() > 10);
        std::set<long long> cls(pr.classes.begin(), pr.classes.end());
        CHECK(cls.count(1) == 1);
        CHECK(cls.count(2) == 1);
        CHECK(cls.count(3) == 1);
        CHECK(cls.count(6) == 1);
        for (long long n1 : pr.classes) {
            CHECK(is_squarefree(n1));
            CHECK(n1 % 5 != 0);
        }
        CHECK(pr.exceptional.empty());
        CHECK(rebuild_from_profile(g, pr, 2000).congruent_to(g.truncate(2001)));
    }

    SUBCASE("a constructed single class input reports exactly that class") {
        Series<FpRing> g = single_class_series(F5, 3, 7, 1, QuadraticChar::trivial(), 1, 2001);
        auto pr = square_class_support(g, 2000);
        CHECK(pr.classes == std::vector<long long>{3});
        CHECK(pr.small);
        for (long long e : pr.exceptional) CHECK(e % 5 == 0);
        CHECK(rebuild_from_profile(g, pr, 2000).congruent_to(g.truncate(2001)));
    }

    SUBCASE("exponents divisible by p or nonpositive are exceptional") {
        std::vector<std::uint32_t> coef{1, 0, 0, 1, 0, 0, 1};
        auto f = Series<FpRing>::from_coeffs(F5, -1, std::move(coef), 10);
        auto pr = square_class_support(f, 9);
        CHECK(pr.classes == std::vector<long long>{2});
        CHECK(pr.exceptional == std::vector<long long>{-1, 5});
        CHECK(rebuild_from_profile(f, pr, 9).congruent_to(f.truncate(10)));
    }

    SUBCASE("divisibility screening against a level") {
        Series<FpRing> g = single_class_series(F5, 3, 7, 1, QuadraticChar::trivial(), 1, 2001);
        CHECK(square_class_support(g, 2000, 10, 4).inconsistent == std::vector<long long>{3});
        CHECK(square_class_support(g, 2000, 10, 3).inconsistent.empty());
        CHECK(square_class_support(g, 2000).inconsistent.empty());

        Series<FpRing> lift = theta_lift(r3_mod_series(2001, 5), 5);
        auto pr = square_class_support(lift, 2000, 10, 4);
        std::set<long long> bad(pr.inconsistent.begin(), pr.inconsistent.end());
        CHECK(bad.count(3) == 1);
        CHECK(bad.count(6) == 1);
        CHECK(bad.count(1) == 0);
        CHECK(bad.count(2) == 0);
    }

    SUBCASE("the small flag follows the bound") {
        Series<FpRing> g = theta_lift(r3_mod_series(2001, 5), 5);
        auto pr = square_class_support(g, 2000, 100000);
        CHECK(pr.small);
    }

    SUBCASE("validation") {
        Series<FpRing> g(F5, 100);
        CHECK_THROWS_AS(square_class_support(g, 100), InsufficientPrecision);
        CHECK_THROWS_AS(square_class_support(g, 0), InvalidArgument);
    }
}

TEST_CASE("single class series satisfy their eigen congruence by construction") {
    FpRing F7(7);
    QuadraticChar chi = QuadraticChar::trivial();

    SUBCASE("support and leading values") {
        Series<FpRing> g = single_class_series(F7, 2, 3, 1, chi, 1, 500);
        CHECK(g.coeff(2) == 1);
        CHECK(g.coeff(8) == 1);
        CHECK(g.coeff(50) == 1);
        for (const auto& [n, c] : g.nonzero_terms()) {
            (void)c;
            CHECK(squarefree_part(n) == 2);
        }
    }

    SUBCASE("the Hecke image is the expected scalar multiple") {
        Series<FpRing> g = single_class_series(F7, 2, 3, 1, chi, 1, 2000);
        Series<FpRing> h = hecke_half(g, 3, 1, chi);
        CHECK(h.congruent_to(g.truncate(h.precision()).scalar_mul(F7.from_long(-4))));
        CHECK_FALSE(h.is_zero());
    }

    SUBCASE("the matching sign passes and the opposite sign fails") {
        Series<FpRing> plus = single_class_series(F7, 2, 3, 1, chi, 1, 2000);
        CHECK(eigen_congruence_both(plus, 3, 1, chi) == std::pair<bool, bool>{true, false});
        CHECK(eigen_congruence_check(plus, 3, 1, chi, 1));
        CHECK_FALSE(eigen_congruence_check(plus, 3, 1, chi, -1));

        Series<FpRing> minus = single_class_series(F7, 2, 3, 1, chi, -1, 2000);
        CHECK(eigen_congruence_both(minus, 3, 1, chi) == std::pair<bool, bool>{false, true});
    }

    SUBCASE("weight part zero goes through the inverse scalars") {
        Series<FpRing> g = single_class_series(F7, 1, 3, 0, chi, 1, 300);
        CHECK(g.coeff(1) == 1);
        CHECK(eigen_congruence_check(g, 3, 0, chi, 1));
    }

    SUBCASE("validation") {
        CHECK_THROWS_AS(single_class_series(F7, 12, 3, 1, chi, 1, 100), InvalidArgument);
        CHECK_THROWS_AS(single_class_series(F7, 0, 3, 1, chi, 1, 100), InvalidArgument);
        CHECK_THROWS_AS(single_class_series(F7, 2, 4, 1, chi, 1, 100), InvalidArgument);
        CHECK_THROWS_AS(single_class_series(F7, 2, 7, 1, chi, 1, 100), InvalidArgument);
        CHECK_THROWS_AS(single_class_series(F7, 2, 3, 1, chi, 2, 100), InvalidArgument);
        CHECK_THROWS_AS(single_class_series(F7, 2, 3, -1, chi, 1, 100), InvalidArgument);
        CHECK_THROWS_AS(single_class_series(F7, 2, 5, 1, QuadraticChar::trivial(10), 1, 100),
                        InvalidArgument);
    }
}

TEST_CASE("eigen congruence checks") {
    FpRing F5(5), F7(7);
    QuadraticChar chi4 = QuadraticChar::trivial(4);
    QuadraticChar chi = QuadraticChar::trivial();

    SUBCASE("the zero series passes for both signs") {
        Series<FpRing> z(F7, 4000);
        CHECK(eigen_congruence_both(z, 3, 1, chi) == std::pair<bool, bool>{true, true});
        CHECK(eigen_congruence_check(z, 3, 1, chi, 1));
        CHECK(eigen_congruence_check(z, 3, 1, chi, -1));
    }

    SUBCASE("the theta cube is an eigenform with the negative sign at 3") {
        Series<FpRing> g = r3_mod_series(2001, 5);
        CHECK(eigen_congruence_both(g, 3, 1, chi4) == std::pair<bool, bool>{false, true});
    }

    SUBCASE("the theta power lift of the theta cube keeps the eigen property") {
        Series<FpRing> g = theta_lift(r3_mod_series(2001, 5), 5);
        CHECK(eigen_congruence_both(g, 3, 1, chi4) == std::pair<bool, bool>{false, true});
        CHECK(eigen_congruence_both(g, 13, 1, chi4) == std::pair<bool, bool>{true, false});
    }

    SUBCASE("mixing two classes with opposite signs fails for both") {
        Series<FpRing> g = single_class_series(F7, 2, 3, 1, chi, 1, 2000)
                               .add(single_class_series(F7, 3, 3, 1, chi, -1, 2000));
        CHECK(eigen_congruence_both(g, 3, 1, chi) == std::pair<bool, bool>{false, false});
    }

    SUBCASE("a prime congruent to -1 annihilates and both signs hold honestly") {
        Series<FpRing> g = single_class_series(F7, 1, 13, 1, chi, 1, 2000);
        Series<FpRing> h = hecke_half(g, 13, 1, chi);
        CHECK(h.is_zero());
        CHECK(eigen_congruence_both(g, 13, 1, chi) == std::pair<bool, bool>{true, true});
    }

    SUBCASE("validation") {
        Series<FpRing> z(F5, 100);
        CHECK_THROWS_AS(eigen_congruence_check(z, 3, 1, chi, 0), InvalidArgument);
        CHECK_THROWS_AS(eigen_congruence_check(z, 5, 1, chi, 1), InvalidArgument);
        CHECK_THROWS_AS(eigen_congruence_check(z, 4, 1, chi, 1), InvalidArgument);
        CHECK_THROWS_AS(eigen_congruence_check(z, 3, -1, chi, 1), InvalidArgument);
        CHECK_THROWS_AS(eigen_congruence_both(z, 3, 1, QuadraticChar::trivial(10)),
                        InvalidArgument);
    }
}

TEST_CASE("prime scans find annihilating and doubling Hecke primes") {
    FpRing F7(7);
    QuadraticChar chi = QuadraticChar::trivial();

    SUBCASE("the zero series is annihilated by every scanned prime") {
        Series<FpRing> z(F7, 10000);
        auto out = find_hecke_primes(z, 1, chi, ScanMode::annihilate, 13);
        CHECK(out == std::vector<long long>{2, 3, 5, 11, 13});
    }

    SUBCASE("congruence class restriction and modulus skipping") {
        Series<FpRing> z(F7, 500001);
        auto out = find_hecke_primes(z, 1, chi, ScanMode::annihilate, 100, 3, 4);
        CHECK(out == std::vector<long long>{3, 11, 19, 23, 31, 43, 47, 59, 67, 71, 79, 83});
    }

    SUBCASE("a constructed doubling eigenform is caught in double mode") {
        Series<FpRing> g = single_class_series(F7, 1, 5, 2, chi, 1, 2000);
        Series<FpRing> h = hecke_half(g, 5, 2, chi);
        CHECK(h.congruent_to(g.truncate(h.precision()).scalar_mul(F7.from_long(2))));
        auto out = find_hecke_primes(g, 2, chi, ScanMode::doubling, 5);
        CHECK(out == std::vector<long long>{5});
    }

    SUBCASE("a constructed annihilated eigenform is caught in annihilate mode") {
        Series<FpRing> g = single_class_series(F7, 1, 13, 1, chi, 1, 9000);
        auto out = find_hecke_primes(g, 1, chi, ScanMode::annihilate, 13);
        CHECK(out == std::vector<long long>{11, 13});
    }

    SUBCASE("the theta power lift of the theta cube splits by residue") {
        Series<FpRing> g = theta_lift(r3_mod_series(750001, 5), 5);
        REQUIRE(g.coeff(1) == 1);
        REQUIRE(g.coeff(2) == 2);
        REQUIRE(g.coeff(5) == 0);
        QuadraticChar chi4 = QuadraticChar::trivial(4);
        auto ann = find_hecke_primes(g, 1, chi4, ScanMode::annihilate, 250, 79, 80, 12);
        CHECK(ann == std::vector<long long>{79, 239});
        auto dbl = find_hecke_primes(g, 1, chi4, ScanMode::doubling, 250, 1, 80, 12);
        CHECK(dbl == std::vector<long long>{241});
        CHECK(find_hecke_primes(g, 1, chi4, ScanMode::doubling, 250, 79, 80, 12).empty());
        CHECK(find_hecke_primes(g, 1, chi4, ScanMode::annihilate, 250, 1, 80, 12).empty());
    }

    SUBCASE("precision and argument validation") {
        Series<FpRing> z(F7, 100);
        CHECK_THROWS_AS(find_hecke_primes(z, 1, chi, ScanMode::annihilate, 50), InsufficientPrecision);
        CHECK_THROWS_AS(find_hecke_primes(z, 1, chi, ScanMode::annihilate, 1), InvalidArgument);
        CHECK_THROWS_AS(find_hecke_primes(z, 1, chi, ScanMode::annihilate, 13, 0, 0, 0),
                        InvalidArgument);
        CHECK_THROWS_AS(find_hecke_primes(z, 1, chi, ScanMode::annihilate, 13, 1, 0),
                        InvalidArgument);
    }
}

TEST_CASE("trace tallies count class polynomial traces over valid discriminants") {
    SUBCASE("index set and totals") {
        auto rep = trace_tally(5, 100);
        CHECK(rep.total == 50);
        long long sum = 0;
        for (long long c : rep.counts) sum += c;
        CHECK(sum == rep.total);
    }

    SUBCASE("counts agree with a direct recount") {
        auto rep = trace_tally(5, 2000);
        Series<ZRing> h = h_series(2001);
        std::vector<long long> manual(5, 0);
        long long total = 0;
        for (long long d = 3; d <= 2000; ++d) {
            if (d % 4 != 0 && d % 4 != 3) continue;
            Int t1 = -h.coeff(d);
            ++manual[mpz_fdiv_ui(t1.get_mpz_t(), 5)];
            ++total;
        }
        CHECK(rep.total == total);
        for (std::uint32_t r = 0; r < 5; ++r) CHECK(rep.counts[r] == manual[r]);
    }

    SUBCASE("the gcd filter drops discriminants divisible by p") {
        auto plain = trace_tally(5, 2000);
        auto filtered = trace_tally(5, 2000, 0.01, true);
        long long dropped = 0;
        for (long long d = 3; d <= 2000; ++d)
            if ((d % 4 == 0 || d % 4 == 3) && d % 5 == 0) ++dropped;
        CHECK(filtered.total == plain.total - dropped);
    }

    SUBCASE("the two mod three hypothesis is enforced but overridable") {
        CHECK_THROWS_AS(trace_tally(7, 100), InvalidArgument);
        std::ostringstream warn;
        auto rep = trace_tally(7, 100, 0.01, false, true, &warn);
        CHECK(rep.total == 50);
        CHECK(warn.str().find("not 2 mod 3") != std::string::npos);
        std::ostringstream quiet;
        trace_tally(5, 100, 0.01, false, true, &quiet);
        CHECK(quiet.str().empty());
        CHECK_THROWS_AS(trace_tally(4, 100), InvalidArgument);
    }
}

TEST_CASE("hurwitz tallies count six times the class numbers") {
    SUBCASE("counts agree with a direct recount") {
        auto rep = hurwitz_tally(7, 500);
        Series<ZRing> r3 = r3_series(501);
        std::vector<long long> manual(7, 0);
        for (long long n = 3; n <= 500; ++n) {
            if (n % 4 != 0 && n % 4 != 3) continue;
            ++manual[hurwitz_from_r3(n, r3).six_times % 7];
        }
        for (std::uint32_t r = 0; r < 7; ++r) CHECK(rep.counts[r] == manual[r]);
    }

    SUBCASE("no residue hypothesis beyond primality") {
        CHECK_NOTHROW(hurwitz_tally(7, 100));
        CHECK_THROWS_AS(hurwitz_tally(4, 100), InvalidArgument);
        CHECK_THROWS_AS(hurwitz_tally(3, 100), InvalidArgument);
    }
}

TEST_CASE("tally regression goldens") {
    SUBCASE("trace counts mod 5") {
        auto rep = trace_tally(5, 2000);
        CHECK(rep.counts == std::vector<long long>{195, 185, 201, 218, 201});
        CHECK(rep.all_pass());
    }

    SUBCASE("hurwitz counts mod 7 with a heavy zero class") {
        auto rep = hurwitz_tally(7, 2000);
        CHECK(rep.counts == std::vector<long long>{122, 142, 154, 139, 134, 144, 165});
        CHECK(rep.conformance[0].count >= rep.conformance[0].threshold);
        CHECK(rep.conformance[0].pass);
    }

    SUBCASE("overpartition counts mod 5 hit every residue") {
        auto rep = overpartition_tally(5, 10000);
        CHECK(rep.counts == std::vector<long long>{2776, 1816, 1766, 1840, 1802});
        for (long long c : rep.counts) CHECK(c > 0);
        CHECK(rep.all_pass());
    }
}

TEST_CASE("overpartition tallies cover the full index range") {
    SUBCASE("totals and a direct recount") {
        auto rep = overpartition_tally(5, 300);
        CHECK(rep.total == 300);
        Series<ZRing> w = overpartition_series(301);
        std::vector<long long> manual(5, 0);
        for (long long n = 1; n <= 300; ++n) {
            Int v = w.coeff(n);
            ++manual[mpz_fdiv_ui(v.get_mpz_t(), 5)];
        }
        for (std::uint32_t r = 0; r < 5; ++r) CHECK(rep.counts[r] == manual[r]);
    }

    SUBCASE("hypothesis enforcement matches the trace tally") {
        CHECK_THROWS_AS(overpartition_tally(7, 100), InvalidArgument);
        std::ostringstream warn;
        overpartition_tally(13, 100, 0.01, false, true, &warn);
        CHECK(warn.str().find("13") != std::string::npos);
    }
}
