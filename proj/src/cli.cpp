#include "qmod/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qmod/classnum.hpp"
#include "qmod/dist.hpp"
#include "qmod/errors.hpp"
#include "qmod/moduli.hpp"
#include "qmod/operators.hpp"
#include "qmod/partitions.hpp"
#include "qmod/qforms.hpp"
#include "qmod/series.hpp"
#include "qmod/series_json.hpp"
#include "qmod/verify.hpp"

namespace qmod {

namespace {

using nlohmann::ordered_json;

struct SeriesArgs {
    std::string kind;
    long long N = 100;
    long long k = 0;
    std::uint32_t mod = 0;
    std::string output = "json";
};

struct TracesArgs {
    long long m = 1;
    long long max_d = 100;
    std::string output = "csv";
};

struct TableArgs {
    long long max_n = 100;
    std::string output = "csv";
};

struct TallyArgs {
    std::string seq;
    std::uint32_t p = 0;
    long long X = 0;
    double c = 0.01;
    bool gcd_filter = false;
    std::string output = "json";
};

struct ScanArgs {
    std::uint32_t p = 0;
    std::string mode;
    long long q_bound = 100;
    long long cls = 0;
    long long cls_mod = 0;
    long long min_depth = 12;
    std::string output = "json";
};

struct VerifyArgs {
    bool quick = false;
    std::uint32_t p = 0;
};

template <class R>
void write_series(const Series<R>& f, const std::string& output, std::ostream& out) {
    if (output == "json") {
        out << series_to_json(f).dump(2) << "\n";
        return;
    }
    out << "n,coeff\n";
    for (long long n = f.offset(); n < f.precision(); ++n)
        out << n << "," << f.ring().to_string(f.coeff(n)) << "\n";
}

int cmd_series(const SeriesArgs& a, std::ostream& out) {
    if (a.kind == "eisenstein") {
        if (!a.k) throw InvalidArgument("--kind eisenstein requires --k");
        Series<QRing> e = eisenstein(a.k, a.N);
        if (a.mod)
            write_series(reduce_mod(e, a.mod), a.output, out);
        else
            write_series(e, a.output, out);
        return 0;
    }
    if (a.k) throw InvalidArgument("--k only applies to --kind eisenstein");
    Series<ZRing> f = a.kind == "theta"        ? jacobi_theta(a.N)
                      : a.kind == "theta-cube" ? r3_series(a.N)
                                               : delta_series(a.N);
    if (a.mod)
        write_series(reduce_mod(f, a.mod), a.output, out);
    else
        write_series(f, a.output, out);
    return 0;
}

int cmd_traces(const TracesArgs& a, std::ostream& out) {
    const long long N = a.m * a.m * a.max_d + 1;
    if (N > 50000000)
        throw TooLarge("trace table needs " + std::to_string(N) +
                       " series coefficients; the supported cap is 50000000");
    std::vector<std::pair<long long, Int>> rows;
    for (long long d = 3; d <= a.max_d; ++d) {
        if (d % 4 != 0 && d % 4 != 3) continue;
        rows.emplace_back(d, -B_m(a.m, d, N));
    }
    if (a.output == "json") {
        ordered_json j;
        j["m"] = a.m;
        j["max_d"] = a.max_d;
        ordered_json values = ordered_json::array();
        for (const auto& [d, t] : rows) {
            ordered_json row;
            row["d"] = d;
            row["trace"] = t.get_str();
            values.push_back(row);
        }
        j["values"] = values;
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "d,trace\n";
    for (const auto& [d, t] : rows) out << d << "," << t.get_str() << "\n";
    return 0;
}

int cmd_hurwitz(const TableArgs& a, std::ostream& out) {
    Series<ZRing> r3 = r3_series(a.max_n + 1);
    std::vector<HurwitzValue> rows;
    std::vector<long long> ns;
    for (long long n = 3; n <= a.max_n; ++n) {
        if (n % 4 != 0 && n % 4 != 3) continue;
        ns.push_back(n);
        rows.push_back(hurwitz_from_r3(n, r3));
    }
    if (a.output == "json") {
        ordered_json j;
        j["max_n"] = a.max_n;
        ordered_json values = ordered_json::array();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            ordered_json row;
            row["n"] = ns[i];
            row["six_times"] = rows[i].six_times;
            row["value"] = hurwitz_display(rows[i]);
            values.push_back(row);
        }
        j["values"] = values;
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "n,six_times,value\n";
    for (std::size_t i = 0; i < rows.size(); ++i)
        out << ns[i] << "," << rows[i].six_times << "," << hurwitz_display(rows[i]) << "\n";
    return 0;
}

int cmd_overpartitions(const TableArgs& a, std::ostream& out) {
    Series<ZRing> w = overpartition_series(a.max_n + 1);
    if (a.output == "json") {
        ordered_json j;
        j["max_n"] = a.max_n;
        ordered_json values = ordered_json::array();
        for (long long n = 0; n <= a.max_n; ++n) {
            ordered_json row;
            row["n"] = n;
            row["count"] = w.coeff(n).get_str();
            values.push_back(row);
        }
        j["values"] = values;
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "n,count\n";
    for (long long n = 0; n <= a.max_n; ++n) out << n << "," << w.coeff(n).get_str() << "\n";
    return 0;
}

int cmd_tally(const TallyArgs& a, std::ostream& out, std::ostream& err) {
    TallyReport rep = a.seq == "traces" ? trace_tally(a.p, a.X, a.c, a.gcd_filter, true, &err)
                      : a.seq == "hurwitz"
                          ? hurwitz_tally(a.p, a.X, a.c, a.gcd_filter)
                          : overpartition_tally(a.p, a.X, a.c, a.gcd_filter, true, &err);
    if (a.output == "json")
        out << tally_to_json(rep).dump(2) << "\n";
    else
        out << tally_to_csv(rep);
    return 0;
}

int cmd_scan(const ScanArgs& a, std::ostream& out) {
    if (a.p < 5 || !is_prime(a.p))
        throw InvalidArgument("scan modulus must be a prime at least 5");
    const long long N = a.q_bound * a.q_bound * a.min_depth + 1;
    if (N > 200000000)
        throw TooLarge("scan needs " + std::to_string(N) +
                       " series coefficients; the supported cap is 200000000");
    Series<FpRing> g = theta_lift(r3_mod_series(N, a.p), a.p);
    ScanMode mode = a.mode == "annihilate" ? ScanMode::annihilate : ScanMode::doubling;
    std::vector<long long> primes = find_hecke_primes(g, 1, QuadraticChar::trivial(4), mode,
                                                      a.q_bound, a.cls, a.cls_mod, a.min_depth);
    if (a.output == "json") {
        ordered_json j;
        j["p"] = a.p;
        j["mode"] = a.mode;
        j["q_bound"] = a.q_bound;
        j["cls"] = a.cls;
        j["cls_mod"] = a.cls_mod;
        j["min_depth"] = a.min_depth;
        j["precision"] = N;
        j["primes"] = primes;
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "q\n";
    for (long long q : primes) out << q << "\n";
    return 0;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    VerifyOptions opt;
    opt.quick = a.quick;
    if (a.p) opt.only_prime = a.p;
    std::vector<CheckResult> results = run_verification(opt, &out);
    int failed = 0;
    for (const CheckResult& r : results)
        if (!r.pass) ++failed;
    if (failed == 0) {
        out << "all " << results.size() << " checks passed" << std::endl;
        return 0;
    }
    out << failed << " of " << results.size() << " checks failed" << std::endl;
    return 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"q-expansions of half-integral weight forms: series, tallies, and checks"};
    app.name("qmod");
    app.require_subcommand(1);

    auto output_check = CLI::IsMember({"csv", "json"});

    SeriesArgs sa;
    CLI::App* series = app.add_subcommand("series", "print a named q-expansion");
    series->add_option("--kind", sa.kind, "series to expand")
        ->required()
        ->check(CLI::IsMember({"theta", "theta-cube", "delta", "eisenstein"}));
    series->add_option("--N", sa.N, "number of coefficients")->check(CLI::PositiveNumber);
    series->add_option("--k", sa.k, "Eisenstein weight")->check(CLI::PositiveNumber);
    series->add_option("--mod", sa.mod, "reduce modulo this prime")->check(CLI::PositiveNumber);
    series->add_option("--output", sa.output, "csv or json")->check(output_check);

    TracesArgs ta;
    CLI::App* traces = app.add_subcommand("traces", "trace values of singular moduli");
    traces->add_option("--m", ta.m, "Hecke index (squarefree)")->check(CLI::Range(1LL, 1000LL));
    traces->add_option("--max-d", ta.max_d, "largest discriminant")
        ->check(CLI::Range(3LL, 100000LL));
    traces->add_option("--output", ta.output, "csv or json")->check(output_check);

    TableArgs ha;
    CLI::App* hurwitz = app.add_subcommand("hurwitz", "Hurwitz class number table");
    hurwitz->add_option("--max-n", ha.max_n, "largest discriminant")->check(CLI::PositiveNumber);
    hurwitz->add_option("--output", ha.output, "csv or json")->check(output_check);

    TableArgs oa;
    CLI::App* over = app.add_subcommand("overpartitions", "overpartition counts");
    over->add_option("--max-n", oa.max_n, "largest index")->check(CLI::PositiveNumber);
    over->add_option("--output", oa.output, "csv or json")->check(output_check);

    TallyArgs ya;
    CLI::App* tally = app.add_subcommand("tally", "residue class tally of a sequence mod p");
    tally->add_option("--seq", ya.seq, "sequence to tally")
        ->required()
        ->check(CLI::IsMember({"traces", "hurwitz", "overpartitions"}));
    tally->add_option("--p", ya.p, "modulus (prime)")->required()->check(CLI::PositiveNumber);
    tally->add_option("--X", ya.X, "tally indices up to X")->required()->check(CLI::PositiveNumber);
    tally->add_option("--c", ya.c, "conformance constant")->check(CLI::PositiveNumber);
    tally->add_flag("--gcd-filter", ya.gcd_filter, "skip indices divisible by p");
    tally->add_option("--output", ya.output, "csv or json")->check(output_check);

    ScanArgs ca;
    CLI::App* scan = app.add_subcommand("scan-primes", "scan Hecke primes on the theta cube lift");
    scan->add_option("--p", ca.p, "lift modulus (prime, at least 5)")
        ->required()
        ->check(CLI::PositiveNumber);
    scan->add_option("--mode", ca.mode, "congruence to scan for")
        ->required()
        ->check(CLI::IsMember({"annihilate", "double"}));
    scan->add_option("--q-bound", ca.q_bound, "scan primes up to this bound")
        ->check(CLI::Range(3LL, 2000LL));
    CLI::Option* cls_mod_opt =
        scan->add_option("--cls-mod", ca.cls_mod, "restrict scanned primes to a residue class")
            ->check(CLI::PositiveNumber);
    scan->add_option("--cls", ca.cls, "residue of the scanned class")->needs(cls_mod_opt);
    scan->add_option("--min-depth", ca.min_depth, "tested coefficients per scanned prime")
        ->check(CLI::PositiveNumber);
    scan->add_option("--output", ca.output, "csv or json")->check(output_check);

    VerifyArgs va;
    CLI::App* verify = app.add_subcommand("verify", "run the verification checks");
    verify->add_flag("--quick", va.quick, "smaller sweep bounds");
    verify->add_option("--p", va.p, "restrict prime sweeps to this prime")
        ->check(CLI::IsMember({5, 7, 11, 13}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (series->parsed()) return cmd_series(sa, out);
        if (traces->parsed()) return cmd_traces(ta, out);
        if (hurwitz->parsed()) return cmd_hurwitz(ha, out);
        if (over->parsed()) return cmd_overpartitions(oa, out);
        if (tally->parsed()) return cmd_tally(ya, out, err);
        if (scan->parsed()) return cmd_scan(ca, out);
        if (verify->parsed()) return cmd_verify(va, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace qmod
