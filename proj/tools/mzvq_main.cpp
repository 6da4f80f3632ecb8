#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <set>
#include <sstream>

#include "mzvq/identities.hpp"
#include "mzvq/mzv.hpp"
#include "mzvq/ode_verify.hpp"
#include "mzvq/output.hpp"
#include "mzvq/series.hpp"

namespace {

using namespace mzvq;

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

struct CommonFlags {
    std::string prec = "1e-12";
    std::string format = "text";
};

PrecisionConfig make_config(const CommonFlags& flags) {
    return PrecisionConfig::from_target(Real(flags.prec));
}

void print_record(const OrderedJson& j, const CommonFlags& flags, const std::string& text) {
    if (flags.format == "json")
        std::cout << j.dump() << "\n";
    else
        std::cout << text << "\n";
}

void print_report(const VerificationReport& r, const CommonFlags& flags) {
    if (flags.format == "json")
        std::cout << report_record(r).dump() << "\n";
    else
        std::cout << report_text_line(r) << "\n";
}

int run_eval(const std::string& index_spec, const CommonFlags& flags) {
    const MzvIndex idx = MzvIndex::parse(index_spec);
    const ApproxReal v = mzv_eval(idx, make_config(flags));
    print_record(value_record(v), flags, value_text_line(v));
    return kOk;
}

int run_q(int n, int d, const std::string& method, const CommonFlags& flags) {
    if (n < 1 || d < 1 || n < d) throw std::domain_error("q requires n >= d >= 1");
    if (method == "theorem" && d < 3) throw std::domain_error("theorem requires n >= d >= 3");

    const PrecisionConfig cfg = make_config(flags);
    const bool want_all = method == "all";
    bool have_theorem = false, have_series = false;
    PiRational theorem_val, series_val;

    if (method == "theorem" || (want_all && d >= 3)) {
        theorem_val = q_theorem(n, d);
        have_theorem = true;
        print_record(rational_record(theorem_val), flags,
                     "theorem:    " + rational_text_line(theorem_val));
    }
    if (method == "series" || want_all) {
        series_val = PiRational(q_rational_table(n, d).at(n, d), 4 * n);
        have_series = true;
        print_record(rational_record(series_val), flags,
                     "series:     " + rational_text_line(series_val));
    }
    ApproxReal brute;
    bool have_brute = false;
    if (method == "bruteforce" || want_all) {
        brute = q_bruteforce(n, d, cfg);
        have_brute = true;
        print_record(value_record(brute), flags, "bruteforce: " + value_text_line(brute));
    }

    int rc = kOk;
    if (want_all) {
        if (have_theorem && have_series) {
            VerificationReport r = VerificationReport::exact(
                "q-agreement-theorem-series", "n=" + std::to_string(n) + ",d=" + std::to_string(d),
                theorem_val == series_val, theorem_val == series_val ? "0" : "nonzero");
            print_report(r, flags);
            if (!r.passed) rc = kVerifyFailed;
        }
        if (have_series && have_brute) {
            const ApproxReal exact_num = to_approx(series_val, pi_value(cfg));
            const ApproxReal delta = approx_sub(exact_num, brute);
            const Real tol(kDefaultNumericTolerance);
            VerificationReport r;
            r.name = "q-agreement-series-bruteforce";
            r.instance = "n=" + std::to_string(n) + ",d=" + std::to_string(d);
            r.mode = "numeric";
            r.passed = abs(delta.value) <= delta.err + tol;
            r.residual = delta.value.str(6);
            r.err_bound = delta.err.str(6);
            print_report(r, flags);
            if (!r.passed) rc = kVerifyFailed;
        }
    }
    return rc;
}

int run_series(int max_n, int max_d, const CommonFlags& flags) {
    const BivariateSeries table = q_rational_table(max_n, max_d);
    if (flags.format == "csv")
        std::cout << table_csv(table);
    else if (flags.format == "json")
        std::cout << table_record(table).dump() << "\n";
    else
        std::cout << table_text(table);
    return kOk;
}

// ---- verify suites -------------------------------------------------------

const std::set<std::string> kSuiteNames = {
    "euler",      "gkz",           "product",        "alternating-even", "theorem-vs-series",
    "theorem-vs-bruteforce", "ode-u", "ode-tilde", "gd-decomposition", "f-product"};

std::vector<VerificationReport> run_suite(const std::string& suite, int max_n, int max_d,
                                          const PrecisionConfig& cfg) {
    std::vector<VerificationReport> reports;
    if (suite == "euler") {
        const int hi = max_n > 0 ? max_n : 6;
        for (int n = 2; n <= hi; ++n) reports.push_back(euler_alternating(n, cfg));
        for (int n = 2; n <= hi; ++n) reports.push_back(euler_full(n, cfg));
    } else if (suite == "gkz") {
        const int hi = max_n > 0 ? max_n : 6;
        for (int n = 2; n <= hi; ++n) reports.push_back(gkz_even(n, cfg));
    } else if (suite == "product") {
        const int hi = max_n > 0 ? max_n : 20;
        for (int n = 2; n <= hi; ++n) reports.push_back(euler_product(n));
    } else if (suite == "alternating-even") {
        const int hi = max_n > 0 ? max_n : 10;
        for (int w = 2; w <= hi; ++w) reports.push_back(alternating_even_sum(w));
    } else if (suite == "theorem-vs-series") {
        const int hi = max_n > 0 ? max_n : 10;
        const BivariateSeries table = q_rational_table(hi, hi);
        for (int d = 3; d <= hi; ++d)
            for (int n = d; n <= hi; ++n) {
                const PiRational thm = q_theorem(n, d);
                const PiRational oracle(table.at(n, d), 4 * n);
                reports.push_back(VerificationReport::exact(
                    "theorem-vs-series", "n=" + std::to_string(n) + ",d=" + std::to_string(d),
                    thm == oracle, thm == oracle ? "0" : "nonzero"));
            }
    } else if (suite == "theorem-vs-bruteforce") {
        const std::vector<std::pair<int, int>> pairs = {{3, 3}, {4, 3}, {5, 3}, {4, 4},
                                                        {5, 4}, {6, 5}, {6, 6}};
        const ApproxReal pi = pi_value(cfg);
        for (auto [n, d] : pairs) {
            const ApproxReal exact_num = to_approx(q_theorem(n, d), pi);
            const ApproxReal brute = q_bruteforce(n, d, cfg);
            const ApproxReal delta = approx_sub(exact_num, brute);
            VerificationReport r;
            r.name = "theorem-vs-bruteforce";
            r.instance = "n=" + std::to_string(n) + ",d=" + std::to_string(d);
            r.mode = "numeric";
            r.passed = abs(delta.value) <= delta.err + Real(kDefaultNumericTolerance);
            r.residual = delta.value.str(6);
            r.err_bound = delta.err.str(6);
            reports.push_back(r);
        }
    } else if (suite == "ode-u") {
        return verify_u_system(max_n > 0 ? static_cast<unsigned>(max_n) : 8);
    } else if (suite == "ode-tilde") {
        return verify_tilde_system(max_n > 0 ? static_cast<unsigned>(max_n) : 8);
    } else if (suite == "gd-decomposition") {
        const int hi_d = max_d > 0 ? max_d : 4;
        const Real threshold("1e-25");
        for (int d = 0; d <= hi_d; ++d)
            for (const BigRational& s : {BigRational(1, 2), BigRational(1), BigRational(2)}) {
                const Real res = verify_gd_decomposition(static_cast<unsigned>(d), s, 40);
                VerificationReport r;
                r.name = "gd-decomposition";
                r.instance = "d=" + std::to_string(d) + ",s=" + s.str() + ",tol=1e-25";
                r.mode = "numeric";
                r.passed = res < threshold;
                r.residual = res.str(6);
                reports.push_back(r);
            }
    } else if (suite == "f-product") {
        const int order = max_n > 0 ? max_n : 20;
        const bool ok = verify_f_product(order);
        reports.push_back(VerificationReport::exact(
            "f-product", "order=" + std::to_string(order), ok, ok ? "0" : "mismatch"));
        for (unsigned d = 0; d <= 30; ++d) {
            const BigRational lhs =
                gen_binomial(BigRational(-1, 2), d) * ((d % 2 == 0) ? 1 : -1);
            const BigRational rhs = BigRational(binomial_int(2 * d, d), BigInt(1) << (2 * d));
            reports.push_back(VerificationReport::exact(
                "w0-binomial", "d=" + std::to_string(d), lhs == rhs,
                lhs == rhs ? "0" : BigRational(lhs - rhs).str()));
        }
    } else {
        throw std::invalid_argument("unknown suite: " + suite);
    }
    return reports;
}

int run_verify(const std::string& suites_csv, int max_n, int max_d, const CommonFlags& flags) {
    std::vector<std::string> suites;
    if (suites_csv.empty() || suites_csv == "all") {
        suites.assign(kSuiteNames.begin(), kSuiteNames.end());
    } else {
        std::stringstream ss(suites_csv);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (!kSuiteNames.count(item)) throw std::invalid_argument("unknown suite: " + item);
            suites.push_back(item);
        }
    }
    const PrecisionConfig cfg = make_config(flags);
    bool all_ok = true;
    for (const auto& suite : suites) {
        for (const auto& r : run_suite(suite, max_n, max_d, cfg)) {
            print_report(r, flags);
            all_ok = all_ok && r.passed;
        }
    }
    return all_ok ? kOk : kVerifyFailed;
}

int run_ode_check(int max_n, int max_d, const CommonFlags& flags) {
    const PrecisionConfig cfg = make_config(flags);
    bool all_ok = true;
    for (const char* suite : {"ode-tilde", "ode-u", "gd-decomposition"})
        for (const auto& r : run_suite(suite, max_n, max_d, cfg)) {
            print_report(r, flags);
            all_ok = all_ok && r.passed;
        }
    return all_ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Restricted sums Q(4n,d) of multiple zeta values: exact evaluation by "
                 "closed formula and generating-function series, certified numeric "
                 "evaluation, and identity verification"};
    app.require_subcommand(1);

    CommonFlags flags;

    auto add_common = [&](CLI::App* cmd, bool with_csv = false) {
        cmd->add_option("--prec", flags.prec, "absolute error target, e.g. 1e-12");
        cmd->add_option("--format", flags.format, "output format")
            ->check(CLI::IsMember(with_csv ? std::vector<std::string>{"text", "json", "csv"}
                                           : std::vector<std::string>{"text", "json"}));
    };

    std::string index_spec;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate zeta(s1,...,sd) with certified error");
    eval_cmd->add_option("index", index_spec, "comma-separated index, e.g. 4,4")->required();
    add_common(eval_cmd);

    int q_n = 0, q_d = 0;
    std::string q_method = "all";
    auto* q_cmd = app.add_subcommand("q", "compute Q(4n,d) by one or all methods");
    q_cmd->add_option("--n", q_n, "weight parameter n (weight = 4n)")->required();
    q_cmd->add_option("--d", q_d, "depth")->required();
    q_cmd->add_option("--method", q_method, "theorem|series|bruteforce|all")
        ->check(CLI::IsMember({"theorem", "series", "bruteforce", "all"}));
    add_common(q_cmd);

    std::string suites;
    int max_n = 0, max_d = 0;
    auto* verify_cmd = app.add_subcommand("verify", "run identity verification suites");
    verify_cmd->add_option("--suite", suites, "comma-separated suite names (default: all)");
    verify_cmd->add_flag_callback("--all", [&]() { suites = "all"; },
                                  "run every suite at acceptance ranges");
    verify_cmd->add_option("--max-n", max_n, "upper range for the suite parameter");
    verify_cmd->add_option("--max-d", max_d, "upper range for depth-like parameters");
    add_common(verify_cmd);

    int series_n = 12, series_d = 12;
    auto* series_cmd = app.add_subcommand("series", "dump the exact Q(4n,d)/pi^{4n} table");
    series_cmd->add_option("--max-n", series_n, "rows (n = 1..max-n)");
    series_cmd->add_option("--max-d", series_d, "columns (d = 1..max-d)");
    add_common(series_cmd, /*with_csv=*/true);

    int ode_n = 8, ode_d = 0;
    auto* ode_cmd = app.add_subcommand("ode-check", "verify the differential systems and the "
                                                    "G_d decomposition");
    ode_cmd->add_option("--max-n", ode_n, "index range for both systems");
    ode_cmd->add_option("--max-d", ode_d, "depth range for the decomposition check");
    add_common(ode_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    }

    try {
        if (app.got_subcommand(eval_cmd)) return run_eval(index_spec, flags);
        if (app.got_subcommand(q_cmd)) return run_q(q_n, q_d, q_method, flags);
        if (app.got_subcommand(verify_cmd)) return run_verify(suites, max_n, max_d, flags);
        if (app.got_subcommand(series_cmd)) return run_series(series_n, series_d, flags);
        if (app.got_subcommand(ode_cmd)) return run_ode_check(ode_n, ode_d, flags);
    } catch (const std::domain_error& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const mzvq::PrecisionUnreachable& e) {
        std::cerr << "precision unreachable: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
