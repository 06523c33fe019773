// csq: command line frontend over the library.  Exit codes: 0 success or
// verification pass, 1 verification failure, 2 usage or domain error,
// 3 factorization budget exhausted.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "csq/serialize.hpp"

using namespace csq;

namespace {

Integer parse_integer(const std::string& text) {
    try {
        return Integer(text);
    } catch (const std::invalid_argument&) {
        throw std::domain_error("not a decimal integer: " + text);
    }
}

std::string sign_tag(const Solution& s) { return s.sign_ambiguous ? " (+-y)" : ""; }

void print_solution(const Solution& s, bool json) {
    if (json) {
        std::cout << to_json(s).dump() << "\n";
    } else {
        std::cout << "d=" << s.d << " x=" << s.x << " y=" << s.y << " n=" << s.n
                  << sign_tag(s) << "\n";
    }
}

void print_certificate(const EliminationCertificate& cert) {
    std::cout << filter_kind_name(cert.variant) << " d=" << cert.d << " " << cert.exponent_scope
              << ": ";
    switch (cert.variant) {
        case FilterKind::ZhangBai: {
            const auto& w = std::get<ZhangBaiWitness>(cert.witness);
            std::cout << "p=" << w.p << " ord=" << w.ord << ", ord not divisible by n";
            break;
        }
        case FilterKind::Dyadic: {
            const auto& w = std::get<DyadicWitness>(cert.witness);
            std::cout << "r=" << w.r << ", n does not divide r-1";
            break;
        }
        case FilterKind::Triadic: {
            const auto& w = std::get<TriadicWitness>(cert.witness);
            std::cout << "r=" << w.r << ", n does not divide r-1";
            break;
        }
        case FilterKind::Mod8: {
            const auto& w = std::get<Mod8Witness>(cert.witness);
            std::cout << "lhs=" << w.lhs_residue << " (mod 8), rhs in {";
            for (std::size_t i = 0; i < w.rhs_residues.size(); ++i) {
                std::cout << (i ? "," : "") << w.rhs_residues[i];
            }
            std::cout << "} (mod 8)";
            break;
        }
    }
    std::cout << "\n";
}

void print_pell(const PellSolution& s, bool json) {
    if (json) {
        std::cout << to_json(s).dump() << "\n";
    } else {
        std::cout << "r=" << s.r << " sign=" << (s.sign > 0 ? "+" : "-") << " x=" << s.x
                  << " y=" << s.y << "\n";
    }
}

struct Args {
    unsigned d = 2;
    unsigned d_min = 2, d_max = 10;
    unsigned n = 2, n_max = 4, p = 3, m = 1;
    unsigned threads = 1;
    long count = 0;
    bool json = false;
    bool all_terms = false;
    std::string value, x, x_bound, u, u_bound = "10000", pair_r, pair_q, out;
    std::uint64_t seed = FactorBudget{}.seed;
};

FactorBudget budget_with_seed(const Args& a) {
    FactorBudget budget;
    budget.seed = a.seed;
    return budget;
}

int run_verify(const Args& a) {
    VerifyOptions options;
    options.x_bound = parse_integer(a.x_bound);
    options.n_max = a.n_max;
    options.threads = a.threads;
    const VerificationReport report = verify_theorem(options);
    const Json j = to_json(report);
    if (!a.out.empty()) {
        std::ofstream f(a.out);
        if (!f) throw std::domain_error("cannot write " + a.out);
        f << j.dump(2) << "\n";
    }
    if (a.json) {
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& c : report.cases) {
            std::cout << "d=" << c.d << " n=" << c.n << " [" << c.exponent_class << "] ";
            if (const auto* e = std::get_if<ResolutionEliminated>(&c.resolution)) {
                std::cout << "eliminated by " << filter_kind_name(e->certificate.variant);
            } else if (const auto* fam = std::get_if<ResolutionFamily>(&c.resolution)) {
                std::cout << "infinite family, " << fam->members.size() << " members in box";
            } else if (const auto* cit = std::get_if<ResolutionExternalCitation>(&c.resolution)) {
                std::cout << "external citation: " << cit->source;
                if (!cit->expected.empty()) {
                    std::cout << " (" << cit->expected.size() << " solutions in box)";
                }
            } else if (const auto* scan = std::get_if<ResolutionDefectScan>(&c.resolution)) {
                std::cout << "defect scan p=" << scan->report.p << ", scanned "
                          << scan->report.scanned << ", violations "
                          << scan->report.violations.size();
            } else if (const auto* poly = std::get_if<ResolutionPolyCheck>(&c.resolution)) {
                std::cout << "polynomial check p=" << poly->report.p << ", roots "
                          << poly->report.integer_roots.size();
            }
            std::cout << "\n";
        }
        for (const auto& f : report.failures) std::cout << "failure: " << f << "\n";
        std::cout << "verdict: " << (report.pass ? "pass" : "fail") << "\n";
    }
    return report.pass ? 0 : 1;
}

int run_lehmer_seq(const Args& a) {
    const Integer u = parse_integer(a.u);
    const LehmerPair pair = gamma_to_pair({u, 1});
    if (a.json) {
        Json j{{"u", to_decimal(u)},
               {"R", to_decimal(pair.R)},
               {"Q", to_decimal(pair.Q)}};
        if (a.all_terms) {
            Json terms = Json::array();
            for (unsigned m = 0; m <= a.p; ++m) terms.push_back(to_decimal(lehmer_term(pair, m)));
            j["terms"] = terms;
        } else {
            j["m"] = a.p;
            j["term"] = to_decimal(lehmer_term(pair, a.p));
        }
        std::cout << j.dump() << "\n";
        return 0;
    }
    if (a.all_terms) {
        for (unsigned m = 0; m <= a.p; ++m) {
            std::cout << "m=" << m << " " << lehmer_term(pair, m) << "\n";
        }
    } else {
        std::cout << lehmer_term(pair, a.p) << "\n";
    }
    return 0;
}

int run_lehmer_poly(const Args& a) {
    const PolyCheckReport report = small_prime_poly_check(a.p);
    if (a.json) {
        std::cout << to_json(report).dump() << "\n";
        return 0;
    }
    if (report.p == 3) {
        std::cout << "T(u) = 3u^2 - 105, targets +-6; u^2 in {";
    } else {
        std::cout << "T(u) = 5u^4 - 1050u^2 + 11025, targets +-36; discriminants {";
    }
    for (std::size_t i = 0; i < report.square_candidates.size(); ++i) {
        std::cout << (i ? ", " : "") << report.square_candidates[i];
    }
    std::cout << "}: ";
    if (report.integer_roots.empty()) {
        std::cout << "no integer roots\n";
    } else {
        std::cout << report.integer_roots.size() << " integer roots\n";
    }
    return report.integer_roots.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for perfect powers that are sums of consecutive squares"};
    app.require_subcommand(1);
    Args a;

    auto* sum = app.add_subcommand("sum", "evaluate (x+1)^2 + ... + (x+d)^2");
    sum->add_option("--d", a.d, "number of consecutive squares")->required()->check(CLI::PositiveNumber);
    sum->add_option("--x", a.x, "offset x (decimal)")->required();
    sum->add_flag("--json", a.json, "emit JSON");

    auto* search = app.add_subcommand("search", "brute-force all solutions in a box");
    search->add_option("--d-min", a.d_min, "smallest d")->capture_default_str();
    search->add_option("--d-max", a.d_max, "largest d")->capture_default_str();
    search->add_option("--x-bound", a.x_bound, "|x| bound (decimal)")->required();
    search->add_option("--n-max", a.n_max, "largest exponent")->required();
    search->add_option("--threads", a.threads, "worker count")->capture_default_str();
    search->add_flag("--json", a.json, "stream solutions as JSON lines");

    auto* filter = app.add_subcommand("filter", "run the elimination filters on one case");
    filter->add_option("--d", a.d, "d in [2,10]")->required();
    filter->add_option("--n", a.n, "exponent")->required();
    filter->add_flag("--json", a.json, "emit JSON");

    auto* factor = app.add_subcommand("factor", "factor an integer within the work budget");
    factor->add_option("--n", a.value, "nonzero integer (decimal)")->required();
    factor->add_option("--seed", a.seed, "seed for the rho rounds")->capture_default_str();
    factor->add_flag("--json", a.json, "emit JSON");

    auto* pell = app.add_subcommand("pell", "members of the d=2, n=2 family");
    auto* count_opt = pell->add_option("--count", a.count, "first K indices r, both signs");
    auto* bound_opt = pell->add_option("--x-bound", a.x_bound, "enumerate |x| <= bound");
    count_opt->excludes(bound_opt);
    pell->add_flag("--json", a.json, "emit JSON");

    auto* lehmer = app.add_subcommand("lehmer", "d=6 machinery");
    lehmer->require_subcommand(1);
    auto* seq = lehmer->add_subcommand("seq", "Lehmer terms for gamma = u + sqrt(-105)");
    seq->add_option("--u", a.u, "u, congruent to 3 mod 6 (decimal)")->required();
    seq->add_option("--p", a.p, "term index")->required();
    seq->add_flag("--all", a.all_terms, "print every term up to p");
    seq->add_flag("--json", a.json, "emit JSON");
    auto* scan = lehmer->add_subcommand("scan", "scan u for defective terms");
    scan->add_option("--p", a.p, "odd prime in {3,5,7,13}")->required();
    scan->add_option("--u-bound", a.u_bound, "|u| bound (decimal)")->capture_default_str();
    scan->add_flag("--json", a.json, "emit JSON");
    auto* poly = lehmer->add_subcommand("poly", "polynomial elimination for p in {3,5}");
    poly->add_option("--p", a.p, "3 or 5")->required();
    poly->add_flag("--json", a.json, "emit JSON");
    auto* primdiv = lehmer->add_subcommand("primdiv", "primitive divisors of a Lehmer term");
    primdiv->add_option("--R", a.pair_r, "R = (alpha+beta)^2 (decimal)")->required();
    primdiv->add_option("--Q", a.pair_q, "Q = alpha*beta (decimal)")->required();
    primdiv->add_option("--m", a.m, "term index, at least 1")->required();
    primdiv->add_option("--seed", a.seed, "seed for the rho rounds")->capture_default_str();
    primdiv->add_flag("--json", a.json, "emit JSON");

    auto* verify = app.add_subcommand("verify", "machine-check the whole theorem at desk scale");
    verify->add_option("--x-bound", a.x_bound, "|x| bound, at least 200 (decimal)")->required();
    verify->add_option("--n-max", a.n_max, "largest exponent, at least 4")->required();
    verify->add_option("--threads", a.threads, "worker count")->capture_default_str();
    verify->add_option("--out", a.out, "write the JSON report to a file");
    verify->add_flag("--json", a.json, "print the JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(sum)) {
            const Integer value = consecutive_square_sum(a.d, parse_integer(a.x));
            if (a.json) {
                std::cout << Json{{"d", a.d}, {"x", a.x}, {"sum", to_decimal(value)}}.dump() << "\n";
            } else {
                std::cout << value << "\n";
            }
            return 0;
        }
        if (app.got_subcommand(search)) {
            const SearchBox box(a.d_min, a.d_max, parse_integer(a.x_bound), a.n_max);
            for (const auto& s : brute_force(box, a.threads)) print_solution(s, a.json);
            return 0;
        }
        if (app.got_subcommand(filter)) {
            const auto certs = apply_all_filters(a.d, a.n);
            if (a.json) {
                Json arr = Json::array();
                for (const auto& c : certs) arr.push_back(to_json(c));
                std::cout << Json{{"d", a.d}, {"n", a.n}, {"certificates", arr}}.dump() << "\n";
            } else if (certs.empty()) {
                std::cout << "no elimination certificate for d=" << a.d << " n=" << a.n << "\n";
            } else {
                for (const auto& c : certs) print_certificate(c);
            }
            return 0;
        }
        if (app.got_subcommand(pell)) {
            if (*count_opt) {
                if (a.count < 1) throw std::domain_error("--count must be >= 1");
                for (long r = 0; r < a.count; ++r) {
                    print_pell(pell_solution(r, +1), a.json);
                    print_pell(pell_solution(r, -1), a.json);
                }
            } else if (*bound_opt) {
                for (const auto& s : enumerate_in_range(parse_integer(a.x_bound))) {
                    print_pell(s, a.json);
                }
            } else {
                throw std::domain_error("pell: give --count or --x-bound");
            }
            return 0;
        }
        if (app.got_subcommand(factor)) {
            const Factorization f = factorize(parse_integer(a.value), budget_with_seed(a));
            if (a.json) {
                std::cout << to_json(f).dump() << "\n";
            } else {
                for (const auto& [p, e] : f.factors) {
                    std::cout << p;
                    if (e > 1) std::cout << "^" << e;
                    std::cout << "\n";
                }
                if (!f.complete()) std::cout << "cofactor " << f.cofactor << " (composite)\n";
            }
            return f.complete() ? 0 : 3;
        }
        if (app.got_subcommand(lehmer)) {
            if (lehmer->got_subcommand(seq)) return run_lehmer_seq(a);
            if (lehmer->got_subcommand(primdiv)) {
                if (a.m < 1) throw std::domain_error("--m must be >= 1");
                const LehmerPair pair{parse_integer(a.pair_r), parse_integer(a.pair_q)};
                const auto r = primitive_divisors(pair, a.m, budget_with_seed(a));
                if (a.json) {
                    Json primes = Json::array();
                    for (const auto& q : r.primes) primes.push_back(to_decimal(q));
                    std::cout << Json{{"R", to_decimal(pair.R)},
                                      {"Q", to_decimal(pair.Q)},
                                      {"m", a.m},
                                      {"primitive_divisors", primes},
                                      {"complete", r.complete}}
                                     .dump()
                              << "\n";
                } else {
                    if (r.primes.empty()) {
                        std::cout << (r.complete ? "no primitive divisor (defective term)\n"
                                                 : "none found\n");
                    }
                    for (const auto& q : r.primes) std::cout << q << "\n";
                    if (!r.complete) std::cout << "factorization incomplete: budget exhausted\n";
                }
                return r.complete ? 0 : 3;
            }
            if (lehmer->got_subcommand(scan)) {
                const DefectScanReport report = defect_scan(a.p, parse_integer(a.u_bound));
                if (a.json) {
                    std::cout << to_json(report).dump() << "\n";
                } else {
                    std::cout << "p=" << report.p << " u_bound=" << report.u_bound << " scanned="
                              << report.scanned << " violations=" << report.violations.size()
                              << "\n";
                    for (const auto& u : report.violations) std::cout << "violation u=" << u << "\n";
                }
                return report.violations.empty() ? 0 : 1;
            }
            return run_lehmer_poly(a);
        }
        return run_verify(a);
    } catch (const IndeterminateFactorization& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
