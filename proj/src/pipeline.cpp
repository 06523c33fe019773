#include "csq/pipeline.hpp"

#include <algorithm>

namespace csq {

namespace {

constexpr unsigned kBhvBound = 30;  // u~_m has a primitive divisor for m >= 30

std::string class_label(unsigned n, unsigned canonical) {
    if (n == canonical) return n == 2 ? "n=2" : "p=" + std::to_string(n);
    return "n=" + std::to_string(n) + " -> " +
           (canonical == 2 ? "n=2" : "p=" + std::to_string(canonical));
}

// Any solution of the d = 6 case at exponent p inside |x| <= x_bound forces
// |u| below this: X = 6x + 21 and X^2 + 105 = 6y^p with y = (u^2 + 105)/6.
Integer d6_box_u_bound(unsigned p, const Integer& x_bound) {
    const Integer x_max = 6 * x_bound + 21;
    const Integer y_pow = (x_max * x_max + 105) / 6;
    Integer y_max;
    mpz_root(y_max.get_mpz_t(), y_pow.get_mpz_t(), p);
    const Integer u_sq = 6 * y_max - 105;
    if (u_sq < 0) return 0;
    Integer u_max;
    mpz_sqrt(u_max.get_mpz_t(), u_sq.get_mpz_t());
    return u_max + 1;
}

// The trivial solutions at d = 2 for one exponent n >= 3, plus the two
// fourth-power solutions when n = 4.
std::vector<Solution> d2_expected(unsigned n) {
    std::vector<Solution> out;
    out.push_back(make_solution(2, -1, 1, n));
    out.push_back(make_solution(2, -2, 1, n));
    if (n == 4) {
        out.push_back(make_solution(2, 118, 13, 4));
        out.push_back(make_solution(2, -121, 13, 4));
    }
    return out;
}

struct CaseBuilder {
    const VerifyOptions& options;
    std::vector<std::string>& failures;

    void fail(unsigned d, unsigned n, const std::string& what) {
        failures.push_back("d=" + std::to_string(d) + " n=" + std::to_string(n) + ": " + what);
    }

    Resolution eliminated(unsigned d, unsigned n,
                          const std::optional<EliminationCertificate>& cert) {
        if (!cert) {
            fail(d, n, "expected elimination certificate was not produced");
            return ResolutionExternalCitation{"unresolved", {}};
        }
        if (!reverify(*cert)) fail(d, n, "certificate failed re-verification");
        return ResolutionEliminated{*cert};
    }

    Resolution resolve(unsigned d, unsigned n, unsigned canonical) {
        switch (d) {
            case 2:
                if (n == 2) return ResolutionFamily{enumerate_in_range(options.x_bound)};
                return ResolutionExternalCitation{"cohn", d2_expected(n)};
            case 3:
                return ResolutionExternalCitation{"zhang", {}};
            case 4:
                return eliminated(d, n, dyadic(d, n));
            case 5:
            case 7:
            case 10:
                return eliminated(d, n, zhang_bai(d, n));
            case 8:
                if (n == 2) return eliminated(d, n, mod8_square_obstruction(8));
                return eliminated(d, n, dyadic(d, n));
            case 9:
                return eliminated(d, n, triadic(d, n));
            case 6:
                return resolve_d6(n, canonical);
        }
        fail(d, n, "no strategy for this d");
        return ResolutionExternalCitation{"unresolved", {}};
    }

    Resolution resolve_d6(unsigned n, unsigned canonical) {
        if (canonical == 2) {
            // n = 2 directly, and n = 2^k through y^n = (y^(n/2))^2
            return eliminated(6, n, mod8_square_obstruction(6));
        }
        const unsigned p = canonical;
        if (p == 3 || p == 5) {
            const PolyCheckReport report = small_prime_poly_check(p);
            if (!report.integer_roots.empty()) fail(6, n, "polynomial check found a root");
            return ResolutionPolyCheck{report};
        }
        if (p == 7 || p == 13) {
            const Integer needed = d6_box_u_bound(p, options.x_bound);
            const Integer bound = std::max(options.defect_u_bound, needed);
            DefectScanReport report = defect_scan(p, bound);
            if (!report.violations.empty()) fail(6, n, "defect scan found u~_p = +-1");
            return ResolutionDefectScan{std::move(report), "voutier", needed};
        }
        if (p < kBhvBound) {
            // Voutier's table leaves only p = 7, 13 in [7, 30)
            return ResolutionExternalCitation{"bhv+voutier", {}};
        }
        return ResolutionExternalCitation{"bhv", {}};
    }
};

}  // namespace

unsigned exponent_reduction(unsigned n) {
    if (n < 2) throw std::domain_error("exponent_reduction: n must be >= 2");
    for (unsigned p = 3; p <= n; p += 2) {
        if (n % p == 0 && is_prime(Integer(p))) return p;
    }
    return 2;
}

VerificationReport verify_theorem(const VerifyOptions& options) {
    if (options.x_bound < 200) {
        throw std::domain_error("verify_theorem: x_bound must be >= 200");
    }
    if (options.n_max < 4) throw std::domain_error("verify_theorem: n_max must be >= 4");

    VerificationReport report;
    report.x_bound = options.x_bound;
    report.n_max = options.n_max;

    CaseBuilder builder{options, report.failures};
    for (unsigned d = 2; d <= 10; ++d) {
        for (unsigned n = 2; n <= options.n_max; ++n) {
            const unsigned canonical = exponent_reduction(n);
            report.cases.push_back(CaseStatus{d, n, canonical, class_label(n, canonical),
                                              builder.resolve(d, n, canonical)});
        }
    }

    // Assemble the claimed solution set inside the box.
    for (const CaseStatus& status : report.cases) {
        if (const auto* family = std::get_if<ResolutionFamily>(&status.resolution)) {
            for (const PellSolution& member : family->members) {
                report.expected.push_back(make_solution(2, member.x, abs(member.y), 2));
            }
        } else if (const auto* cited = std::get_if<ResolutionExternalCitation>(&status.resolution)) {
            for (const Solution& s : cited->expected) {
                if (abs(s.x) <= options.x_bound) report.expected.push_back(s);
            }
        }
    }
    std::sort(report.expected.begin(), report.expected.end(), solution_less);

    const SearchBox box{2, 10, options.x_bound, options.n_max};
    const std::vector<Solution> found = brute_force(box, options.threads);
    report.oracle_diff = cross_check(found, report.expected);
    for (const Solution& s : report.oracle_diff.missing) {
        builder.fail(s.d, s.n, "claimed solution not found by the oracle (x=" + to_decimal(s.x) + ")");
    }
    for (const Solution& s : report.oracle_diff.unexpected) {
        builder.fail(s.d, s.n, "oracle found an unclaimed solution (x=" + to_decimal(s.x) + ")");
    }

    report.pass = report.failures.empty();
    return report;
}

}  // namespace csq
