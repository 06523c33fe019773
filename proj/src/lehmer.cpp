#include "csq/lehmer.hpp"

#include <algorithm>

namespace csq {

namespace {

Integer binomial(unsigned n, unsigned k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

void push_root_pair(std::vector<Integer>& roots, const Integer& u) {
    roots.push_back(u);
    if (u != 0) roots.push_back(-u);
}

}  // namespace

LehmerPair gamma_to_pair(const QuadIntM105& g) {
    if (g.v != 1 && g.v != -1) {
        throw std::domain_error("gamma_to_pair: v must be +1 or -1");
    }
    if (mod_floor_ui(g.u, 6) != 3) {
        throw std::domain_error("gamma_to_pair: u must be congruent to 3 (mod 6)");
    }
    const Integer u2 = g.u * g.u;
    return LehmerPair{2 * u2 / 3, (u2 + 105) / 6};
}

Integer lehmer_term(const LehmerPair& pair, unsigned m) {
    if (m == 0) return 0;
    if (m <= 2) return 1;
    Integer prev2 = 1;  // u~_1
    Integer prev = 1;   // u~_2
    for (unsigned k = 3; k <= m; ++k) {
        Integer next = pair.Q * prev2;
        if (k % 2 == 1) {
            next = pair.R * prev - next;
        } else {
            next = prev - next;
        }
        prev2 = std::move(prev);
        prev = std::move(next);
    }
    return prev;
}

bool is_valid_lehmer_pair(const LehmerPair& pair) {
    if (pair.R == 0 || pair.Q == 0) return false;
    if (gcd(pair.R, pair.Q) != 1) return false;
    // R - 4Q = (alpha-beta)^2; zero means alpha = beta, ratio 1
    if (pair.R == 4 * pair.Q) return false;
    for (unsigned m = 1; m <= 12; ++m) {
        if (lehmer_term(pair, m) == 0) return false;
    }
    return true;
}

PrimitiveDivisorResult primitive_divisors(const LehmerPair& pair, unsigned m,
                                          const FactorBudget& budget) {
    if (m < 1) throw std::domain_error("primitive_divisors: m must be >= 1");
    if (!is_valid_lehmer_pair(pair)) {
        throw std::domain_error("primitive_divisors: not a valid Lehmer pair");
    }
    // Non-primitivity modulus R(R-4Q) * product of the earlier terms; each
    // prime factor of u~_m is tested against it, so only u~_m needs factoring.
    Integer modulus = pair.R * (pair.R - 4 * pair.Q);
    for (unsigned k = 1; k < m; ++k) modulus *= lehmer_term(pair, k);

    const Integer um = lehmer_term(pair, m);
    const Factorization f = factorize(um, budget);
    PrimitiveDivisorResult result{{}, f.complete()};
    for (const auto& [q, mult] : f.factors) {
        if (modulus % q != 0) result.primes.push_back(q);
    }
    return result;
}

bool is_defective(const LehmerPair& pair, unsigned m, const FactorBudget& budget) {
    const PrimitiveDivisorResult r = primitive_divisors(pair, m, budget);
    if (!r.primes.empty()) return false;
    if (!r.complete) {
        throw IndeterminateFactorization(
            "is_defective: factorization budget exhausted before any primitive divisor was found");
    }
    return true;
}

DefectScanReport defect_scan(unsigned p, const Integer& u_bound) {
    if (p != 3 && p != 5 && p != 7 && p != 13) {
        throw std::domain_error("defect_scan: p must be one of 3, 5, 7, 13");
    }
    DefectScanReport report{p, u_bound, 0, {}};
    for (Integer u = 3; u <= u_bound; u += 6) {
        for (int sign : {+1, -1}) {
            const Integer su = sign * u;
            const Integer term = lehmer_term(gamma_to_pair({su, 1}), p);
            ++report.scanned;
            if (term == 1 || term == -1) report.violations.push_back(su);
        }
    }
    return report;
}

PolyCheckReport small_prime_poly_check(unsigned p) {
    if (p != 3 && p != 5) throw std::domain_error("small_prime_poly_check: p must be 3 or 5");

    PolyCheckReport report;
    report.p = p;
    // T_p(u) = sum over odd j of C(p,j) u^(p-j) (-105)^((j-1)/2); only even
    // powers of u survive, degree p-1
    report.coefficients.assign(p, 0);
    for (unsigned j = 1; j <= p; j += 2) {
        report.coefficients[j - 1] = binomial(p, j) * pow_ui(Integer(-105), (j - 1) / 2);
    }
    const Integer target = pow_ui(Integer(6), (p - 1) / 2);
    report.targets = {target, -target};

    for (const Integer& t : report.targets) {
        if (p == 3) {
            // 3u^2 - 105 = t  <=>  u^2 = (105 + t)/3
            const Integer num = 105 + t;
            if (num % 3 != 0) continue;
            const Integer w = num / 3;
            report.square_candidates.push_back(w);
            if (w < 0) continue;
            if (auto u = exact_nth_root(w, 2)) push_root_pair(report.integer_roots, *u);
        } else {
            // 5w^2 - 1050w + (11025 - t) = 0 with w = u^2
            const Integer disc = Integer(1050) * 1050 - 20 * (11025 - t);
            report.square_candidates.push_back(disc);
            if (disc < 0) continue;
            const auto sq = exact_nth_root(disc, 2);
            if (!sq) continue;
            for (const Integer& num : {Integer(1050 + *sq), Integer(1050 - *sq)}) {
                if (num % 10 != 0) continue;
                const Integer w = num / 10;
                if (w < 0) continue;
                if (auto u = exact_nth_root(w, 2)) push_root_pair(report.integer_roots, *u);
            }
        }
    }
    std::sort(report.square_candidates.begin(), report.square_candidates.end());
    std::sort(report.integer_roots.begin(), report.integer_roots.end());
    report.integer_roots.erase(
        std::unique(report.integer_roots.begin(), report.integer_roots.end()),
        report.integer_roots.end());
    return report;
}

}  // namespace csq
