#include "csq/arith.hpp"

#include <algorithm>
#include <map>

namespace csq {

namespace {

// First twelve primes: a deterministic Miller-Rabin witness set for all
// n < 3.3 * 10^24, which comfortably covers the 64-bit range.
constexpr unsigned kSmallWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

// True if base a proves n composite.  n odd, n - 1 = d * 2^s.
bool mr_composite(const Integer& n, const Integer& n_minus_1, const Integer& d,
                  unsigned long s, const Integer& a) {
    Integer x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n_minus_1) return false;
    for (unsigned long i = 1; i < s; ++i) {
        mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
        if (x == n_minus_1) return false;
        if (x == 1) return true;  // nontrivial square root of 1
    }
    return true;
}

// Brent-cycle Pollard rho.  Returns a nontrivial factor of odd composite n,
// or nullopt once iter_cap squarings are spent.
std::optional<Integer> rho_brent(const Integer& n, unsigned long iter_cap,
                                 gmp_randclass& rng) {
    const Integer one = 1;
    Integer y = rng.get_z_range(n - 3) + 1;
    Integer c = rng.get_z_range(n - 3) + 1;
    Integer x, ys, q = 1, g = 1;
    unsigned long r = 1, spent = 0;
    const unsigned long batch = 128;
    while (g == 1) {
        x = y;
        for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
        spent += r;
        for (unsigned long k = 0; k < r && g == 1; k += batch) {
            ys = y;
            const unsigned long steps = std::min(batch, r - k);
            for (unsigned long i = 0; i < steps; ++i) {
                y = (y * y + c) % n;
                q = q * abs(x - y) % n;
            }
            g = gcd(q, n);
            spent += steps;
        }
        r *= 2;
        if (spent > iter_cap) return std::nullopt;
    }
    if (g == n) {
        // backtrack one step at a time from the last batch
        do {
            ys = (ys * ys + c) % n;
            g = gcd(abs(x - ys), n);
        } while (g == 1);
    }
    if (g == n) return std::nullopt;
    return g;
}

}  // namespace

Integer Factorization::reassemble() const {
    Integer prod = cofactor;
    for (const auto& [p, e] : factors) prod *= pow_ui(p, e);
    return prod;
}

unsigned long padic_valuation(const Integer& n, const Integer& p) {
    if (n == 0) throw std::domain_error("padic_valuation: n must be nonzero");
    if (p < 2 || !is_prime(p)) throw std::domain_error("padic_valuation: p must be prime");
    Integer quotient;
    return mpz_remove(quotient.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

std::optional<Integer> exact_nth_root(const Integer& s, unsigned n) {
    if (n == 0) throw std::domain_error("exact_nth_root: n must be >= 1");
    if (s < 0 && n % 2 == 0) return std::nullopt;
    Integer root, rem;
    mpz_rootrem(root.get_mpz_t(), rem.get_mpz_t(), s.get_mpz_t(), n);
    if (rem != 0) return std::nullopt;
    return root;
}

std::vector<std::pair<unsigned, Integer>> perfect_power_exponents(const Integer& s,
                                                                  unsigned n_max) {
    if (n_max < 2) throw std::domain_error("perfect_power_exponents: n_max must be >= 2");
    unsigned hi = n_max;
    if (s != 0 && s != 1 && s != -1) {
        // y^n = s with |y| >= 2 forces 2^n <= |s|
        hi = static_cast<unsigned>(std::min<std::size_t>(n_max, bit_length(s)));
    }
    std::vector<std::pair<unsigned, Integer>> out;
    for (unsigned n = 2; n <= hi; ++n) {
        if (s < 0 && n % 2 == 0) continue;
        if (auto y = exact_nth_root(s, n)) out.emplace_back(n, *y);
    }
    return out;
}

bool is_prime(const Integer& n_in) {
    Integer n = abs(n_in);
    if (n < 2) return false;
    for (unsigned p : kSmallWitnesses) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    const Integer n_minus_1 = n - 1;
    const unsigned long s = mpz_scan1(n_minus_1.get_mpz_t(), 0);
    Integer d;
    mpz_tdiv_q_2exp(d.get_mpz_t(), n_minus_1.get_mpz_t(), s);

    if (bit_length(n) <= 64) {
        for (unsigned a : kSmallWitnesses) {
            if (mr_composite(n, n_minus_1, d, s, a)) return false;
        }
        return true;
    }
    // Same bases for the same n: seeded locally, not from global state.
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(0x9e3779b97f4a7c15ULL);
    for (int round = 0; round < 64; ++round) {
        Integer a = rng.get_z_range(n - 3) + 2;
        if (mr_composite(n, n_minus_1, d, s, a)) return false;
    }
    return true;
}

Factorization factorize(const Integer& n, const FactorBudget& budget) {
    if (n == 0) throw std::domain_error("factorize: n must be nonzero");
    Integer m = abs(n);
    std::map<Integer, unsigned> found;

    auto strip = [&](unsigned long p) {
        if (!mpz_divisible_ui_p(m.get_mpz_t(), p)) return;
        Integer pz = p;
        Integer q;
        unsigned long e = mpz_remove(q.get_mpz_t(), m.get_mpz_t(), pz.get_mpz_t());
        m = q;
        found[pz] += static_cast<unsigned>(e);
    };

    strip(2);
    strip(3);
    for (unsigned long p = 5; p <= budget.trial_bound && m > 1; p += 6) {
        if (Integer(p) * p > m) break;
        strip(p);
        strip(p + 2);
    }
    // m may now equal a prime below trial_bound^2
    if (m > 1 && Integer(budget.trial_bound) * budget.trial_bound > m) {
        found[m] += 1;
        m = 1;
    }

    Factorization result;
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(static_cast<unsigned long>(budget.seed));
    std::vector<Integer> todo;
    if (m > 1) todo.push_back(m);
    while (!todo.empty()) {
        Integer c = todo.back();
        todo.pop_back();
        if (c == 1) continue;
        if (is_prime(c)) {
            found[c] += 1;
            continue;
        }
        // prime powers defeat rho's gcd trick; peel them off exactly
        bool split = false;
        for (unsigned k = 2; k <= bit_length(c) && !split; ++k) {
            if (auto root = exact_nth_root(c, k)) {
                for (unsigned i = 0; i < k; ++i) todo.push_back(*root);
                split = true;
            }
        }
        if (split) continue;
        std::optional<Integer> f;
        for (unsigned round = 0; round < budget.rho_rounds && !f; ++round) {
            f = rho_brent(c, budget.rho_iterations, rng);
        }
        if (!f) {
            result.cofactor *= c;
            continue;
        }
        todo.push_back(*f);
        todo.push_back(c / *f);
    }
    result.factors.assign(found.begin(), found.end());
    return result;
}

}  // namespace csq
