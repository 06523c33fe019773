#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "csq/integer.hpp"

namespace csq {

// Thrown when a factorization-dependent answer cannot be decided within the
// work budget.  Callers treat this as "resource cap", never as a verdict.
struct IndeterminateFactorization : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Work budget for factorize(): trial division up to trial_bound, then
/// rho_rounds attempts of Pollard rho (Brent cycle detection), each capped at
/// rho_iterations squarings.  Deterministic for a fixed seed.
struct FactorBudget {
    unsigned long trial_bound = 1'000'000;
    unsigned rho_rounds = 24;
    unsigned long rho_iterations = 1'000'000;
    std::uint64_t seed = 0x5eedc5f3u;
};

/// Prime decomposition of |n|.  When the budget ran out, the unfactored
/// composite remainder is carried in cofactor instead of being guessed at.
struct Factorization {
    std::vector<std::pair<Integer, unsigned>> factors;  // (prime, multiplicity), primes increasing
    Integer cofactor = 1;                               // composite remainder, 1 when complete

    bool complete() const { return cofactor == 1; }
    Integer reassemble() const;  // product of prime^multiplicity times cofactor
};

/// Largest e with p^e | n.  Requires n != 0 and p a prime >= 2.
unsigned long padic_valuation(const Integer& n, const Integer& p);

/// The integer y with y^n = s, if one exists.  y >= 0 for even n, sign of s
/// for odd n.  Even n with s < 0 yields nullopt; n = 0 is a domain error.
std::optional<Integer> exact_nth_root(const Integer& s, unsigned n);

/// All (n, y) with 2 <= n <= n_max and y^n = s.  For even n the returned y is
/// the nonnegative root; -y works as well.  Exponents above the bit length of
/// |s| cannot occur for |s| >= 2 and are skipped.
std::vector<std::pair<unsigned, Integer>> perfect_power_exponents(const Integer& s,
                                                                  unsigned n_max);

/// Primality of |n|.  Deterministic below 2^64 (fixed Miller-Rabin witness
/// set); above that, 64 pseudorandom Miller-Rabin rounds, so the error
/// probability is below 2^-128.  Deterministic for a given n either way.
bool is_prime(const Integer& n);

/// Factor |n| within the budget.  Never wrong, possibly incomplete: leftover
/// composite mass goes to the cofactor.
Factorization factorize(const Integer& n, const FactorBudget& budget = {});

}  // namespace csq
