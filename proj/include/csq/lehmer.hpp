#pragma once

#include <cstdint>
#include <vector>

#include "csq/arith.hpp"
#include "csq/integer.hpp"

namespace csq {

/// Quadratic integer u + v*sqrt(-105) in Z[sqrt(-105)].
struct QuadIntM105 {
    Integer u;
    Integer v;

    QuadIntM105 conjugate() const { return {u, -v}; }
    Integer norm() const { return u * u + 105 * v * v; }
    QuadIntM105 operator*(const QuadIntM105& o) const {
        return {u * o.u - 105 * v * o.v, u * o.v + v * o.u};
    }
    bool operator==(const QuadIntM105&) const = default;
};

/// Lehmer pair parameters R = (alpha+beta)^2 and Q = alpha*beta, where
/// alpha = gamma/sqrt(6) and beta is its conjugate.
struct LehmerPair {
    Integer R;
    Integer Q;

    bool operator==(const LehmerPair&) const = default;
};

/// Build the pair from gamma = u + v*sqrt(-105).  Requires v = +-1 and
/// u = 3 (mod 6) (3 | u makes R = 2u^2/3 integral, u odd makes
/// Q = (u^2+105)/6 integral).
LehmerPair gamma_to_pair(const QuadIntM105& g);

/// R, Q nonzero and coprime, and alpha/beta not a root of unity.  The ratio
/// test is finite: in a field of degree at most 4 any root of unity has
/// order k with phi(k) <= 4, hence k <= 12, so it suffices that R != 4Q
/// (which would force alpha = beta) and that no term u~_1..u~_12 vanishes.
bool is_valid_lehmer_pair(const LehmerPair& pair);

/// Term u~_m of the Lehmer sequence: (alpha^m - beta^m)/(alpha - beta) for
/// odd m, (alpha^m - beta^m)/(alpha^2 - beta^2) for even m.  Computed by the
/// integer recurrence u~_0 = 0, u~_1 = u~_2 = 1,
///   u~_m = R*u~_{m-1} - Q*u~_{m-2}   (m odd)
///   u~_m =   u~_{m-1} - Q*u~_{m-2}   (m even).
Integer lehmer_term(const LehmerPair& pair, unsigned m);

/// Primes dividing u~_m but not (alpha^2-beta^2)^2 * u~_1 * ... * u~_{m-1},
/// where (alpha^2-beta^2)^2 = R*(R-4Q).  complete is false when the
/// factorization budget ran out; the listed primes are then a lower bound.
struct PrimitiveDivisorResult {
    std::vector<Integer> primes;
    bool complete;
};

PrimitiveDivisorResult primitive_divisors(const LehmerPair& pair, unsigned m,
                                          const FactorBudget& budget = {});

/// True iff u~_m has no primitive divisor.  Throws IndeterminateFactorization
/// when the budget ran out before the question was settled.
bool is_defective(const LehmerPair& pair, unsigned m, const FactorBudget& budget = {});

/// Scan record: a solution with exponent p would force u~_p = +-1 for some
/// admissible u, so a clean scan rules the exponent out up to the bound.
struct DefectScanReport {
    unsigned p;
    Integer u_bound;
    std::uint64_t scanned;
    std::vector<Integer> violations;  // u values with u~_p = +-1; expected empty
};

/// Scan every u = 3 (mod 6) with 0 < |u| <= u_bound (both signs) at the odd
/// prime p in {3, 5, 7, 13}.
DefectScanReport defect_scan(unsigned p, const Integer& u_bound);

/// p in {3, 5}: expansion of T_p(u) = ((u+sqrt(-105))^p - (u-sqrt(-105))^p)
/// / (2*sqrt(-105)) and exact resolution of T_p(u) = +-6^((p-1)/2) over the
/// integers.  T_3(u) = 3u^2 - 105, T_5(u) = 5u^4 - 1050u^2 + 11025.
struct PolyCheckReport {
    unsigned p;
    std::vector<Integer> coefficients;       // T_p, descending degree
    std::vector<Integer> targets;            // +6^((p-1)/2), -6^((p-1)/2)
    std::vector<Integer> square_candidates;  // values that would have to be perfect squares
    std::vector<Integer> integer_roots;      // expected empty
};

PolyCheckReport small_prime_poly_check(unsigned p);

}  // namespace csq
