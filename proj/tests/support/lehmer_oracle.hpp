#pragma once

#include "csq/integer.hpp"
#include "csq/lehmer.hpp"

// Independent route to the Lehmer terms, used only by tests.
//
// With alpha + beta = sqrt(R) and alpha*beta = Q, the quotient
// c_m = (alpha^m - beta^m)/(alpha - beta) lies in Z[sqrt(R)]:
//   c_0 = 0, c_1 = 1, c_m = sqrt(R)*c_{m-1} - Q*c_{m-2}.
// Odd m leaves a pure integer (u~_m = (alpha^m-beta^m)/(alpha-beta)), even m
// a pure sqrt(R) multiple whose coefficient is
// (alpha^m-beta^m)/((alpha-beta)(alpha+beta)).  The parity-split integer
// recurrence in the library must reproduce these components exactly.

namespace csq_test {

struct OracleTerm {
    csq::Integer value;  // the Lehmer term
    csq::Integer off;    // the other component; must be zero
};

inline OracleTerm oracle_lehmer_term(const csq::LehmerPair& pair, unsigned m) {
    if (m == 0) return {0, 0};
    csq::Integer prev_a = 0, prev_b = 0;  // c_0
    csq::Integer cur_a = 1, cur_b = 0;    // c_1
    for (unsigned k = 2; k <= m; ++k) {
        // sqrt(R)*(a + b*sqrt(R)) = R*b + a*sqrt(R)
        csq::Integer next_a = pair.R * cur_b - pair.Q * prev_a;
        csq::Integer next_b = cur_a - pair.Q * prev_b;
        prev_a = std::move(cur_a);
        prev_b = std::move(cur_b);
        cur_a = std::move(next_a);
        cur_b = std::move(next_b);
    }
    if (m % 2 == 1) return {cur_a, cur_b};
    return {cur_b, cur_a};
}

}  // namespace csq_test
