#pragma once

#include <vector>

#include "csq/integer.hpp"

namespace csq {

/// Element a + b*sqrt(2) of Z[sqrt(2)].
struct Z2Element {
    Integer a;
    Integer b;

    Z2Element operator*(const Z2Element& o) const {
        return {a * o.a + 2 * b * o.b, a * o.b + b * o.a};
    }
    Integer norm() const { return a * a - 2 * b * b; }
    bool operator==(const Z2Element&) const = default;
};

/// (1 + sqrt(2))^k for any sign of k; negative k goes through the inverse
/// -1 + sqrt(2).
Z2Element unit_power(long k);

// One member of the d = 2, n = 2 family: with t + y*sqrt(2) equal to
// sign * (1+sqrt(2))^(2r+1), it satisfies (2x+3)^2 - 2y^2 = -1 at x = (t-3)/2.
struct PellSolution {
    long r;
    int sign;  // +1 or -1
    Integer x;
    Integer y;

    bool operator==(const PellSolution&) const = default;
};

PellSolution pell_solution(long r, int sign);

/// Every family member with |x| <= x_bound, all r and both signs, sorted by
/// x, deduplicated on (x, |y|).  Requires x_bound >= 1.
std::vector<PellSolution> enumerate_in_range(const Integer& x_bound);

}  // namespace csq
