#pragma once

#include <compare>
#include <stdexcept>

#include "csq/integer.hpp"

namespace csq {

// One case of the target equation: sum of d consecutive squares equal to an
// n-th power, with d in the studied range.
struct EquationInstance {
    unsigned d;
    unsigned n;

    EquationInstance(unsigned d_, unsigned n_) : d(d_), n(n_) {
        if (d < 2 || d > 10) throw std::domain_error("EquationInstance: d must be in [2, 10]");
        if (n < 2) throw std::domain_error("EquationInstance: n must be >= 2");
    }
};

/// (x+1)^2 + ... + (x+d)^2, evaluated through the closed form
/// d*x^2 + d(d+1)*x + d(d+1)(2d+1)/6.  Accepts any d >= 1.
Integer consecutive_square_sum(unsigned d, const Integer& x);

/// True iff consecutive_square_sum(d, x) == y^n.  Requires d >= 2, n >= 2.
bool check_solution(unsigned d, const Integer& x, const Integer& y, unsigned n);

/// The reflection x' = -(x + d + 1); it permutes the d squares, so the sum is
/// unchanged.  Involution.
Integer mirror(unsigned d, const Integer& x);

/// A verified solution tuple, canonicalized with y > 0.  When n is even, -y
/// solves the equation as well; sign_ambiguous records that.
struct Solution {
    unsigned d;
    Integer x;
    Integer y;  // > 0 always (the sum is positive for d >= 2)
    unsigned n;
    bool sign_ambiguous;

    bool operator==(const Solution&) const = default;
};

/// Canonicalizing checked constructor; throws if (d, x, y, n) does not
/// satisfy the equation.
Solution make_solution(unsigned d, const Integer& x, const Integer& y, unsigned n);

/// Report ordering: by (d, n, x), then y for determinism.
bool solution_less(const Solution& a, const Solution& b);

}  // namespace csq
