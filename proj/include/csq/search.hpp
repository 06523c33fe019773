#pragma once

#include <stdexcept>
#include <vector>

#include "csq/equation.hpp"
#include "csq/integer.hpp"

namespace csq {

/// Exhaustive search region: d in [d_min, d_max], |x| <= x_bound, exponents
/// 2..n_max.
struct SearchBox {
    unsigned d_min;
    unsigned d_max;
    Integer x_bound;
    unsigned n_max;

    SearchBox(unsigned d_min_, unsigned d_max_, Integer x_bound_, unsigned n_max_)
        : d_min(d_min_), d_max(d_max_), x_bound(std::move(x_bound_)), n_max(n_max_) {
        if (d_min < 2 || d_max > 10 || d_min > d_max) {
            throw std::domain_error("SearchBox: need 2 <= d_min <= d_max <= 10");
        }
        if (x_bound < 1) throw std::domain_error("SearchBox: x_bound must be >= 1");
        if (n_max < 2) throw std::domain_error("SearchBox: n_max must be >= 2");
    }
};

/// Every solution in the box, found by direct enumeration: one sum per
/// (d, x), one perfect-power sweep per sum.  Canonicalized (y > 0 with the
/// even-n sign flag) and sorted by (d, n, x).  Output is identical for any
/// worker count.
std::vector<Solution> brute_force(const SearchBox& box, unsigned threads = 1);

/// Symmetric difference of two canonicalized solution lists.
struct SolutionDiff {
    std::vector<Solution> missing;     // expected but not found
    std::vector<Solution> unexpected;  // found but not expected

    bool empty() const { return missing.empty() && unexpected.empty(); }
};

SolutionDiff cross_check(const std::vector<Solution>& found,
                         const std::vector<Solution>& expected);

}  // namespace csq
