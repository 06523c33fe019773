#include "csq/pell.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <utility>

namespace csq {

namespace {

PellSolution from_unit(long r, int sign, const Z2Element& z) {
    Integer t = sign * z.a;
    Integer y = sign * z.b;
    // every odd power of 1+sqrt(2) has odd integer part
    return PellSolution{r, sign, (t - 3) / 2, y};
}

}  // namespace

Z2Element unit_power(long k) {
    Z2Element base = k >= 0 ? Z2Element{1, 1} : Z2Element{-1, 1};
    unsigned long e = k >= 0 ? static_cast<unsigned long>(k)
                             : -static_cast<unsigned long>(k);
    Z2Element acc{1, 0};
    while (e != 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

PellSolution pell_solution(long r, int sign) {
    if (sign != 1 && sign != -1) throw std::domain_error("pell_solution: sign must be +-1");
    return from_unit(r, sign, unit_power(2 * r + 1));
}

std::vector<PellSolution> enumerate_in_range(const Integer& x_bound) {
    if (x_bound < 1) throw std::domain_error("enumerate_in_range: x_bound must be >= 1");
    std::vector<PellSolution> out;
    std::set<std::pair<Integer, Integer>> seen;  // (x, |y|)
    const Z2Element growth{3, 2};  // (1+sqrt(2))^2
    Z2Element z{1, 1};             // (1+sqrt(2))^(2r+1), starting at r = 0
    // Negative r and the opposite sign only reproduce the same (x, |y|)
    // pairs: the inverse of a norm -1 element is minus its conjugate.
    for (long r = 0;; ++r) {
        bool any = false;
        for (int sign : {+1, -1}) {
            PellSolution s = from_unit(r, sign, z);
            if (abs(s.x) > x_bound) continue;
            any = true;
            if (seen.emplace(s.x, abs(s.y)).second) out.push_back(std::move(s));
        }
        // |x| grows monotonically on both branches
        if (!any) break;
        z = z * growth;
    }
    std::sort(out.begin(), out.end(),
              [](const PellSolution& a, const PellSolution& b) { return a.x < b.x; });
    return out;
}

}  // namespace csq
