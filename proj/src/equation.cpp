#include "csq/equation.hpp"

#include <tuple>

namespace csq {

Integer consecutive_square_sum(unsigned d, const Integer& x) {
    if (d < 1) throw std::domain_error("consecutive_square_sum: d must be >= 1");
    const Integer dz = d;
    const Integer t = dz * (dz + 1);
    // d(d+1)(2d+1) is always divisible by 6
    return dz * x * x + t * x + t * (2 * dz + 1) / 6;
}

bool check_solution(unsigned d, const Integer& x, const Integer& y, unsigned n) {
    if (d < 2) throw std::domain_error("check_solution: d must be >= 2");
    if (n < 2) throw std::domain_error("check_solution: n must be >= 2");
    return consecutive_square_sum(d, x) == pow_ui(y, n);
}

Integer mirror(unsigned d, const Integer& x) { return -(x + d + 1); }

Solution make_solution(unsigned d, const Integer& x, const Integer& y, unsigned n) {
    if (!check_solution(d, x, y, n)) {
        throw std::domain_error("make_solution: tuple does not satisfy the equation");
    }
    // The sum is >= 1 for d >= 2 (at most one of the d squares vanishes), so
    // y != 0 and the canonical representative has y > 0.
    return Solution{d, x, abs(y), n, n % 2 == 0};
}

bool solution_less(const Solution& a, const Solution& b) {
    return std::tie(a.d, a.n, a.x, a.y) < std::tie(b.d, b.n, b.x, b.y);
}

}  // namespace csq
