#include "csq/search.hpp"

#include <algorithm>
#include <thread>

#include "csq/arith.hpp"

namespace csq {

namespace {

// Scan x in [lo, hi] over every d of the box.
void scan_range(const SearchBox& box, const Integer& lo, const Integer& hi,
                std::vector<Solution>& out) {
    for (Integer x = lo; x <= hi; ++x) {
        for (unsigned d = box.d_min; d <= box.d_max; ++d) {
            const Integer sum = consecutive_square_sum(d, x);
            for (const auto& [n, y] : perfect_power_exponents(sum, box.n_max)) {
                out.push_back(make_solution(d, x, y, n));
            }
        }
    }
}

}  // namespace

std::vector<Solution> brute_force(const SearchBox& box, unsigned threads) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

    const Integer lo = -box.x_bound;
    const Integer hi = box.x_bound;
    const Integer width = hi - lo + 1;
    std::vector<Solution> all;

    if (threads <= 1 || width <= 1) {
        scan_range(box, lo, hi, all);
    } else {
        // contiguous x-chunks; workers share nothing, merge preserves chunk order
        const Integer chunk = width / threads + 1;
        std::vector<std::vector<Solution>> results(threads);
        std::vector<std::thread> workers;
        workers.reserve(threads);
        for (unsigned i = 0; i < threads; ++i) {
            Integer a = lo + chunk * i;
            Integer b = std::min(Integer(a + chunk - 1), hi);
            if (a > hi) break;
            workers.emplace_back([&box, a, b, &slot = results[i]] {
                scan_range(box, a, b, slot);
            });
        }
        for (auto& w : workers) w.join();
        for (auto& part : results) {
            all.insert(all.end(), std::make_move_iterator(part.begin()),
                       std::make_move_iterator(part.end()));
        }
    }
    std::sort(all.begin(), all.end(), solution_less);
    return all;
}

SolutionDiff cross_check(const std::vector<Solution>& found,
                         const std::vector<Solution>& expected) {
    std::vector<Solution> f = found;
    std::vector<Solution> e = expected;
    std::sort(f.begin(), f.end(), solution_less);
    std::sort(e.begin(), e.end(), solution_less);
    SolutionDiff diff;
    std::set_difference(e.begin(), e.end(), f.begin(), f.end(),
                        std::back_inserter(diff.missing), solution_less);
    std::set_difference(f.begin(), f.end(), e.begin(), e.end(),
                        std::back_inserter(diff.unexpected), solution_less);
    return diff;
}

}  // namespace csq
