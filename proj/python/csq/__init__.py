"""Exact arithmetic for perfect powers that are sums of consecutive squares.

Thin python veneer over the C++ core: big integers cross the boundary as
python ints, reports as plain dicts matching the JSON schema of the CLI.
"""

from ._core import (
    apply_all_filters,
    brute_force,
    check_solution,
    consecutive_square_sum,
    defect_scan,
    dyadic,
    exact_nth_root,
    exponent_reduction,
    factorize,
    gamma_to_pair,
    is_defective,
    is_prime,
    is_valid_lehmer_pair,
    lehmer_term,
    mirror,
    mod8_square_obstruction,
    padic_valuation,
    pell_enumerate,
    pell_solution,
    perfect_power_exponents,
    primitive_divisors,
    small_prime_poly_check,
    triadic,
    unit_power,
    verify_theorem,
    verify_theorem_json,
    zhang_bai,
)

__all__ = [
    "apply_all_filters",
    "brute_force",
    "check_solution",
    "consecutive_square_sum",
    "defect_scan",
    "dyadic",
    "exact_nth_root",
    "exponent_reduction",
    "factorize",
    "gamma_to_pair",
    "is_defective",
    "is_prime",
    "is_valid_lehmer_pair",
    "lehmer_term",
    "mirror",
    "mod8_square_obstruction",
    "padic_valuation",
    "pell_enumerate",
    "pell_solution",
    "perfect_power_exponents",
    "primitive_divisors",
    "small_prime_poly_check",
    "triadic",
    "unit_power",
    "verify_theorem",
    "verify_theorem_json",
    "zhang_bai",
]

__version__ = "1.0.0"
