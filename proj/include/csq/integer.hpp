#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>

namespace csq {

// The universal scalar: exact, arbitrary precision, no rounding anywhere.
using Integer = mpz_class;

// Nonnegative residue of a mod m for m > 0, independent of the sign of a.
inline Integer mod_floor(const Integer& a, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline unsigned long mod_floor_ui(const Integer& a, unsigned long m) {
    return mpz_fdiv_ui(a.get_mpz_t(), m);
}

// Number of bits of |n|; returns 1 for n = 0 (GMP convention).
inline std::size_t bit_length(const Integer& n) {
    return mpz_sizeinbase(n.get_mpz_t(), 2);
}

inline Integer pow_ui(const Integer& base, unsigned long exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline std::string to_decimal(const Integer& n) { return n.get_str(10); }

}  // namespace csq
