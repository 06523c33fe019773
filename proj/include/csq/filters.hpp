#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "csq/integer.hpp"

namespace csq {

// Witness payloads.  Each holds exactly what an independent verifier needs to
// recompute the nonexistence claim; see reverify().

// A prime p = +-5 (mod 12) divides d with ord_p(d) not a multiple of n.
struct ZhangBaiWitness {
    Integer p;
    unsigned long ord;  // ord_p(d)
};

// r = ord_2(d) >= 2 with 3 not dividing d; valuation matching forces
// n * ord_2(y) = r - 1, impossible when n does not divide r - 1.
struct DyadicWitness {
    unsigned long r;
};

// r = ord_3(d) >= 2 with d odd; same valuation argument at the prime 3.
struct TriadicWitness {
    unsigned long r;
};

// n = 2 congruence obstruction: the completed-square form is lhs_residue mod
// 8 for every x, while twice a square only attains rhs_residues mod 8.
struct Mod8Witness {
    unsigned lhs_residue;
    std::vector<unsigned> rhs_residues;
};

enum class FilterKind { ZhangBai, Dyadic, Triadic, Mod8 };

/// Self-contained proof that the case (d, n) has no solutions.  The verifier
/// recomputes everything from (variant, d, n, witness); nothing is trusted.
struct EliminationCertificate {
    FilterKind variant;
    unsigned d;
    unsigned n;                  // the exponent eliminated (2 for Mod8)
    std::string exponent_scope;  // human-readable description of the claim
    std::variant<ZhangBaiWitness, DyadicWitness, TriadicWitness, Mod8Witness> witness;
};

std::string filter_kind_name(FilterKind kind);

/// Some prime p = +-5 (mod 12) divides d with ord_p(d) not = 0 (mod n).
/// Smallest such p is reported.  Absent when the criterion does not bite.
std::optional<EliminationCertificate> zhang_bai(unsigned d, unsigned n);

/// Valuation filter at 2.  Applies when ord_2(d) >= 2 and 3 does not divide
/// d; eliminates (d, n) when n does not divide ord_2(d) - 1.
std::optional<EliminationCertificate> dyadic(unsigned d, unsigned n);

/// Valuation filter at 3.  Applies when ord_3(d) >= 2 and d is odd;
/// eliminates (d, n) when n does not divide ord_3(d) - 1.
std::optional<EliminationCertificate> triadic(unsigned d, unsigned n);

/// n = 2 obstruction for d in {6, 8}: the rewritten equation is 6 mod 8 on
/// the left for every x but only 0 or 2 mod 8 on the right.
EliminationCertificate mod8_square_obstruction(unsigned d);

/// Recompute a certificate's claim from its witness fields alone.
bool reverify(const EliminationCertificate& cert);

/// All certificates the filters emit for (d, n); empty when the case
/// survives every filter.
std::vector<EliminationCertificate> apply_all_filters(unsigned d, unsigned n);

}  // namespace csq
