#include "csq/filters.hpp"

#include <algorithm>

#include "csq/arith.hpp"

namespace csq {

namespace {

void require_case(unsigned d, unsigned n) {
    if (d < 2 || d > 10) throw std::domain_error("filter: d must be in [2, 10]");
    if (n < 2) throw std::domain_error("filter: n must be >= 2");
}

// Residue of 2y^2 mod 8 over all y: y even gives 0, y odd gives 2.
std::vector<unsigned> twice_square_residues_mod8() {
    std::vector<unsigned> out;
    for (unsigned y = 0; y < 8; ++y) {
        unsigned r = (2 * y * y) % 8;
        if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Left-hand residue mod 8 of the rewritten n = 2 equation, for d in {6, 8}.
// d = 6: 3(2x+7)^2 + 35 = 2y^2;  d = 8: (2x+9)^2 + 21 = 2Y^2 (after y = 2Y).
unsigned lhs_mod8(unsigned d, unsigned x) {
    if (d == 6) return (3 * (2 * x + 7) * (2 * x + 7) + 35) % 8;
    return ((2 * x + 9) * (2 * x + 9) + 21) % 8;
}

}  // namespace

std::string filter_kind_name(FilterKind kind) {
    switch (kind) {
        case FilterKind::ZhangBai: return "zhang_bai";
        case FilterKind::Dyadic: return "dyadic";
        case FilterKind::Triadic: return "triadic";
        case FilterKind::Mod8: return "mod8";
    }
    return "unknown";
}

std::optional<EliminationCertificate> zhang_bai(unsigned d, unsigned n) {
    require_case(d, n);
    for (unsigned p = 2; p <= d; ++p) {
        if (d % p != 0 || !is_prime(Integer(p))) continue;
        const unsigned res = p % 12;
        if (res != 5 && res != 7) continue;
        const unsigned long ord = padic_valuation(Integer(d), Integer(p));
        if (ord % n == 0) continue;
        return EliminationCertificate{FilterKind::ZhangBai, d, n,
                                      "n=" + std::to_string(n),
                                      ZhangBaiWitness{Integer(p), ord}};
    }
    return std::nullopt;
}

std::optional<EliminationCertificate> dyadic(unsigned d, unsigned n) {
    require_case(d, n);
    if (d % 4 != 0 || d % 3 == 0) return std::nullopt;  // lemma guard
    const unsigned long r = padic_valuation(Integer(d), Integer(2));
    if ((r - 1) % n == 0) return std::nullopt;  // case survives
    return EliminationCertificate{FilterKind::Dyadic, d, n, "n=" + std::to_string(n),
                                  DyadicWitness{r}};
}

std::optional<EliminationCertificate> triadic(unsigned d, unsigned n) {
    require_case(d, n);
    if (d % 9 != 0 || d % 2 == 0) return std::nullopt;  // lemma guard
    const unsigned long r = padic_valuation(Integer(d), Integer(3));
    if ((r - 1) % n == 0) return std::nullopt;
    return EliminationCertificate{FilterKind::Triadic, d, n, "n=" + std::to_string(n),
                                  TriadicWitness{r}};
}

EliminationCertificate mod8_square_obstruction(unsigned d) {
    if (d != 6 && d != 8) throw std::domain_error("mod8_square_obstruction: d must be 6 or 8");
    return EliminationCertificate{FilterKind::Mod8, d, 2, "n=2",
                                  Mod8Witness{6, twice_square_residues_mod8()}};
}

bool reverify(const EliminationCertificate& cert) {
    if (cert.d < 2 || cert.d > 10 || cert.n < 2) return false;
    switch (cert.variant) {
        case FilterKind::ZhangBai: {
            const auto& w = std::get<ZhangBaiWitness>(cert.witness);
            if (!is_prime(w.p)) return false;
            const unsigned long res = mod_floor_ui(w.p, 12);
            if (res != 5 && res != 7) return false;
            if (Integer(cert.d) % w.p != 0) return false;
            if (padic_valuation(Integer(cert.d), w.p) != w.ord) return false;
            return w.ord % cert.n != 0;
        }
        case FilterKind::Dyadic: {
            const auto& w = std::get<DyadicWitness>(cert.witness);
            if (w.r < 2 || cert.d % 3 == 0) return false;
            if (padic_valuation(Integer(cert.d), Integer(2)) != w.r) return false;
            return (w.r - 1) % cert.n != 0;
        }
        case FilterKind::Triadic: {
            const auto& w = std::get<TriadicWitness>(cert.witness);
            if (w.r < 2 || cert.d % 2 == 0) return false;
            if (padic_valuation(Integer(cert.d), Integer(3)) != w.r) return false;
            return (w.r - 1) % cert.n != 0;
        }
        case FilterKind::Mod8: {
            if (cert.d != 6 && cert.d != 8) return false;
            if (cert.n != 2) return false;
            const auto& w = std::get<Mod8Witness>(cert.witness);
            // exhaustive over the residue classes of x and y
            for (unsigned x = 0; x < 8; ++x) {
                if (lhs_mod8(cert.d, x) != w.lhs_residue) return false;
            }
            if (w.rhs_residues != twice_square_residues_mod8()) return false;
            return std::find(w.rhs_residues.begin(), w.rhs_residues.end(), w.lhs_residue) ==
                   w.rhs_residues.end();
        }
    }
    return false;
}

std::vector<EliminationCertificate> apply_all_filters(unsigned d, unsigned n) {
    require_case(d, n);
    std::vector<EliminationCertificate> out;
    if (auto c = zhang_bai(d, n)) out.push_back(*c);
    if (auto c = dyadic(d, n)) out.push_back(*c);
    if (auto c = triadic(d, n)) out.push_back(*c);
    if (n == 2 && (d == 6 || d == 8)) out.push_back(mod8_square_obstruction(d));
    return out;
}

}  // namespace csq
