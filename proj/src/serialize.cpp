#include "csq/serialize.hpp"

namespace csq {

namespace {

Json decimal_list(const std::vector<Integer>& values) {
    Json arr = Json::array();
    for (const Integer& v : values) arr.push_back(to_decimal(v));
    return arr;
}

}  // namespace

Json to_json(const Solution& s) {
    return Json{{"d", s.d},
                {"x", to_decimal(s.x)},
                {"y", to_decimal(s.y)},
                {"n", s.n},
                {"sign_ambiguous", s.sign_ambiguous}};
}

Json to_json(const Factorization& f) {
    Json factors = Json::array();
    for (const auto& [p, e] : f.factors) factors.push_back(Json{{"prime", to_decimal(p)}, {"multiplicity", e}});
    return Json{{"factors", factors}, {"cofactor", to_decimal(f.cofactor)}};
}

Json to_json(const EliminationCertificate& cert) {
    Json witness;
    switch (cert.variant) {
        case FilterKind::ZhangBai: {
            const auto& w = std::get<ZhangBaiWitness>(cert.witness);
            witness = Json{{"p", to_decimal(w.p)}, {"ord", w.ord}};
            break;
        }
        case FilterKind::Dyadic: {
            witness = Json{{"r", std::get<DyadicWitness>(cert.witness).r}};
            break;
        }
        case FilterKind::Triadic: {
            witness = Json{{"r", std::get<TriadicWitness>(cert.witness).r}};
            break;
        }
        case FilterKind::Mod8: {
            const auto& w = std::get<Mod8Witness>(cert.witness);
            witness = Json{{"lhs_residue", w.lhs_residue}, {"rhs_residues", w.rhs_residues}};
            break;
        }
    }
    return Json{{"variant", filter_kind_name(cert.variant)},
                {"d", cert.d},
                {"n", cert.n},
                {"exponent_scope", cert.exponent_scope},
                {"witness", witness}};
}

Json to_json(const PellSolution& s) {
    return Json{{"r", s.r}, {"sign", s.sign}, {"x", to_decimal(s.x)}, {"y", to_decimal(s.y)}};
}

Json to_json(const DefectScanReport& report) {
    return Json{{"p", report.p},
                {"u_bound", to_decimal(report.u_bound)},
                {"scanned", report.scanned},
                {"violations", decimal_list(report.violations)}};
}

Json to_json(const PolyCheckReport& report) {
    return Json{{"p", report.p},
                {"coefficients", decimal_list(report.coefficients)},
                {"targets", decimal_list(report.targets)},
                {"square_candidates", decimal_list(report.square_candidates)},
                {"integer_roots", decimal_list(report.integer_roots)}};
}

Json to_json(const SolutionDiff& diff) {
    Json arr = Json::array();
    for (const Solution& s : diff.missing) arr.push_back(Json{{"status", "missing"}, {"solution", to_json(s)}});
    for (const Solution& s : diff.unexpected) arr.push_back(Json{{"status", "unexpected"}, {"solution", to_json(s)}});
    return arr;
}

namespace {

Json resolution_to_json(const Resolution& resolution) {
    if (const auto* e = std::get_if<ResolutionEliminated>(&resolution)) {
        return Json{{"kind", "eliminated"}, {"certificate", to_json(e->certificate)}};
    }
    if (const auto* f = std::get_if<ResolutionFamily>(&resolution)) {
        Json members = Json::array();
        for (const PellSolution& m : f->members) members.push_back(to_json(m));
        return Json{{"kind", "family"},
                    {"generator", "1+sqrt(2)"},
                    {"member_count", f->members.size()},
                    {"members", members}};
    }
    if (const auto* c = std::get_if<ResolutionExternalCitation>(&resolution)) {
        Json expected = Json::array();
        for (const Solution& s : c->expected) expected.push_back(to_json(s));
        return Json{{"kind", "external_citation"}, {"source", c->source}, {"expected_solutions", expected}};
    }
    if (const auto* d = std::get_if<ResolutionDefectScan>(&resolution)) {
        return Json{{"kind", "defect_scan"},
                    {"report", to_json(d->report)},
                    {"citation", d->citation},
                    {"box_u_bound", to_decimal(d->box_u_bound)}};
    }
    const auto& p = std::get<ResolutionPolyCheck>(resolution);
    return Json{{"kind", "poly_check"}, {"report", to_json(p.report)}};
}

}  // namespace

Json to_json(const CaseStatus& status) {
    return Json{{"d", status.d},
                {"n", status.n},
                {"canonical", status.canonical},
                {"exponent_class", status.exponent_class},
                {"resolution", resolution_to_json(status.resolution)}};
}

Json to_json(const VerificationReport& report) {
    Json cases = Json::array();
    for (const CaseStatus& status : report.cases) cases.push_back(to_json(status));
    return Json{{"parameters", Json{{"x_bound", to_decimal(report.x_bound)}, {"n_max", report.n_max}}},
                {"cases", cases},
                {"oracle_diff", to_json(report.oracle_diff)},
                {"failures", report.failures},
                {"verdict", report.pass ? "pass" : "fail"}};
}

}  // namespace csq
