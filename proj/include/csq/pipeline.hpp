#pragma once

#include <string>
#include <variant>
#include <vector>

#include "csq/arith.hpp"
#include "csq/equation.hpp"
#include "csq/filters.hpp"
#include "csq/integer.hpp"
#include "csq/lehmer.hpp"
#include "csq/pell.hpp"
#include "csq/search.hpp"

namespace csq {

/// Canonical exponent of n: its smallest odd prime divisor, or 2 when n is a
/// power of two.  Nonexistence for the canonical exponent covers n, since
/// y^n is also a canonical-exponent power.
unsigned exponent_reduction(unsigned n);

// Resolution payloads for one (d, exponent-class) case.

struct ResolutionEliminated {
    EliminationCertificate certificate;
};

// d = 2, n = 2: the infinite family, enumerated inside the box.
struct ResolutionFamily {
    std::vector<PellSolution> members;
};

// A case settled in the literature; expected lists the solutions the source
// allows inside the box, which the oracle cross-check must reproduce.
struct ResolutionExternalCitation {
    std::string source;
    std::vector<Solution> expected;
};

struct ResolutionDefectScan {
    DefectScanReport report;
    std::string citation;  // the table result the scan corroborates
    Integer box_u_bound;   // |u| bound any box solution would have to satisfy
};

struct ResolutionPolyCheck {
    PolyCheckReport report;
};

using Resolution = std::variant<ResolutionEliminated, ResolutionFamily,
                                ResolutionExternalCitation, ResolutionDefectScan,
                                ResolutionPolyCheck>;

/// Status of one (d, n) case, labeled by its exponent class: "n=2", "p=<p>"
/// for odd prime n, or "n=<n> -> <canonical>" for composite n handled
/// through its canonical exponent.
struct CaseStatus {
    unsigned d;
    unsigned n;
    unsigned canonical;
    std::string exponent_class;
    Resolution resolution;
};

struct VerifyOptions {
    Integer x_bound;
    unsigned n_max;
    unsigned threads = 1;
    Integer defect_u_bound = 10000;  // floor for the d = 6 scans; raised to cover the box
};

struct VerificationReport {
    Integer x_bound;
    unsigned n_max;
    std::vector<CaseStatus> cases;
    std::vector<Solution> expected;  // assembled family + sporadic set inside the box
    SolutionDiff oracle_diff;
    std::vector<std::string> failures;  // empty iff pass
    bool pass;
};

/// Resolve every (d, n) with 2 <= d <= 10, 2 <= n <= n_max, re-verify all
/// emitted evidence, then cross-check the assembled solution set against the
/// brute-force oracle over the whole box.  Requires x_bound >= 200 (the
/// sporadic solutions must be witnessable) and n_max >= 4.
VerificationReport verify_theorem(const VerifyOptions& options);

}  // namespace csq
