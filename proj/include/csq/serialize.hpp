#pragma once

#include <json.hpp>

#include "csq/arith.hpp"
#include "csq/equation.hpp"
#include "csq/filters.hpp"
#include "csq/lehmer.hpp"
#include "csq/pell.hpp"
#include "csq/pipeline.hpp"
#include "csq/search.hpp"

// JSON views of every report type.  Field names are stable; all big integers
// serialize as decimal strings so no consumer ever rounds them.

namespace csq {

using Json = nlohmann::ordered_json;

Json to_json(const Solution& s);
Json to_json(const Factorization& f);
Json to_json(const EliminationCertificate& cert);
Json to_json(const PellSolution& s);
Json to_json(const DefectScanReport& report);
Json to_json(const PolyCheckReport& report);
Json to_json(const SolutionDiff& diff);
Json to_json(const CaseStatus& status);
Json to_json(const VerificationReport& report);

}  // namespace csq
