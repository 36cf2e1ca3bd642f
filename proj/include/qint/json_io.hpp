#pragma once

#include "qint/funceq.hpp"
#include "qint/quantum.hpp"
#include "qint/setops.hpp"

#include <json.hpp>

#include <optional>

namespace qint {

/// All serializers use nlohmann::ordered_json so that field order is fixed
/// and reports are byte-stable across runs.
using Json = nlohmann::ordered_json;

/// {"m", "n", "lhs", "rhs"}; polynomials rendered in canonical text form.
/// When `equation` is given it is emitted first: {"equation", "m", ...}.
Json to_json(const FeWitness& w, const std::optional<std::string>& equation = {});

/// {"status": "pass"|"fail", "witness": {...}|null, "h": "..."|null}.
Json to_json(const FeVerdict& v, const std::optional<FracPoly>& h = {});

/// {"status": "ZERO"|"QUANTUM"|"NOT_A_JOINT_SOLUTION",
///  "witness": {"equation", "m", "n", "lhs", "rhs"}|null, "h": "..."|null}.
Json to_json(const Classification& c, const std::optional<FracPoly>& h = {});

/// {"status", "expected", "actual"}.
Json to_json(const MultitermVerdict& v);

/// {"status": "pass"|"fail", "pairs_checked", "triples_checked",
///  "violations": [{"law", "operands"}...]}.
Json to_json(const RingLawReport& r);

/// {"identity", "parts": ["{...}", ...], "witness": "..."|null, "status"}.
Json to_json(const DecompositionProof& p);

/// {"direct", "sum", "witness": {"element", "representations"}|null}.
Json to_json(const DirectSumResult& r);

/// {"status", "identities": [{"identity", "applicable", "status"|"note"}...]}.
Json to_json(const GenfunReport& r);

}  // namespace qint
