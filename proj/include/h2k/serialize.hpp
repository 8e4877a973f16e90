#pragma once

// JSON, CSV and plain-text rendering of reports. JSON objects use
// alphabetically ordered keys, so parse -> dump round-trips are
// byte-identical. Rationals serialize as "num/den" strings in lowest terms
// ("3", "-119/478"); matrices as row-major arrays of integers.

#include <string>

#include <json.hpp>

#include "h2k/obstruction.hpp"

namespace h2k {

using json = nlohmann::json;

json to_json(const Integer& n);
json to_json(const IntVector& v);
json to_json(const IntSymMatrix& m);
json to_json(const MQTable& t);
json to_json(const ObstructionReport& rep, const json& options_echo,
             const json* input_override = nullptr);

IntSymMatrix matrix_from_json(const json& j);

// Canonical JSON input object: exactly one of {"pd": "..."},
// {"pretzel": [p,q,r]}, {"matrix": [[...],...]}, {"unknot": true}, plus an
// optional "f0" face index for PD input.
GoeritzResult goeritz_from_input_json(const json& j);

// Canonical echo of the input that produced a GoeritzResult.
json input_echo(const GoeritzResult& g);

std::string verdict_name(Verdict v);
std::string failure_kind_name(FailureKind k);

// One-line identifier used in CSV output ("pretzel(13,4,11)", "unknot", ...).
std::string input_id(const GoeritzResult& g);

// Header "id,p,theorem,lickorish,lower,upper" plus one row.
std::string report_csv(const ObstructionReport& rep);

// Row fragment "det,theorem,lickorish,lower,upper" shared by analyze and
// scan CSV output.
std::string verdict_csv_fields(const ObstructionReport& rep);

std::string report_text(const ObstructionReport& rep);

}  // namespace h2k
