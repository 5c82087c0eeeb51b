#pragma once

#include <string>

#include <json.hpp>

#include "wz/wz_core.hpp"

namespace wz {

// Versioned JSON document for a proof trace:
// {schema_version, m, n, pair: {term_src, cert_src}, wz_residual, boundary,
//  initial_row: {got, expected}, telescope: {lhs, rhs},
//  partial_sum: {sum, closed}, final_identity, valid}
// Polynomial-valued fields hold canonical text, or null when the step failed.
nlohmann::json trace_to_json(const ProofTrace& trace);

// Checks field presence and types. On failure returns false and, if `why` is
// non-null, describes the first problem.
bool validate_trace_json(const nlohmann::json& doc, std::string* why = nullptr);

} // namespace wz
