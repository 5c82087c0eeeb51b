#include "wz/proof_trace_json.hpp"

namespace wz {

namespace {

template <typename T>
nlohmann::json text_or_null(const std::optional<T>& value)
{
    return value ? nlohmann::json(value->to_string()) : nlohmann::json(nullptr);
}

} // namespace

nlohmann::json trace_to_json(const ProofTrace& trace)
{
    nlohmann::json doc;
    doc["schema_version"] = ProofTrace::schema_version;
    doc["m"] = trace.m;
    doc["n"] = trace.n;
    doc["pair"] = {{"term_src", trace.term_src}, {"cert_src", trace.cert_src}};
    doc["wz_residual"] = text_or_null(trace.wz_residual);
    doc["boundary"] = trace.boundary;
    doc["initial_row"] = {{"got", text_or_null(trace.initial_row_got)},
                          {"expected", trace.initial_row_expected.to_string()}};
    doc["telescope"] = {{"lhs", text_or_null(trace.telescope_lhs)}, {"rhs", text_or_null(trace.telescope_rhs)}};
    doc["partial_sum"] = {{"sum", text_or_null(trace.partial_sum)}, {"closed", text_or_null(trace.partial_closed)}};
    doc["final_identity"] = text_or_null(trace.final_identity);
    doc["valid"] = trace.valid();
    return doc;
}

bool validate_trace_json(const nlohmann::json& doc, std::string* why)
{
    const auto fail = [why](const std::string& msg) {
        if (why) {
            *why = msg;
        }
        return false;
    };
    const auto text_field = [](const nlohmann::json& obj, const char* key) {
        return obj.contains(key) && (obj[key].is_string() || obj[key].is_null());
    };
    if (!doc.is_object()) {
        return fail("document is not an object");
    }
    if (!doc.contains("schema_version") || !doc["schema_version"].is_number_integer() ||
        doc["schema_version"].get<int>() != ProofTrace::schema_version) {
        return fail("schema_version missing or unsupported");
    }
    for (const char* key : {"m", "n"}) {
        if (!doc.contains(key) || !doc[key].is_number_unsigned()) {
            return fail(std::string(key) + " must be a nonnegative integer");
        }
    }
    if (!doc.contains("pair") || !doc["pair"].is_object() || !doc["pair"].contains("term_src") ||
        !doc["pair"]["term_src"].is_string() || !doc["pair"].contains("cert_src") ||
        !doc["pair"]["cert_src"].is_string()) {
        return fail("pair must hold term_src and cert_src strings");
    }
    if (!text_field(doc, "wz_residual") || !text_field(doc, "final_identity")) {
        return fail("wz_residual and final_identity must be text or null");
    }
    for (const char* key : {"boundary", "valid"}) {
        if (!doc.contains(key) || !doc[key].is_boolean()) {
            return fail(std::string(key) + " must be a boolean");
        }
    }
    const std::pair<const char*, std::pair<const char*, const char*>> groups[] = {
        {"initial_row", {"got", "expected"}}, {"telescope", {"lhs", "rhs"}}, {"partial_sum", {"sum", "closed"}}};
    for (const auto& [group, keys] : groups) {
        if (!doc.contains(group) || !doc[group].is_object() || !text_field(doc[group], keys.first) ||
            !text_field(doc[group], keys.second)) {
            return fail(std::string(group) + " must hold " + keys.first + " and " + keys.second);
        }
    }
    return true;
}

} // namespace wz
