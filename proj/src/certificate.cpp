#include "darboux/certificate.hpp"

#include <nlohmann/json.hpp>

#include "darboux/expr.hpp"

namespace darboux {

namespace {

nlohmann::json derivation_to_json(const Derivation& d) {
    return {{"p", format_poly(d.p)}, {"q", format_poly(d.q)}};
}

const nlohmann::json& field(const nlohmann::json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end())
        throw certificate_error(std::string("certificate is missing field \"") + key + "\"");
    return *it;
}

std::string text(const nlohmann::json& doc, const char* key) {
    const nlohmann::json& v = field(doc, key);
    if (!v.is_string())
        throw certificate_error(std::string("certificate field \"") + key + "\" must be a string");
    return v.get<std::string>();
}

Poly poly_field(const nlohmann::json& doc, const char* key) {
    return parse_poly(text(doc, key));
}

Derivation derivation_from_json(const nlohmann::json& doc) {
    return {poly_field(doc, "p"), poly_field(doc, "q")};
}

}  // namespace

nlohmann::json certificate_to_json(const Derivation& d1, const Derivation& d2,
                                   const PairOutcome& outcome, bool verified) {
    nlohmann::json doc;
    doc["inputs"] = {{"d1", derivation_to_json(d1)}, {"d2", derivation_to_json(d2)}};
    doc["common_darboux"] = nullptr;
    doc["jacobian_pair"] = nullptr;
    if (const auto* cd = std::get_if<CommonDarboux>(&outcome)) {
        doc["kind"] = "common_darboux";
        doc["common_darboux"] = {
            {"f", format_poly(cd->f)},
            {"lambda1", format_poly(cd->lambda1)},
            {"lambda2", format_poly(cd->lambda2)},
            {"branch", cd->branch == CertificateBranch::DeltaNonconstant ? "delta_nonconstant"
                                                                         : "degenerate_kernel"},
        };
    } else {
        const auto& jp = std::get<JacobianPair>(outcome);
        doc["kind"] = "jacobian_pair";
        doc["jacobian_pair"] = {
            {"u1", format_poly(jp.u1)},
            {"u2", format_poly(jp.u2)},
            {"c", rat_to_string(jp.c)},
        };
    }
    doc["verified"] = verified;
    return doc;
}

ParsedCertificate certificate_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw certificate_error("certificate must be a JSON object");
    const nlohmann::json& inputs = field(doc, "inputs");
    ParsedCertificate parsed{derivation_from_json(field(inputs, "d1")),
                             derivation_from_json(field(inputs, "d2")),
                             PairOutcome{}};

    const std::string kind = text(doc, "kind");
    if (kind == "common_darboux") {
        const nlohmann::json& body = field(doc, "common_darboux");
        const std::string branch = text(body, "branch");
        if (branch != "delta_nonconstant" && branch != "degenerate_kernel")
            throw certificate_error("unknown certificate branch \"" + branch + "\"");
        parsed.outcome = CommonDarboux{
            poly_field(body, "f"), poly_field(body, "lambda1"), poly_field(body, "lambda2"),
            branch == "delta_nonconstant" ? CertificateBranch::DeltaNonconstant
                                          : CertificateBranch::DegenerateKernel};
    } else if (kind == "jacobian_pair") {
        const nlohmann::json& body = field(doc, "jacobian_pair");
        const Poly c = poly_field(body, "c");
        if (!c.is_constant()) throw certificate_error("jacobian_pair \"c\" must be a constant");
        parsed.outcome = JacobianPair{poly_field(body, "u1"), poly_field(body, "u2"),
                                      c.constant_value()};
    } else {
        throw certificate_error("unknown certificate kind \"" + kind + "\"");
    }
    return parsed;
}

}  // namespace darboux
