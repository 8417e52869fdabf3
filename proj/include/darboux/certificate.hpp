#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "darboux/pair.hpp"

namespace darboux {

// JSON certificate document:
// {
//   "kind": "common_darboux" | "jacobian_pair",
//   "inputs": {"d1": {"p": str, "q": str}, "d2": {"p": str, "q": str}},
//   "common_darboux": {"f": str, "lambda1": str, "lambda2": str,
//                      "branch": "delta_nonconstant" | "degenerate_kernel"} | null,
//   "jacobian_pair": {"u1": str, "u2": str, "c": str} | null,
//   "verified": bool
// }
// All polynomial fields use the expr canonical format.
nlohmann::json certificate_to_json(const Derivation& d1, const Derivation& d2,
                                   const PairOutcome& outcome, bool verified);

struct ParsedCertificate {
    Derivation d1;
    Derivation d2;
    PairOutcome outcome;
};

// Reconstructs a certificate from the schema above. Throws certificate_error
// on schema violations and parse_error on malformed polynomial text.
ParsedCertificate certificate_from_json(const nlohmann::json& doc);

}  // namespace darboux
