#pragma once

// JSON forms of certificates and reports. Key order is fixed, so equal
// inputs serialize to identical bytes.

#include <optional>
#include <string>

#include "json.hpp"
#include "nilclean/decompose.hpp"
#include "nilclean/structure.hpp"
#include "nilclean/suite.hpp"

namespace nilclean {

using Json = nlohmann::ordered_json;

// {"ring", "element", "sign_e", "sign_f", "e", "f", "n", "nil_index",
//  "class"}; sign_f and f are null for one-idempotent classes.
Json certificate_json(const std::string& ring, const Certificate& cert);

// {"ring", "element", "class", "certificate": null}
Json failure_json(const std::string& ring, Elem element, NilCleanClass cls);

Json maj_json(const std::optional<MajWitness>& witness);

Json classification_json(const ClassificationReport& report,
                         const std::optional<MajWitness>& maj);

// {"instances": [{"ring", "lemma", "verdict", "witness"?, "skipped"?}],
//  "summary": {...}}
Json suite_json(const SuiteReport& report);

}  // namespace nilclean
