#ifndef DIOREC_CERTIFICATE_HPP
#define DIOREC_CERTIFICATE_HPP

// JSON certificates for completed runs of the decision procedure. Every
// numeric claim is carried exactly: integer payloads as decimal strings or
// exact JSON integers, defining polynomials as coefficient-string lists
// (constant term first), interval endpoints as "num/den" strings. The
// floating-point "approx" fields are advisory; rechecking ignores them.

#include <string>
#include <vector>

#include "json.hpp"

#include "diorec/pipeline.hpp"

namespace diorec {

extern const char* const kToolVersion;

// certificate for a fully solved run; throws std::logic_error on any other
// stage — failures are narrated by the proof renderer, never certified
nlohmann::ordered_json certificate_json(const PipelineResult& pr);

// derivation-only fragment (recurrence, polynomial, invariance flag,
// version); valid for every stage, any order
nlohmann::ordered_json derivation_json(const PipelineResult& pr);

// canonical serialization (two-space indent, trailing newline); identical
// runs produce identical bytes
std::string certificate_text(const nlohmann::ordered_json& cert);

// Re-derives everything the certificate claims from its recurrence
// coefficients — the root of trust — and compares all exact fields,
// ignoring the advisory approximations. Returns human-readable
// discrepancies; empty means the certificate checks out.
std::vector<std::string> recheck_certificate(const nlohmann::ordered_json& cert);

}  // namespace diorec

#endif
