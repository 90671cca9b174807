#pragma once

#include <string>

#include "json.hpp"
#include "shlie/geo_suite.hpp"
#include "shlie/structure.hpp"

namespace shlie {

using Json = nlohmann::json;

// On-disk complex: {"dims": {"0": n0, ...}, "diff": {"1": [[...]], ...}}
// with rationals as strings and degree keys as decimal strings; a missing
// degree key means dimension zero.  Loading checks shapes against the
// declared dimensions (SchemaError with the JSON path) and then validates
// the complex itself.
Json complex_to_json(const ChainComplex& cc);
ChainComplex complex_from_json(const Json& j, const std::string& path = "$");

// Instance files: the complex plus "l2tilde": [{"i": a, "j": b, "value":
// [...]}] with a < b indexing the degree-0 basis.  Serialization is
// byte-stable: sorted keys, two-space indent, trailing newline.
std::string save_instance(const Instance& inst);
Instance load_instance(const std::string& bytes);

// Structure files: {"complex": ..., "max_arity": m, "structure": {"2":
// {"0,1": [{"args": [indices], "value": [...]}], ...}, ...}}.  The arity-1
// layer is the differential and is not repeated; identically-zero arities
// are omitted.  Degree-tuple keys are comma-joined and ascending; "args"
// lists basis indices aligned with the key.
std::string save_structure(const ShLieStructure& S);
ShLieStructure load_structure(const std::string& bytes);

Json conditions_to_json(const ConditionsReport& rep);
Json verify_report_to_json(const VerifyReport& rep);
// The combined report of one build: the seed-bracket conditions, one line
// per boundary assertion of the inductive construction, the vanishing
// flags, and the worst relation defect per arity (all "0" on success).
Json build_report_to_json(const ExtendResult& er, const VerifyReport& vr);

// Report of a geometric example run: per-check sample counts and the
// indices of failing samples, plus the run parameters.
Json geo_report_to_json(const GeoReport& rep);

}  // namespace shlie
