#pragma once

#include <json.hpp>
#include <string>

#include "nfourier/corpus.hpp"
#include "nfourier/fourier.hpp"
#include "nfourier/graded.hpp"

namespace nfourier {

using Json = nlohmann::json;

// Cyclotomic values serialize as {"conductor": N, "coeffs": {"e": "p/q"}}
// with only nonzero coefficients; the optional "approx" field is an advisory
// [re, im] float rendering, ignored on parse.
Json cyclo_to_json(const Cyclotomic& v, bool with_float = true);
Cyclotomic cyclo_from_json(const Json& j);

Json matrix_to_json(const CycloMat& m, bool with_float = true);
CycloMat matrix_from_json(const Json& j);

/// GroupSpec: {"type":"mul_table","table":[[..]]} |
/// {"type":"permutation","degree":n,"generators":[[..]]} |
/// {"type":"named","name":"S3"}.
GroupPtr group_from_spec(const Json& spec);

/// {"kernel": <group spec>, "theta": [image index per kernel element]}.
ZGradedGroup graded_from_spec(const Json& spec);

/// {"signs": [1,-1,...]}; length/content validated downstream.
SignFunction signs_from_json(const Json& j);

Json mset_legend(const MSet& m);
Json mi_eta_legend(const MiEta& m);
Json character_table_to_json(const CharacterTable& t);

std::string iso_timestamp();

/// Standard JobResult envelope; "timestamp" is the one field excluded from
/// the byte-determinism contract.
Json job_result(const std::string& command, Json inputs, Json result, const std::string& status);

}  // namespace nfourier
