#pragma once

#include <nlohmann/json.hpp>

#include "subspace_forge/batch.hpp"
#include "subspace_forge/bounds.hpp"
#include "subspace_forge/family.hpp"
#include "subspace_forge/search.hpp"

namespace subspace_forge {

using json = nlohmann::json;

// Writers. Element values are always integer codes.
json field_json(const Field& f);                // {"p","m","modulus","gamma"}
json matrix_json(const Matrix& m);              // {"rows","cols","entries"}
json subspace_json(const Subspace& s);          // {"n","k","basis"}
json family_json(const Family& f);              // {"field","n","k","members"}
json report_json(const VerificationReport& r);
json bounds_json(const BoundsTable& t);
json certificate_json(const SearchConfig& cfg, const SearchResult& r);
/// Position map of a batch code: information positions to points, parity
/// positions to (member, canonical coset rep), in position order.
json batch_layout_json(const BatchCode& code);

// Readers throw FormatError on malformed or inconsistent input.
Field parse_field(const json& j);
Matrix parse_matrix(const json& j, const Field& f);
/// The basis need not be canonical; it is reduced and must have rank k.
Subspace parse_subspace(const json& j, const Field& f);
Family parse_family(const json& j);

/// 64-bit FNV-1a of the compact dump (object keys are sorted by nlohmann).
std::uint64_t json_digest(const json& j);

}  // namespace subspace_forge
