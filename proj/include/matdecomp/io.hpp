#pragma once

// JSON encodings. Scalars are strings in the field's text encoding, matrices are
// three rows of three scalars. Decoders reject unknown keys.

#include "json.hpp"

#include "matdecomp/canonical.hpp"
#include "matdecomp/ffsearch.hpp"
#include "matdecomp/fingerprint.hpp"
#include "matdecomp/rota.hpp"

namespace matdecomp::io {

using nlohmann::json;

inline constexpr const char* kSchema = "matdecomp/1";

json to_json(const Field& f);
Field field_from_json(const json& j);

json to_json(const Mat3& m);
Mat3 mat_from_json(const Field& f, const json& j);

json to_json(const Decomposition& d);
/// Accepts "M" as a name (M6, M5a, M5b) or a list of matrices. Validation errors propagate.
Decomposition decomposition_from_json(const json& j);
/// Parses without validating, for reporting which conditions fail.
std::pair<Subalgebra, Subalgebra> halves_from_json(const json& j);

json to_json(const AutoSpec& a);
AutoSpec autospec_from_json(const Field& f, const json& j);

json to_json(const CanonResult& r);
json to_json(const Fingerprint& fp);
json to_json(const SeparationReport& r);
json to_json(const SearchReport& r);
json to_json(const RBOperator& r);
json to_json(const DecompositionCheck& c);

}  // namespace matdecomp::io
