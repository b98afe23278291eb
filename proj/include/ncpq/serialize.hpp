#pragma once

// JSON forms of the library's values. Reports round-trip; the rest are
// export-only.

#include <json.hpp>

#include "ncpq/bijection.hpp"

namespace ncpq {

nlohmann::json to_json(const DimVector& v);
DimVector dim_vector_from_json(const nlohmann::json& j);

/// Row-major integer matrix.
nlohmann::json to_json(const WeylElement& w);
WeylElement weyl_element_from_json(const nlohmann::json& j);

/// {"dims": [...], "maps": [{"arrow": [h, t], "denominator": d, "matrix": [[...]]}]}
nlohmann::json to_json(const Representation& r);

/// Array of coordinate arrays.
nlohmann::json to_json(const ExcSequence& s);
nlohmann::json to_json(const ReflectionTuple& t);

/// {"simples": [...], "indecomposables": [...]}
nlohmann::json to_json(const Subcategory& s);

/// {"nodes": [...], "edges": [[from, to], ...], "connected": bool}
nlohmann::json to_json(const MutationGraph& g);

nlohmann::json to_json(const BijectionReport& r);
BijectionReport report_from_json(const nlohmann::json& j);

}  // namespace ncpq
