#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "arsubcat/morphcat/morphcat.hpp"

namespace arsubcat::io {

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file; ParseError on I/O or syntax failure.
Json load_json(const std::filesystem::path& path);
void save_json(const std::filesystem::path& path, const Json& j);

/// {"field_p", "vertices", "arrows": [{"id", "source", "target"}],
///  "relations": [[{"coeff", "path": [arrow ids]}]], optional "name"}.
AlgebraPtr algebra_from_json(const Json& j, std::size_t degree_cap = BoundQuiverAlgebra::kDefaultDegreeCap);
Json algebra_to_json(const BoundQuiverAlgebra& alg);
/// The T2 algebra plus "vertex_correspondence": [[i, i'], ...].
Json t2_to_json(const T2Algebra& t2);

/// Identifier written into module files: the algebra name, or "algebra".
std::string algebra_id(const BoundQuiverAlgebra& alg);

/// {"algebra": id, "dims": [...], "arrow_maps": {"a": [[...]]}}. Maps of
/// zero size may be omitted.
Representation module_from_json(const Json& j, const AlgebraPtr& alg);
Json module_to_json(const Representation& m);

/// {"A": module, "B": module, "f": {"vertex_maps": {"0": [[...]]}}}.
MorphObject morph_from_json(const Json& j, const AlgebraPtr& alg);
Json morph_to_json(const MorphObject& obj);

bool is_morph_json(const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const PrimeField& k, std::size_t rows, std::size_t cols, const std::string& what);

}  // namespace arsubcat::io
