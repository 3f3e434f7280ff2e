#pragma once
#include <optional>
#include <string>

#include <json.hpp>

#include "aleib/bialgebra.hpp"
#include "aleib/pairs.hpp"

namespace aleib {

using Json = nlohmann::json;

// A parsed structure file. One document may carry several sections:
// "products", "coproducts", "r", "gram", "R", "lambda", and for matched pairs
// a nested "B" document with "lA", "rA", "lB", "rB".
struct Document {
  Field field;
  std::size_t dim = 0;
  Json body;
};

// Throws ParseError with line and column, SchemaError naming the field.
Document parse_document(const std::string& text, std::optional<Field> field = {});
Document load_document(const std::string& path, std::optional<Field> field = {});

bool has_section(const Document& d, const char* key);
Algebra read_algebra(const Document& d);
Coalgebra read_coalgebra(const Document& d);
Bialgebra read_bialgebra(const Document& d);
Matrix read_r(const Document& d);
Matrix read_matrix(const Document& d, const char* key);
Scalar read_scalar(const Document& d, const char* key);
MatchedPairData read_matched_pair(const Document& d);

Json scalar_json(const Scalar& s);
Json matrix_json(const Matrix& m);
Json header_json(Field f, std::size_t dim);
void write_algebra(Json& out, const Algebra& a);
void write_coalgebra(Json& out, const Coalgebra& c);
void write_r(Json& out, const Matrix& r);

// Sorted keys, reduced scalars, zero entries dropped, two-space indent, trailing newline.
std::string canonical_text(const Json& j);
// Parse and re-emit every recognised section in canonical form.
std::string canonicalize(const std::string& text);
void save_text(const std::string& path, const std::string& text);

} // namespace aleib
