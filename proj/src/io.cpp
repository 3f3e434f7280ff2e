#include "aleib/io.hpp"

#include <fstream>
#include <sstream>

#include "aleib/build.hpp"

namespace aleib {

namespace {

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(where + ": missing field \"" + key + "\"");
  return j.at(key);
}

std::size_t index_field(const Json& j, const char* key, std::size_t dim, const std::string& where) {
  const Json& v = member(j, key, where);
  if (!v.is_number_integer()) throw SchemaError(where + ": field \"" + key + "\" must be an integer");
  long long i = v.get<long long>();
  if (i < 1 || static_cast<std::size_t>(i) > dim)
    throw SchemaError(where + ": field \"" + key + "\" = " + std::to_string(i) + " is outside 1.." + std::to_string(dim));
  return static_cast<std::size_t>(i - 1);
}

Scalar scalar_from(const Json& v, const Document& d, bool declared_gf, const std::string& where) {
  std::string text;
  if (v.is_string())
    text = v.get<std::string>();
  else if (v.is_number_integer())
    text = std::to_string(v.get<long long>());
  else
    throw SchemaError(where + ": scalar must be a string or an integer");
  if (declared_gf && text.find('/') != std::string::npos)
    throw SchemaError(where + ": rational scalar \"" + text + "\" in a " + d.field.name() + " document");
  try {
    return Scalar::parse(text, d.field);
  } catch (const DivisionByZero&) {
    throw SchemaError(where + ": scalar \"" + text + "\" is undefined in " + d.field.name());
  } catch (const ParseError& e) {
    throw SchemaError(where + ": " + e.what());
  }
}

bool declared_gf(const Document& d) {
  return d.body.contains("field") && d.body["field"].is_string() && !Field::parse(d.body["field"].get<std::string>()).rational();
}

Matrix matrix_from(const Json& v, const Document& d, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!v.is_array() || v.size() != rows) throw SchemaError(where + ": expected " + std::to_string(rows) + " rows");
  Matrix m(rows, cols, d.field);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!v[i].is_array() || v[i].size() != cols)
      throw SchemaError(where + ": row " + std::to_string(i + 1) + " must have " + std::to_string(cols) + " entries");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = scalar_from(v[i][j], d, declared_gf(d), where);
  }
  return m;
}

std::vector<Matrix> matrix_list(const Json& v, const Document& d, std::size_t count, std::size_t size, const std::string& where) {
  if (!v.is_array() || v.size() != count) throw SchemaError(where + ": expected " + std::to_string(count) + " matrices");
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(matrix_from(v[i], d, size, size, where));
  return out;
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

} // namespace

Document parse_document(const std::string& text, std::optional<Field> field) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte);
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": malformed JSON");
  }
  if (!j.is_object()) throw SchemaError("document: top level must be an object");
  Document d;
  d.body = j;
  const Json& dim = member(j, "dim", "document");
  if (!dim.is_number_integer() || dim.get<long long>() < 1) throw SchemaError("document: field \"dim\" must be a positive integer");
  d.dim = dim.get<std::size_t>();
  Field declared = Field::Q();
  if (j.contains("field")) {
    if (!j["field"].is_string()) throw SchemaError("document: field \"field\" must be a string");
    try {
      declared = Field::parse(j["field"].get<std::string>());
    } catch (const Error&) {
      throw SchemaError("document: unknown field \"" + j["field"].get<std::string>() + "\"");
    }
  }
  d.field = field.value_or(declared);
  return d;
}

Document load_document(const std::string& path, std::optional<Field> field) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_document(ss.str(), field);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  } catch (const SchemaError& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

bool has_section(const Document& d, const char* key) { return d.body.contains(key); }

Algebra read_algebra(const Document& d) {
  const Json& prods = member(d.body, "products", "document");
  if (!prods.is_array()) throw SchemaError("products: must be a list");
  Tensor3 sc = Tensor3::cube(d.dim, d.field);
  const bool gf = declared_gf(d);
  for (std::size_t e = 0; e < prods.size(); ++e) {
    const std::string where = "products[" + std::to_string(e) + "]";
    std::size_t i = index_field(prods[e], "i", d.dim, where), j = index_field(prods[e], "j", d.dim, where);
    const Json& out = member(prods[e], "out", where);
    if (!out.is_array() || out.size() != d.dim) throw SchemaError(where + ": field \"out\" must list " + std::to_string(d.dim) + " scalars");
    for (std::size_t k = 0; k < d.dim; ++k) sc(i, j, k) += scalar_from(out[k], d, gf, where + ".out");
  }
  return Algebra(std::move(sc));
}

Coalgebra read_coalgebra(const Document& d) {
  const Json& cops = member(d.body, "coproducts", "document");
  if (!cops.is_array()) throw SchemaError("coproducts: must be a list");
  Tensor3 cc = Tensor3::cube(d.dim, d.field);
  const bool gf = declared_gf(d);
  for (std::size_t e = 0; e < cops.size(); ++e) {
    const std::string where = "coproducts[" + std::to_string(e) + "]";
    std::size_t k = index_field(cops[e], "k", d.dim, where);
    const Json& out = member(cops[e], "out", where);
    if (!out.is_array()) throw SchemaError(where + ": field \"out\" must be a list");
    for (std::size_t t = 0; t < out.size(); ++t) {
      const std::string w = where + ".out[" + std::to_string(t) + "]";
      std::size_t i = index_field(out[t], "i", d.dim, w), j = index_field(out[t], "j", d.dim, w);
      cc(k, i, j) += scalar_from(member(out[t], "c", w), d, gf, w);
    }
  }
  return Coalgebra(std::move(cc));
}

Bialgebra read_bialgebra(const Document& d) { return {read_algebra(d), read_coalgebra(d)}; }

Matrix read_r(const Document& d) {
  const Json& r = member(d.body, "r", "document");
  if (!r.is_array()) throw SchemaError("r: must be a list");
  Matrix m(d.dim, d.dim, d.field);
  for (std::size_t t = 0; t < r.size(); ++t) {
    const std::string w = "r[" + std::to_string(t) + "]";
    std::size_t i = index_field(r[t], "i", d.dim, w), j = index_field(r[t], "j", d.dim, w);
    m(i, j) += scalar_from(member(r[t], "c", w), d, declared_gf(d), w);
  }
  return m;
}

Matrix read_matrix(const Document& d, const char* key) {
  return matrix_from(member(d.body, key, "document"), d, d.dim, d.dim, key);
}

Scalar read_scalar(const Document& d, const char* key) {
  return scalar_from(member(d.body, key, "document"), d, declared_gf(d), key);
}

MatchedPairData read_matched_pair(const Document& d) {
  Document b = parse_document(member(d.body, "B", "document").dump(), d.field);
  const std::size_t n = d.dim, m = b.dim;
  return {read_algebra(d), read_algebra(b), matrix_list(member(d.body, "lA", "document"), d, n, m, "lA"),
          matrix_list(member(d.body, "rA", "document"), d, n, m, "rA"), matrix_list(member(d.body, "lB", "document"), d, m, n, "lB"),
          matrix_list(member(d.body, "rB", "document"), d, m, n, "rB")};
}

Json scalar_json(const Scalar& s) { return s.field().rational() ? s.str() : std::to_string(s.residue()); }

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json header_json(Field f, std::size_t dim) { return Json{{"field", f.name()}, {"dim", dim}}; }

void write_algebra(Json& out, const Algebra& a) {
  Json prods = Json::array();
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec v = a.product(i, j);
      if (is_zero(v)) continue;
      Json o = Json::array();
      for (std::size_t k = 0; k < n; ++k) o.push_back(scalar_json(v[k]));
      prods.push_back({{"i", i + 1}, {"j", j + 1}, {"out", o}});
    }
  out["products"] = prods;
}

void write_coalgebra(Json& out, const Coalgebra& c) {
  Json cops = Json::array();
  const std::size_t n = c.dim();
  for (std::size_t k = 0; k < n; ++k) {
    Json terms = Json::array();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!c.cc()(k, i, j).is_zero()) terms.push_back({{"i", i + 1}, {"j", j + 1}, {"c", scalar_json(c.cc()(k, i, j))}});
    if (!terms.empty()) cops.push_back({{"k", k + 1}, {"out", terms}});
  }
  out["coproducts"] = cops;
}

void write_r(Json& out, const Matrix& r) {
  Json terms = Json::array();
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j)
      if (!r(i, j).is_zero()) terms.push_back({{"i", i + 1}, {"j", j + 1}, {"c", scalar_json(r(i, j))}});
  out["r"] = terms;
}

std::string canonical_text(const Json& j) { return j.dump(2) + "\n"; }

std::string canonicalize(const std::string& text) {
  Document d = parse_document(text);
  Json out = header_json(d.field, d.dim);
  if (has_section(d, "products")) write_algebra(out, read_algebra(d));
  if (has_section(d, "coproducts")) write_coalgebra(out, read_coalgebra(d));
  if (has_section(d, "r")) write_r(out, read_r(d));
  for (const char* key : {"gram", "R"})
    if (has_section(d, key)) out[key] = matrix_json(read_matrix(d, key));
  if (has_section(d, "lambda")) out["lambda"] = scalar_json(read_scalar(d, "lambda"));
  return canonical_text(out);
}

void save_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError(path + ": cannot write");
  out << text;
}

} // namespace aleib
