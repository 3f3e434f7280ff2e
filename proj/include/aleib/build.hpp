#pragma once
#include <cstddef>
#include <utility>
#include <vector>

#include "aleib/coalgebra.hpp"

namespace aleib {

// Table builders with 1-based indices, matching the file formats.
struct ProductEntry {
  std::size_t i, j;
  std::vector<mpq_class> out;
};
struct TensorEntry {
  std::size_t i, j;
  mpq_class c;
};
struct CoproductEntry {
  std::size_t k;
  std::vector<TensorEntry> out;
};

Algebra make_algebra(std::size_t n, const std::vector<ProductEntry>& table, Field f = Field::Q());
Coalgebra make_coalgebra(std::size_t n, const std::vector<CoproductEntry>& table, Field f = Field::Q());
Matrix make_tensor2(std::size_t n, const std::vector<TensorEntry>& entries, Field f = Field::Q());
Matrix make_matrix(const std::vector<std::vector<mpq_class>>& rows, Field f = Field::Q());
Vec make_vec(const std::vector<mpq_class>& v, Field f = Field::Q());

} // namespace aleib
