#pragma once
#include <optional>
#include <string>
#include <vector>

#include "aleib/tensorconstruct.hpp"
#include "aleib/yangbaxter.hpp"

namespace aleib {

struct CatalogParams {
  mpq_class a = 1, b = 1, k = 1, l = 1;
  Field field = Field::Q();
};

struct Fixture {
  std::string name, summary;
  // "anti-Leibniz algebra", "anti-Leibniz bialgebra", "Leibniz algebra", "quadratic AA algebra".
  std::string kind;
  Algebra alg;
  std::optional<Coalgebra> coa;
  std::optional<Tensor2> r;
  std::optional<Matrix> form;
  // Tensor-product fixtures: the Leibniz input, the table as printed, and the matching permutation if any.
  std::optional<LeibnizBialgebra> leibniz;
  bool leibniz_input_certified = false;
  std::optional<Bialgebra> printed;
  std::optional<std::vector<std::size_t>> permutation;
  // The checks run when the fixture was built.
  Report certificate;
};

std::vector<std::string> catalog_names();
Fixture catalog(const std::string& name, const CatalogParams& p = {});

} // namespace aleib
