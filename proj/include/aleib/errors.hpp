#pragma once
#include <cstddef>
#include <stdexcept>
#include <string>

namespace aleib {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FieldMismatch : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct PreconditionViolated : Error { using Error::Error; };
struct NotFactorizable : Error { using Error::Error; };
struct ZeroWeight : Error { using Error::Error; };
struct NotSymmetric : Error { using Error::Error; };
struct BadParameter : Error { using Error::Error; };
struct UnknownFixture : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };
struct WindowOverflow : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct SchemaError : Error { using Error::Error; };

struct NotInvertible : Error {
  std::size_t rank;
  explicit NotInvertible(std::size_t r)
      : Error("matrix is not invertible (rank " + std::to_string(r) + ")"), rank(r) {}
};

} // namespace aleib
