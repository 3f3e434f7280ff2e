#pragma once
#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "aleib/errors.hpp"

namespace aleib {

// p == 0 is the rationals, otherwise the prime field GF(p).
struct Field {
  std::uint32_t p = 0;

  static Field Q() { return {}; }
  static Field GF(std::uint32_t p);
  // Accepts "Q", "QQ", "GF(p)", "gfp".
  static Field parse(std::string_view s);

  bool rational() const { return p == 0; }
  std::string name() const;
  friend bool operator==(Field, Field) = default;
};

class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(Field f, long v = 0);
  Scalar(Field f, const mpq_class& q);

  // "p/q" or "n" in any field (reduced mod p for GF), "r mod p" only in GF(p).
  static Scalar parse(std::string_view s, Field f);

  Field field() const { return f_; }
  bool is_zero() const { return f_.rational() ? q_ == 0 : r_ == 0; }
  bool is_one() const { return f_.rational() ? q_ == 1 : r_ == 1; }

  const mpq_class& rational() const { return q_; }
  std::uint32_t residue() const { return r_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inv() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  // Total order inside one field; used for canonical forms, not arithmetic.
  friend std::strong_ordering order(const Scalar& a, const Scalar& b);

  std::string str() const;

 private:
  void same_field(const Scalar& o) const;

  Field f_{};
  mpq_class q_{};
  std::uint32_t r_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace aleib
