#include "aleib/scalar.hpp"

#include <cctype>
#include <charconv>

namespace aleib {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t reduce(const mpz_class& z, std::uint32_t p) {
  mpz_class m = z % p;
  if (m < 0) m += p;
  return static_cast<std::uint32_t>(m.get_ui());
}

std::uint32_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpz_class parse_int(std::string_view s, std::string_view whole) {
  s = trim(s);
  std::string t(s);
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  bool ok = !t.empty();
  for (std::size_t i = 0; i < t.size() && ok; ++i)
    ok = std::isdigit(static_cast<unsigned char>(t[i])) || (i == 0 && t[i] == '-' && t.size() > 1);
  if (!ok) throw ParseError("malformed scalar \"" + std::string(whole) + "\"");
  return mpz_class(t);
}

} // namespace

Field Field::GF(std::uint32_t p) {
  // Keep p below 2^31 so residue products fit in 64 bits.
  if (!is_prime(p) || p >= (1u << 31)) throw BadParameter("GF(" + std::to_string(p) + "): modulus must be a prime below 2^31");
  Field f;
  f.p = p;
  return f;
}

Field Field::parse(std::string_view s) {
  s = trim(s);
  std::string t;
  for (char c : s) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "q" || t == "qq") return Q();
  std::string_view digits;
  if (t.size() > 4 && t.rfind("gf(", 0) == 0 && t.back() == ')')
    digits = std::string_view(t).substr(3, t.size() - 4);
  else if (t.size() > 2 && t.rfind("gf", 0) == 0)
    digits = std::string_view(t).substr(2);
  else
    throw ParseError("unknown field \"" + std::string(s) + "\"");
  std::uint32_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw ParseError("unknown field \"" + std::string(s) + "\"");
  return GF(p);
}

std::string Field::name() const { return rational() ? "Q" : "GF(" + std::to_string(p) + ")"; }

Scalar::Scalar(Field f, long v) : f_(f) {
  if (f_.rational())
    q_ = v;
  else
    r_ = reduce(mpz_class(v), f_.p);
}

Scalar::Scalar(Field f, const mpq_class& q) : f_(f) {
  if (f_.rational()) {
    // Copy through the components: gmpxx assumes a positive denominator on assignment.
    mpz_class num = q.get_num(), den = q.get_den();
    if (den == 0) throw DivisionByZero("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    mpq_set_num(q_.get_mpq_t(), num.get_mpz_t());
    mpq_set_den(q_.get_mpq_t(), den.get_mpz_t());
    q_.canonicalize();
    return;
  }
  std::uint32_t den = reduce(q.get_den(), f_.p);
  if (den == 0) throw DivisionByZero("denominator vanishes in " + f_.name());
  r_ = static_cast<std::uint32_t>(std::uint64_t(reduce(q.get_num(), f_.p)) * pow_mod(den, f_.p - 2, f_.p) % f_.p);
}

Scalar Scalar::parse(std::string_view s, Field f) {
  std::string_view t = trim(s);
  if (auto pos = t.find("mod"); pos != std::string_view::npos) {
    mpz_class r = parse_int(t.substr(0, pos), s);
    mpz_class p = parse_int(t.substr(pos + 3), s);
    if (f.rational() || p != f.p)
      throw FieldMismatch("scalar \"" + std::string(s) + "\" does not belong to " + f.name());
    if (r < 0 || r >= p) throw ParseError("residue out of range in \"" + std::string(s) + "\"");
    return Scalar(f, static_cast<long>(r.get_si()));
  }
  mpq_class q;
  if (auto slash = t.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_int(t.substr(0, slash), s);
    mpz_class den = parse_int(t.substr(slash + 1), s);
    if (den == 0) throw DivisionByZero("zero denominator in \"" + std::string(s) + "\"");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    q = mpq_class(num, den);
    q.canonicalize();
  } else {
    q = mpq_class(parse_int(t, s));
  }
  return Scalar(f, q);
}

void Scalar::same_field(const Scalar& o) const {
  if (!(f_ == o.f_)) throw FieldMismatch("cannot combine " + f_.name() + " with " + o.f_.name());
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (f_.rational())
    r.q_ = -q_;
  else
    r.r_ = r_ == 0 ? 0 : f_.p - r_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  same_field(o);
  if (f_.rational())
    q_ += o.q_;
  else
    r_ = static_cast<std::uint32_t>((std::uint64_t(r_) + o.r_) % f_.p);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  same_field(o);
  if (f_.rational())
    q_ -= o.q_;
  else
    r_ = static_cast<std::uint32_t>((std::uint64_t(r_) + f_.p - o.r_) % f_.p);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  same_field(o);
  if (f_.rational())
    q_ *= o.q_;
  else
    r_ = static_cast<std::uint32_t>(std::uint64_t(r_) * o.r_ % f_.p);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  same_field(o);
  return *this *= o.inv();
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  Scalar r = *this;
  if (f_.rational())
    r.q_ = 1 / q_;
  else
    r.r_ = pow_mod(r_, f_.p - 2, f_.p);
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.same_field(b);
  return a.f_.rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::strong_ordering order(const Scalar& a, const Scalar& b) {
  a.same_field(b);
  if (a.f_.rational()) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  return a.r_ <=> b.r_;
}

std::string Scalar::str() const {
  if (f_.rational()) return q_.get_str();
  return std::to_string(r_) + " mod " + std::to_string(f_.p);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

} // namespace aleib
