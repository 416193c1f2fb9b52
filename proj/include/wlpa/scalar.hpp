#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "wlpa/bigint.hpp"

namespace wlpa {

// Error with a stable machine-readable code; the CLI surfaces codes verbatim.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// Exact rational, reduced, positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}
  Rational(BigInt num, BigInt den);
  // "p", "-p" or "p/q"
  static Rational from_string(const std::string& s);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == BigInt(1); }

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational inverse() const;

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;
  bool operator<=(const Rational& o) const { return *this < o || *this == o; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

  std::string to_string() const;  // "p" or "p/q"

 private:
  void reduce();
  BigInt num_, den_;
};

// The coefficient field: exact rationals or a prime field F_p.
struct Field {
  enum class Kind { rationals, prime };
  Kind kind = Kind::rationals;
  std::uint64_t p = 0;

  static Field rationals() { return {}; }
  static Field prime(std::uint64_t p);
  // "q" or "fp:P"
  static Field parse(const std::string& s);

  bool operator==(const Field& o) const { return kind == o.kind && p == o.p; }
  bool operator!=(const Field& o) const { return !(*this == o); }
  std::uint64_t characteristic() const { return kind == Kind::prime ? p : 0; }
  std::string to_string() const;
};

// A field element tagged with its field. Mixed-field arithmetic throws FieldMismatch.
class Scalar {
 public:
  Scalar() = default;
  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar of_int(const Field& f, long long v);
  static Scalar of_rational(const Field& f, const Rational& q);  // reduces mod p when prime
  // coefficient literal per the expression grammar: INT or INT/INT
  static Scalar parse(const Field& f, const std::string& s);

  const Field& field() const { return field_; }
  bool is_zero() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  const Rational& rational() const { return q_; }
  std::uint64_t residue() const { return r_; }
  std::string to_string() const;

 private:
  void check_same(const Scalar& o) const;
  Field field_;
  Rational q_;           // used when field is Q
  std::uint64_t r_ = 0;  // used when field is F_p
};

}  // namespace wlpa
