#include "wlpa/scalar.hpp"

namespace wlpa {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error("ZeroDenominator", "rational with zero denominator");
  reduce();
}

void Rational::reduce() {
  if (den_.is_negative()) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  BigInt g = BigInt::gcd(num_, den_);
  num_ = num_ / g;
  den_ = den_ / g;
}

Rational Rational::from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(BigInt::from_string(s), BigInt(1));
  return Rational(BigInt::from_string(s.substr(0, slash)),
                  BigInt::from_string(s.substr(slash + 1)));
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
  return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const { return *this * o.inverse(); }

Rational Rational::inverse() const {
  if (is_zero()) throw Error("DivisionByZero", "inverse of zero");
  return Rational(den_, num_);
}

bool Rational::operator<(const Rational& o) const { return num_ * o.den_ < o.num_ * den_; }

std::string Rational::to_string() const {
  if (is_integer()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

namespace {
bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) acc = static_cast<unsigned __int128>(acc) * b % p;
    b = static_cast<unsigned __int128>(b) * b % p;
    e >>= 1;
  }
  return acc;
}
}  // namespace

Field Field::prime(std::uint64_t p) {
  if (!is_prime_u64(p)) throw Error("NotPrime", "field modulus " + std::to_string(p) + " is not prime");
  Field f;
  f.kind = Kind::prime;
  f.p = p;
  return f;
}

Field Field::parse(const std::string& s) {
  if (s == "q" || s == "Q") return rationals();
  if (s.rfind("fp:", 0) == 0) return prime(std::stoull(s.substr(3)));
  throw Error("BadField", "unknown field '" + s + "' (expected q or fp:P)");
}

std::string Field::to_string() const {
  return kind == Kind::rationals ? "q" : "fp:" + std::to_string(p);
}

Scalar Scalar::zero(const Field& f) {
  Scalar s;
  s.field_ = f;
  return s;
}

Scalar Scalar::one(const Field& f) { return of_int(f, 1); }

Scalar Scalar::of_int(const Field& f, long long v) {
  Scalar s;
  s.field_ = f;
  if (f.kind == Field::Kind::rationals)
    s.q_ = Rational(v);
  else
    s.r_ = BigInt(v).mod_u64(f.p);
  return s;
}

Scalar Scalar::of_rational(const Field& f, const Rational& q) {
  Scalar s;
  s.field_ = f;
  if (f.kind == Field::Kind::rationals) {
    s.q_ = q;
  } else {
    std::uint64_t den = q.den().mod_u64(f.p);
    if (den == 0)
      throw Error("NonInvertibleDenominator",
                  "denominator " + q.den().to_string() + " is not invertible mod " +
                      std::to_string(f.p));
    std::uint64_t inv = mod_pow(den, f.p - 2, f.p);
    s.r_ = static_cast<unsigned __int128>(q.num().mod_u64(f.p)) * inv % f.p;
  }
  return s;
}

Scalar Scalar::parse(const Field& f, const std::string& s) {
  return of_rational(f, Rational::from_string(s));
}

bool Scalar::is_zero() const {
  return field_.kind == Field::Kind::rationals ? q_.is_zero() : r_ == 0;
}

void Scalar::check_same(const Scalar& o) const {
  if (field_ != o.field_)
    throw Error("FieldMismatch",
                "mixed fields " + field_.to_string() + " and " + o.field_.to_string());
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (field_.kind == Field::Kind::rationals)
    s.q_ = -q_;
  else
    s.r_ = r_ ? field_.p - r_ : 0;
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar s = *this;
  if (field_.kind == Field::Kind::rationals)
    s.q_ = q_ + o.q_;
  else
    s.r_ = (r_ + o.r_) % field_.p;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar s = *this;
  if (field_.kind == Field::Kind::rationals)
    s.q_ = q_ * o.q_;
  else
    s.r_ = static_cast<unsigned __int128>(r_) * o.r_ % field_.p;
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("DivisionByZero", "inverse of zero");
  Scalar s = *this;
  if (field_.kind == Field::Kind::rationals)
    s.q_ = q_.inverse();
  else
    s.r_ = mod_pow(r_, field_.p - 2, field_.p);
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  return field_ == o.field_ &&
         (field_.kind == Field::Kind::rationals ? q_ == o.q_ : r_ == o.r_);
}

std::string Scalar::to_string() const {
  return field_.kind == Field::Kind::rationals ? q_.to_string() : std::to_string(r_);
}

}  // namespace wlpa
