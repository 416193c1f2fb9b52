#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wlpa {

// Arbitrary-precision signed integer, sign-magnitude over base-1e9 limbs.
// Magnitudes stay tiny in this code base; all operations are quadratic at worst.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);
  static BigInt from_string(const std::string& s);  // optional leading '-'

  bool is_zero() const { return limbs_.empty(); }
  bool is_negative() const { return negative_; }
  int sign() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }

  BigInt operator-() const;
  BigInt operator+(const BigInt& o) const;
  BigInt operator-(const BigInt& o) const;
  BigInt operator*(const BigInt& o) const;
  // Truncated division (quotient rounds toward zero); o must be nonzero.
  BigInt operator/(const BigInt& o) const;
  BigInt operator%(const BigInt& o) const;

  bool operator==(const BigInt& o) const;
  bool operator!=(const BigInt& o) const { return !(*this == o); }
  bool operator<(const BigInt& o) const;
  bool operator<=(const BigInt& o) const { return *this < o || *this == o; }
  bool operator>(const BigInt& o) const { return o < *this; }
  bool operator>=(const BigInt& o) const { return o <= *this; }

  BigInt abs() const;
  static BigInt gcd(BigInt a, BigInt b);  // nonnegative

  // Value mod m, in [0, m). m must be positive and fit in 63 bits.
  std::uint64_t mod_u64(std::uint64_t m) const;

  std::string to_string() const;

 private:
  static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  // requires |a| >= |b|
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  static void divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                         std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r);
  void trim();

  bool negative_ = false;
  std::vector<std::uint32_t> limbs_;  // little-endian, base 1e9, no trailing zeros
};

}  // namespace wlpa
