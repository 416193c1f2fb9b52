#include "wlpa/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace wlpa {

namespace {
constexpr std::uint32_t kBase = 1000000000u;
}

BigInt::BigInt(long long v) {
  negative_ = v < 0;
  unsigned long long u = negative_ ? 0ull - static_cast<unsigned long long>(v)
                                   : static_cast<unsigned long long>(v);
  while (u) {
    limbs_.push_back(static_cast<std::uint32_t>(u % kBase));
    u /= kBase;
  }
}

BigInt BigInt::from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("BigInt: empty string");
  std::size_t at = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    at = 1;
  }
  if (at == s.size()) throw std::invalid_argument("BigInt: no digits");
  for (std::size_t i = at; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit in '" + s + "'");
  BigInt r;
  r.negative_ = neg;
  // consume 9 decimal digits per limb, from the right
  std::size_t end = s.size();
  while (end > at) {
    std::size_t begin = end >= at + 9 ? end - 9 : at;
    r.limbs_.push_back(static_cast<std::uint32_t>(std::stoul(s.substr(begin, end - begin))));
    end = begin;
  }
  r.trim();
  return r;
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) negative_ = false;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> r;
  r.reserve(std::max(a.size(), b.size()) + 1);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()) || carry; ++i) {
    std::uint64_t cur = carry;
    if (i < a.size()) cur += a[i];
    if (i < b.size()) cur += b[i];
    r.push_back(static_cast<std::uint32_t>(cur % kBase));
    carry = cur / kBase;
  }
  return r;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> r = a;
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::int64_t cur = static_cast<std::int64_t>(r[i]) - borrow - (i < b.size() ? b[i] : 0);
    borrow = 0;
    if (cur < 0) {
      cur += kBase;
      borrow = 1;
    }
    r[i] = static_cast<std::uint32_t>(cur);
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < b.size() || carry; ++j) {
      std::uint64_t cur = acc[i + j] + carry;
      if (j < b.size()) cur += static_cast<std::uint64_t>(a[i]) * b[j];
      acc[i + j] = cur % kBase;
      carry = cur / kBase;
    }
  }
  std::vector<std::uint32_t> r(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<std::uint32_t>(acc[i]);
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

void BigInt::divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                        std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
  // schoolbook long division, limb at a time with binary search on the digit
  q.assign(a.size(), 0);
  r.clear();
  for (std::size_t i = a.size(); i-- > 0;) {
    r.insert(r.begin(), a[i]);
    while (!r.empty() && r.back() == 0) r.pop_back();
    std::uint32_t lo = 0, hi = kBase - 1, digit = 0;
    while (lo <= hi) {
      std::uint32_t mid = lo + (hi - lo) / 2;
      std::vector<std::uint32_t> t = mul_mag(b, {mid});
      if (cmp_mag(t, r) <= 0) {
        digit = mid;
        lo = mid + 1;
      } else {
        if (mid == 0) break;
        hi = mid - 1;
      }
    }
    q[i] = digit;
    if (digit) r = sub_mag(r, mul_mag(b, {digit}));
  }
  while (!q.empty() && q.back() == 0) q.pop_back();
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  if (!r.is_zero()) r.negative_ = !r.negative_;
  return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
  BigInt r;
  if (negative_ == o.negative_) {
    r.limbs_ = add_mag(limbs_, o.limbs_);
    r.negative_ = negative_;
  } else {
    int c = cmp_mag(limbs_, o.limbs_);
    if (c == 0) return BigInt();
    if (c > 0) {
      r.limbs_ = sub_mag(limbs_, o.limbs_);
      r.negative_ = negative_;
    } else {
      r.limbs_ = sub_mag(o.limbs_, limbs_);
      r.negative_ = o.negative_;
    }
  }
  r.trim();
  return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
  BigInt r;
  r.limbs_ = mul_mag(limbs_, o.limbs_);
  r.negative_ = !r.limbs_.empty() && negative_ != o.negative_;
  return r;
}

BigInt BigInt::operator/(const BigInt& o) const {
  if (o.is_zero()) throw std::domain_error("BigInt: division by zero");
  BigInt q;
  std::vector<std::uint32_t> qm, rm;
  divmod_mag(limbs_, o.limbs_, qm, rm);
  q.limbs_ = std::move(qm);
  q.negative_ = !q.limbs_.empty() && negative_ != o.negative_;
  return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
  if (o.is_zero()) throw std::domain_error("BigInt: modulo by zero");
  BigInt r;
  std::vector<std::uint32_t> qm, rm;
  divmod_mag(limbs_, o.limbs_, qm, rm);
  r.limbs_ = std::move(rm);
  r.negative_ = !r.limbs_.empty() && negative_;
  return r;
}

bool BigInt::operator==(const BigInt& o) const {
  return negative_ == o.negative_ && limbs_ == o.limbs_;
}

bool BigInt::operator<(const BigInt& o) const {
  if (negative_ != o.negative_) return negative_;
  int c = cmp_mag(limbs_, o.limbs_);
  return negative_ ? c > 0 : c < 0;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  r.negative_ = false;
  return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a = a.abs();
  b = b.abs();
  while (!b.is_zero()) {
    BigInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t BigInt::mod_u64(std::uint64_t m) const {
  std::uint64_t acc = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;)
    acc = (acc * static_cast<std::uint64_t>(kBase) % m + limbs_[i]) % m;
  if (negative_ && acc) acc = m - acc;
  return acc;
}

std::string BigInt::to_string() const {
  if (limbs_.empty()) return "0";
  std::string s = negative_ ? "-" : "";
  s += std::to_string(limbs_.back());
  for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
    std::string part = std::to_string(limbs_[i]);
    s += std::string(9 - part.size(), '0') + part;
  }
  return s;
}

}  // namespace wlpa
