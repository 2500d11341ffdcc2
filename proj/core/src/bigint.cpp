#include "eulerk/bigint.hpp"

#include <algorithm>
#include <cctype>

#include "eulerk/error.hpp"

namespace eulerk {

namespace {

int bit_length(const std::vector<uint32_t>& mag) {
  if (mag.empty()) return 0;
  uint32_t top = mag.back();
  int bits = 0;
  while (top) {
    ++bits;
    top >>= 1;
  }
  return static_cast<int>(mag.size() - 1) * 32 + bits;
}

bool get_bit(const std::vector<uint32_t>& mag, int i) {
  return (mag[static_cast<size_t>(i) / 32] >> (i % 32)) & 1u;
}

// r = (r << 1) | bit, in place
void shl1_or(std::vector<uint32_t>& r, bool bit) {
  uint32_t carry = bit ? 1u : 0u;
  for (auto& limb : r) {
    uint32_t next = limb >> 31;
    limb = (limb << 1) | carry;
    carry = next;
  }
  if (carry) r.push_back(carry);
}

void trim(std::vector<uint32_t>& mag) {
  while (!mag.empty() && mag.back() == 0) mag.pop_back();
}

}  // namespace

BigInt::BigInt(long long value) {
  if (value == 0) return;
  sign_ = value > 0 ? 1 : -1;
  // avoid overflow on LLONG_MIN
  unsigned long long u =
      value > 0 ? static_cast<unsigned long long>(value)
                : ~static_cast<unsigned long long>(value) + 1ULL;
  while (u) {
    mag_.push_back(static_cast<uint32_t>(u & 0xffffffffULL));
    u >>= 32;
  }
}

void BigInt::normalize() {
  trim(mag_);
  if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a,
                    const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
  std::vector<uint32_t> out(std::max(a.size(), b.size()) + 1, 0);
  uint64_t carry = 0;
  for (size_t i = 0; i < out.size(); ++i) {
    uint64_t s = carry;
    if (i < a.size()) s += a[i];
    if (i < b.size()) s += b[i];
    out[i] = static_cast<uint32_t>(s);
    carry = s >> 32;
  }
  trim(out);
  return out;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
  std::vector<uint32_t> out(a.size(), 0);
  int64_t borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    int64_t d = static_cast<int64_t>(a[i]) - borrow -
                (i < b.size() ? static_cast<int64_t>(b[i]) : 0);
    if (d < 0) {
      d += (1LL << 32);
      borrow = 1;
    } else {
      borrow = 0;
    }
    out[i] = static_cast<uint32_t>(d);
  }
  trim(out);
  return out;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint32_t> out(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    uint64_t carry = 0;
    for (size_t j = 0; j < b.size(); ++j) {
      uint64_t cur = static_cast<uint64_t>(a[i]) * b[j] + out[i + j] + carry;
      out[i + j] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
    }
    size_t k = i + b.size();
    while (carry) {
      uint64_t cur = out[k] + carry;
      out[k] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
      ++k;
    }
  }
  trim(out);
  return out;
}

void BigInt::divmod_mag(const std::vector<uint32_t>& a,
                        const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
  q.assign(a.empty() ? 0 : a.size(), 0);
  r.clear();
  int n = bit_length(a);
  for (int i = n - 1; i >= 0; --i) {
    shl1_or(r, get_bit(a, i));
    if (cmp_mag(r, b) >= 0) {
      r = sub_mag(r, b);
      q[static_cast<size_t>(i) / 32] |= (1u << (i % 32));
    }
  }
  trim(q);
  trim(r);
}

BigInt BigInt::operator-() const {
  BigInt out = *this;
  out.sign_ = -out.sign_;
  return out;
}

BigInt BigInt::abs() const {
  BigInt out = *this;
  if (out.sign_ < 0) out.sign_ = 1;
  return out;
}

BigInt BigInt::operator+(const BigInt& rhs) const {
  if (sign_ == 0) return rhs;
  if (rhs.sign_ == 0) return *this;
  BigInt out;
  if (sign_ == rhs.sign_) {
    out.sign_ = sign_;
    out.mag_ = add_mag(mag_, rhs.mag_);
  } else {
    int c = cmp_mag(mag_, rhs.mag_);
    if (c == 0) return BigInt();
    if (c > 0) {
      out.sign_ = sign_;
      out.mag_ = sub_mag(mag_, rhs.mag_);
    } else {
      out.sign_ = rhs.sign_;
      out.mag_ = sub_mag(rhs.mag_, mag_);
    }
  }
  out.normalize();
  return out;
}

BigInt BigInt::operator-(const BigInt& rhs) const { return *this + (-rhs); }

BigInt BigInt::operator*(const BigInt& rhs) const {
  BigInt out;
  if (sign_ == 0 || rhs.sign_ == 0) return out;
  out.sign_ = sign_ * rhs.sign_;
  out.mag_ = mul_mag(mag_, rhs.mag_);
  out.normalize();
  return out;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  if (b.sign_ == 0) throw InvalidInputError("division by zero");
  if (a.sign_ == 0) {
    q = BigInt();
    r = BigInt();
    return;
  }
  std::vector<uint32_t> qm, rm;
  divmod_mag(a.mag_, b.mag_, qm, rm);
  q = BigInt();
  r = BigInt();
  q.mag_ = std::move(qm);
  r.mag_ = std::move(rm);
  q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
  r.sign_ = r.mag_.empty() ? 0 : a.sign_;
}

BigInt BigInt::operator/(const BigInt& rhs) const {
  BigInt q, r;
  divmod(*this, rhs, q, r);
  return q;
}

BigInt BigInt::operator%(const BigInt& rhs) const {
  BigInt q, r;
  divmod(*this, rhs, q, r);
  return r;
}

bool BigInt::operator==(const BigInt& rhs) const {
  return sign_ == rhs.sign_ && mag_ == rhs.mag_;
}

bool BigInt::operator<(const BigInt& rhs) const {
  if (sign_ != rhs.sign_) return sign_ < rhs.sign_;
  int c = cmp_mag(mag_, rhs.mag_);
  return sign_ >= 0 ? c < 0 : c > 0;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
  BigInt x = a.abs(), y = b.abs();
  while (!y.is_zero()) {
    BigInt r = x % y;
    x = y;
    y = r;
  }
  return x;
}

BigInt BigInt::from_string(std::string_view text) {
  size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i >= text.size()) throw InvalidInputError("empty integer literal");
  BigInt out;
  const BigInt ten(10);
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw InvalidInputError("bad digit in integer literal: '" +
                              std::string(text) + "'");
    }
    out = out * ten + BigInt(text[i] - '0');
  }
  if (negative && !out.is_zero()) out.sign_ = -1;
  return out;
}

std::string BigInt::to_string() const {
  if (sign_ == 0) return "0";
  std::vector<uint32_t> chunks;  // base 10^9, little-endian
  std::vector<uint32_t> cur = mag_;
  const std::vector<uint32_t> base = {1000000000u};
  while (!cur.empty()) {
    std::vector<uint32_t> q, r;
    divmod_mag(cur, base, q, r);
    chunks.push_back(r.empty() ? 0u : r[0]);
    cur = std::move(q);
  }
  std::string out = sign_ < 0 ? "-" : "";
  out += std::to_string(chunks.back());
  for (size_t i = chunks.size() - 1; i-- > 0;) {
    std::string part = std::to_string(chunks[i]);
    out += std::string(9 - part.size(), '0') + part;
  }
  return out;
}

}  // namespace eulerk
