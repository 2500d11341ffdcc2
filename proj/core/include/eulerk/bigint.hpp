#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace eulerk {

/// Arbitrary-precision signed integer.
///
/// Magnitude is a little-endian vector of 32-bit limbs with no trailing
/// zero limbs; zero has an empty magnitude and sign 0. Division truncates
/// toward zero and the remainder carries the dividend's sign.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long value);  // NOLINT: implicit by design, mirrors int literals

  static BigInt from_string(std::string_view text);

  int signum() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }
  bool is_negative() const { return sign_ < 0; }

  BigInt operator-() const;
  BigInt abs() const;

  BigInt operator+(const BigInt& rhs) const;
  BigInt operator-(const BigInt& rhs) const;
  BigInt operator*(const BigInt& rhs) const;
  BigInt operator/(const BigInt& rhs) const;
  BigInt operator%(const BigInt& rhs) const;

  BigInt& operator+=(const BigInt& rhs) { return *this = *this + rhs; }
  BigInt& operator-=(const BigInt& rhs) { return *this = *this - rhs; }
  BigInt& operator*=(const BigInt& rhs) { return *this = *this * rhs; }

  bool operator==(const BigInt& rhs) const;
  bool operator!=(const BigInt& rhs) const { return !(*this == rhs); }
  bool operator<(const BigInt& rhs) const;
  bool operator>(const BigInt& rhs) const { return rhs < *this; }
  bool operator<=(const BigInt& rhs) const { return !(rhs < *this); }
  bool operator>=(const BigInt& rhs) const { return !(*this < rhs); }

  /// Quotient and remainder in one pass; q truncates toward zero.
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

  /// Nonnegative greatest common divisor; gcd(0, 0) == 0.
  static BigInt gcd(const BigInt& a, const BigInt& b);

  std::string to_string() const;

 private:
  int sign_ = 0;                // -1, 0, +1
  std::vector<uint32_t> mag_;   // little-endian, normalized

  void normalize();
  static int cmp_mag(const std::vector<uint32_t>& a,
                     const std::vector<uint32_t>& b);
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  // requires |a| >= |b|
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  static void divmod_mag(const std::vector<uint32_t>& a,
                         const std::vector<uint32_t>& b,
                         std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

}  // namespace eulerk
