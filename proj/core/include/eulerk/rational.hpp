#pragma once

#include <string>
#include <string_view>

#include "eulerk/bigint.hpp"

namespace eulerk {

/// Exact rational number in canonical reduced form: the denominator is
/// positive and coprime to the numerator, and zero is stored as 0/1.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(long long value) : num_(value), den_(1) {}  // NOLINT: implicit
  Rat(long long num, long long den) : Rat(BigInt(num), BigInt(den)) {}
  Rat(BigInt num, BigInt den);

  /// Accepts "a/b" or "a" with optional sign, e.g. "-1/6".
  static Rat parse(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == BigInt(1); }
  int signum() const { return num_.signum(); }

  Rat operator-() const;
  Rat operator+(const Rat& rhs) const;
  Rat operator-(const Rat& rhs) const;
  Rat operator*(const Rat& rhs) const;
  Rat operator/(const Rat& rhs) const;

  Rat& operator+=(const Rat& rhs) { return *this = *this + rhs; }
  Rat& operator-=(const Rat& rhs) { return *this = *this - rhs; }
  Rat& operator*=(const Rat& rhs) { return *this = *this * rhs; }
  Rat& operator/=(const Rat& rhs) { return *this = *this / rhs; }

  bool operator==(const Rat& rhs) const {
    return num_ == rhs.num_ && den_ == rhs.den_;
  }
  bool operator!=(const Rat& rhs) const { return !(*this == rhs); }
  bool operator<(const Rat& rhs) const;
  bool operator>(const Rat& rhs) const { return rhs < *this; }
  bool operator<=(const Rat& rhs) const { return !(rhs < *this); }
  bool operator>=(const Rat& rhs) const { return !(*this < rhs); }

  /// "num/den" in lowest terms; integers render without "/1".
  std::string to_string() const;

 private:
  BigInt num_;
  BigInt den_;
};

}  // namespace eulerk
