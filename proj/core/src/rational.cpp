#include "eulerk/rational.hpp"

#include "eulerk/error.hpp"

namespace eulerk {

Rat::Rat(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw InvalidInputError("rational with zero denominator");
  if (den_.is_negative()) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  BigInt g = BigInt::gcd(num_, den_);
  if (g != BigInt(1)) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
}

Rat Rat::parse(std::string_view text) {
  size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rat(BigInt::from_string(text), BigInt(1));
  }
  return Rat(BigInt::from_string(text.substr(0, slash)),
             BigInt::from_string(text.substr(slash + 1)));
}

Rat Rat::operator-() const {
  Rat out = *this;
  out.num_ = -out.num_;
  return out;
}

Rat Rat::operator+(const Rat& rhs) const {
  return Rat(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

Rat Rat::operator-(const Rat& rhs) const { return *this + (-rhs); }

Rat Rat::operator*(const Rat& rhs) const {
  return Rat(num_ * rhs.num_, den_ * rhs.den_);
}

Rat Rat::operator/(const Rat& rhs) const {
  if (rhs.is_zero()) throw InvalidInputError("rational division by zero");
  return Rat(num_ * rhs.den_, den_ * rhs.num_);
}

bool Rat::operator<(const Rat& rhs) const {
  return num_ * rhs.den_ < rhs.num_ * den_;
}

std::string Rat::to_string() const {
  if (is_integer()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

}  // namespace eulerk
