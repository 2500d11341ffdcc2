#include "eulerk/basis.hpp"

#include "eulerk/canonical.hpp"
#include "eulerk/error.hpp"

namespace eulerk {

BasisElement BasisElement::star() {
  BasisElement e;
  e.star_ = true;
  e.name_ = "*";
  return e;
}

BasisElement BasisElement::p_group(const FiniteGroup& group) {
  const auto factors = factorize(group.order());
  if (group.order() <= 1 || factors.size() != 1) {
    throw InvalidInputError("basis element group must be a nontrivial "
                            "prime-power group, got order " +
                            std::to_string(group.order()));
  }
  BasisElement e;
  e.star_ = false;
  e.prime_ = factors.begin()->first;
  e.group_ = group;
  e.key_ = canonical_key(group);
  e.name_ = canonical_name(group);
  return e;
}

void BasisFunction::validate() const {
  for (size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].first.is_star() && i != 0) {
      throw InvalidInputError("basis prescriptions: Star must come first");
    }
    if (i > 0 && !(entries[i - 1].first < entries[i].first)) {
      throw InvalidInputError(
          "basis prescriptions out of order at position " + std::to_string(i) +
          " (" + entries[i].first.display_name() + ")");
    }
  }
}

BasisAssignment BasisAssignment::baez_dolan() {
  BasisAssignment a;
  a.kind_ = Kind::BaezDolan;
  a.description_ = "baez-dolan";
  return a;
}

BasisAssignment BasisAssignment::constant_one() {
  BasisAssignment a;
  a.kind_ = Kind::ConstantOne;
  a.description_ = "euler-rational";
  return a;
}

BasisAssignment BasisAssignment::from_values(
    std::vector<std::pair<BasisElement, Rat>> values) {
  BasisAssignment a;
  a.kind_ = Kind::Finite;
  a.description_ = "values";
  for (auto& [elem, value] : values) {
    a.values_.emplace(elem.is_star() ? "*" : elem.key(), value);
  }
  return a;
}

BasisAssignment BasisAssignment::seeded(uint64_t seed) {
  BasisAssignment a;
  a.kind_ = Kind::Seeded;
  a.seed_ = seed;
  a.description_ = "seeded";
  return a;
}

namespace {

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rat hashed_rational(const std::string& key, uint64_t seed) {
  uint64_t h = seed;
  for (unsigned char c : key) h = splitmix64(h ^ c);
  const long long num = static_cast<long long>(h % 81) - 40;
  const long long den = static_cast<long long>(splitmix64(h) % 12) + 1;
  return Rat(num, den);
}

}  // namespace

std::optional<Rat> BasisAssignment::value(const BasisElement& element) const {
  switch (kind_) {
    case Kind::BaezDolan:
      if (element.is_star()) return Rat(1);
      return Rat(1, element.group_order());
    case Kind::ConstantOne:
      return Rat(1);
    case Kind::Finite: {
      auto it = values_.find(element.is_star() ? "*" : element.key());
      if (it == values_.end()) return std::nullopt;
      return it->second;
    }
    case Kind::Seeded:
      return hashed_rational(element.is_star() ? "*" : element.key(), seed_);
  }
  return std::nullopt;
}

Rat BasisAssignment::require(const BasisElement& element) const {
  auto v = value(element);
  if (!v) {
    throw MissingValueError("no basis value for [" +
                            (element.is_star()
                                 ? std::string("*")
                                 : "B " + element.display_name()) +
                            "]");
  }
  return *v;
}

Rat BasisAssignment::point_value() const { return require(BasisElement::star()); }

}  // namespace eulerk
