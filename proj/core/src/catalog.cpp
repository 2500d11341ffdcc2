#include "eulerk/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "eulerk/error.hpp"

namespace eulerk {

FiniteGroup cyclic_group(int n) {
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      table[static_cast<size_t>(a) * n + b] = (a + b) % n;
    }
  }
  return FiniteGroup::from_table(std::move(table), "C" + std::to_string(n));
}

FiniteGroup dihedral_group(int n) {
  // elements: i in [0,n) is r^i, n+i is s*r^i
  const int order = 2 * n;
  auto idx = [n](int flip, int rot) { return flip * n + ((rot % n + n) % n); };
  std::vector<int> table(static_cast<size_t>(order) * order);
  for (int f1 = 0; f1 < 2; ++f1) {
    for (int r1 = 0; r1 < n; ++r1) {
      for (int f2 = 0; f2 < 2; ++f2) {
        for (int r2 = 0; r2 < n; ++r2) {
          // (s^f1 r^r1)(s^f2 r^r2) = s^(f1+f2) r^(r2 + (-1)^f2 * r1)
          int rot = f2 ? r2 - r1 : r2 + r1;
          table[static_cast<size_t>(idx(f1, r1)) * order + idx(f2, r2)] =
              idx((f1 + f2) % 2, rot);
        }
      }
    }
  }
  return FiniteGroup::from_table(std::move(table), "D" + std::to_string(n));
}

FiniteGroup quaternion_group() {
  // elements encoded as (axis, sign): 0:+1 1:-1 2:+i 3:-i 4:+j 5:-j 6:+k 7:-k
  auto axis = [](int e) { return e / 2; };  // 0=1, 1=i, 2=j, 3=k
  auto neg = [](int e) { return e % 2; };
  auto enc = [](int ax, int n) { return ax * 2 + n; };
  // quaternion axis products: table[a][b] = (axis, extra sign)
  static const int ax_mul[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_mul[4][4] = {
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<int> table(64);
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      int ax = ax_mul[axis(a)][axis(b)];
      int n = (neg(a) + neg(b) + sign_mul[axis(a)][axis(b)]) % 2;
      table[static_cast<size_t>(a) * 8 + b] = enc(ax, n);
    }
  }
  return FiniteGroup::from_table(std::move(table), "Q8");
}

FiniteGroup symmetric_group(int n) {
  std::vector<int> letters(n);
  std::iota(letters.begin(), letters.end(), 0);
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(letters);
  } while (std::next_permutation(letters.begin(), letters.end()));
  const int order = static_cast<int>(perms.size());
  auto find = [&](const std::vector<int>& p) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), p) -
                            perms.begin());
  };
  std::vector<int> table(static_cast<size_t>(order) * order);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      std::vector<int> c(n);
      for (int x = 0; x < n; ++x) c[x] = perms[a][perms[b][x]];
      table[static_cast<size_t>(a) * order + b] = find(c);
    }
  }
  return FiniteGroup::from_table(std::move(table), "S" + std::to_string(n));
}

namespace {

int parse_number(std::string_view text, size_t& i, size_t col0) {
  size_t start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    ++i;
  }
  if (i == start) {
    throw ParseError("expected a number in group spec", 1,
                     static_cast<int>(col0 + start + 1));
  }
  long long v = 0;
  for (size_t k = start; k < i; ++k) {
    v = v * 10 + (text[k] - '0');
    if (v > 1'000'000) {
      throw ParseError("number too large in group spec", 1,
                       static_cast<int>(col0 + start + 1));
    }
  }
  return static_cast<int>(v);
}

FiniteGroup parse_table_literal(std::string_view text, size_t& i, size_t col0) {
  // caller consumed "table:"; expect "[ n, n, ... ]"
  if (i >= text.size() || text[i] != '[') {
    throw ParseError("expected '[' after 'table:'", 1,
                     static_cast<int>(col0 + i + 1));
  }
  ++i;
  std::vector<int> entries;
  while (true) {
    if (i >= text.size()) {
      throw ParseError("unterminated table literal", 1,
                       static_cast<int>(col0 + i));
    }
    if (text[i] == ']') {
      ++i;
      break;
    }
    entries.push_back(parse_number(text, i, col0));
    if (i < text.size() && text[i] == ',') {
      ++i;
    } else if (i >= text.size() || text[i] != ']') {
      throw ParseError("expected ',' or ']' in table literal", 1,
                       static_cast<int>(col0 + i + 1));
    }
  }
  std::string name = "table:[";
  for (size_t k = 0; k < entries.size(); ++k) {
    if (k) name += ",";
    name += std::to_string(entries[k]);
  }
  name += "]";
  return FiniteGroup::from_table(std::move(entries), name);
}

FiniteGroup parse_atom(std::string_view text, size_t& i, size_t col0,
                       const Limits& limits) {
  if (i >= text.size()) {
    throw ParseError("expected a group atom", 1,
                     static_cast<int>(col0 + i + 1));
  }
  const size_t at = i;
  if (text.substr(i, 6) == "table:") {
    i += 6;
    FiniteGroup g = parse_table_literal(text, i, col0);
    if (g.order() > limits.max_order) {
      throw LimitError("group order " + std::to_string(g.order()) +
                       " exceeds the maximum " +
                       std::to_string(limits.max_order));
    }
    return g;
  }
  char kind = text[i];
  ++i;
  int n = parse_number(text, i, col0);
  auto check_order = [&](int order) {
    if (order > limits.max_order) {
      throw LimitError("group order " + std::to_string(order) +
                       " exceeds the maximum " +
                       std::to_string(limits.max_order));
    }
  };
  switch (kind) {
    case 'C':
      if (n < 1) {
        throw ParseError("cyclic order must be at least 1", 1,
                         static_cast<int>(col0 + at + 1));
      }
      check_order(n);
      return cyclic_group(n);
    case 'D':
      if (n < 1) {
        throw ParseError("dihedral parameter must be at least 1", 1,
                         static_cast<int>(col0 + at + 1));
      }
      check_order(2 * n);
      return dihedral_group(n);
    case 'Q':
      if (n != 8) {
        throw ParseError("only Q8 is supported", 1,
                         static_cast<int>(col0 + at + 1));
      }
      check_order(8);
      return quaternion_group();
    case 'S':
      if (n < 1 || n > 4) {
        throw ParseError("symmetric groups support n in 1..4", 1,
                         static_cast<int>(col0 + at + 1));
      }
      check_order(n <= 1 ? 1 : n == 2 ? 2 : n == 3 ? 6 : 24);
      return symmetric_group(n);
    default:
      throw ParseError(std::string("unknown group atom '") + kind + "'", 1,
                       static_cast<int>(col0 + at + 1));
  }
}

}  // namespace

FiniteGroup build_catalog_group(std::string_view spec, const Limits& limits) {
  std::string text;
  text.reserve(spec.size());
  for (char c : spec) {
    if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
  }
  if (text.empty()) throw ParseError("empty group spec", 1, 1);

  size_t i = 0;
  FiniteGroup result = parse_atom(text, i, 0, limits);
  std::string name = result.name();
  while (i < text.size()) {
    if (text[i] != 'x') {
      throw ParseError("expected 'x' between group atoms", 1,
                       static_cast<int>(i + 1));
    }
    ++i;
    FiniteGroup rhs = parse_atom(text, i, 0, limits);
    long long order =
        static_cast<long long>(result.order()) * rhs.order();
    if (order > limits.max_order) {
      throw LimitError("group order " + std::to_string(order) +
                       " exceeds the maximum " +
                       std::to_string(limits.max_order));
    }
    name += "x" + rhs.name();
    result = direct_product(result, rhs, name);
  }
  return result;
}

}  // namespace eulerk
