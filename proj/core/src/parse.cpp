#include "eulerk/parse.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "eulerk/catalog.hpp"
#include "eulerk/error.hpp"

namespace eulerk {

namespace {

class Scanner {
 public:
  Scanner(std::string_view text, const Limits& limits)
      : text_(text), limits_(limits) {}

  SpaceExpr parse() {
    SpaceExpr expr = parse_expr();
    skip_ws();
    if (!at_end()) fail("trailing input after expression");
    return expr;
  }

 private:
  std::string_view text_;
  const Limits& limits_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
      advance();
    }
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, col_);
  }

  void expect(char c) {
    skip_ws();
    if (at_end() || peek() != c) {
      fail(std::string("expected '") + c + "'");
    }
    advance();
  }

  std::string read_word() {
    skip_ws();
    std::string word;
    while (!at_end() &&
           std::isalpha(static_cast<unsigned char>(peek()))) {
      word.push_back(peek());
      advance();
    }
    if (word.empty()) fail("expected an expression");
    return word;
  }

  SpaceExpr parse_group_leaf() {
    expect('(');
    skip_ws();
    const int at_line = line_, at_col = col_;
    std::string spec;
    while (!at_end() && peek() != ')') {
      spec.push_back(peek());
      advance();
    }
    if (at_end()) fail("unterminated group spec");
    advance();  // ')'
    try {
      return SpaceExpr::bg(build_catalog_group(spec, limits_));
    } catch (const ParseError& e) {
      throw ParseError("in group spec '" + spec + "': " + e.what(), at_line,
                       at_col);
    }
  }

  SpaceExpr parse_expr() {
    skip_ws();
    const int at_line = line_, at_col = col_;
    std::string word = read_word();
    if (word == "empty") return SpaceExpr::empty();
    if (word == "point") return SpaceExpr::point();
    if (word == "B") return parse_group_leaf();
    if (word == "pushout") {
      expect('(');
      SpaceExpr corner = parse_expr();
      expect(';');
      SpaceExpr left = parse_expr();
      expect(';');
      SpaceExpr right = parse_expr();
      expect(')');
      return SpaceExpr::pushout(std::move(corner), std::move(left),
                                std::move(right));
    }
    if (word == "disjoint") {
      expect('(');
      std::vector<SpaceExpr> children;
      children.push_back(parse_expr());
      skip_ws();
      while (!at_end() && peek() == ',') {
        advance();
        children.push_back(parse_expr());
        skip_ws();
      }
      expect(')');
      return SpaceExpr::disjoint(std::move(children));
    }
    if (word == "susp") {
      expect('(');
      SpaceExpr inner = parse_expr();
      expect(')');
      return SpaceExpr::susp(std::move(inner));
    }
    if (word == "wedge") {
      expect('(');
      SpaceExpr left = parse_expr();
      expect(',');
      SpaceExpr right = parse_expr();
      expect(')');
      return SpaceExpr::wedge(std::move(left), std::move(right));
    }
    throw ParseError("unknown expression keyword '" + word + "'", at_line,
                     at_col);
  }
};

}  // namespace

SpaceExpr parse_space(std::string_view text, const Limits& limits) {
  return Scanner(text, limits).parse();
}

}  // namespace eulerk
