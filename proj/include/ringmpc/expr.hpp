#pragma once

// Recursive-descent parser for ring expressions, shared by element literals
// and skew polynomial literals.
//
//   expr  := ['+'|'-'] term (('+'|'-') term)*
//   term  := power (['*'] power)*
//   power := atom ['^' integer]
//   atom  := integer | name | '(' expr ')' | '(' text ',' text {',' text} ')'
//
// A parenthesised list with top-level commas is a tuple; its raw component
// texts are handed to the domain, which parses them in the factor rings.

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ringmpc/errors.hpp"

namespace ringmpc::expr {

template <class Domain>
class Parser {
 public:
  using Value = typename Domain::Value;

  Parser(std::string_view text, const Domain& domain) : text_(text), domain_(domain) {}

  Value parse() {
    Value v = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) +
                     "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool starts_atom() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
  }

  Value parse_expr() {
    bool negate = false;
    if (peek('+')) {
      ++pos_;
    } else if (peek('-')) {
      ++pos_;
      negate = true;
    }
    Value acc = parse_term();
    if (negate) acc = domain_.neg(acc);
    for (;;) {
      if (peek('+')) {
        ++pos_;
        acc = domain_.add(acc, parse_term());
      } else if (peek('-')) {
        ++pos_;
        acc = domain_.sub(acc, parse_term());
      } else {
        return acc;
      }
    }
  }

  Value parse_term() {
    Value acc = parse_power();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc = domain_.mul(acc, parse_power());
      } else if (starts_atom()) {
        acc = domain_.mul(acc, parse_power());
      } else {
        return acc;
      }
    }
  }

  Value parse_power() {
    Value base = parse_atom();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      const std::uint64_t e = parse_unsigned();
      return domain_.pow(base, e);
    }
    return base;
  }

  std::uint64_t parse_unsigned() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected a non-negative integer");
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (1ULL << 40)) fail("integer literal too large");
      ++pos_;
    }
    return v;
  }

  Value parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return domain_.from_int(static_cast<std::int64_t>(parse_unsigned()));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      auto v = domain_.name(name);
      if (!v) {
        pos_ = start;
        fail("unknown name '" + std::string(name) + "'");
      }
      return *v;
    }
    if (c == '(') return parse_paren();
    fail(std::string("unexpected character '") + c + "'");
  }

  Value parse_paren() {
    const std::size_t open = pos_;
    int depth = 0;
    std::vector<std::size_t> commas;
    std::size_t close = std::string_view::npos;
    for (std::size_t i = open; i < text_.size(); ++i) {
      const char c = text_[i];
      if (c == '(') {
        ++depth;
      } else if (c == ')') {
        if (--depth == 0) {
          close = i;
          break;
        }
      } else if (c == ',' && depth == 1) {
        commas.push_back(i);
      }
    }
    if (close == std::string_view::npos) fail("unbalanced parenthesis");
    if (commas.empty()) {
      ++pos_;
      Value v = parse_expr();
      skip_ws();
      if (pos_ != close) fail("expected ')'");
      pos_ = close + 1;
      return v;
    }
    std::vector<std::string_view> parts;
    std::size_t begin = open + 1;
    for (std::size_t comma : commas) {
      parts.push_back(text_.substr(begin, comma - begin));
      begin = comma + 1;
    }
    parts.push_back(text_.substr(begin, close - begin));
    pos_ = close + 1;
    return domain_.tuple(parts);
  }

  std::string_view text_;
  const Domain& domain_;
  std::size_t pos_ = 0;
};

template <class Domain>
typename Domain::Value parse(std::string_view text, const Domain& domain) {
  return Parser<Domain>(text, domain).parse();
}

}  // namespace ringmpc::expr
