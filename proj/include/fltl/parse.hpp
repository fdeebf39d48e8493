#pragma once

// Recursive-descent parser for the ASCII formula syntax.
//
//   formula  ::= impl ("<->" formula)?
//   impl     ::= or ("->" impl)?
//   or       ::= and ("|" and)*
//   and      ::= temporal ("&" temporal)*
//   temporal ::= unary (("U" | "R") temporal)?
//   unary    ::= ("!" | "X" | "W" | "F" | "G") unary | primary
//   primary  ::= "true" | "false" | ident | "(" formula ")"
//
// F, G, -> and <-> are desugared while parsing.  Keywords are whole
// tokens: "Xa" is an atom, "X a" is next-a.

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fltl/formula.hpp"

namespace fltl {

class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t position, const std::string& what)
      : std::runtime_error("parse error at " + std::to_string(position) +
                           ": " + what),
        position_(position) {}

  /// Zero-based byte offset into the input.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

enum class Tok {
  End,
  Ident,
  True,
  False,
  Not,
  And,
  Or,
  Implies,
  Iff,
  Next,
  WeakNext,
  Eventually,
  Always,
  Until,
  Release,
  LParen,
  RParen,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    Token t;
    t.pos = pos_;
    if (pos_ >= text_.size()) return t;
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        ++pos_;
      t.text = std::string(text_.substr(start, pos_ - start));
      t.kind = keyword(t.text);
      return t;
    }
    auto take = [&](Tok k, std::size_t n) {
      t.kind = k;
      t.text = std::string(text_.substr(pos_, n));
      pos_ += n;
      return t;
    };
    switch (c) {
      case '!':
        return take(Tok::Not, 1);
      case '&':
        return take(Tok::And, 1);
      case '|':
        return take(Tok::Or, 1);
      case '(':
        return take(Tok::LParen, 1);
      case ')':
        return take(Tok::RParen, 1);
      case '-':
        if (text_.substr(pos_, 2) == "->") return take(Tok::Implies, 2);
        break;
      case '<':
        if (text_.substr(pos_, 3) == "<->") return take(Tok::Iff, 3);
        break;
      default:
        break;
    }
    throw parse_error(pos_, std::string("unknown token '") + c + "'");
  }

 private:
  static Tok keyword(const std::string& word) {
    if (word == "true") return Tok::True;
    if (word == "false") return Tok::False;
    if (word == "X") return Tok::Next;
    if (word == "W") return Tok::WeakNext;
    if (word == "F") return Tok::Eventually;
    if (word == "G") return Tok::Always;
    if (word == "U") return Tok::Until;
    if (word == "R") return Tok::Release;
    return Tok::Ident;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { advance(); }

  Formula parse_all() {
    if (cur_.kind == Tok::End) throw parse_error(cur_.pos, "empty formula");
    Formula f = parse_iff();
    if (cur_.kind != Tok::End)
      throw parse_error(cur_.pos, "unexpected '" + cur_.text + "'");
    return f;
  }

 private:
  void advance() { cur_ = lexer_.next(); }

  Formula parse_iff() {
    Formula lhs = parse_implies();
    if (cur_.kind == Tok::Iff) {
      advance();
      return iff(lhs, parse_iff());
    }
    return lhs;
  }

  Formula parse_implies() {
    Formula lhs = parse_or();
    if (cur_.kind == Tok::Implies) {
      advance();
      return implies(lhs, parse_implies());
    }
    return lhs;
  }

  Formula parse_or() {
    Formula lhs = parse_and();
    while (cur_.kind == Tok::Or) {
      advance();
      lhs = disj(lhs, parse_and());
    }
    return lhs;
  }

  Formula parse_and() {
    Formula lhs = parse_temporal();
    while (cur_.kind == Tok::And) {
      advance();
      lhs = conj(lhs, parse_temporal());
    }
    return lhs;
  }

  Formula parse_temporal() {
    Formula lhs = parse_unary();
    if (cur_.kind == Tok::Until || cur_.kind == Tok::Release) {
      bool is_until = cur_.kind == Tok::Until;
      advance();
      Formula rhs = parse_temporal();
      return is_until ? until(lhs, rhs) : release(lhs, rhs);
    }
    return lhs;
  }

  Formula parse_unary() {
    switch (cur_.kind) {
      case Tok::Not:
        advance();
        return neg(parse_unary());
      case Tok::Next:
        advance();
        return next(parse_unary());
      case Tok::WeakNext:
        advance();
        return wnext(parse_unary());
      case Tok::Eventually:
        advance();
        return eventually(parse_unary());
      case Tok::Always:
        advance();
        return always(parse_unary());
      default:
        return parse_primary();
    }
  }

  Formula parse_primary() {
    Token t = cur_;
    switch (t.kind) {
      case Tok::True:
        advance();
        return tt();
      case Tok::False:
        advance();
        return ff();
      case Tok::Ident:
        advance();
        return atom(t.text);
      case Tok::LParen: {
        advance();
        Formula inner = parse_iff();
        if (cur_.kind != Tok::RParen)
          throw parse_error(cur_.pos, "expected ')'");
        advance();
        return inner;
      }
      case Tok::End:
        throw parse_error(t.pos, "unexpected end of input");
      default:
        throw parse_error(t.pos, "unexpected '" + t.text + "'");
    }
  }

  Lexer lexer_;
  Token cur_;
};

}  // namespace detail

inline Formula parse(std::string_view text) {
  return detail::Parser(text).parse_all();
}

}  // namespace fltl
