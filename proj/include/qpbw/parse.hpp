#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "qpbw/element.hpp"

namespace qpbw {

// Recursive-descent parser for coefficient and algebra expressions.
//
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := number ['/' number] | 'q' ['^' int] | 'qhat'
//           | generator | '(' expr ')'
//
// Generator names are identifiers (x1, Yb2) or matrix entries (X[2,5]).
// Parsing against an empty alphabet yields pure coefficients.

namespace parsing {

struct Token {
  enum class Kind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
  Kind kind;
  std::string text;
  std::size_t pos;
};

inline std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace((unsigned char)c)) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit((unsigned char)c)) {
      while (i < src.size() && std::isdigit((unsigned char)src[i])) ++i;
      out.push_back({Token::Kind::Number, src.substr(start, i - start), start});
      continue;
    }
    if (std::isalpha((unsigned char)c)) {
      while (i < src.size() && std::isalnum((unsigned char)src[i])) ++i;
      std::string name = src.substr(start, i - start);
      // Matrix-entry names swallow one [int,int] suffix.
      if (i < src.size() && src[i] == '[') {
        std::size_t j = i + 1;
        std::string inner;
        while (j < src.size() && src[j] != ']') inner += src[j++];
        if (j >= src.size())
          fail(Err::SyntaxError, "unterminated '[' at position " + std::to_string(i));
        name += "[" + inner + "]";
        i = j + 1;
      }
      out.push_back({Token::Kind::Ident, name, start});
      continue;
    }
    switch (c) {
      case '+': out.push_back({Token::Kind::Plus, "+", start}); break;
      case '-': out.push_back({Token::Kind::Minus, "-", start}); break;
      case '*': out.push_back({Token::Kind::Star, "*", start}); break;
      case '/': out.push_back({Token::Kind::Slash, "/", start}); break;
      case '^': out.push_back({Token::Kind::Caret, "^", start}); break;
      case '(': out.push_back({Token::Kind::LParen, "(", start}); break;
      case ')': out.push_back({Token::Kind::RParen, ")", start}); break;
      default:
        fail(Err::SyntaxError, std::string("unexpected character '") + c + "' at position " +
                                   std::to_string(start));
    }
    ++i;
  }
  out.push_back({Token::Kind::End, "", src.size()});
  return out;
}

class Parser {
 public:
  Parser(const std::string& src, const std::vector<GeneratorInfo>* alphabet)
      : toks_(lex(src)), alphabet_(alphabet) {}

  Element parse() {
    Element e = expr();
    if (peek().kind != Token::Kind::End)
      fail(Err::SyntaxError, "trailing input at position " + std::to_string(peek().pos));
    return e;
  }

 private:
  const Token& peek() const { return toks_[k_]; }
  const Token& next() { return toks_[k_++]; }
  bool accept(Token::Kind kind) {
    if (peek().kind == kind) {
      ++k_;
      return true;
    }
    return false;
  }

  Element expr() {
    bool neg = accept(Token::Kind::Minus);
    Element acc = term();
    if (neg) acc = acc.scaled(LaurentPoly::constant(-1));
    for (;;) {
      if (accept(Token::Kind::Plus)) {
        acc += term();
      } else if (accept(Token::Kind::Minus)) {
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  Element term() {
    Element acc = factor();
    while (accept(Token::Kind::Star)) acc = acc.concatMul(factor());
    return acc;
  }

  std::int64_t signedInt() {
    bool neg = accept(Token::Kind::Minus);
    if (peek().kind != Token::Kind::Number)
      fail(Err::SyntaxError, "expected integer at position " + std::to_string(peek().pos));
    std::int64_t v = std::stoll(next().text);
    return neg ? -v : v;
  }

  Element factor() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Kind::Number: {
        next();
        BigInt num(t.text);
        if (accept(Token::Kind::Slash)) {
          if (peek().kind != Token::Kind::Number)
            fail(Err::SyntaxError, "expected denominator at position " + std::to_string(peek().pos));
          BigInt den(next().text);
          if (den == 0) fail(Err::SyntaxError, "zero denominator in coefficient literal");
          return Element::ofScalar(LaurentPoly::constant(Rational(num, den)));
        }
        return Element::ofScalar(LaurentPoly::constant(Rational(num)));
      }
      case Token::Kind::Ident: {
        next();
        if (t.text == "q") {
          std::int64_t e = 1;
          if (accept(Token::Kind::Caret)) e = signedInt();
          return Element::ofScalar(LaurentPoly::q(e));
        }
        if (t.text == "qhat") return Element::ofScalar(LaurentPoly::qhat());
        if (alphabet_) {
          for (const auto& g : *alphabet_)
            if (g.name == t.text) return Element::ofWord({g.id});
        }
        fail(Err::UnknownGenerator,
             "unknown generator '" + t.text + "' at position " + std::to_string(t.pos));
      }
      case Token::Kind::LParen: {
        next();
        Element e = expr();
        if (!accept(Token::Kind::RParen))
          fail(Err::SyntaxError, "expected ')' at position " + std::to_string(peek().pos));
        return e;
      }
      default:
        fail(Err::SyntaxError,
             "unexpected token '" + t.text + "' at position " + std::to_string(t.pos));
    }
  }

  std::vector<Token> toks_;
  const std::vector<GeneratorInfo>* alphabet_ = nullptr;
  std::size_t k_ = 0;
};

}  // namespace parsing

/// Parse an expression over a presentation alphabet.
inline Element parseExpression(const std::string& src,
                               const std::vector<GeneratorInfo>& alphabet) {
  return parsing::Parser(src, &alphabet).parse();
}

/// Parse a pure coefficient (no generators allowed).
inline LaurentPoly parseCoefficient(const std::string& src) {
  Element e = parsing::Parser(src, nullptr).parse();
  LaurentPoly c;
  for (const auto& [w, k] : e.terms()) {
    if (!w.empty()) fail(Err::SyntaxError, "generators are not allowed in a coefficient");
    c += k;
  }
  return c;
}

}  // namespace qpbw
