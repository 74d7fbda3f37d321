#include "ore/expr.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace ore {
namespace {

struct Token {
  enum class Kind { number, symbol, plus, minus, star, caret, slash, lparen, rparen, end };
  Kind kind;
  std::string text;
};

class Lexer {
public:
  explicit Lexer(const std::string& src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ >= src_.size()) {
      tok_ = {Token::Kind::end, ""};
      return;
    }
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      tok_ = {Token::Kind::number, src_.substr(start, pos_ - start)};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      tok_ = {Token::Kind::symbol, src_.substr(start, pos_ - start)};
      return;
    }
    ++pos_;
    switch (c) {
      case '+': tok_ = {Token::Kind::plus, "+"}; return;
      case '-': tok_ = {Token::Kind::minus, "-"}; return;
      case '*': tok_ = {Token::Kind::star, "*"}; return;
      case '^': tok_ = {Token::Kind::caret, "^"}; return;
      case '/': tok_ = {Token::Kind::slash, "/"}; return;
      case '(': tok_ = {Token::Kind::lparen, "("}; return;
      case ')': tok_ = {Token::Kind::rparen, ")"}; return;
      default: fail(Errc::parse_error, std::string("unexpected character '") + c + "'");
    }
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  Token tok_;
};

class Parser {
public:
  Parser(const std::string& src, const RingId& ring) : lex_(src), ring_(ring) {}

  RingElem parse() {
    RingElem e = expr();
    if (lex_.peek().kind != Token::Kind::end) fail(Errc::parse_error, "trailing input after expression");
    return e;
  }

private:
  RingElem expr() {
    RingElem acc = term();
    for (;;) {
      if (lex_.peek().kind == Token::Kind::plus) {
        lex_.take();
        acc = acc + term();
      } else if (lex_.peek().kind == Token::Kind::minus) {
        lex_.take();
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  RingElem term() {
    RingElem acc = factor();
    while (lex_.peek().kind == Token::Kind::star) {
      lex_.take();
      acc = acc * factor();
    }
    return acc;
  }

  RingElem factor() {
    bool neg = false;
    while (lex_.peek().kind == Token::Kind::minus) {
      lex_.take();
      neg = !neg;
    }
    RingElem base = primary();
    if (lex_.peek().kind == Token::Kind::caret) {
      lex_.take();
      if (lex_.peek().kind != Token::Kind::number)
        fail(Errc::parse_error, "exponent must be a non-negative integer literal");
      unsigned long e = std::stoul(lex_.take().text);
      base = pow(base, e);
    }
    return neg ? -base : base;
  }

  RingElem primary() {
    Token t = lex_.take();
    switch (t.kind) {
      case Token::Kind::number: {
        Int num(t.text);
        if (lex_.peek().kind == Token::Kind::slash) {
          lex_.take();
          if (lex_.peek().kind != Token::Kind::number)
            fail(Errc::parse_error, "rational literal needs an integer denominator");
          Int den(lex_.take().text);
          return scalar(make_rat(num, den));
        }
        return scalar(Rat(num));
      }
      case Token::Kind::symbol: return symbol(t.text);
      case Token::Kind::lparen: {
        RingElem e = expr();
        if (lex_.peek().kind != Token::Kind::rparen) fail(Errc::parse_error, "missing ')'");
        lex_.take();
        return e;
      }
      default: fail(Errc::parse_error, "unexpected token '" + t.text + "'");
    }
  }

  RingElem scalar(const Rat& q) {
    switch (ring_.tag) {
      case RingId::Tag::Z:
        if (!is_integer(q)) fail(Errc::parse_error, "non-integer literal in ring Z");
        return RingElem::integer(q.get_num());
      case RingId::Tag::QX: return {ring_, UniPoly::constant(ring_.var, q)};
      default: return RingElem::weyl(WeylOp::scalar(q));
    }
  }

  RingElem symbol(const std::string& name) {
    switch (ring_.tag) {
      case RingId::Tag::Z: fail(Errc::parse_error, "symbol '" + name + "' in ring Z");
      case RingId::Tag::QX:
        if (name != ring_.var)
          fail(Errc::parse_error, "unknown symbol '" + name + "' in " + ring_.name());
        return {ring_, UniPoly::variable(ring_.var)};
      default:
        if (name == "x") return RingElem::weyl(WeylOp::x());
        if (name == "d") return RingElem::weyl(WeylOp::d());
        if (name == "theta") return RingElem::weyl(WeylOp::euler());
        fail(Errc::parse_error, "unknown symbol '" + name + "' in the Weyl algebra");
    }
  }

  Lexer lex_;
  RingId ring_;
};

}  // namespace

RingElem parse_element(const std::string& text, const RingId& ring) {
  return Parser(text, ring).parse();
}

}  // namespace ore
