#include "chiwb/parse.hpp"

#include <cctype>

#include "chiwb/errors.hpp"

namespace chiwb {

Lexer::Lexer(std::string text) : text_(std::move(text)) { advance(); }

Token Lexer::next() {
  Token t = current_;
  last_end_ = t.offset + t.text.size();
  advance();
  return t;
}

void Lexer::error(const std::string& message) const { error_at(current_, message); }

void Lexer::error_at(const Token& t, const std::string& message) {
  throw Error(Error::Kind::Parse,
              "line " + std::to_string(t.line) + ", column " + std::to_string(t.column) + ": " +
                  message,
              t.line, t.column);
}

void Lexer::advance() {
  while (pos_ < text_.size()) {
    char c = text_[pos_];
    if (c == '#') {
      while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      continue;
    }
    if (c == '\n') {
      ++pos_;
      ++line_;
      column_ = 1;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos_;
      ++column_;
      continue;
    }
    break;
  }
  current_.line = line_;
  current_.column = column_;
  current_.offset = pos_;
  if (pos_ >= text_.size()) {
    current_.kind = Token::Kind::End;
    current_.text.clear();
    return;
  }
  char c = text_[pos_];
  if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                   text_[pos_] == '_'))
      ++pos_;
    current_.kind = Token::Kind::Ident;
    current_.text = text_.substr(start, pos_ - start);
  } else if (std::isdigit(static_cast<unsigned char>(c))) {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    current_.kind = Token::Kind::Int;
    current_.text = text_.substr(start, pos_ - start);
  } else {
    current_.kind = Token::Kind::Punct;
    current_.text = std::string(1, c);
    ++pos_;
  }
  column_ += static_cast<int>(current_.text.size());
}

namespace {

bool is_punct(const Token& t, const char* p) {
  return t.kind == Token::Kind::Punct && t.text == p;
}

Polynomial parse_expr(Lexer& lex, const RingPtr& ring);

Polynomial parse_atom(Lexer& lex, const RingPtr& ring) {
  const Token t = lex.peek();
  if (t.kind == Token::Kind::Ident) {
    lex.next();
    auto idx = ring->var_index(t.text);
    if (!idx) Lexer::error_at(t, "unknown variable '" + t.text + "'");
    return Polynomial::variable(ring, *idx);
  }
  if (t.kind == Token::Kind::Int) {
    lex.next();
    mpz_class v(t.text);
    return Polynomial::constant(ring, ring->field().from_mpz(v));
  }
  if (is_punct(t, "(")) {
    lex.next();
    Polynomial inner = parse_expr(lex, ring);
    if (!is_punct(lex.peek(), ")")) lex.error("expected ')'");
    lex.next();
    return inner;
  }
  Lexer::error_at(t, "expected a variable, integer, or '('");
}

Polynomial parse_factor(Lexer& lex, const RingPtr& ring) {
  Polynomial base = parse_atom(lex, ring);
  if (is_punct(lex.peek(), "^")) {
    lex.next();
    const Token e = lex.peek();
    if (e.kind != Token::Kind::Int) lex.error("expected an integer exponent");
    lex.next();
    mpz_class v(e.text);
    if (v <= 0 || v > 1000000) Lexer::error_at(e, "exponents must be positive integers");
    base = base.pow(static_cast<std::uint32_t>(v.get_ui()));
  }
  return base;
}

Polynomial parse_term(Lexer& lex, const RingPtr& ring) {
  Polynomial p = parse_factor(lex, ring);
  while (is_punct(lex.peek(), "*")) {
    lex.next();
    p = p * parse_factor(lex, ring);
  }
  return p;
}

Polynomial parse_expr(Lexer& lex, const RingPtr& ring) {
  bool negate = false;
  if (is_punct(lex.peek(), "-")) {
    lex.next();
    negate = true;
  } else if (is_punct(lex.peek(), "+")) {
    lex.next();
  }
  Polynomial p = parse_term(lex, ring);
  if (negate) p = -p;
  while (is_punct(lex.peek(), "+") || is_punct(lex.peek(), "-")) {
    bool minus = lex.next().text == "-";
    Polynomial q = parse_term(lex, ring);
    p = minus ? p - q : p + q;
  }
  return p;
}

}  // namespace

Polynomial parse_polynomial(Lexer& lex, const RingPtr& ring) { return parse_expr(lex, ring); }

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
  Lexer lex(text);
  Polynomial p = parse_expr(lex, ring);
  if (!lex.at_end()) lex.error("unexpected trailing input in polynomial");
  return p;
}

mpq_class parse_rational(Lexer& lex) {
  bool negate = false;
  if (is_punct(lex.peek(), "-")) {
    lex.next();
    negate = true;
  }
  const Token n = lex.peek();
  if (n.kind != Token::Kind::Int) lex.error("expected a rational number");
  lex.next();
  mpz_class num(n.text);
  mpz_class den(1);
  if (is_punct(lex.peek(), "/")) {
    lex.next();
    const Token d = lex.peek();
    if (d.kind != Token::Kind::Int) lex.error("expected a denominator");
    lex.next();
    den = mpz_class(d.text);
    if (den == 0) Lexer::error_at(d, "zero denominator");
  }
  mpq_class q(num, den);
  q.canonicalize();
  return negate ? mpq_class(-q) : q;
}

}  // namespace chiwb
