#pragma once

#include <string>

#include "chiwb/polynomial.hpp"

namespace chiwb {

struct Token {
  enum class Kind { Ident, Int, Punct, End };
  Kind kind = Kind::End;
  std::string text;
  int line = 1;
  int column = 1;
  std::size_t offset = 0;  // byte offset of the token start
};

// Shared tokenizer for polynomial expressions and session files. '#' starts a
// comment running to end of line.
class Lexer {
 public:
  explicit Lexer(std::string text);
  const Token& peek() const { return current_; }
  Token next();
  bool at_end() const { return current_.kind == Token::Kind::End; }
  // byte offset just past the most recently consumed token
  std::size_t last_end() const { return last_end_; }

  [[noreturn]] void error(const std::string& message) const;
  [[noreturn]] static void error_at(const Token& t, const std::string& message);

 private:
  void advance();
  std::string text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  std::size_t last_end_ = 0;
  Token current_;
};

// Parses an expression of identifiers, integer literals, + - * ^ and
// parentheses. Juxtaposition is not multiplication; exponents are positive
// integers. Stops before any token that cannot extend the expression.
Polynomial parse_polynomial(Lexer& lex, const RingPtr& ring);
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

// Signed rational literal: INT or INT/INT (used for point coordinates).
mpq_class parse_rational(Lexer& lex);

}  // namespace chiwb
