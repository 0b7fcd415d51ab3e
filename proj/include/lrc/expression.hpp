#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrc/polynomial.hpp"

namespace lrc {

/// Syntax or semantic error in an expression; positions are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct ExprNode {
  enum class Kind { Number, Identifier, Add, Sub, Neg, Mul, Pow, Wedge };
  Kind kind;
  int line = 1;
  int column = 1;
  Rational value;      // Number
  std::string name;    // Identifier
  unsigned power = 0;  // Pow
  std::vector<std::unique_ptr<ExprNode>> kids;
};

/// Grammar:
///   expr   := term (('+'|'-') term)*
///   term   := ['-'] factor ('*' factor)*
///   factor := atom ('^' (nonneg-int | atom))*
///   atom   := int ('/' posint)? | identifier | '(' expr ')'
/// '^' followed by an integer literal is a power; followed by anything else it is a wedge.
/// `line`/`column` give the position of text[0] inside an enclosing document.
std::unique_ptr<ExprNode> parse_ast(const std::string& text, int line = 1, int column = 1);

Polynomial parse_expression(const std::string& text, const std::vector<std::string>& coords,
                            int line = 1, int column = 1);

// Evaluates a parsed scalar tree; Wedge nodes are rejected.
Polynomial evaluate_scalar(const ExprNode& node, const std::vector<std::string>& coords);

}  // namespace lrc
