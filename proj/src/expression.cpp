#include "lrc/expression.hpp"

#include <algorithm>
#include <cctype>

namespace lrc {

namespace {

struct Token {
  enum class Kind { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
  Kind kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> tokenize(const std::string& s, int line, int column) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    int l = line, col = column;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Kind::Int, s.substr(i, j - i), l, col});
      advance(j - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Token::Kind::Ident, s.substr(i, j - i), l, col});
      advance(j - i);
      continue;
    }
    Token::Kind k;
    switch (c) {
      case '+': k = Token::Kind::Plus; break;
      case '-': k = Token::Kind::Minus; break;
      case '*': k = Token::Kind::Star; break;
      case '/': k = Token::Kind::Slash; break;
      case '^': k = Token::Kind::Caret; break;
      case '(': k = Token::Kind::LParen; break;
      case ')': k = Token::Kind::RParen; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", l, col);
    }
    out.push_back({k, std::string(1, c), l, col});
    advance(1);
  }
  out.push_back({Token::Kind::End, "", line, column});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  std::unique_ptr<ExprNode> parse() {
    auto e = expr();
    if (peek().kind != Token::Kind::End) fail("unexpected '" + peek().text + "'");
    return e;
  }

 private:
  using Node = std::unique_ptr<ExprNode>;

  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    throw ParseError(t.kind == Token::Kind::End ? msg + " (end of input)" : msg, t.line, t.column);
  }

  static Node make(ExprNode::Kind k, const Token& at) {
    auto n = std::make_unique<ExprNode>();
    n->kind = k;
    n->line = at.line;
    n->column = at.column;
    return n;
  }
  static Node binary(ExprNode::Kind k, const Token& at, Node a, Node b) {
    auto n = make(k, at);
    n->kids.push_back(std::move(a));
    n->kids.push_back(std::move(b));
    return n;
  }

  Node expr() {
    Node lhs = term();
    while (peek().kind == Token::Kind::Plus || peek().kind == Token::Kind::Minus) {
      const Token& op = take();
      Node rhs = term();
      lhs = binary(op.kind == Token::Kind::Plus ? ExprNode::Kind::Add : ExprNode::Kind::Sub, op,
                   std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Node term() {
    if (peek().kind == Token::Kind::Minus) {
      const Token& op = take();
      auto n = make(ExprNode::Kind::Neg, op);
      n->kids.push_back(term_body());
      return n;
    }
    return term_body();
  }

  Node term_body() {
    Node lhs = factor();
    while (peek().kind == Token::Kind::Star) {
      const Token& op = take();
      lhs = binary(ExprNode::Kind::Mul, op, std::move(lhs), factor());
    }
    return lhs;
  }

  Node factor() {
    Node base = atom();
    while (peek().kind == Token::Kind::Caret) {
      const Token& op = take();
      if (peek().kind == Token::Kind::Int) {
        const Token& e = take();
        if (e.text.size() > 4) throw ParseError("exponent too large", e.line, e.column);
        auto n = make(ExprNode::Kind::Pow, op);
        n->power = static_cast<unsigned>(std::stoul(e.text));
        n->kids.push_back(std::move(base));
        base = std::move(n);
      } else {
        base = binary(ExprNode::Kind::Wedge, op, std::move(base), atom());
      }
    }
    return base;
  }

  Node atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Kind::Int: {
        take();
        auto n = make(ExprNode::Kind::Number, t);
        mpz_class num(t.text);
        mpz_class den(1);
        if (peek().kind == Token::Kind::Slash) {
          take();
          if (peek().kind != Token::Kind::Int) fail("expected positive integer denominator");
          const Token& d = take();
          den = mpz_class(d.text);
          if (den == 0) throw ParseError("zero denominator", d.line, d.column);
        }
        n->value = Rational(num, den);
        n->value.canonicalize();
        return n;
      }
      case Token::Kind::Ident: {
        take();
        auto n = make(ExprNode::Kind::Identifier, t);
        n->name = t.text;
        return n;
      }
      case Token::Kind::LParen: {
        take();
        Node e = expr();
        if (peek().kind != Token::Kind::RParen) fail("expected ')'");
        take();
        return e;
      }
      default:
        fail(t.kind == Token::Kind::End ? "expected operand" : "unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

std::unique_ptr<ExprNode> parse_ast(const std::string& text, int line, int column) {
  return Parser(tokenize(text, line, column)).parse();
}

Polynomial evaluate_scalar(const ExprNode& n, const std::vector<std::string>& coords) {
  const std::size_t nv = coords.size();
  switch (n.kind) {
    case ExprNode::Kind::Number:
      return Polynomial::constant(nv, n.value);
    case ExprNode::Kind::Identifier: {
      auto it = std::find(coords.begin(), coords.end(), n.name);
      if (it == coords.end()) throw ParseError("unknown coordinate '" + n.name + "'", n.line, n.column);
      return Polynomial::variable(nv, static_cast<std::size_t>(it - coords.begin()));
    }
    case ExprNode::Kind::Add:
      return evaluate_scalar(*n.kids[0], coords) + evaluate_scalar(*n.kids[1], coords);
    case ExprNode::Kind::Sub:
      return evaluate_scalar(*n.kids[0], coords) - evaluate_scalar(*n.kids[1], coords);
    case ExprNode::Kind::Neg:
      return -evaluate_scalar(*n.kids[0], coords);
    case ExprNode::Kind::Mul:
      return evaluate_scalar(*n.kids[0], coords) * evaluate_scalar(*n.kids[1], coords);
    case ExprNode::Kind::Pow:
      return evaluate_scalar(*n.kids[0], coords).pow(n.power);
    case ExprNode::Kind::Wedge:
      throw ParseError("exponent must be a nonnegative integer", n.line, n.column);
  }
  throw ParseError("malformed expression", n.line, n.column);
}

Polynomial parse_expression(const std::string& text, const std::vector<std::string>& coords, int line,
                            int column) {
  return evaluate_scalar(*parse_ast(text, line, column), coords);
}

}  // namespace lrc
