#include "trigroup/expr.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace trigroup {

namespace {

struct Token {
  enum class Kind { Ident, Hash, Plus, Minus, LParen, RParen, End };
  Kind kind;
  std::string text;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '#') {
      out.push_back({Token::Kind::Hash, "#"});
      ++i;
    } else if (c == '+') {
      out.push_back({Token::Kind::Plus, "+"});
      ++i;
    } else if (c == '-') {
      out.push_back({Token::Kind::Minus, "-"});
      ++i;
    } else if (c == '(') {
      out.push_back({Token::Kind::LParen, "("});
      ++i;
    } else if (c == ')') {
      out.push_back({Token::Kind::RParen, ")"});
      ++i;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      out.push_back({Token::Kind::Ident, s.substr(i, j - i)});
      i = j;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' in expression");
    }
  }
  out.push_back({Token::Kind::End, ""});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, const std::map<std::string, TriangleElement>& inputs,
         const EvalOptions& opts)
      : tokens_(std::move(tokens)), inputs_(inputs), opts_(opts) {}

  TriangleElement run() {
    TriangleElement v = expression();
    if (peek().kind != Token::Kind::End) throw ParseError("trailing input after expression");
    return v;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token take() { return tokens_[pos_++]; }

  TriangleElement expression() {
    TriangleElement acc = term();
    std::optional<Token::Kind> level_op;
    while (peek().kind == Token::Kind::Hash || peek().kind == Token::Kind::Plus) {
      const Token op = take();
      if (level_op && *level_op != op.kind)
        throw ParseError("mixed '#' and '+' need explicit parentheses");
      level_op = op.kind;
      const TriangleElement rhs = term();
      acc = (op.kind == Token::Kind::Hash) ? apply_presum(acc, rhs) : sum(acc, rhs);
    }
    return acc;
  }

  TriangleElement term() {
    const Token t = take();
    switch (t.kind) {
      case Token::Kind::Minus: {
        const TriangleElement v = term();
        return TriangleElement(-v.delta()[0], -v.delta()[1], -v.delta()[2]);
      }
      case Token::Kind::LParen: {
        const TriangleElement v = expression();
        expect(Token::Kind::RParen, "')'");
        return v;
      }
      case Token::Kind::Ident: {
        if (t.text == "half" && peek().kind == Token::Kind::LParen) {
          take();
          const TriangleElement v = expression();
          expect(Token::Kind::RParen, "')'");
          return half(v, opts_.frame);
        }
        const auto it = inputs_.find(t.text);
        if (it == inputs_.end()) throw ParseError("unknown element '" + t.text + "'");
        return it->second;
      }
      default:
        throw ParseError("expected an element, '(' or '-', got '" + t.text + "'");
    }
  }

  TriangleElement apply_presum(const TriangleElement& a, const TriangleElement& b) {
    if (opts_.geometric) return presum_geometric(a, b, opts_.frame);
    return presum_coords(a, b);
  }

  void expect(Token::Kind k, const char* what) {
    if (take().kind != k) throw ParseError(std::string("expected ") + what);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const std::map<std::string, TriangleElement>& inputs_;
  const EvalOptions& opts_;
};

}  // namespace

TriangleElement eval_expression(const std::string& text,
                                const std::map<std::string, TriangleElement>& inputs,
                                const EvalOptions& opts) {
  return Parser(tokenize(text), inputs, opts).run();
}

}  // namespace trigroup
