#include "ordertype/parse.hpp"

#include <cctype>
#include <charconv>

#include "ordertype/errors.hpp"

namespace ordertype {

namespace {

struct Token {
  enum class Type { Number, Name, Plus, Star, LParen, RParen, Comma, End };
  Type type;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Token::Type::Number, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i]))) ++i;
      std::string name(s.substr(start, i - start));
      if ((name == "w" || name == "w1") && i < s.size() && s[i] == '*') {
        name += '*';
        ++i;
      }
      out.push_back({Token::Type::Name, std::move(name), start});
      continue;
    }
    Token::Type type;
    switch (c) {
      case '+': type = Token::Type::Plus; break;
      case '*': type = Token::Type::Star; break;
      case '(': type = Token::Type::LParen; break;
      case ')': type = Token::Type::RParen; break;
      case ',': type = Token::Type::Comma; break;
      default:
        throw ParseError(ErrorKind::Syntax, std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({type, std::string(1, c), start});
    ++i;
  }
  out.push_back({Token::Type::End, "", s.size()});
  return out;
}

std::size_t arityOf(const std::string& fn) {
  if (fn == "rev" || fn == "cc" || fn == "fc") return 1;
  if (fn == "mulw" || fn == "mulf") return 2;
  return 0;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  Expr parseAll() {
    Expr e = expr();
    if (peek().type != Token::Type::End) fail("expected '+', '*' or end of input");
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    const Token& t = peek();
    const std::string near = t.type == Token::Type::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(ErrorKind::Syntax, what + " at position " + std::to_string(t.pos) + " near " + near,
                     t.pos);
  }

  void expect(Token::Type type, const char* what) {
    if (peek().type != type) fail(std::string("expected ") + what);
    ++pos_;
  }

  Expr binary(Expr::Op op, Expr lhs, Expr rhs) {
    Expr e;
    e.op = op;
    e.position = lhs.position;
    e.args.push_back(std::move(lhs));
    e.args.push_back(std::move(rhs));
    return e;
  }

  Expr expr() {
    Expr lhs = term();
    while (peek().type == Token::Type::Plus) {
      ++pos_;
      lhs = binary(Expr::Op::Sum, std::move(lhs), term());
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = factor();
    while (peek().type == Token::Type::Star) {
      ++pos_;
      lhs = binary(Expr::Op::Product, std::move(lhs), factor());
    }
    return lhs;
  }

  Expr factor() {
    const Token& t = peek();
    Expr e;
    e.position = t.pos;
    switch (t.type) {
      case Token::Type::Number: {
        ++pos_;
        std::uint64_t n = 0;
        auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), n);
        if (ec != std::errc()) throw ParseError(ErrorKind::Syntax, "number out of range", t.pos);
        e.atom = OrderTerm::finite(n);
        return e;
      }
      case Token::Type::LParen: {
        ++pos_;
        e = expr();
        expect(Token::Type::RParen, "')'");
        return e;
      }
      case Token::Type::Name:
        return named();
      default:
        fail("expected an order type");
    }
  }

  Expr named() {
    const Token t = next();
    Expr e;
    e.position = t.pos;
    static const std::pair<const char*, Kind> atoms[] = {
        {"w", Kind::Nat},       {"w*", Kind::NatRev},     {"z", Kind::Int},
        {"q", Kind::Rat},       {"w1", Kind::Omega1},     {"w1*", Kind::Omega1Rev},
        {"w2", Kind::Omega2},   {"U", Kind::ULine},
    };
    for (const auto& [name, kind] : atoms) {
      if (t.text == name) {
        e.atom = OrderTerm::atom(kind);
        return e;
      }
    }
    const std::size_t arity = arityOf(t.text);
    if (arity == 0) throw ParseError(ErrorKind::Syntax, "unknown name '" + t.text + "'", t.pos);
    e.op = Expr::Op::Call;
    e.function = t.text;
    expect(Token::Type::LParen, "'(' after function name");
    e.args.push_back(expr());
    while (peek().type == Token::Type::Comma) {
      ++pos_;
      e.args.push_back(expr());
    }
    expect(Token::Type::RParen, "')'");
    if (e.args.size() != arity)
      throw ParseError(ErrorKind::Arity,
                       t.text + " expects " + std::to_string(arity) + " argument(s), got " +
                           std::to_string(e.args.size()),
                       t.pos);
    return e;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parseExpr(std::string_view text) { return Parser(text).parseAll(); }

OrderTerm toTerm(const Expr& expr, const CallHandler& handler) {
  switch (expr.op) {
    case Expr::Op::Atom:
      return expr.atom;
    case Expr::Op::Sum:
      return OrderTerm::sum({toTerm(expr.args[0], handler), toTerm(expr.args[1], handler)});
    case Expr::Op::Product:
      return OrderTerm::product(toTerm(expr.args[0], handler), toTerm(expr.args[1], handler));
    case Expr::Op::Call: {
      std::vector<OrderTerm> args;
      for (const auto& a : expr.args) args.push_back(toTerm(a, handler));
      if (expr.function == "rev") return OrderTerm::rev(args[0]);
      if (!handler)
        throw ParseError(ErrorKind::Syntax, "function '" + expr.function + "' needs an evaluator",
                         expr.position);
      return handler(expr.function, args);
    }
  }
  return {};
}

}  // namespace ordertype
