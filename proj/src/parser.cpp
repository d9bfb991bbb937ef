#include "divcert/parser.hpp"

#include <cctype>
#include <optional>
#include <set>

#include "divcert/error.hpp"

namespace divcert {

namespace {

enum class Tok { Ident, Number, Plus, Minus, Star, Caret, Slash, Comma, Semi, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

[[noreturn]] void fail(int line, int column, const std::string& msg) {
  throw Error(ErrorKind::Syntax, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg);
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&] {
    if (s[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
      continue;
    }
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') advance();
      continue;
    }
    const int l = line, k = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id;
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
        id += s[i];
        advance();
      }
      out.push_back({Tok::Ident, id, l, k});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        num += s[i];
        advance();
      }
      if (i < s.size() && (s[i] == '.' || s[i] == 'e' || s[i] == 'E'))
        fail(line, col, "non-rational coefficient: only integers and a/b are allowed");
      out.push_back({Tok::Number, num, l, k});
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '^': kind = Tok::Caret; break;
      case '/': kind = Tok::Slash; break;
      case ',': kind = Tok::Comma; break;
      case ';': kind = Tok::Semi; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default: fail(l, k, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, std::string(1, c), l, k});
    advance();
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    take();
    return true;
  }
  Token expect(Tok k, const char* what) {
    if (peek().kind != k) fail(peek().line, peek().column, std::string("expected ") + what + describe(peek()));
    return take();
  }
  static std::string describe(const Token& t) {
    return t.kind == Tok::End ? ", found end of input" : ", found '" + t.text + "'";
  }

  Polynomial expression(const RingPtr& ring) {
    Polynomial acc(ring);
    bool negate = false;
    if (accept(Tok::Minus))
      negate = true;
    else
      accept(Tok::Plus);
    while (true) {
      Polynomial t = term(ring);
      acc += negate ? -t : t;
      if (accept(Tok::Plus))
        negate = false;
      else if (accept(Tok::Minus))
        negate = true;
      else
        break;
    }
    return acc;
  }

  std::vector<Polynomial> list(const RingPtr& ring) {
    std::vector<Polynomial> out;
    if (peek().kind == Tok::Semi || peek().kind == Tok::End) return out;
    out.push_back(expression(ring));
    while (accept(Tok::Comma)) out.push_back(expression(ring));
    return out;
  }

 private:
  Polynomial term(const RingPtr& ring) {
    Polynomial acc = factor(ring);
    while (true) {
      if (accept(Tok::Star)) {
        acc = acc * factor(ring);
        continue;
      }
      const Token& t = peek();
      if (t.kind == Tok::Ident || t.kind == Tok::Number || t.kind == Tok::LParen)
        fail(t.line, t.column, "implicit multiplication is not allowed; write '*'");
      return acc;
    }
  }

  Polynomial factor(const RingPtr& ring) {
    Polynomial base = atom(ring);
    if (accept(Tok::Caret)) {
      Token e = expect(Tok::Number, "an integer exponent");
      if (e.text.size() > 4) fail(e.line, e.column, "exponent too large");
      base = pow(base, std::stoi(e.text));
    }
    return base;
  }

  Polynomial atom(const RingPtr& ring) {
    const Token t = take();
    switch (t.kind) {
      case Tok::Number: {
        Rational q(Integer(t.text), 1);
        if (accept(Tok::Slash)) {
          Token d = expect(Tok::Number, "a denominator");
          Integer den(d.text);
          if (den == 0) fail(d.line, d.column, "zero denominator");
          q = Rational(Integer(t.text), den);
          q.canonicalize();
        }
        return Polynomial::constant(ring, q);
      }
      case Tok::Ident: {
        auto idx = ring->index_of(t.text);
        if (!idx) fail(t.line, t.column, "unknown variable '" + t.text + "'");
        return Polynomial::variable(ring, *idx);
      }
      case Tok::LParen: {
        Polynomial p = expression(ring);
        expect(Tok::RParen, "')'");
        return p;
      }
      default: fail(t.line, t.column, "expected a number, variable or '('" + describe(t));
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  Parser p(lex(text));
  Polynomial out = p.expression(ring);
  if (p.peek().kind != Tok::End) fail(p.peek().line, p.peek().column, "trailing input" + Parser::describe(p.peek()));
  return out;
}

ProblemInstance parse_instance(std::string_view text, MonomialOrder order, InstanceOptions options) {
  Parser p(lex(text));
  RingPtr ring;
  std::optional<std::vector<Polynomial>> variety, gens;
  std::optional<Polynomial> target;

  while (p.peek().kind != Tok::End) {
    const Token kw = p.expect(Tok::Ident, "a statement keyword");
    if (kw.text == "ring") {
      if (ring) fail(kw.line, kw.column, "duplicate 'ring' statement");
      std::vector<std::string> names;
      std::set<std::string> seen;
      while (p.peek().kind == Tok::Ident) {
        Token v = p.take();
        if (v.text.front() == '_') fail(v.line, v.column, "identifiers starting with '_' are reserved");
        if (!seen.insert(v.text).second) fail(v.line, v.column, "duplicate variable '" + v.text + "'");
        names.push_back(v.text);
      }
      if (names.empty()) fail(p.peek().line, p.peek().column, "'ring' needs at least one variable");
      if (static_cast<int>(names.size()) + 2 > kMaxVariables)
        fail(kw.line, kw.column, "too many variables (at most " + std::to_string(kMaxVariables - 2) + ")");
      ring = Ring::make(std::move(names), order);
    } else if (kw.text == "variety" || kw.text == "gens" || kw.text == "target") {
      if (!ring) fail(kw.line, kw.column, "'" + kw.text + "' before the 'ring' statement");
      if (kw.text == "target") {
        if (target) fail(kw.line, kw.column, "duplicate 'target' statement");
        target = p.expression(ring);
      } else {
        auto& slot = kw.text == "gens" ? gens : variety;
        if (slot) fail(kw.line, kw.column, "duplicate '" + kw.text + "' statement");
        slot = p.list(ring);
      }
    } else {
      fail(kw.line, kw.column, "unknown statement '" + kw.text + "'");
    }
    if (!p.accept(Tok::Semi) && p.peek().kind != Tok::End)
      fail(p.peek().line, p.peek().column, "expected ';'" + Parser::describe(p.peek()));
  }
  if (!ring) fail(1, 1, "missing 'ring' statement");
  if (!gens || gens->empty()) fail(p.peek().line, p.peek().column, "missing or empty 'gens' statement");
  Polynomial phi = target ? *target : Polynomial(ring);
  return make_instance(ring, variety.value_or(std::vector<Polynomial>{}), std::move(*gens), std::move(phi), options);
}

}  // namespace divcert
