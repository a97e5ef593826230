#include "hallcl/text.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace hallcl {

namespace {

enum class Tok { Int, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen, LBracket, RBracket, Comma, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
public:
  explicit Lexer(std::string_view s) : s_(s) { tokenize(); }

  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t i = idx_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  Token next() {
    const Token& t = peek();
    if (t.kind != Tok::End) ++idx_;
    return t;
  }
  Token expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) throw ParseError(peek().pos, what);
    return next();
  }

private:
  void tokenize() {
    std::size_t i = 0;
    while (i < s_.size()) {
      const char c = s_[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t j = i;
        while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
        toks_.push_back({Tok::Int, std::string(s_.substr(i, j - i)), i});
        i = j;
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c))) {
        std::size_t j = i;
        while (j < s_.size() && std::isalpha(static_cast<unsigned char>(s_[j]))) ++j;
        toks_.push_back({Tok::Name, std::string(s_.substr(i, j - i)), i});
        i = j;
        continue;
      }
      Tok k;
      switch (c) {
        case '+': k = Tok::Plus; break;
        case '-': k = Tok::Minus; break;
        case '*': k = Tok::Star; break;
        case '/': k = Tok::Slash; break;
        case '^': k = Tok::Caret; break;
        case '(': k = Tok::LParen; break;
        case ')': k = Tok::RParen; break;
        case '[': k = Tok::LBracket; break;
        case ']': k = Tok::RBracket; break;
        case ',': k = Tok::Comma; break;
        default: throw ParseError(i, "a valid token (digit, letter, + - * / ^ ( ) [ ] ,)");
      }
      toks_.push_back({k, std::string(1, c), i});
      ++i;
    }
    toks_.push_back({Tok::End, "", s_.size()});
  }

  std::string_view s_;
  std::vector<Token> toks_;
  std::size_t idx_ = 0;
};

int parse_small_int(const Token& t) {
  if (t.text.size() > 6) throw ParseError(t.pos, "a smaller integer");
  return std::stoi(t.text);
}

class CoeffParser {
public:
  explicit CoeffParser(Lexer& lx, bool element_context) : lx_(lx), element_(element_context) {}

  QRat sum() {
    QRat acc = prod();
    while (lx_.peek().kind == Tok::Plus || lx_.peek().kind == Tok::Minus) {
      const bool minus = lx_.next().kind == Tok::Minus;
      const QRat r = prod();
      acc = minus ? acc - r : acc + r;
    }
    return acc;
  }

  QRat prod() {
    QRat acc = unary();
    while (true) {
      const Tok k = lx_.peek().kind;
      if (k == Tok::Star) {
        // In an element, a '*' directly followed by `B[` belongs to the
        // enclosing term, not to this coefficient.
        if (element_ && lx_.peek(1).kind == Tok::Name && basis_from_name(lx_.peek(1).text) &&
            lx_.peek(2).kind == Tok::LBracket)
          break;
        lx_.next();
        acc *= unary();
      } else if (k == Tok::Slash) {
        lx_.next();
        const QRat d = unary();
        if (d.is_zero()) throw ParseError(lx_.peek().pos, "a nonzero divisor");
        acc /= d;
      } else {
        break;
      }
    }
    return acc;
  }

  QRat unary() {
    bool neg = false;
    while (lx_.peek().kind == Tok::Minus || lx_.peek().kind == Tok::Plus) {
      if (lx_.next().kind == Tok::Minus) neg = !neg;
    }
    QRat v = power();
    return neg ? -v : v;
  }

  QRat power() {
    QRat base = atom();
    if (lx_.peek().kind == Tok::Caret) {
      lx_.next();
      bool eneg = false;
      if (lx_.peek().kind == Tok::Minus) {
        lx_.next();
        eneg = true;
      }
      const Token t = lx_.expect(Tok::Int, "an integer exponent");
      int e = parse_small_int(t);
      if (eneg) e = -e;
      if (base.is_zero() && e < 0) throw ParseError(t.pos, "a nonnegative exponent of zero");
      base = base.pow(e);
    }
    return base;
  }

  QRat atom() {
    const Token& t = lx_.peek();
    if (t.kind == Tok::Int) {
      lx_.next();
      return QRat(rational_from_string(t.text));
    }
    if (t.kind == Tok::Name) {
      if (t.text == "q") {
        lx_.next();
        return QRat::q();
      }
      throw ParseError(t.pos, "'q', an integer, or '('");
    }
    if (t.kind == Tok::LParen) {
      lx_.next();
      QRat v = sum();
      lx_.expect(Tok::RParen, "')'");
      return v;
    }
    throw ParseError(t.pos, "'q', an integer, or '('");
  }

private:
  Lexer& lx_;
  bool element_;
};

Partition parse_parts(Lexer& lx) {
  lx.expect(Tok::LBracket, "'['");
  std::vector<int> parts;
  if (lx.peek().kind != Tok::RBracket) {
    while (true) {
      const Token t = lx.expect(Tok::Int, "a positive integer part");
      const int v = parse_small_int(t);
      if (v <= 0) throw ParseError(t.pos, "a positive integer part");
      if (!parts.empty() && parts.back() < v)
        throw ParseError(t.pos, "weakly decreasing parts");
      parts.push_back(v);
      if (lx.peek().kind != Tok::Comma) break;
      lx.next();
    }
  }
  lx.expect(Tok::RBracket, "']'");
  return Partition{std::move(parts)};
}

struct BasisTerm {
  Basis basis;
  Partition lambda;
  QRat coeff;
};

BasisTerm parse_eterm(Lexer& lx) {
  // Either `B[...]` directly, or a coefficient expression, '*', `B[...]`.
  if (lx.peek().kind == Tok::Name && basis_from_name(lx.peek().text) &&
      lx.peek(1).kind == Tok::LBracket) {
    const Basis b = *basis_from_name(lx.next().text);
    return {b, parse_parts(lx), QRat(1)};
  }
  CoeffParser cp(lx, /*element_context=*/true);
  QRat c = cp.prod();
  lx.expect(Tok::Star, "'*' before a basis term");
  const Token name = lx.expect(Tok::Name, "a basis name in {I,X,e,P,Q,p}");
  const auto b = basis_from_name(name.text);
  if (!b) throw ParseError(name.pos, "a basis name in {I,X,e,P,Q,p}");
  return {*b, parse_parts(lx), std::move(c)};
}

} // namespace

QRat parse_coeff(std::string_view text) {
  Lexer lx(text);
  CoeffParser cp(lx, /*element_context=*/false);
  QRat v = cp.sum();
  if (lx.peek().kind != Tok::End) throw ParseError(lx.peek().pos, "end of input");
  return v;
}

Partition parse_partition(std::string_view text) {
  Lexer lx(text);
  Partition p = parse_parts(lx);
  if (lx.peek().kind != Tok::End) throw ParseError(lx.peek().pos, "end of input");
  return p;
}

HallElement parse_element(std::string_view text) {
  Lexer lx(text);
  // Zero literal.
  if (lx.peek().kind == Tok::Int && lx.peek().text == "0" && lx.peek(1).kind == Tok::End)
    return HallElement(Basis::I);

  std::optional<Basis> basis;
  HallElement acc(Basis::I);
  bool neg = false;
  if (lx.peek().kind == Tok::Minus) {
    lx.next();
    neg = true;
  }
  while (true) {
    const std::size_t tpos = lx.peek().pos;
    BasisTerm t = parse_eterm(lx);
    if (!basis) {
      basis = t.basis;
      acc = HallElement(t.basis);
    } else if (t.basis != *basis) {
      throw ParseError(tpos, std::string("basis '") + basis_name(*basis) +
                                 "' matching the preceding terms");
    }
    acc.add_term(t.lambda, neg ? -t.coeff : t.coeff);
    const Tok k = lx.peek().kind;
    if (k == Tok::Plus || k == Tok::Minus) {
      neg = lx.next().kind == Tok::Minus;
      continue;
    }
    break;
  }
  if (lx.peek().kind != Tok::End) throw ParseError(lx.peek().pos, "'+', '-', or end of input");
  return acc;
}

namespace {

std::string rational_str(const Rational& r) { return r.get_str(); }

/// One monomial |c| q^e without the sign, in the element/coefficient grammar.
std::string monomial_str(const Rational& abs_coeff, int e) {
  if (e == 0) return rational_str(abs_coeff);
  const std::string qs = (e == 1) ? "q" : "q^" + std::to_string(e);
  if (abs_coeff == 1) return qs;
  return rational_str(abs_coeff) + "*" + qs;
}

} // namespace

std::string format_qpoly(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0;
    const Rational a = negative ? Rational(-c) : c;
    if (first) {
      out += negative ? "-" : "";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    out += monomial_str(a, e);
  }
  return out;
}

std::string format_qrat(const QRat& r) {
  if (r.is_polynomial()) return format_qpoly(r.num());
  const bool pn = r.num().terms().size() > 1;
  const bool pd = r.den().terms().size() > 1;
  std::string out = pn ? "(" + format_qpoly(r.num()) + ")" : format_qpoly(r.num());
  out += "/";
  out += pd ? "(" + format_qpoly(r.den()) + ")" : format_qpoly(r.den());
  return out;
}

std::string format_element(const HallElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [lam, c] : x.terms()) {
    // Pull the sign out only for coefficients that print as one monomial.
    const bool simple = c.is_polynomial() && c.num().terms().size() == 1;
    bool negative = false;
    QRat body = c;
    if (simple && c.num().terms().begin()->second < 0) {
      negative = true;
      body = -c;
    }
    if (first) {
      out += negative ? "- " : "";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string name = std::string(basis_name(x.basis())) + lam.to_string();
    if (body.is_one()) {
      out += name;
    } else if (simple) {
      const auto& [e, v] = *body.num().terms().begin();
      out += monomial_str(v, e) + "*" + name;
    } else {
      out += "(" + format_qrat(body) + ")*" + name;
    }
  }
  return out;
}

} // namespace hallcl
