#include "trdeg/parse.hpp"

#include <cctype>

#include "trdeg/error.hpp"

namespace trdeg {

namespace {

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t offset = 0) : text_(text), offset_(offset) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::size_t position() const { return offset_ + pos_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, offset_ + pos_);
  }

  std::string digits() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string identifier() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  // Text up to the matching close bracket of an already consumed `open`.
  std::string_view until_matching(char open, char close) {
    std::size_t depth = 1;
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == open) ++depth;
      if (c == close && --depth == 0) {
        auto inner = text_.substr(start, pos_ - start);
        ++pos_;
        return inner;
      }
      ++pos_;
    }
    fail(std::string("unbalanced '") + open + "'");
  }

  std::size_t raw_pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

class ExprParser {
 public:
  ExprParser(std::string_view text, const RingPtr& ring) : cur_(text), ring_(ring) {}

  Element parse() {
    Element e = expr();
    if (!cur_.at_end()) cur_.fail("unexpected trailing input");
    return e;
  }

 private:
  Element expr() {
    bool negate = false;
    if (cur_.accept('-')) negate = true;
    else cur_.accept('+');
    Element acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (cur_.accept('+')) acc = acc + term();
      else if (cur_.accept('-')) acc = acc - term();
      else return acc;
    }
  }

  Element term() {
    Element acc = factor();
    while (cur_.accept('*')) acc = acc * factor();
    return acc;
  }

  Element factor() {
    std::optional<Element> base;
    char c = cur_.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t at = cur_.position();
      Integer num(cur_.digits());
      if (cur_.accept('/')) {
        Integer den(cur_.digits());
        if (den == 0) throw ParseError("zero denominator", at);
        try {
          base = ring_->from_rational(Rational(num, den));
        } catch (const RingMismatch& e) {
          throw ParseError(e.what(), at);
        }
      } else {
        base = ring_->from_integer(num);
      }
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t at = cur_.position();
      std::string name = cur_.identifier();
      base = ring_->variable_named(name);
      if (!base) throw ParseError("unknown variable '" + name + "'", at);
    } else if (cur_.accept('(')) {
      base = expr();
      cur_.expect(')');
    } else {
      cur_.fail(c ? std::string("unexpected '") + c + "'" : "unexpected end of input");
    }
    while (cur_.accept('^')) {
      const std::string e = cur_.digits();
      if (e.size() > 9) cur_.fail("exponent too large");
      base = base->pow(std::stoul(e));
    }
    return *base;
  }

  Cursor cur_;
  const RingPtr& ring_;
};

RingPtr parse_ring_at(Cursor& cur, std::string_view full) {
  const std::size_t at = cur.position();
  const std::string head = cur.identifier();
  if (head == "ZZ") return Ring::integers();
  if (head == "QQ") return Ring::rationals();
  try {
    if (head == "Zmod" || head == "GF") {
      cur.expect('(');
      Integer n(cur.digits());
      cur.expect(')');
      return head == "Zmod" ? Ring::zmod(n) : Ring::prime_field(n);
    }
    if (head == "Poly") {
      cur.expect('(');
      RingPtr base = parse_ring_at(cur, full);
      cur.expect(';');
      std::vector<std::string> vars;
      do {
        vars.push_back(cur.identifier());
      } while (cur.accept(','));
      cur.expect(')');
      return Ring::poly(std::move(base), std::move(vars));
    }
    if (head == "Quot") {
      cur.expect('(');
      RingPtr poly = parse_ring_at(cur, full);
      cur.expect(';');
      cur.expect('[');
      const std::size_t list_at = cur.position();
      std::string_view list = cur.until_matching('[', ']');
      cur.expect(')');
      if (poly->kind() != Ring::Kind::Poly) {
        throw ParseError("Quot needs a Poly ring", at);
      }
      std::vector<Polynomial> gens;
      std::size_t offset = 0;
      for (const auto& piece : split_top_level(list)) {
        try {
          gens.push_back(parse_poly(piece, poly));
        } catch (const ParseError& e) {
          throw ParseError(std::string("in ideal generator: ") + e.what(), list_at + offset);
        }
        offset += piece.size() + 1;
      }
      return Ring::quot(poly, std::move(gens));
    }
  } catch (const PreconditionViolation& e) {
    throw ParseError(e.what(), at);
  } catch (const UnsupportedConfiguration& e) {
    throw ParseError(e.what(), at);
  }
  throw ParseError("unknown ring '" + head + "'", at);
}

}  // namespace

RingPtr parse_ring(std::string_view text) {
  Cursor cur(text);
  RingPtr ring = parse_ring_at(cur, text);
  if (!cur.at_end()) cur.fail("unexpected trailing input after ring");
  return ring;
}

Element parse_element(std::string_view text, const RingPtr& ring) {
  return ExprParser(text, ring).parse();
}

Polynomial parse_poly(std::string_view text, const RingPtr& ring) {
  if (ring->is_scalar()) {
    throw RingMismatch("parse_poly needs a polynomial ring, got " + ring->descriptor());
  }
  return parse_element(text, ring).poly();
}

std::vector<std::string> split_top_level(std::string_view text, char separator) {
  std::vector<std::string> out;
  int depth = 0;
  std::string current;
  bool any = false;
  for (char c : text) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == separator && depth == 0) {
      out.push_back(current);
      current.clear();
      any = true;
      continue;
    }
    current += c;
  }
  bool blank = current.find_first_not_of(" \t\r\n") == std::string::npos;
  if (!blank || any) out.push_back(current);
  return out;
}

std::vector<Element> parse_element_list(std::string_view text, const RingPtr& ring,
                                        char separator) {
  std::vector<Element> out;
  for (const auto& piece : split_top_level(text, separator)) {
    out.push_back(parse_element(piece, ring));
  }
  return out;
}

Monomial parse_monomial(std::string_view text, std::span<const std::string> names) {
  Cursor cur(text);
  std::vector<Monomial::Entry> entries;
  if (cur.peek() == '1') {
    cur.digits();
    if (!cur.at_end()) cur.fail("unexpected input after constant monomial");
    return Monomial{};
  }
  do {
    const std::size_t at = cur.position();
    const std::string name = cur.identifier();
    Var v = 0;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == name) v = static_cast<Var>(i + 1);
    }
    if (v == 0 && name.size() >= 2 && name[0] == 'x' &&
        name.find_first_not_of("0123456789", 1) == std::string::npos) {
      v = static_cast<Var>(std::stoul(name.substr(1)));
    }
    if (v == 0) throw ParseError("unknown variable '" + name + "'", at);
    Exp e = 1;
    if (cur.accept('^')) e = static_cast<Exp>(std::stoul(cur.digits()));
    entries.emplace_back(v, e);
  } while (cur.accept('*'));
  if (!cur.at_end()) cur.fail("unexpected input in monomial");
  return Monomial(std::move(entries));
}

}  // namespace trdeg
