#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "wlpkit/poly_gcd.hpp"
#include "wlpkit/polyring.hpp"

namespace wlpkit {

namespace detail {

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t offset) : text_(text), offset_(offset) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
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
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(position(), what); }

  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
    }
    if (start == pos_) fail("expected an identifier");
    return std::string(text_.substr(start, pos_ - start));
  }

 private:
  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

// expr := ['+'|'-'] term (('+'|'-') term)*
// term := factor (['*'] factor)*
// factor := primary ['^' int];  primary := int ['/' int] | var | '(' expr ')' | '-' factor
class PolyParser {
 public:
  PolyParser(const Ring& ring, std::string_view text, std::size_t offset)
      : ring_(ring), cur_(text, offset), n_(ring->num_vars()) {}

  Poly parse() {
    Poly p = expr();
    if (!cur_.at_end()) cur_.fail(std::string("unexpected '") + cur_.peek() + "'");
    return p;
  }

 private:
  Poly constant(const Scalar& c) const { return Poly::constant(ring_->field(), n_, c); }

  Poly expr() {
    Poly acc(ring_->field(), n_);
    bool negate = false;
    if (cur_.accept('-')) {
      negate = true;
    } else {
      cur_.accept('+');
    }
    Poly t = term();
    acc = negate ? acc - t : acc + t;
    while (true) {
      if (cur_.accept('+')) {
        acc = acc + term();
      } else if (cur_.accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  bool starts_factor() {
    const char c = cur_.peek();
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_';
  }

  Poly term() {
    Poly acc = factor();
    while (true) {
      if (cur_.accept('*')) {
        acc = acc * factor();
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  Poly factor() {
    Poly base = primary();
    if (cur_.accept('^')) {
      const std::string e = cur_.digits();
      if (e.size() > 4) cur_.fail("exponent too large");
      const int k = std::stoi(e);
      Poly out = constant(Scalar::one(ring_->field()));
      for (int i = 0; i < k; ++i) out = out * base;
      return out;
    }
    return base;
  }

  Poly primary() {
    if (cur_.accept('(')) {
      Poly p = expr();
      cur_.expect(')');
      return p;
    }
    if (cur_.accept('-')) return constant(Scalar(ring_->field())) - factor();
    const char c = cur_.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const mpz_class num(cur_.digits());
      mpz_class den = 1;
      if (cur_.accept('/')) {
        const std::size_t at = cur_.position();
        den = mpz_class(cur_.digits());
        if (den == 0) throw ParseError(at, "zero denominator");
      }
      const std::size_t at = cur_.position();
      try {
        return constant(Scalar::from_fraction(ring_->field(), num, den));
      } catch (const Error& e) {
        throw ParseError(at, e.what());
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t at = cur_.position() + 0;
      const std::string name = cur_.identifier();
      const auto& names = ring_->names();
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == name) {
          Poly p(ring_->field(), n_);
          p.add_term(Monomial::variable(n_, i), Scalar::one(ring_->field()));
          return p;
        }
      }
      throw ParseError(at, "unknown variable '" + name + "'");
    }
    if (c == '\0') cur_.fail("unexpected end of input");
    cur_.fail(std::string("unexpected '") + c + "'");
  }

  Ring ring_;
  Cursor cur_;
  std::size_t n_;
};

}  // namespace detail

/// QQ[x,y,z] or GF(p)[x1,x2,x3].
inline Ring parse_ring(std::string_view text) {
  detail::Cursor cur(text, 0);
  FieldSpec field;
  const std::string head = cur.identifier();
  if (head == "QQ") {
    field = FieldSpec::rationals();
  } else if (head == "GF") {
    cur.expect('(');
    const std::size_t at = cur.position();
    const std::string p = cur.digits();
    if (p.size() > 19) throw ParseError(at, "modulus too large");
    field = FieldSpec::prime_field(std::stoull(p));
    cur.expect(')');
  } else {
    throw ParseError(0, "unknown field '" + head + "' (expected QQ or GF(p))");
  }
  cur.expect('[');
  std::vector<std::string> names;
  do {
    const std::size_t at = cur.position();
    std::string name = cur.identifier();
    for (const auto& seen : names) {
      if (seen == name) throw ParseError(at, "duplicate variable '" + name + "'");
    }
    names.push_back(std::move(name));
  } while (cur.accept(','));
  cur.expect(']');
  if (!cur.at_end()) cur.fail("trailing input");
  return RingCtx::make(field, std::move(names));
}

namespace detail {

inline HomogeneousForm parse_poly_at(const Ring& ring, std::string_view text, std::size_t offset) {
  Poly p = PolyParser(ring, text, offset).parse();
  if (p.is_zero()) return HomogeneousForm(ring, 0);
  const int d = p.terms.begin()->first.degree();
  for (const auto& [m, c] : p.terms) {
    if (m.degree() != d) {
      throw Error(Errc::not_homogeneous, "terms of degrees " + std::to_string(d) + " and " +
                                             std::to_string(m.degree()) + " in '" + std::string(text) + "'");
    }
  }
  return to_form(ring, p);
}

}  // namespace detail

/// A homogeneous polynomial; the zero polynomial comes back in degree 0.
inline HomogeneousForm parse_poly(const Ring& ring, std::string_view text) { return detail::parse_poly_at(ring, text, 0); }

/// Comma-separated forms, commas inside parentheses excluded.
inline std::vector<HomogeneousForm> parse_form_list(const Ring& ring, std::string_view text) {
  std::vector<HomogeneousForm> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const char c = i < text.size() ? text[i] : ',';
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      const std::string_view piece = text.substr(start, i - start);
      if (piece.find_first_not_of(" \t\n") == std::string_view::npos) throw ParseError(start, "empty list entry");
      out.push_back(detail::parse_poly_at(ring, piece, start));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace wlpkit
