#include "koszul/parser.hpp"

#include <cctype>

#include "koszul/errors.hpp"

namespace koszul {

namespace {

struct Cursor {
  const std::string& src;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= src.size();
  }
  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }
  char peek_at(std::size_t off) const {
    return pos + off < src.size() ? src[pos + off] : '\0';
  }
  bool consume(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

  long digits() {
    skip_ws();
    if (pos >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos])))
      fail("expected digits");
    long v = 0;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
      v = v * 10 + (src[pos] - '0');
      if (v > 1000000000L) fail("number too large");
      ++pos;
    }
    return v;
  }

  Rational rational() {
    skip_ws();
    bool neg = consume('-');
    long num = digits();
    long den = 1;
    if (peek() == '/') {
      ++pos;
      den = digits();
      if (den == 0) fail("zero denominator");
    }
    return rat(neg ? -num : num, den);
  }

  int index(int dim) {
    long i = digits();
    if (i < 1 || i > dim) fail("coordinate index out of range for dimension " + std::to_string(dim));
    return static_cast<int>(i - 1);
  }

  bool at_rational() {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '-';
  }
  bool at_xvar() {
    skip_ws();
    return peek() == 'x' && std::isdigit(static_cast<unsigned char>(peek_at(1)));
  }
  bool at_dx() {
    skip_ws();
    return peek() == 'd' && peek_at(1) == 'x' && std::isdigit(static_cast<unsigned char>(peek_at(2)));
  }
  bool at_dir() {
    skip_ws();
    return peek() == 'd' && std::isdigit(static_cast<unsigned char>(peek_at(1)));
  }
};

struct TermParts {
  Rational coeff{1};
  MultiIndex mono;
  bool any = false;
};

// [rational '*'] [monomial '*'] shared by forms and fields
TermParts parse_scalar_parts(Cursor& c, int dim) {
  TermParts t;
  t.mono.assign(static_cast<std::size_t>(dim), 0);
  if (c.at_rational()) {
    t.coeff = c.rational();
    t.any = true;
    if (!c.consume('*')) return t;  // pure scalar term
  }
  while (c.at_xvar()) {
    ++c.pos;  // 'x'
    int i = c.index(dim);
    int e = 1;
    c.skip_ws();
    if (c.peek() == '*' && c.peek_at(1) == '*') {
      c.pos += 2;
      e = static_cast<int>(c.digits());
    }
    t.mono[static_cast<std::size_t>(i)] += e;
    t.any = true;
    c.skip_ws();
    if (c.peek() == '*' && c.peek_at(1) != '*') {
      ++c.pos;
      continue;
    }
    break;
  }
  return t;
}

}  // namespace

PolyForm parse_form(const std::string& src, int dim) {
  if (dim < 1) throw InvalidInput("parse_form: dimension must be >= 1");
  Cursor c{src};
  PolyForm out(dim);
  if (c.eof()) c.fail("empty expression");
  while (true) {
    TermParts t = parse_scalar_parts(c, dim);
    std::vector<int> wedge;
    bool has_wedge = false;
    if (c.at_dx()) {
      has_wedge = true;
      while (true) {
        if (!c.at_dx()) c.fail("expected dx<i>");
        c.pos += 2;  // 'dx'
        wedge.push_back(c.index(dim));
        if (c.consume('^')) continue;
        break;
      }
    }
    if (!t.any && !has_wedge) c.fail("expected a term");
    // normalize the wedge: sort indices counting transpositions
    int sign = 1;
    bool zero = false;
    for (std::size_t i = 0; i < wedge.size() && !zero; ++i)
      for (std::size_t j = i + 1; j < wedge.size(); ++j) {
        if (wedge[i] == wedge[j]) {
          zero = true;
          break;
        }
        if (wedge[i] > wedge[j]) {
          std::swap(wedge[i], wedge[j]);
          sign = -sign;
          j = i;  // restart inner scan after a swap
        }
      }
    if (!zero && !is_zero(t.coeff)) {
      PolyScalar cf(dim);
      cf.add_term(t.mono, sign < 0 ? Rational(-t.coeff) : t.coeff);
      out.add_term(wedge, cf);
    }
    if (c.consume('+')) continue;
    break;
  }
  if (!c.eof()) c.fail("unexpected trailing input");
  return out;
}

PolyVectorField parse_field(const std::string& src, int dim) {
  if (dim < 1) throw InvalidInput("parse_field: dimension must be >= 1");
  Cursor c{src};
  PolyVectorField out(dim);
  if (c.eof()) c.fail("empty expression");
  while (true) {
    TermParts t = parse_scalar_parts(c, dim);
    if (c.at_dx()) c.fail("'dx<i>' is a form; fields use direction 'd<i>'");
    if (!c.at_dir()) {
      // a bare scalar term is only legal if it is literally zero
      if (t.any && is_zero(t.coeff)) {
        if (c.consume('+')) continue;
        break;
      }
      c.fail("expected direction d<i>");
    }
    ++c.pos;  // 'd'
    int i = c.index(dim);
    if (!is_zero(t.coeff)) {
      PolyScalar cf(dim);
      cf.add_term(t.mono, t.coeff);
      out.comp[static_cast<std::size_t>(i)] = out.comp[static_cast<std::size_t>(i)] + cf;
    }
    if (c.consume('+')) continue;
    break;
  }
  if (!c.eof()) c.fail("unexpected trailing input");
  return out;
}

}  // namespace koszul
