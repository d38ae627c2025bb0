#include "koszul/element.hpp"

#include "koszul/ce.hpp"
#include "koszul/errors.hpp"

namespace koszul {

SmallGElement sg_form(const PolyForm& w) { return SmallGElement{w, PolyVectorField(w.n), PolyVectorField(w.n)}; }
SmallGElement sg_iota(const PolyVectorField& X) { return SmallGElement{PolyForm(X.n), X, PolyVectorField(X.n)}; }
SmallGElement sg_lie(const PolyVectorField& Y) { return SmallGElement{PolyForm(Y.n), PolyVectorField(Y.n), Y}; }

bool LieCoords::is_zero() const {
  for (const auto& q : c)
    if (!koszul::is_zero(q)) return false;
  return true;
}

bool Element::is_zero() const {
  return std::visit(
      [](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return true;
        } else if constexpr (std::is_same_v<T, CeRef>) {
          return !v || v->comps.empty();
        } else {
          return v.is_zero();
        }
      },
      value);
}

Element zero_element() { return Element(); }

namespace {

template <class T>
Element wrap(T v, int degree) {
  return Element(Value(std::move(v)), degree);
}

}  // namespace

Element element_add(const Element& a, const Element& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.value.index() != b.value.index()) throw InvalidInput("element_add: mixed payload kinds");
  if (a.degree != b.degree) throw InvalidInput("element_add: mixed degrees");
  if (auto* x = std::get_if<PolyForm>(&a.value)) return wrap(*x + std::get<PolyForm>(b.value), a.degree);
  if (auto* x = std::get_if<PolyVectorField>(&a.value))
    return wrap(*x + std::get<PolyVectorField>(b.value), a.degree);
  if (auto* x = std::get_if<SmallGElement>(&a.value)) {
    const auto& y = std::get<SmallGElement>(b.value);
    return wrap(SmallGElement{x->form + y.form, x->iota + y.iota, x->lie + y.lie}, a.degree);
  }
  if (auto* x = std::get_if<GradedPoly>(&a.value)) return wrap(*x + std::get<GradedPoly>(b.value), a.degree);
  if (auto* x = std::get_if<LieCoords>(&a.value)) {
    const auto& y = std::get<LieCoords>(b.value);
    if (x->c.size() != y.c.size()) throw InvalidInput("element_add: Lie coordinate length mismatch");
    LieCoords r = *x;
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] += y.c[i];
    return wrap(std::move(r), a.degree);
  }
  if (auto* x = std::get_if<CeRef>(&a.value))
    return wrap(ce_add(*x, std::get<CeRef>(b.value)), a.degree);
  throw InvalidInput("element_add: unhandled payload");
}

Element element_scale(const Rational& c, const Element& a) {
  if (koszul::is_zero(c) || a.is_zero()) return zero_element();
  if (auto* x = std::get_if<PolyForm>(&a.value)) return wrap(c * *x, a.degree);
  if (auto* x = std::get_if<PolyVectorField>(&a.value)) return wrap(c * *x, a.degree);
  if (auto* x = std::get_if<SmallGElement>(&a.value))
    return wrap(SmallGElement{c * x->form, c * x->iota, c * x->lie}, a.degree);
  if (auto* x = std::get_if<GradedPoly>(&a.value)) return wrap(c * *x, a.degree);
  if (auto* x = std::get_if<LieCoords>(&a.value)) {
    LieCoords r = *x;
    for (auto& q : r.c) q *= c;
    return wrap(std::move(r), a.degree);
  }
  if (auto* x = std::get_if<CeRef>(&a.value)) return wrap(ce_scale(c, *x), a.degree);
  throw InvalidInput("element_scale: unhandled payload");
}

Element element_neg(const Element& a) { return element_scale(Rational(-1), a); }

bool element_equal(const Element& a, const Element& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.value.index() != b.value.index()) return false;
  if (std::holds_alternative<CeRef>(a.value))
    throw InvalidInput("element_equal: CE payloads need sampled comparison");
  return a.value == b.value && a.degree == b.degree;
}

namespace {

template <class T>
int cmp3(const T& a, const T& b) {
  if (a < b) return -1;
  if (b < a) return 1;
  return 0;
}

int cmp_scalar(const PolyScalar& a, const PolyScalar& b) {
  if (int c = cmp3(a.n, b.n)) return c;
  return cmp3(a.terms, b.terms);
}

int cmp_form(const PolyForm& a, const PolyForm& b) {
  if (int c = cmp3(a.n, b.n)) return c;
  auto ia = a.terms.begin();
  auto ib = b.terms.begin();
  for (; ia != a.terms.end() && ib != b.terms.end(); ++ia, ++ib) {
    if (int c = cmp3(ia->first, ib->first)) return c;
    if (int c = cmp_scalar(ia->second, ib->second)) return c;
  }
  if (ia != a.terms.end()) return 1;
  if (ib != b.terms.end()) return -1;
  return 0;
}

int cmp_field(const PolyVectorField& a, const PolyVectorField& b) {
  if (int c = cmp3(a.n, b.n)) return c;
  for (int i = 0; i < a.n; ++i)
    if (int c = cmp_scalar(a.comp[static_cast<std::size_t>(i)], b.comp[static_cast<std::size_t>(i)]))
      return c;
  return 0;
}

}  // namespace

int value_compare(const Value& a, const Value& b) {
  if (int c = cmp3(a.index(), b.index())) return c;
  if (std::holds_alternative<std::monostate>(a)) return 0;
  if (auto* x = std::get_if<PolyForm>(&a)) return cmp_form(*x, std::get<PolyForm>(b));
  if (auto* x = std::get_if<PolyVectorField>(&a)) return cmp_field(*x, std::get<PolyVectorField>(b));
  if (auto* x = std::get_if<SmallGElement>(&a)) {
    const auto& y = std::get<SmallGElement>(b);
    if (int c = cmp_form(x->form, y.form)) return c;
    if (int c = cmp_field(x->iota, y.iota)) return c;
    return cmp_field(x->lie, y.lie);
  }
  if (auto* x = std::get_if<GradedPoly>(&a)) {
    const auto& y = std::get<GradedPoly>(b);
    if (int c = cmp3(x->sys.n, y.sys.n)) return c;
    if (int c = cmp3(x->sys.r, y.sys.r)) return c;
    auto ia = x->terms.begin();
    auto ib = y.terms.begin();
    for (; ia != x->terms.end() && ib != y.terms.end(); ++ia, ++ib) {
      if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
      if (int c = cmp3(ia->second, ib->second)) return c;
    }
    if (ia != x->terms.end()) return 1;
    if (ib != y.terms.end()) return -1;
    return 0;
  }
  if (auto* x = std::get_if<LieCoords>(&a)) return cmp3(x->c, std::get<LieCoords>(b).c);
  throw InvalidInput("value_compare: CE payloads have no canonical order");
}

std::string element_render(const Element& a) {
  if (a.is_zero()) return "0";
  return std::visit(
      [&](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "0";
        } else if constexpr (std::is_same_v<T, PolyForm>) {
          return render(v);
        } else if constexpr (std::is_same_v<T, PolyVectorField>) {
          return render(v);
        } else if constexpr (std::is_same_v<T, SmallGElement>) {
          std::string out = "{form: " + render(v.form) + "; iota: " + render(v.iota) +
                            "; lie: " + render(v.lie) + "}";
          return out;
        } else if constexpr (std::is_same_v<T, GradedPoly>) {
          return render(v);
        } else if constexpr (std::is_same_v<T, LieCoords>) {
          std::string out = "(";
          for (std::size_t i = 0; i < v.c.size(); ++i) {
            if (i) out += ", ";
            out += v.c[i].get_str();
          }
          return out + ")";
        } else {
          return "<map-valued element, " + std::to_string(v ? v->comps.size() : 0) + " components>";
        }
      },
      a.value);
}

}  // namespace koszul
