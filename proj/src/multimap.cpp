#include "koszul/multimap.hpp"

#include <algorithm>
#include <numeric>

#include "koszul/errors.hpp"

namespace koszul {

namespace {

std::vector<int> degrees_of(const std::vector<Element>& args) {
  std::vector<int> d;
  d.reserve(args.size());
  for (const auto& a : args) d.push_back(a.degree);
  return d;
}

}  // namespace

MultiMap MultiMap::make(int arity, int degree, std::string domain, std::string codomain,
                        Evaluator raw) {
  if (arity < 1) throw InvalidInput("MultiMap: arity must be positive");
  MultiMap m;
  m.arity_ = arity;
  m.degree_ = degree;
  m.domain_ = std::move(domain);
  m.codomain_ = std::move(codomain);
  if (arity == 1) {
    m.eval_ = std::move(raw);
    return m;
  }
  m.eval_ = [raw = std::move(raw), arity](const std::vector<Element>& args) -> Element {
    // canonical order: by degree, then payload order; stable, so the sorting
    // permutation is well-defined and its Koszul sign is the skew factor
    Permutation perm(static_cast<std::size_t>(arity));
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](int i, int j) {
      const Element& a = args[static_cast<std::size_t>(i)];
      const Element& b = args[static_cast<std::size_t>(j)];
      if (a.degree != b.degree) return a.degree < b.degree;
      return value_compare(a.value, b.value) < 0;
    });
    std::vector<Element> sorted;
    sorted.reserve(args.size());
    for (int i : perm) sorted.push_back(args[static_cast<std::size_t>(i)]);
    // repeated arguments of even degree force zero
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
      if (sorted[i].degree == sorted[i + 1].degree && sorted[i].degree % 2 == 0 &&
          element_equal(sorted[i], sorted[i + 1]))
        return zero_element();
    const int sign = koszul_sign(perm, degrees_of(args));
    Element val = raw(sorted);
    return sign < 0 ? element_neg(val) : val;
  };
  return m;
}

MultiMap MultiMap::make_skew(int arity, int degree, std::string domain, std::string codomain,
                             Evaluator eval) {
  if (arity < 1) throw InvalidInput("MultiMap: arity must be positive");
  MultiMap m;
  m.arity_ = arity;
  m.degree_ = degree;
  m.domain_ = std::move(domain);
  m.codomain_ = std::move(codomain);
  m.eval_ = std::move(eval);
  return m;
}

MultiMap MultiMap::zero(int arity, int degree, std::string domain, std::string codomain) {
  return make_skew(arity, degree, std::move(domain), std::move(codomain),
                   [](const std::vector<Element>&) { return zero_element(); });
}

Element MultiMap::operator()(const std::vector<Element>& args) const {
  if (static_cast<int>(args.size()) != arity_)
    throw InvalidInput("MultiMap: expected " + std::to_string(arity_) + " arguments, got " +
                       std::to_string(args.size()));
  // multilinearity: a (structurally) zero argument kills the value
  for (const auto& a : args)
    if (a.is_zero()) return zero_element();
  Element out = eval_(args);
  int d = degree_;
  for (const auto& a : args) d += a.degree;
  out.degree = d;
  return out;
}

MultiMap mm_add(const MultiMap& a, const MultiMap& b) {
  if (a.arity() != b.arity() || a.degree() != b.degree())
    throw InvalidInput("mm_add: bidegree mismatch");
  return MultiMap::make_skew(a.arity(), a.degree(), a.domain(), a.codomain(),
                             [a, b](const std::vector<Element>& args) {
                               return element_add(a(args), b(args));
                             });
}

MultiMap mm_scale(const Rational& c, const MultiMap& a) {
  return MultiMap::make_skew(a.arity(), a.degree(), a.domain(), a.codomain(),
                             [c, a](const std::vector<Element>& args) {
                               return element_scale(c, a(args));
                             });
}

MultiMap mm_neg(const MultiMap& a) { return mm_scale(Rational(-1), a); }

std::vector<UnshuffleTerm> unshuffle_apply(int j, int k, const std::vector<Element>& args) {
  if (static_cast<int>(args.size()) != j + k)
    throw InvalidInput("unshuffle_apply: argument count mismatch");
  std::vector<UnshuffleTerm> out;
  for (auto& sp : signed_unshuffles(j, k, degrees_of(args))) {
    std::vector<Element> permuted;
    permuted.reserve(args.size());
    for (int i : sp.perm) permuted.push_back(args[static_cast<std::size_t>(i)]);
    out.push_back({std::move(sp), std::move(permuted)});
  }
  return out;
}

std::vector<UnshuffleTerm> unshuffle_apply_ordered(int j, int k, const std::vector<Element>& args) {
  if (static_cast<int>(args.size()) != j + k)
    throw InvalidInput("unshuffle_apply_ordered: argument count mismatch");
  auto degs = degrees_of(args);
  std::vector<UnshuffleTerm> out;
  for (auto& perm : ordered_unshuffles(j, k)) {
    int sign = koszul_sign(perm, degs);
    std::vector<Element> permuted;
    permuted.reserve(args.size());
    for (int i : perm) permuted.push_back(args[static_cast<std::size_t>(i)]);
    out.push_back({{std::move(perm), sign}, std::move(permuted)});
  }
  return out;
}

MultiMap nr_product(const MultiMap& mu, const MultiMap& nu) {
  if (nu.codomain() != mu.domain())
    throw InvalidInput("nr_product: nu's codomain (" + nu.codomain() +
                       ") does not match mu's domain (" + mu.domain() + ")");
  if (mu.arity() > 1 && nu.domain() != mu.domain())
    throw InvalidInput("nr_product: domain mismatch beyond arity-1 composition");
  const int a1 = mu.arity(), a2 = nu.arity();
  const int d2 = nu.degree();
  const bool flip = (((a1 - 1) * d2) % 2 + 2) % 2 != 0;
  auto eval = [mu, nu, a1, a2, flip](const std::vector<Element>& args) -> Element {
    Element acc = zero_element();
    for (const auto& term : unshuffle_apply(a2, a1 - 1, args)) {
      std::vector<Element> block(term.args.begin(), term.args.begin() + a2);
      Element inner = nu(block);
      if (inner.is_zero()) continue;
      std::vector<Element> outer;
      outer.reserve(static_cast<std::size_t>(a1));
      outer.push_back(std::move(inner));
      for (std::size_t i = static_cast<std::size_t>(a2); i < term.args.size(); ++i)
        outer.push_back(term.args[i]);
      Element val = mu(outer);
      if (term.sp.sign < 0) val = element_neg(val);
      acc = element_add(acc, val);
    }
    return flip ? element_neg(acc) : acc;
  };
  return MultiMap::make_skew(a1 + a2 - 1, mu.degree() + nu.degree(), nu.domain(), mu.codomain(),
                             std::move(eval));
}

MultiMap nr_bracket(const MultiMap& mu, const MultiMap& nu) {
  if (mu.domain() != mu.codomain() || nu.domain() != nu.codomain() || mu.domain() != nu.domain())
    throw InvalidInput("nr_bracket: maps must be endomorphic on one space");
  MultiMap left = nr_product(mu, nu);
  MultiMap right = nr_product(nu, mu);
  if ((mu.nr_degree() * nu.nr_degree()) % 2 != 0) return mm_add(left, right);
  return mm_add(left, mm_neg(right));
}

MultiMap nr_associator(const MultiMap& a, const MultiMap& b, const MultiMap& c) {
  return mm_add(nr_product(nr_product(a, b), c), mm_neg(nr_product(a, nr_product(b, c))));
}

MultiMap nr_associator_closed(const MultiMap& a, const MultiMap& b, const MultiMap& c) {
  const int aa = a.arity(), ab = b.arity(), ac = c.arity();
  const int db = b.degree(), dc = c.degree();
  const int arity = aa + ab + ac - 2;
  const int degree = a.degree() + db + dc;
  if (aa < 2) return MultiMap::zero(arity, degree, c.domain(), a.codomain());
  const int s = dc * (ab + aa) + db * (aa - 1) + ab * (ac + 1);
  const bool flip = ((s % 2) + 2) % 2 != 0;
  auto eval = [a, b, c, aa, ab, ac, dc, flip](const std::vector<Element>& args) -> Element {
    Element acc = zero_element();
    for (const auto& outer : unshuffle_apply(ab + ac, aa - 2, args)) {
      std::vector<Element> head(outer.args.begin(), outer.args.begin() + (ab + ac));
      for (const auto& inner : unshuffle_apply(ab, ac, head)) {
        std::vector<Element> yb(inner.args.begin(), inner.args.begin() + ab);
        std::vector<Element> yc(inner.args.begin() + ab, inner.args.end());
        // tensor sign: mu_c of degree dc crosses the first block
        int cross = 0;
        for (const auto& e : yb) cross += e.degree;
        const bool tflip = ((dc * cross) % 2 + 2) % 2 != 0;
        Element vb = b(yb);
        Element vc = c(yc);
        if (vb.is_zero() || vc.is_zero()) continue;
        std::vector<Element> top;
        top.reserve(static_cast<std::size_t>(aa));
        top.push_back(std::move(vb));
        top.push_back(std::move(vc));
        for (std::size_t i = static_cast<std::size_t>(ab + ac); i < outer.args.size(); ++i)
          top.push_back(outer.args[i]);
        Element val = a(top);
        int sg = outer.sp.sign * inner.sp.sign * (tflip ? -1 : 1);
        if (sg < 0) val = element_neg(val);
        acc = element_add(acc, val);
      }
    }
    return flip ? element_neg(acc) : acc;
  };
  return MultiMap::make_skew(arity, degree, c.domain(), a.codomain(), std::move(eval));
}

}  // namespace koszul
