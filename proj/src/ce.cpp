#include "koszul/ce.hpp"

#include <algorithm>
#include <map>

#include "koszul/errors.hpp"

namespace koszul {

CeRef make_ce(std::vector<MultiMap> comps) {
  std::map<int, MultiMap> by_arity;
  int total = 0;
  bool seen = false;
  for (auto& m : comps) {
    const int t = m.arity() + m.degree();
    if (seen && t != total) throw InvalidInput("make_ce: mixed total degrees");
    total = t;
    seen = true;
    auto it = by_arity.find(m.arity());
    if (it == by_arity.end())
      by_arity.emplace(m.arity(), std::move(m));
    else
      it->second = mm_add(it->second, m);
  }
  auto out = std::make_shared<CeElement>();
  for (auto& [a, m] : by_arity) out->comps.push_back(std::move(m));
  return out;
}

CeRef ce_add(const CeRef& a, const CeRef& b) {
  std::vector<MultiMap> comps;
  if (a) comps.insert(comps.end(), a->comps.begin(), a->comps.end());
  if (b) comps.insert(comps.end(), b->comps.begin(), b->comps.end());
  return make_ce(std::move(comps));
}

CeRef ce_scale(const Rational& c, const CeRef& a) {
  std::vector<MultiMap> comps;
  if (a && !is_zero(c))
    for (const auto& m : a->comps) comps.push_back(mm_scale(c, m));
  return make_ce(std::move(comps));
}

int ce_total_degree(const CeRef& a) {
  if (!a || a->comps.empty()) return 0;
  return a->comps.front().arity() + a->comps.front().degree();
}

MultiMap ce_component(const CeRef& a, int k, const std::string& dom, const std::string& cod) {
  if (a)
    for (const auto& m : a->comps)
      if (m.arity() == k) return m;
  int total = a && !a->comps.empty() ? ce_total_degree(a) : 1;
  return MultiMap::zero(k, total - k, dom, cod);
}

MultiMap ce_vertical(const Dgla& g, const Dgla& h, const MultiMap& f) {
  MultiMap left = nr_product(f, g.diff);
  MultiMap right = nr_product(h.diff, f);
  const int s = f.arity() + f.degree() - 1;
  return (((s % 2) + 2) % 2 != 0) ? mm_add(left, right) : mm_add(left, mm_neg(right));
}

MultiMap ce_horizontal(const Dgla& g, const MultiMap& f) { return nr_product(f, g.bracket); }

MultiMap ce_bracket_maps(const Dgla& h, const MultiMap& f, const MultiMap& q) {
  const int a1 = f.arity(), a2 = q.arity();
  const int d1 = f.degree(), d2 = q.degree();
  const bool flip = (((d1 * (a2 + d2)) % 2) + 2) % 2 == 0;  // overall -(-1)^{d1(a2+d2)}
  MultiMap hb = h.bracket;
  auto eval = [hb, f, q, a1, a2, d2](const std::vector<Element>& args) -> Element {
    Element acc = zero_element();
    for (const auto& term : unshuffle_apply(a1, a2, args)) {
      std::vector<Element> first(term.args.begin(), term.args.begin() + a1);
      std::vector<Element> second(term.args.begin() + a1, term.args.end());
      int cross = 0;
      for (const auto& e : first) cross += e.degree;
      Element vf = f(first);
      Element vq = q(second);
      if (vf.is_zero() || vq.is_zero()) continue;
      Element val = hb({vf, vq});
      int sg = term.sp.sign * ((((d2 * cross) % 2) + 2) % 2 != 0 ? -1 : 1);
      if (sg < 0) val = element_neg(val);
      acc = element_add(acc, val);
    }
    return acc;
  };
  MultiMap raw = MultiMap::make_skew(a1 + a2, d1 + d2, f.domain(), hb.codomain(), std::move(eval));
  return flip ? mm_neg(raw) : raw;
}

CeRef ce_differential(const Dgla& g, const Dgla& h, const CeRef& f) {
  std::vector<MultiMap> comps;
  if (f)
    for (const auto& m : f->comps) {
      comps.push_back(ce_vertical(g, h, m));
      comps.push_back(ce_horizontal(g, m));
    }
  return make_ce(std::move(comps));
}

CeRef ce_bracket(const Dgla& g, const Dgla& h, const CeRef& f, const CeRef& q) {
  (void)g;
  std::vector<MultiMap> comps;
  if (f && q)
    for (const auto& mf : f->comps)
      for (const auto& mq : q->comps) comps.push_back(ce_bracket_maps(h, mf, mq));
  return make_ce(std::move(comps));
}

namespace {

const CeRef& as_ce(const Element& e) {
  if (auto* v = std::get_if<CeRef>(&e.value)) return *v;
  throw InvalidInput("expected a CE (map-valued) element");
}

}  // namespace

Dgla make_ce_dgla(const Dgla& g, const Dgla& h, int arity_cap, int eq_samples,
                  std::uint64_t eq_seed) {
  std::string tag = "ce:" + g.carrier.tag + ">" + h.carrier.tag;
  const Dgla gs = g;
  const Dgla hs = h;

  // Pointwise equality on seeded tuples; deterministic, a fresh stream per
  // comparison.
  auto equal = [gs, hs, arity_cap, eq_samples, eq_seed](const Element& ea, const Element& eb) {
    const CeRef za = ea.is_zero() ? nullptr : as_ce(ea);
    const CeRef zb = eb.is_zero() ? nullptr : as_ce(eb);
    Rng rng(eq_seed);
    const auto& degs = gs.carrier.degrees;
    for (int k = 1; k <= arity_cap; ++k) {
      for (int s = 0; s < eq_samples; ++s) {
        std::vector<Element> args;
        for (int i = 0; i < k; ++i)
          args.push_back(gs.carrier.sample(
              rng, degs[static_cast<std::size_t>(rng.next_int(0, static_cast<long>(degs.size()) - 1))]));
        Element va = za ? ce_component(za, k, gs.carrier.tag, hs.carrier.tag)(args) : zero_element();
        Element vb = zb ? ce_component(zb, k, gs.carrier.tag, hs.carrier.tag)(args) : zero_element();
        if (!hs.carrier.equal(va, vb)) return false;
      }
    }
    return true;
  };

  Carrier carrier;
  carrier.tag = tag;
  carrier.degrees = {-1, 0, 1, 2};
  carrier.sample = [gs](Rng& rng, int total_degree) -> Element {
    for (int attempt = 0; attempt < 8; ++attempt) {
      int arity = static_cast<int>(rng.next_int(1, 2));
      MultiMap m = random_ce_map(rng, gs, arity);
      if (m.arity() + m.degree() == total_degree)
        return Element(Value(make_ce({m})), total_degree);
    }
    return zero_element();
  };
  carrier.equal = equal;
  carrier.is_zero = [equal](const Element& e) { return equal(e, zero_element()); };
  carrier.render = [](const Element& e) { return element_render(e); };

  Dgla ce;
  ce.name = "CE(" + g.name + ", " + h.name + ")";
  ce.carrier = std::move(carrier);
  ce.diff = MultiMap::make_skew(1, 1, tag, tag, [gs, hs](const std::vector<Element>& a) -> Element {
    if (a[0].is_zero()) return zero_element();
    return Element(Value(ce_differential(gs, hs, as_ce(a[0]))), 0);
  });
  ce.bracket =
      MultiMap::make_skew(2, 0, tag, tag, [gs, hs](const std::vector<Element>& a) -> Element {
        if (a[0].is_zero() || a[1].is_zero()) return zero_element();
        return Element(Value(ce_bracket(gs, hs, as_ce(a[0]), as_ce(a[1]))), 0);
      });
  return ce;
}

MultiMap random_ce_map(Rng& rng, const Dgla& g, int arity) {
  const auto& degs = g.carrier.degrees;
  Element s = g.carrier.sample(
      rng, degs[static_cast<std::size_t>(rng.next_int(0, static_cast<long>(degs.size()) - 1))]);
  const Rational c = rng.next_coeff_nonzero();
  MultiMap bracket = g.bracket;
  MultiMap diff = g.diff;
  const std::string tag = g.carrier.tag;
  if (arity <= 1) {
    switch (rng.next_int(0, 2)) {
      case 0:  // x -> c {s, x}
        return MultiMap::make_skew(1, s.degree, tag, tag,
                                   [bracket, s, c](const std::vector<Element>& a) {
                                     return element_scale(c, bracket({s, a[0]}));
                                   });
      case 1:  // x -> c d x
        return MultiMap::make_skew(1, 1, tag, tag, [diff, c](const std::vector<Element>& a) {
          return element_scale(c, diff(a));
        });
      default:  // x -> c {s, d x}
        return MultiMap::make_skew(1, s.degree + 1, tag, tag,
                                   [bracket, diff, s, c](const std::vector<Element>& a) {
                                     return element_scale(c, bracket({s, diff(a)}));
                                   });
    }
  }
  // arity 2: skew-symmetrized through the canonical-order wrapper
  switch (rng.next_int(0, 1)) {
    case 0:  // (x,y) -> c {s, {x,y}}
      return MultiMap::make(2, s.degree, tag, tag,
                            [bracket, s, c](const std::vector<Element>& a) {
                              return element_scale(c, bracket({s, bracket(a)}));
                            });
    default:  // (x,y) -> c {{s,x}, y}
      return MultiMap::make(2, s.degree, tag, tag,
                            [bracket, s, c](const std::vector<Element>& a) {
                              return element_scale(c, bracket({bracket({s, a[0]}), a[1]}));
                            });
  }
}

CeRef ce_gauge_action(const Dgla& g, const Dgla& h, const CeRef& a, const CeRef& f, int K) {
  if (ce_total_degree(a) != 0) throw InvalidInput("ce_gauge_action: gauge element must be degree 0");
  CeRef t0 = ce_add(ce_bracket(g, h, a, f), ce_scale(Rational(-1), ce_differential(g, h, a)));
  CeRef acc = f;
  CeRef cur = t0;
  Rational fact(1);
  for (int m = 0;; ++m) {
    // min arity of ad_a^m(t0) grows with m; stop once past the cap
    bool relevant = false;
    if (cur)
      for (const auto& comp : cur->comps)
        if (comp.arity() <= K) relevant = true;
    if (!relevant) break;
    fact *= Rational(m + 1);
    acc = ce_add(acc, ce_scale(Rational(1) / fact, cur));
    cur = ce_bracket(g, h, a, cur);
    if (m > K + 2) break;  // safety; arities strictly grow
  }
  // drop components beyond the truncation arity
  std::vector<MultiMap> keep;
  if (acc)
    for (const auto& m : acc->comps)
      if (m.arity() <= K) keep.push_back(m);
  return make_ce(std::move(keep));
}

}  // namespace koszul
