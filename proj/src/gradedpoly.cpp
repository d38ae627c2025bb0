#include "koszul/gradedpoly.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "koszul/errors.hpp"

namespace koszul {

namespace {

// Fiber variable families in normal order; x handled by exponents.
enum Fam : int { FV = 0, FP = 1, FPP = 2 };

struct Var {
  int fam;  // -1 = x, else Fam
  int idx;
};

int var_degree(const Var& z, const GradedCoordinateSystem& sys) {
  switch (z.fam) {
    case -1: return 0;
    case FV: return 1;
    case FP: return sys.deg_p();
    default: return sys.deg_P();
  }
}

bool var_odd(const Var& z, const GradedCoordinateSystem& sys) {
  return (var_degree(z, sys) % 2) != 0;
}

std::vector<Var> explode(const GradedMonomial& m) {
  std::vector<Var> out;
  for (std::size_t i = 0; i < m.x.size(); ++i)
    for (int e = 0; e < m.x[i]; ++e) out.push_back({-1, static_cast<int>(i)});
  for (int i : m.v) out.push_back({FV, i});
  for (int i : m.p) out.push_back({FP, i});
  for (int i : m.P) out.push_back({FPP, i});
  return out;
}

GradedMonomial empty_mono(const GradedCoordinateSystem& sys) {
  GradedMonomial m;
  m.x.assign(static_cast<std::size_t>(sys.n), 0);
  return m;
}

GradedMonomial mono_of_var(const Var& z, const GradedCoordinateSystem& sys) {
  GradedMonomial m = empty_mono(sys);
  switch (z.fam) {
    case -1: m.x[static_cast<std::size_t>(z.idx)] = 1; break;
    case FV: m.v.push_back(z.idx); break;
    case FP: m.p.push_back(z.idx); break;
    default: m.P.push_back(z.idx); break;
  }
  return m;
}

GradedMonomial mono_of_vars(const std::vector<Var>& vars, const GradedCoordinateSystem& sys) {
  GradedMonomial m = empty_mono(sys);
  for (const auto& z : vars) {
    switch (z.fam) {
      case -1: m.x[static_cast<std::size_t>(z.idx)] += 1; break;
      case FV: m.v.push_back(z.idx); break;
      case FP: m.p.push_back(z.idx); break;
      default: m.P.push_back(z.idx); break;
    }
  }
  return m;
}

// Product of normal monomials: merged monomial and Koszul sign, or nullopt
// when an odd variable repeats.
std::optional<std::pair<GradedMonomial, int>> mono_mul(const GradedMonomial& a,
                                                       const GradedMonomial& b,
                                                       const GradedCoordinateSystem& sys) {
  GradedMonomial out = empty_mono(sys);
  for (std::size_t i = 0; i < out.x.size(); ++i) out.x[i] = a.x[i] + b.x[i];

  auto fiber = [](const GradedMonomial& m) {
    std::vector<Var> s;
    for (int i : m.v) s.push_back({FV, i});
    for (int i : m.p) s.push_back({FP, i});
    for (int i : m.P) s.push_back({FPP, i});
    return s;
  };
  std::vector<Var> s1 = fiber(a), s2 = fiber(b);

  auto key = [](const Var& z) { return std::pair<int, int>(z.fam, z.idx); };
  int sign = 1;
  // Each b-variable crosses exactly the a-variables strictly after its slot.
  for (const auto& zb : s2)
    for (const auto& za : s1)
      if (key(zb) < key(za) && var_odd(zb, sys) && var_odd(za, sys)) sign = -sign;
  // Repeated odd variables kill the product.
  for (const auto& zb : s2)
    for (const auto& za : s1)
      if (key(zb) == key(za) && var_odd(zb, sys)) return std::nullopt;

  std::vector<Var> merged = s1;
  merged.insert(merged.end(), s2.begin(), s2.end());
  std::stable_sort(merged.begin(), merged.end(),
                   [&](const Var& u, const Var& w) { return key(u) < key(w); });
  GradedMonomial fm = mono_of_vars(merged, sys);
  fm.x = out.x;
  return std::make_pair(fm, sign);
}

int raw_degree_vars(const std::vector<Var>& vars, const GradedCoordinateSystem& sys) {
  int d = 0;
  for (const auto& z : vars) d += var_degree(z, sys);
  return d;
}

}  // namespace

void GradedPoly::add_term(const GradedMonomial& m, const Rational& c) {
  auto it = terms.find(m);
  if (it == terms.end()) {
    if (!koszul::is_zero(c)) terms.emplace(m, c);
  } else {
    it->second += c;
    if (koszul::is_zero(it->second)) terms.erase(it);
  }
}

bool GradedPoly::is_homogeneous() const {
  bool first = true;
  int d = 0;
  for (const auto& [m, c] : terms) {
    int t = shifted_degree(m, sys);
    if (first) {
      d = t;
      first = false;
    } else if (t != d) {
      return false;
    }
  }
  return true;
}

int GradedPoly::degree() const {
  if (terms.empty() || !is_homogeneous()) throw InvalidInput("degree of non-homogeneous GradedPoly");
  return shifted_degree(terms.begin()->first, sys);
}

int raw_degree(const GradedMonomial& m, const GradedCoordinateSystem& sys) {
  return static_cast<int>(m.v.size()) + sys.deg_p() * static_cast<int>(m.p.size()) +
         sys.deg_P() * static_cast<int>(m.P.size());
}

int shifted_degree(const GradedMonomial& m, const GradedCoordinateSystem& sys) {
  return raw_degree(m, sys) - sys.r;
}

GradedPoly operator+(const GradedPoly& a, const GradedPoly& b) {
  if (!(a.sys == b.sys)) throw InvalidInput("graded poly: coordinate system mismatch");
  GradedPoly r = a;
  for (const auto& [m, c] : b.terms) r.add_term(m, c);
  return r;
}

GradedPoly operator-(const GradedPoly& a, const GradedPoly& b) { return a + (-b); }

GradedPoly operator-(const GradedPoly& a) {
  GradedPoly r(a.sys);
  for (const auto& [m, c] : a.terms) r.terms.emplace(m, -c);
  return r;
}

GradedPoly operator*(const Rational& c, const GradedPoly& a) {
  GradedPoly r(a.sys);
  if (koszul::is_zero(c)) return r;
  for (const auto& [m, k] : a.terms) r.terms.emplace(m, c * k);
  return r;
}

bool operator==(const GradedPoly& a, const GradedPoly& b) {
  return a.sys == b.sys && a.terms == b.terms;
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
  if (!(a.sys == b.sys)) throw InvalidInput("graded poly: coordinate system mismatch");
  GradedPoly r(a.sys);
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      auto prod = mono_mul(ma, mb, a.sys);
      if (!prod) continue;
      Rational c = ca * cb;
      if (prod->second < 0) c = -c;
      r.add_term(prod->first, c);
    }
  return r;
}

GradedPoly gp_one(const GradedCoordinateSystem& sys) {
  GradedPoly f(sys);
  f.terms.emplace(empty_mono(sys), Rational(1));
  return f;
}

GradedPoly gp_var_x(const GradedCoordinateSystem& sys, int i) {
  GradedPoly f(sys);
  f.terms.emplace(mono_of_var({-1, i}, sys), Rational(1));
  return f;
}

GradedPoly gp_var_v(const GradedCoordinateSystem& sys, int i) {
  GradedPoly f(sys);
  f.terms.emplace(mono_of_var({FV, i}, sys), Rational(1));
  return f;
}

GradedPoly gp_var_p(const GradedCoordinateSystem& sys, int i) {
  GradedPoly f(sys);
  f.terms.emplace(mono_of_var({FP, i}, sys), Rational(1));
  return f;
}

GradedPoly gp_var_P(const GradedCoordinateSystem& sys, int i) {
  GradedPoly f(sys);
  f.terms.emplace(mono_of_var({FPP, i}, sys), Rational(1));
  return f;
}

namespace {

// {z, w} for single variables, from the Darboux table.
GradedPoly generator_bracket(const Var& z, const Var& w, const GradedCoordinateSystem& sys) {
  GradedPoly r(sys);
  auto one = [&](const Rational& c) {
    GradedPoly f(sys);
    f.terms.emplace(empty_mono(sys), c);
    return f;
  };
  if (z.fam == -1 && w.fam == FPP && z.idx == w.idx) return one(Rational(1));
  if (z.fam == FPP && w.fam == -1 && z.idx == w.idx) return one(Rational(-1));
  if (z.fam == FV && w.fam == FP && z.idx == w.idx) return one(Rational(1));
  if (z.fam == FP && w.fam == FV && z.idx == w.idx) {
    // -(-1)^{r-1}
    return one(((sys.r - 1) % 2 == 0) ? Rational(-1) : Rational(1));
  }
  return r;
}

GradedPoly mul_mono_left(const GradedMonomial& m, const GradedPoly& f) {
  GradedPoly r(f.sys);
  for (const auto& [mf, c] : f.terms) {
    auto prod = mono_mul(m, mf, f.sys);
    if (!prod) continue;
    r.add_term(prod->first, prod->second < 0 ? Rational(-c) : c);
  }
  return r;
}

GradedPoly mul_mono_right(const GradedPoly& f, const GradedMonomial& m) {
  GradedPoly r(f.sys);
  for (const auto& [mf, c] : f.terms) {
    auto prod = mono_mul(mf, m, f.sys);
    if (!prod) continue;
    r.add_term(prod->first, prod->second < 0 ? Rational(-c) : c);
  }
  return r;
}

int mod2(int k) { return ((k % 2) + 2) % 2; }

// {z, m} for a single variable z and monomial m, via the right Leibniz rule
//   {z, w u} = {z, w} u + (-1)^{sh(z) deg(w)} w {z, u}.
GradedPoly var_mono_bracket(const Var& z, const std::vector<Var>& m,
                            const GradedCoordinateSystem& sys) {
  GradedPoly r(sys);
  if (m.empty()) return r;
  if (m.size() == 1) return generator_bracket(z, m[0], sys);
  const Var w = m[0];
  std::vector<Var> u(m.begin() + 1, m.end());
  GradedPoly t1 = mul_mono_right(generator_bracket(z, w, sys), mono_of_vars(u, sys));
  GradedPoly t2 = mul_mono_left(mono_of_var(w, sys), var_mono_bracket(z, u, sys));
  const int sh_z = var_degree(z, sys) - sys.r;
  if (mod2(sh_z * var_degree(w, sys)) != 0) t2 = -t2;
  return t1 + t2;
}

// {m1, m2} via the left Leibniz rule
//   {z u, c} = z {u, c} + (-1)^{deg(u) sh(c)} {z, c} u,
// which is forced by right Leibniz plus shifted antisymmetry.
GradedPoly mono_bracket(const std::vector<Var>& m1, const std::vector<Var>& m2,
                        const GradedCoordinateSystem& sys) {
  GradedPoly r(sys);
  if (m1.empty()) return r;
  if (m1.size() == 1) return var_mono_bracket(m1[0], m2, sys);
  const Var z = m1[0];
  std::vector<Var> u(m1.begin() + 1, m1.end());
  GradedPoly t1 = mul_mono_left(mono_of_var(z, sys), mono_bracket(u, m2, sys));
  GradedPoly t2 = mul_mono_right(var_mono_bracket(z, m2, sys), mono_of_vars(u, sys));
  const int sh_m2 = raw_degree_vars(m2, sys) - sys.r;
  if (mod2(raw_degree_vars(u, sys) * sh_m2) != 0) t2 = -t2;
  return t1 + t2;
}

}  // namespace

GradedPoly poisson_bracket(const GradedPoly& f, const GradedPoly& g) {
  if (!(f.sys == g.sys)) throw InvalidInput("poisson_bracket: coordinate system mismatch");
  GradedPoly r(f.sys);
  for (const auto& [m1, c1] : f.terms)
    for (const auto& [m2, c2] : g.terms) {
      GradedPoly piece = mono_bracket(explode(m1), explode(m2), f.sys);
      r = r + (c1 * c2) * piece;
    }
  return r;
}

GradedPoly canonical_S(const GradedCoordinateSystem& sys) {
  GradedPoly S(sys);
  for (int i = 0; i < sys.n; ++i) {
    GradedMonomial m = empty_mono(sys);
    m.v.push_back(i);
    m.P.push_back(i);
    S.terms.emplace(std::move(m), Rational(1));
  }
  return S;
}

GradedPoly pullback_form(const PolyForm& w, const GradedCoordinateSystem& sys) {
  if (w.n != sys.n) throw InvalidInput("pullback_form: dimension mismatch");
  GradedPoly r(sys);
  for (const auto& [idx, c] : w.terms)
    for (const auto& [mx, q] : c.terms) {
      GradedMonomial m = empty_mono(sys);
      m.x = mx;
      m.v = idx;
      r.add_term(m, q);
    }
  return r;
}

GradedPoly embed_iota(const PolyVectorField& X, const GradedCoordinateSystem& sys) {
  if (X.n != sys.n) throw InvalidInput("embed_iota: dimension mismatch");
  GradedPoly r(sys);
  for (int i = 0; i < sys.n; ++i)
    for (const auto& [mx, q] : X.comp[static_cast<std::size_t>(i)].terms) {
      GradedMonomial m = empty_mono(sys);
      m.x = mx;
      m.p.push_back(i);
      r.add_term(m, q);
    }
  return r;
}

GradedPoly embed_lie(const PolyVectorField& Y, const GradedCoordinateSystem& sys) {
  if (Y.n != sys.n) throw InvalidInput("embed_lie: dimension mismatch");
  GradedPoly r(sys);
  for (int i = 0; i < sys.n; ++i) {
    for (const auto& [mx, q] : Y.comp[static_cast<std::size_t>(i)].terms) {
      GradedMonomial m = empty_mono(sys);
      m.x = mx;
      m.P.push_back(i);
      r.add_term(m, q);
    }
    for (int j = 0; j < sys.n; ++j) {
      PolyScalar dY = derivative(Y.comp[static_cast<std::size_t>(i)], j);
      for (const auto& [mx, q] : dY.terms) {
        GradedMonomial m = empty_mono(sys);
        m.x = mx;
        m.v.push_back(j);
        m.p.push_back(i);
        r.add_term(m, q);
      }
    }
  }
  return r;
}

std::vector<GradedMonomial> monomials_of_degree(const GradedCoordinateSystem& sys,
                                                int shifted_deg, int x_deg, int fiber_bound) {
  const int n = sys.n;
  std::vector<std::vector<int>> subsets;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) s.push_back(i);
    subsets.push_back(std::move(s));
  }
  auto family_choices = [&](bool odd) {
    if (odd) return subsets;
    // even family: non-decreasing index lists of length <= fiber_bound
    std::vector<std::vector<int>> out;
    out.push_back({});
    std::vector<std::vector<int>> prev = {{}};
    for (int len = 1; len <= fiber_bound; ++len) {
      std::vector<std::vector<int>> cur;
      for (const auto& base : prev)
        for (int i = base.empty() ? 0 : base.back(); i < n; ++i) {
          auto ext = base;
          ext.push_back(i);
          out.push_back(ext);
          cur.push_back(std::move(ext));
        }
      prev = std::move(cur);
    }
    return out;
  };

  std::vector<MultiIndex> xmonos;
  MultiIndex cur(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> go = [&](int pos, int left) {
    if (pos == n) {
      xmonos.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[static_cast<std::size_t>(pos)] = e;
      go(pos + 1, left - e);
    }
    cur[static_cast<std::size_t>(pos)] = 0;
  };
  go(0, x_deg);

  std::vector<GradedMonomial> out;
  for (const auto& sv : subsets)
    for (const auto& sp : family_choices(sys.p_odd()))
      for (const auto& sP : family_choices(sys.P_odd())) {
        GradedMonomial probe = empty_mono(sys);
        probe.v = sv;
        probe.p = sp;
        probe.P = sP;
        if (shifted_degree(probe, sys) != shifted_deg) continue;
        for (const auto& mx : xmonos) {
          GradedMonomial m = probe;
          m.x = mx;
          out.push_back(std::move(m));
        }
      }
  std::sort(out.begin(), out.end());
  return out;
}

GradedPoly random_graded_poly(Rng& rng, const GradedCoordinateSystem& sys, int shifted_deg,
                              int x_deg, int max_terms) {
  auto monos = monomials_of_degree(sys, shifted_deg, x_deg, 2);
  GradedPoly f(sys);
  if (monos.empty()) return f;
  int nt = static_cast<int>(rng.next_int(1, max_terms));
  for (int t = 0; t < nt; ++t) {
    const auto& m = monos[static_cast<std::size_t>(rng.next_int(0, static_cast<long>(monos.size()) - 1))];
    f.add_term(m, rng.next_coeff());
  }
  return f;
}

std::string render(const GradedPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms) {
    if (!first) out += " + ";
    first = false;
    std::vector<std::string> parts;
    bool has_vars = false;
    for (std::size_t i = 0; i < m.x.size(); ++i) {
      if (m.x[i] == 0) continue;
      has_vars = true;
      std::string s = "x" + std::to_string(i + 1);
      if (m.x[i] > 1) s += "**" + std::to_string(m.x[i]);
      parts.push_back(s);
    }
    for (int i : m.v) parts.push_back("v" + std::to_string(i + 1)), has_vars = true;
    for (int i : m.p) parts.push_back("p" + std::to_string(i + 1)), has_vars = true;
    for (int i : m.P) parts.push_back("P" + std::to_string(i + 1)), has_vars = true;
    std::string piece;
    if (c != Rational(1) || !has_vars) piece = c.get_str();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (!piece.empty()) piece += "*";
      piece += parts[i];
    }
    out += piece;
  }
  return out;
}

SourceCheckReport source_check(const GradedCoordinateSystem& sys, Rng& rng, int samples) {
  SourceCheckReport rep;
  // (a) the embedding kills nothing: forms land on v-monomials, iota parts on
  // p-linear monomials, so distinct inputs stay distinct; spot-check anyway.
  for (int s = 0; s < samples; ++s) {
    int fd = static_cast<int>(rng.next_int(0, sys.r - 1));
    PolyForm w = random_form(rng, sys.n, fd, 2);
    PolyVectorField X = random_field(rng, sys.n, 2);
    GradedPoly img = pullback_form(w, sys) + embed_iota(X, sys);
    bool input_zero = w.is_zero() && X.is_zero();
    if (input_zero != img.is_zero()) rep.injective_on_samples = false;
    ++rep.checks_run;
  }
  // (b) every monomial in the Courant-relevant negative degrees is spanned by
  // pulled-back forms and p-linear iota images. Even fiber families are
  // enumerated fiberwise-linearly, matching the generator presentation of the
  // small algebra inside the big one.
  for (int sd = -sys.r; sd <= -1; ++sd) {
    for (const auto& m : monomials_of_degree(sys, sd, 2, 1)) {
      ++rep.checks_run;
      const bool form_shape = m.p.empty() && m.P.empty();
      const bool iota_shape = m.v.empty() && m.p.size() == 1 && m.P.empty();
      if (!form_shape && !iota_shape) rep.missing.push_back(m);
    }
  }
  return rep;
}

}  // namespace koszul
