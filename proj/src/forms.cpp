#include "koszul/forms.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "koszul/errors.hpp"
#include "koszul/linalg.hpp"

namespace koszul {

// ---- PolyScalar ----

PolyScalar PolyScalar::constant(int dim, const Rational& c) {
  PolyScalar f(dim);
  if (!koszul::is_zero(c)) f.terms[MultiIndex(static_cast<std::size_t>(dim), 0)] = c;
  return f;
}

PolyScalar PolyScalar::variable(int dim, int i) {
  if (i < 0 || i >= dim) throw InvalidInput("variable index out of range");
  PolyScalar f(dim);
  MultiIndex m(static_cast<std::size_t>(dim), 0);
  m[static_cast<std::size_t>(i)] = 1;
  f.terms[m] = Rational(1);
  return f;
}

void PolyScalar::add_term(const MultiIndex& m, const Rational& c) {
  if (static_cast<int>(m.size()) != n) throw InvalidInput("multi-index length mismatch");
  auto it = terms.find(m);
  if (it == terms.end()) {
    if (!koszul::is_zero(c)) terms.emplace(m, c);
  } else {
    it->second += c;
    if (koszul::is_zero(it->second)) terms.erase(it);
  }
}

int PolyScalar::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms) {
    int t = 0;
    for (int e : m) t += e;
    d = std::max(d, t);
  }
  return d;
}

Rational PolyScalar::eval(const std::vector<Rational>& x) const {
  Rational acc(0);
  for (const auto& [m, c] : terms) {
    Rational v = c;
    for (std::size_t i = 0; i < m.size(); ++i) v *= rat_pow(x[i], static_cast<unsigned>(m[i]));
    acc += v;
  }
  return acc;
}

PolyScalar operator+(const PolyScalar& a, const PolyScalar& b) {
  if (a.n != b.n) throw InvalidInput("scalar dimension mismatch");
  PolyScalar r = a;
  for (const auto& [m, c] : b.terms) r.add_term(m, c);
  return r;
}

PolyScalar operator-(const PolyScalar& a, const PolyScalar& b) { return a + (-b); }

PolyScalar operator-(const PolyScalar& a) {
  PolyScalar r(a.n);
  for (const auto& [m, c] : a.terms) r.terms.emplace(m, -c);
  return r;
}

PolyScalar operator*(const PolyScalar& a, const PolyScalar& b) {
  if (a.n != b.n) throw InvalidInput("scalar dimension mismatch");
  PolyScalar r(a.n);
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      MultiIndex m = ma;
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      r.add_term(m, ca * cb);
    }
  return r;
}

PolyScalar operator*(const Rational& c, const PolyScalar& a) {
  PolyScalar r(a.n);
  if (koszul::is_zero(c)) return r;
  for (const auto& [m, k] : a.terms) r.terms.emplace(m, c * k);
  return r;
}

bool operator==(const PolyScalar& a, const PolyScalar& b) {
  return a.n == b.n && a.terms == b.terms;
}

PolyScalar derivative(const PolyScalar& f, int i) {
  PolyScalar r(f.n);
  for (const auto& [m, c] : f.terms) {
    int e = m[static_cast<std::size_t>(i)];
    if (e == 0) continue;
    MultiIndex d = m;
    d[static_cast<std::size_t>(i)] = e - 1;
    r.add_term(d, Rational(e) * c);
  }
  return r;
}

// ---- PolyForm ----

PolyForm PolyForm::scalar(int dim, const Rational& c) {
  PolyForm w(dim);
  if (!koszul::is_zero(c)) w.terms[{}] = PolyScalar::constant(dim, c);
  return w;
}

PolyForm PolyForm::from_scalar(const PolyScalar& f) {
  PolyForm w(f.n);
  if (!f.is_zero()) w.terms[{}] = f;
  return w;
}

PolyForm PolyForm::basis(int dim, const std::vector<int>& idx) {
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] < 0 || idx[i] >= dim) throw InvalidInput("form index out of range");
    if (i + 1 < idx.size() && idx[i] >= idx[i + 1])
      throw InvalidInput("basis form indices must be strictly increasing");
  }
  PolyForm w(dim);
  w.terms[idx] = PolyScalar::constant(dim, Rational(1));
  return w;
}

void PolyForm::add_term(const std::vector<int>& idx, const PolyScalar& c) {
  if (c.is_zero()) return;
  auto it = terms.find(idx);
  if (it == terms.end()) {
    terms.emplace(idx, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

bool PolyForm::is_homogeneous() const {
  std::size_t k = 0;
  bool first = true;
  for (const auto& [idx, c] : terms) {
    if (first) {
      k = idx.size();
      first = false;
    } else if (idx.size() != k) {
      return false;
    }
  }
  return true;
}

std::optional<int> PolyForm::form_degree() const {
  if (terms.empty() || !is_homogeneous()) return std::nullopt;
  return static_cast<int>(terms.begin()->first.size());
}

PolyForm PolyForm::component(int k) const {
  PolyForm w(n);
  for (const auto& [idx, c] : terms)
    if (static_cast<int>(idx.size()) == k) w.terms.emplace(idx, c);
  return w;
}

int PolyForm::max_form_degree() const {
  int d = -1;
  for (const auto& [idx, c] : terms) d = std::max(d, static_cast<int>(idx.size()));
  return d;
}

PolyForm operator+(const PolyForm& a, const PolyForm& b) {
  if (a.n != b.n) throw InvalidInput("form dimension mismatch");
  PolyForm r = a;
  for (const auto& [idx, c] : b.terms) r.add_term(idx, c);
  return r;
}

PolyForm operator-(const PolyForm& a, const PolyForm& b) { return a + (-b); }

PolyForm operator-(const PolyForm& a) {
  PolyForm r(a.n);
  for (const auto& [idx, c] : a.terms) r.terms.emplace(idx, -c);
  return r;
}

PolyForm operator*(const Rational& c, const PolyForm& a) {
  PolyForm r(a.n);
  if (koszul::is_zero(c)) return r;
  for (const auto& [idx, k] : a.terms) r.terms.emplace(idx, c * k);
  return r;
}

bool operator==(const PolyForm& a, const PolyForm& b) {
  return a.n == b.n && a.terms == b.terms;
}

// ---- PolyVectorField ----

PolyVectorField PolyVectorField::basis(int dim, int i) {
  PolyVectorField X(dim);
  X.comp[static_cast<std::size_t>(i)] = PolyScalar::constant(dim, Rational(1));
  return X;
}

PolyVectorField PolyVectorField::euler(int dim) {
  PolyVectorField X(dim);
  for (int i = 0; i < dim; ++i) X.comp[static_cast<std::size_t>(i)] = PolyScalar::variable(dim, i);
  return X;
}

bool PolyVectorField::is_zero() const {
  for (const auto& f : comp)
    if (!f.is_zero()) return false;
  return true;
}

PolyVectorField operator+(const PolyVectorField& a, const PolyVectorField& b) {
  if (a.n != b.n) throw InvalidInput("field dimension mismatch");
  PolyVectorField r(a.n);
  for (std::size_t i = 0; i < r.comp.size(); ++i) r.comp[i] = a.comp[i] + b.comp[i];
  return r;
}

PolyVectorField operator-(const PolyVectorField& a, const PolyVectorField& b) { return a + (-b); }

PolyVectorField operator-(const PolyVectorField& a) {
  PolyVectorField r(a.n);
  for (std::size_t i = 0; i < r.comp.size(); ++i) r.comp[i] = -a.comp[i];
  return r;
}

PolyVectorField operator*(const Rational& c, const PolyVectorField& a) {
  PolyVectorField r(a.n);
  for (std::size_t i = 0; i < r.comp.size(); ++i) r.comp[i] = c * a.comp[i];
  return r;
}

bool operator==(const PolyVectorField& a, const PolyVectorField& b) {
  return a.n == b.n && a.comp == b.comp;
}

// ---- Cartan calculus ----

namespace {

// Merge two strictly increasing index lists; returns the sign of sorting the
// concatenation, or 0 if they intersect.
int merge_indices(const std::vector<int>& a, const std::vector<int>& b, std::vector<int>* out) {
  out->clear();
  out->reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  int sign = 1;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return 0;
    if (a[i] < b[j]) {
      out->push_back(a[i++]);
    } else {
      // b[j] crosses the remaining a-entries
      if ((a.size() - i) % 2 != 0) sign = -sign;
      out->push_back(b[j++]);
    }
  }
  while (i < a.size()) out->push_back(a[i++]);
  while (j < b.size()) out->push_back(b[j++]);
  return sign;
}

}  // namespace

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
  if (a.n != b.n) throw InvalidInput("wedge: dimension mismatch");
  PolyForm r(a.n);
  std::vector<int> merged;
  for (const auto& [ia, ca] : a.terms)
    for (const auto& [ib, cb] : b.terms) {
      int s = merge_indices(ia, ib, &merged);
      if (s == 0) continue;
      PolyScalar c = ca * cb;
      if (s < 0) c = -c;
      r.add_term(merged, c);
    }
  return r;
}

PolyForm de_rham(const PolyForm& w) {
  PolyForm r(w.n);
  std::vector<int> merged;
  for (const auto& [idx, c] : w.terms)
    for (int i = 0; i < w.n; ++i) {
      PolyScalar dc = derivative(c, i);
      if (dc.is_zero()) continue;
      int s = merge_indices({i}, idx, &merged);
      if (s == 0) continue;
      if (s < 0) dc = -dc;
      r.add_term(merged, dc);
    }
  return r;
}

PolyForm contract(const PolyVectorField& X, const PolyForm& w) {
  if (X.n != w.n) throw InvalidInput("contract: dimension mismatch");
  PolyForm r(w.n);
  for (const auto& [idx, c] : w.terms)
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const PolyScalar& xi = X.comp[static_cast<std::size_t>(idx[k])];
      if (xi.is_zero()) continue;
      std::vector<int> rest;
      rest.reserve(idx.size() - 1);
      for (std::size_t t = 0; t < idx.size(); ++t)
        if (t != k) rest.push_back(idx[t]);
      PolyScalar coeff = xi * c;
      if (k % 2 != 0) coeff = -coeff;
      r.add_term(rest, coeff);
    }
  return r;
}

PolyForm lie_derivative(const PolyVectorField& X, const PolyForm& w) {
  return de_rham(contract(X, w)) + contract(X, de_rham(w));
}

PolyVectorField vf_bracket(const PolyVectorField& X, const PolyVectorField& Y) {
  if (X.n != Y.n) throw InvalidInput("vf_bracket: dimension mismatch");
  PolyVectorField r(X.n);
  for (int i = 0; i < X.n; ++i) {
    PolyScalar acc(X.n);
    for (int j = 0; j < X.n; ++j) {
      acc = acc + X.comp[static_cast<std::size_t>(j)] * derivative(Y.comp[static_cast<std::size_t>(i)], j);
      acc = acc - Y.comp[static_cast<std::size_t>(j)] * derivative(X.comp[static_cast<std::size_t>(i)], j);
    }
    r.comp[static_cast<std::size_t>(i)] = acc;
  }
  return r;
}

PolyScalar apply_field(const PolyVectorField& X, const PolyScalar& f) {
  PolyScalar acc(f.n);
  for (int j = 0; j < f.n; ++j)
    acc = acc + X.comp[static_cast<std::size_t>(j)] * derivative(f, j);
  return acc;
}

bool is_closed(const PolyForm& w) { return de_rham(w).is_zero(); }

PolyForm primitive(const PolyForm& w) {
  if (!is_closed(w)) throw InvalidInput("primitive: form is not closed");
  if (w.terms.count({})) throw InvalidInput("primitive: form has a 0-form component");
  // Radial homotopy: on an (m,k)-homogeneous piece (poly degree m, form
  // degree k >= 1), a primitive is iota_E / (m+k) with E the Euler field.
  PolyVectorField E = PolyVectorField::euler(w.n);
  PolyForm out(w.n);
  for (const auto& [idx, c] : w.terms) {
    const int k = static_cast<int>(idx.size());
    // split the coefficient by polynomial degree
    std::map<int, PolyScalar> by_deg;
    for (const auto& [m, q] : c.terms) {
      int t = 0;
      for (int e : m) t += e;
      auto it = by_deg.find(t);
      if (it == by_deg.end()) it = by_deg.emplace(t, PolyScalar(w.n)).first;
      it->second.add_term(m, q);
    }
    for (const auto& [m, piece] : by_deg) {
      PolyForm single(w.n);
      single.terms[idx] = piece;
      out = out + Rational(1, m + k) * contract(E, single);
    }
  }
  return out;
}

// ---- sampling ----

PolyScalar random_scalar(Rng& rng, int n, int max_deg, int max_terms) {
  PolyScalar f(n);
  int nt = static_cast<int>(rng.next_int(1, max_terms));
  for (int t = 0; t < nt; ++t) {
    MultiIndex m(static_cast<std::size_t>(n), 0);
    int budget = static_cast<int>(rng.next_int(0, max_deg));
    for (int b = 0; b < budget; ++b)
      m[static_cast<std::size_t>(rng.next_int(0, n - 1))] += 1;
    f.add_term(m, rng.next_coeff());
  }
  return f;
}

PolyForm random_form(Rng& rng, int n, int form_degree, int max_deg, int max_terms) {
  PolyForm w(n);
  if (form_degree < 0 || form_degree > n) return w;
  int nt = static_cast<int>(rng.next_int(1, max_terms));
  for (int t = 0; t < nt; ++t) {
    // random strictly increasing subset of size form_degree
    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
    std::vector<int> idx;
    for (int k = 0; k < form_degree; ++k) {
      std::size_t pick = static_cast<std::size_t>(rng.next_int(0, static_cast<long>(pool.size()) - 1));
      idx.push_back(pool[pick]);
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    std::sort(idx.begin(), idx.end());
    w.add_term(idx, random_scalar(rng, n, max_deg, 2));
  }
  return w;
}

PolyVectorField random_field(Rng& rng, int n, int max_deg) {
  PolyVectorField X(n);
  int k = static_cast<int>(rng.next_int(1, 2));
  for (int t = 0; t < k; ++t) {
    int i = static_cast<int>(rng.next_int(0, n - 1));
    X.comp[static_cast<std::size_t>(i)] = X.comp[static_cast<std::size_t>(i)] + random_scalar(rng, n, max_deg, 2);
  }
  return X;
}

PolyForm random_closed_form(Rng& rng, int n, int form_degree, int max_deg) {
  if (form_degree == 0) return PolyForm::scalar(n, rng.next_coeff());
  PolyForm w = de_rham(random_form(rng, n, form_degree - 1, max_deg + 1));
  // sprinkle a constant-coefficient (closed) term
  if (rng.next_bool() && form_degree <= n) {
    auto adv = adversarial_forms(n, form_degree);
    w = w + rng.next_coeff() * adv[static_cast<std::size_t>(rng.next_int(0, static_cast<long>(adv.size()) - 1))].component(form_degree);
  }
  return w;
}

std::vector<PolyForm> adversarial_forms(int n, int form_degree) {
  std::vector<PolyForm> out;
  if (form_degree == 0) {
    out.push_back(PolyForm::scalar(n, Rational(1)));
    for (int i = 0; i < n; ++i)
      out.push_back(PolyForm::from_scalar(PolyScalar::variable(n, i)));
    return out;
  }
  if (form_degree > n) return {PolyForm::zero(n)};
  std::vector<int> idx;
  for (int i = 0; i < form_degree; ++i) idx.push_back(i);
  out.push_back(PolyForm::basis(n, idx));  // leading basis form
  if (form_degree == n) {
    // volume form and x_1-weighted volume
    std::vector<int> all;
    for (int i = 0; i < n; ++i) all.push_back(i);
    out.push_back(PolyForm::basis(n, all));
    PolyForm xvol(n);
    xvol.terms[all] = PolyScalar::variable(n, 0);
    out.push_back(xvol);
  } else {
    std::vector<int> tail;
    for (int i = n - form_degree; i < n; ++i) tail.push_back(i);
    out.push_back(PolyForm::basis(n, tail));
    PolyForm xw(n);
    xw.terms[idx] = PolyScalar::variable(n, n - 1);
    out.push_back(xw);  // x_n-weighted monomial form
  }
  return out;
}

std::vector<PolyVectorField> hamiltonian_field_basis(const PolyForm& sigma, int max_deg) {
  const int n = sigma.n;
  // Unknown basis: x^m d/dx_i with |m| <= max_deg.
  std::vector<MultiIndex> monos;
  MultiIndex cur(static_cast<std::size_t>(n), 0);
  // enumerate all multi-indices with total degree <= max_deg
  std::function<void(int, int)> go = [&](int pos, int left) {
    if (pos == n) {
      monos.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[static_cast<std::size_t>(pos)] = e;
      go(pos + 1, left - e);
    }
    cur[static_cast<std::size_t>(pos)] = 0;
  };
  go(0, max_deg);

  struct Unknown {
    int i;
    MultiIndex m;
  };
  std::vector<Unknown> unknowns;
  for (int i = 0; i < n; ++i)
    for (const auto& m : monos) unknowns.push_back({i, m});

  // Row space: coordinates of Lie_X sigma, indexed by (subset, multi-index).
  std::map<std::pair<std::vector<int>, MultiIndex>, std::size_t> row_of;
  std::vector<std::vector<Rational>> cols;
  for (const auto& u : unknowns) {
    PolyVectorField X(n);
    PolyScalar f(n);
    f.add_term(u.m, Rational(1));
    X.comp[static_cast<std::size_t>(u.i)] = f;
    PolyForm L = lie_derivative(X, sigma);
    std::vector<std::pair<std::size_t, Rational>> entries;
    for (const auto& [idx, c] : L.terms)
      for (const auto& [m, q] : c.terms) {
        auto key = std::make_pair(idx, m);
        auto it = row_of.find(key);
        if (it == row_of.end()) it = row_of.emplace(key, row_of.size()).first;
        entries.emplace_back(it->second, q);
      }
    std::vector<Rational> col;
    for (const auto& [r, q] : entries) {
      if (col.size() <= r) col.resize(r + 1, Rational(0));
      col[r] = q;
    }
    cols.push_back(std::move(col));
  }
  const std::size_t rows = row_of.size();
  RationalMatrix A(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < cols[j].size(); ++i) A.at(i, j) = cols[j][i];

  std::vector<PolyVectorField> basis;
  for (const auto& v : nullspace(A)) {
    PolyVectorField X(n);
    for (std::size_t j = 0; j < unknowns.size(); ++j) {
      if (koszul::is_zero(v[j])) continue;
      PolyScalar f(n);
      f.add_term(unknowns[j].m, v[j]);
      X.comp[static_cast<std::size_t>(unknowns[j].i)] =
          X.comp[static_cast<std::size_t>(unknowns[j].i)] + f;
    }
    basis.push_back(std::move(X));
  }
  return basis;
}

int contraction_rank(const PolyForm& sigma, Rng& rng) {
  const int n = sigma.n;
  int best = 0;
  for (int attempt = 0; attempt < 5; ++attempt) {
    std::vector<Rational> pt;
    for (int i = 0; i < n; ++i) pt.push_back(rat(rng.next_int(-3, 3)));
    // matrix of X -> iota_X sigma at pt, rows indexed by r-subsets
    std::map<std::vector<int>, std::size_t> row_of;
    RationalMatrix A(0, 0);
    std::vector<std::vector<Rational>> colv;
    for (int i = 0; i < n; ++i) {
      PolyForm c = contract(PolyVectorField::basis(n, i), sigma);
      std::vector<Rational> col;
      for (const auto& [idx, f] : c.terms) {
        auto it = row_of.find(idx);
        if (it == row_of.end()) it = row_of.emplace(idx, row_of.size()).first;
        if (col.size() <= it->second) col.resize(it->second + 1, Rational(0));
        col[it->second] = f.eval(pt);
      }
      colv.push_back(std::move(col));
    }
    RationalMatrix M(row_of.size(), static_cast<std::size_t>(n));
    for (std::size_t j = 0; j < colv.size(); ++j)
      for (std::size_t i = 0; i < colv[j].size(); ++i) M.at(i, j) = colv[j][i];
    best = std::max(best, static_cast<int>(rank(M)));
    if (best == n) break;
  }
  return best;
}

// ---- rendering ----

std::string render(const Rational& q) { return q.get_str(); }

namespace {

void render_monomial(const MultiIndex& m, std::vector<std::string>* parts) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    std::string v = "x" + std::to_string(i + 1);
    if (m[i] == 1)
      parts->push_back(v);
    else
      parts->push_back(v + "**" + std::to_string(m[i]));
  }
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

// one grammar term: [rational '*'] [monomial '*'] [payload]
std::string render_term(const Rational& q, const MultiIndex& m, const std::string& payload) {
  std::vector<std::string> parts;
  bool mono = false;
  for (int e : m) mono = mono || (e != 0);
  if (q != Rational(1) || (!mono && payload.empty())) parts.push_back(q.get_str());
  if (mono) render_monomial(m, &parts);
  if (!payload.empty()) parts.push_back(payload);
  return join(parts, "*");
}

}  // namespace

std::string render(const PolyScalar& f) {
  if (f.is_zero()) return "0";
  std::vector<std::string> ts;
  for (const auto& [m, q] : f.terms) ts.push_back(render_term(q, m, ""));
  return join(ts, " + ");
}

std::string render(const PolyForm& w) {
  if (w.is_zero()) return "0";
  std::vector<std::string> ts;
  for (const auto& [idx, c] : w.terms) {
    std::vector<std::string> dxs;
    for (int i : idx) dxs.push_back("dx" + std::to_string(i + 1));
    std::string payload = join(dxs, "^");
    for (const auto& [m, q] : c.terms) ts.push_back(render_term(q, m, payload));
  }
  return join(ts, " + ");
}

std::string render(const PolyVectorField& X) {
  if (X.is_zero()) return "0";
  std::vector<std::string> ts;
  for (int i = 0; i < X.n; ++i) {
    const PolyScalar& c = X.comp[static_cast<std::size_t>(i)];
    std::string payload = "d" + std::to_string(i + 1);
    for (const auto& [m, q] : c.terms) ts.push_back(render_term(q, m, payload));
  }
  return join(ts, " + ");
}

}  // namespace koszul
