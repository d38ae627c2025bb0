#include "koszul/suites.hpp"

#include <chrono>
#include <json.hpp>

#include "koszul/errors.hpp"
#include "koszul/linfty.hpp"
#include "koszul/parser.hpp"

namespace koszul {

namespace {

using Clock = std::chrono::steady_clock;

PolyForm scenario_sigma(const Scenario& sc) {
  if (!sc.sigma.empty()) return parse_form(sc.sigma, sc.dim);
  // default: the constant volume form of the first r+1 coordinates
  if (sc.dim < sc.r + 1) return PolyForm(sc.dim);
  std::vector<int> idx;
  for (int i = 0; i <= sc.r; ++i) idx.push_back(i);
  return PolyForm::basis(sc.dim, idx);
}

PolyForm default_beta(const Scenario& sc) {
  if (sc.beta) return parse_form(*sc.beta, sc.dim);
  // x1-weighted constant r-form
  if (sc.dim < sc.r) return PolyForm(sc.dim);
  std::vector<int> idx;
  for (int i = 0; i < sc.r; ++i) idx.push_back(i);
  PolyForm b(sc.dim);
  b.add_term(idx, PolyScalar::variable(sc.dim, sc.dim - 1));
  return b;
}

int arity_bound(const Scenario& sc) { return sc.arity_bound > 0 ? sc.arity_bound : sc.r + 2; }

CheckResult cartan_suite(const Scenario& sc, Rng& rng) {
  CheckResult res;
  res.name = "cartan";
  const int n = sc.dim;
  for (int s = 0; s < sc.samples; ++s) {
    PolyVectorField X = random_field(rng, n, sc.max_poly_degree);
    PolyVectorField Y = random_field(rng, n, sc.max_poly_degree);
    int fd = static_cast<int>(rng.next_int(0, n));
    PolyForm w = random_form(rng, n, fd, sc.max_poly_degree);
    if (rng.next_int(0, 3) == 0) {
      auto adv = adversarial_forms(n, fd);
      w = w + adv[static_cast<std::size_t>(rng.next_int(0, static_cast<long>(adv.size()) - 1))].component(fd);
    }
    auto check = [&](const char* name, const PolyForm& lhs, const PolyForm& rhs) {
      ++res.checks_run;
      if (!(lhs == rhs)) {
        Failure f;
        f.check = name;
        f.inputs = {render(X), render(Y), render(w)};
        f.lhs = render(lhs);
        f.rhs = render(rhs);
        res.failures.push_back(std::move(f));
      }
    };
    check("d d = 0", de_rham(de_rham(w)), PolyForm(n));
    check("Lie d = d Lie", lie_derivative(X, de_rham(w)), de_rham(lie_derivative(X, w)));
    check("d iota + iota d = Lie", de_rham(contract(X, w)) + contract(X, de_rham(w)),
          lie_derivative(X, w));
    check("Lie Lie - Lie Lie = Lie bracket",
          lie_derivative(X, lie_derivative(Y, w)) - lie_derivative(Y, lie_derivative(X, w)),
          lie_derivative(vf_bracket(X, Y), w));
    check("Lie iota - iota Lie = iota bracket",
          lie_derivative(X, contract(Y, w)) - contract(Y, lie_derivative(X, w)),
          contract(vf_bracket(X, Y), w));
    check("iota iota + iota iota = 0", contract(X, contract(Y, w)) + contract(Y, contract(X, w)),
          PolyForm(n));
  }
  return res;
}

CheckResult dgla_axioms_suite(const Scenario& sc, Rng& rng) {
  CheckResult res;
  res.name = "dgla-axioms";
  PolyForm sigma = scenario_sigma(sc);
  GradedCoordinateSystem sys{sc.dim, sc.r};

  std::vector<Dgla> algebras;
  algebras.push_back(make_cartan(sc.dim, sc.max_poly_degree));
  Dgla small = make_small_g(sc.dim, sc.r, sc.max_poly_degree);
  algebras.push_back(small);
  Dgla small_tw = twist(small, smallg_form_element(sigma, sc.r));
  algebras.push_back(small_tw);
  algebras.push_back(truncate_nonneg(small_tw));
  Dgla large = make_large_g(sc.dim, sc.r, sc.max_poly_degree);
  algebras.push_back(large);
  Dgla large_tw = twist(large, sigma.is_zero() ? zero_element()
                                               : Element(Value(pullback_form(sigma, sys)), 1));
  algebras.push_back(large_tw);
  algebras.push_back(truncate_nonneg(large_tw));

  for (const auto& g : algebras) res.merge(dgla_axiom_check(g, rng, sc.samples));
  return res;
}

CheckResult mc_twist_suite(const Scenario& sc, Rng& rng, std::map<std::string, std::string>* info) {
  CheckResult res;
  res.name = "mc-twist";
  const int n = sc.dim;
  const int r = sc.r;
  Dgla small = make_small_g(n, r, sc.max_poly_degree);
  Dgla large = make_large_g(n, r, sc.max_poly_degree);
  GradedCoordinateSystem sys{n, r};

  auto check_case = [&](const PolyForm& s, bool want) {
    Element e = smallg_form_element(s, r);
    bool got = mc_check(small, e);
    ++res.checks_run;
    if (got != want) {
      Failure f;
      f.check = "mc_check(sigma) <=> d sigma = 0 in g_r";
      f.inputs = {render(s)};
      res.failures.push_back(std::move(f));
    }
    Element ep = s.is_zero() ? zero_element() : Element(Value(pullback_form(s, sys)), 1);
    bool got_large = mc_check(large, ep);
    ++res.checks_run;
    if (got_large != want) {
      Failure f;
      f.check = "mc_check(sigma) <=> d sigma = 0 in ghat_r";
      f.inputs = {render(s)};
      res.failures.push_back(std::move(f));
    }
  };

  for (int i = 0; i < 20; ++i)
    check_case(random_closed_form(rng, n, r + 1, sc.max_poly_degree), true);
  int made = 0;
  int guard = 0;
  while (made < 20 && guard < 400) {
    ++guard;
    PolyForm s = random_form(rng, n, r + 1, std::max(1, sc.max_poly_degree));
    if (is_closed(s)) continue;
    check_case(s, false);
    ++made;
  }

  // twisting by zero returns the same differential pointwise
  Dgla small_tw0 = twist(small, zero_element());
  for (int s = 0; s < sc.samples; ++s) {
    int d = small.carrier.degrees[static_cast<std::size_t>(
        rng.next_int(0, static_cast<long>(small.carrier.degrees.size()) - 1))];
    Element a = small.carrier.sample(rng, d);
    ++res.checks_run;
    if (!small.carrier.equal(small.diff({a}), small_tw0.diff({a}))) {
      Failure f;
      f.check = "twist by zero is the identity twist";
      f.inputs = {element_render(a)};
      res.failures.push_back(std::move(f));
    }
  }

  if (info) {
    PolyForm sigma = scenario_sigma(sc);
    int rank = contraction_rank(sigma, rng);
    (*info)["sigma_contraction_rank"] = std::to_string(rank);
    (*info)["sigma_nondegenerate"] = (rank == n) ? "true" : "false";
  }
  return res;
}

CheckResult embedding_suite(const Scenario& sc, Rng& rng) {
  DglaMorphism em = make_embedding(sc.dim, sc.r, scenario_sigma(sc), sc.max_poly_degree);
  CheckResult res = dgla_morphism_check(em, rng, sc.samples);
  res.name = "embedding";
  // negative-part comparison between the models
  GradedCoordinateSystem sys{sc.dim, sc.r};
  SourceCheckReport rep = source_check(sys, rng, std::min(sc.samples, 50));
  res.checks_run += rep.checks_run;
  if (!rep.passed()) {
    Failure f;
    f.check = "negative-degree monomials spanned by forms and p-linear terms";
    for (const auto& m : rep.missing) {
      GradedPoly p(sys);
      p.add_term(m, Rational(1));
      f.inputs.push_back(render(p));
    }
    res.failures.push_back(std::move(f));
  }
  return res;
}

CheckResult getzler_agreement_suite(const Scenario& sc, Rng& rng) {
  CheckResult res = getzler_agreement_check(sc.dim, sc.r, scenario_sigma(sc), arity_bound(sc), rng,
                                            std::max(1, sc.samples / 2));
  res.name = "getzler-agreement";
  return res;
}

CheckResult courant_linfty_suite(const Scenario& sc, Rng& rng) {
  CheckResult res;
  res.name = "courant-linfty";
  const int K = arity_bound(sc);
  PolyForm sigma = scenario_sigma(sc);
  LInftyStructure L = courant_linfty(sc.dim, sc.r, sigma, K);
  res.merge(linfty_identity_check(L, K, rng, sc.samples));
  res.merge(courant_binary_check(sc.dim, sc.r, sigma, rng, std::max(50, sc.samples / 2)));
  // brackets beyond arity r+1 vanish on the carrier
  for (int k = sc.r + 2; k <= K; ++k) {
    for (int s = 0; s < std::max(5, sc.samples / 10); ++s) {
      std::vector<Element> args;
      for (int i = 0; i < k; ++i) args.push_back(L.carrier.sample(rng, 0));
      Element v = L.brackets[static_cast<std::size_t>(k - 1)](args);
      ++res.checks_run;
      if (!L.carrier.is_zero(v)) {
        Failure f;
        f.check = "brackets of arity > r+1 vanish";
        f.arity = k;
        res.failures.push_back(std::move(f));
      }
    }
  }
  return res;
}

CheckResult rogers_linfty_suite(const Scenario& sc, Rng& rng) {
  CheckResult res;
  res.name = "rogers-linfty";
  const int K = arity_bound(sc);
  PolyForm sigma = scenario_sigma(sc);
  LInftyStructure L = rogers_linfty(sc.dim, sc.r, sigma, K);
  res.merge(linfty_identity_check(L, K, rng, sc.samples));
  // multibrackets land in Omega^{r+1-k} (Hamiltonian pairs at k = 2)
  for (int k = 2; k <= K; ++k) {
    for (int s = 0; s < std::max(5, sc.samples / 10); ++s) {
      std::vector<Element> args;
      for (int i = 0; i < k; ++i) args.push_back(L.carrier.sample(rng, 0));
      Element v = L.brackets[static_cast<std::size_t>(k - 1)](args);
      ++res.checks_run;
      bool ok = true;
      if (!v.is_zero()) {
        const auto& sg = std::get<SmallGElement>(v.value);
        if (k == 2) {
          ok = sg.form.is_zero() || sg.form.form_degree() == sc.r - 1;
          ok = ok && hamiltonian_check(sg.iota, sg.form, sigma);
        } else {
          ok = sg.iota.is_zero() && sg.lie.is_zero() &&
               (sg.form.is_zero() || sg.form.form_degree() == sc.r + 1 - k);
        }
      }
      if (!ok) {
        Failure f;
        f.check = "bracket codomain Omega^{r+1-k}";
        f.arity = k;
        f.lhs = element_render(v);
        res.failures.push_back(std::move(f));
      }
    }
  }
  return res;
}

CheckResult phi_suite(const Scenario& sc, Rng& rng) {
  CheckResult res;
  res.name = "phi-morphism";
  LInftyMorphism Phi = phi_morphism(sc.dim, sc.r, sc.max_poly_degree);
  res.merge(morphism_identity_check(Phi, 3, rng, sc.samples, true));
  res.merge(morphism_restriction_check(Phi, rng, sc.samples));
  // the two cases of the arity-3 identity that need actual Cartan calculus:
  // (X_[1], Y_[1], w) and (X, Y_[1], w)
  const int n = sc.dim;
  const int r = sc.r;
  for (int s = 0; s < std::max(5, sc.samples / 10); ++s) {
    PolyVectorField X = random_field(rng, n, sc.max_poly_degree);
    PolyVectorField Y = random_field(rng, n, sc.max_poly_degree);
    int fd = static_cast<int>(rng.next_int(0, n));
    PolyForm w = random_form(rng, n, fd, sc.max_poly_degree);
    MultiMap lhs = morphism_identity_lhs(Phi, 3);
    MultiMap rhs = morphism_identity_rhs(Phi, 3);
    std::vector<std::vector<Element>> tuples = {
        {smallg_element(sg_iota(X), r), smallg_element(sg_iota(Y), r), smallg_form_element(w, r)},
        {smallg_element(sg_lie(X), r), smallg_element(sg_iota(Y), r), smallg_form_element(w, r)}};
    for (const auto& args : tuples) {
      ++res.checks_run;
      Element a = lhs(args);
      Element b = rhs(args);
      if (!Phi.target.carrier.equal(a, b)) {
        Failure f;
        f.check = "arity-3 identity on contraction slots";
        f.arity = 3;
        for (const auto& e : args) f.inputs.push_back(element_render(e));
        f.lhs = element_render(a);
        f.rhs = element_render(b);
        res.failures.push_back(std::move(f));
      }
    }
  }
  return res;
}

CheckResult phi_twisted_suite(const Scenario& sc, Rng& rng) {
  CheckResult res;
  res.name = "phi-twisted";
  const int r = sc.r;
  PolyForm sigma = scenario_sigma(sc);
  LInftyMorphism Phi = phi_morphism(sc.dim, r, sc.max_poly_degree);
  Element sig = smallg_form_element(sigma, r);

  // Phi(sigma) = d sigma (+ 1/2 Phi_2(sigma, sigma) = 0) vanishes for closed
  // sigma, so the twisted target is the untwisted g_{r+1}
  Element img = morphism_mc_image(Phi, sig);
  ++res.checks_run;
  if (!Phi.target.carrier.is_zero(img)) {
    Failure f;
    f.check = "Phi(sigma) = 0 for closed sigma";
    f.lhs = element_render(img);
    res.failures.push_back(std::move(f));
  }

  LInftyMorphism Phis = twist_morphism(Phi, sig);
  res.merge(morphism_identity_check(Phis, 3, rng, sc.samples, true));
  res.merge(morphism_restriction_check(Phis, rng, sc.samples));

  // component shape: (Phi_s)_1 = Phi_1 + Phi_2(sigma, -), (Phi_s)_2 = Phi_2
  for (int s = 0; s < std::max(5, sc.samples / 5); ++s) {
    const auto& degs = Phi.source.carrier.degrees;
    Element v = Phi.source.carrier.sample(
        rng, degs[static_cast<std::size_t>(rng.next_int(0, static_cast<long>(degs.size()) - 1))]);
    Element lhs = Phis.components[0]({v});
    Element rhs = element_add(Phi.components[0]({v}), Phi.components[1]({sig, v}));
    ++res.checks_run;
    if (!Phi.target.carrier.equal(lhs, rhs)) {
      Failure f;
      f.check = "(Phi_sigma)_1 = Phi_1 + Phi_2(sigma, -)";
      f.inputs = {element_render(v)};
      res.failures.push_back(std::move(f));
    }
    Element w = Phi.source.carrier.sample(
        rng, degs[static_cast<std::size_t>(rng.next_int(0, static_cast<long>(degs.size()) - 1))]);
    ++res.checks_run;
    if (!Phi.target.carrier.equal(Phis.components[1]({v, w}), Phi.components[1]({v, w}))) {
      Failure f;
      f.check = "(Phi_sigma)_2 = Phi_2";
      res.failures.push_back(std::move(f));
    }
  }
  return res;
}

CheckResult gauge_identity_suite(const Scenario& sc, Rng& rng) {
  CheckResult res = gauge_morphism_check(sc.dim, sc.r, scenario_sigma(sc), rng,
                                         std::max(5, sc.samples / 10));
  res.name = "gauge-identity";
  return res;
}

CheckResult chi_beta_suite(const Scenario& sc, Rng& rng) {
  CheckResult res;
  res.name = "chi-beta";
  const int n = sc.dim;
  const int r = sc.r;
  PolyForm sigma = scenario_sigma(sc);
  PolyForm beta = default_beta(sc);

  DglaMorphism chi = chi_beta(n, r, beta, sigma, sc.max_poly_degree);
  res.merge(dgla_morphism_check(chi, rng, sc.samples));

  DglaMorphism chi_inv = chi_beta(n, r, -beta, sigma + de_rham(beta), sc.max_poly_degree);
  const auto& degs = chi.source.carrier.degrees;
  for (int s = 0; s < sc.samples / 2; ++s) {
    Element a = chi.source.carrier.sample(
        rng, degs[static_cast<std::size_t>(rng.next_int(0, static_cast<long>(degs.size()) - 1))]);
    ++res.checks_run;
    if (!chi.source.carrier.equal(chi_inv.map(chi.map(a)), a) ||
        !chi.source.carrier.equal(chi.map(chi_inv.map(a)), a)) {
      Failure f;
      f.check = "chi_{-beta} inverts chi_beta";
      f.inputs = {element_render(a)};
      res.failures.push_back(std::move(f));
    }
  }

  // gauge transformation of the Maurer-Cartan element itself
  Dgla small = make_small_g(n, r, sc.max_poly_degree);
  Element got = gauge_action(small, element_neg(smallg_form_element(beta, r)), smallg_form_element(sigma, r));
  Element want = smallg_form_element(sigma + de_rham(beta), r);
  ++res.checks_run;
  if (!small.carrier.equal(got, want)) {
    Failure f;
    f.check = "e^{-beta} * sigma = sigma + d beta";
    f.lhs = element_render(got);
    f.rhs = element_render(want);
    res.failures.push_back(std::move(f));
  }
  return res;
}

CheckResult ce_bidgla_suite(const Scenario& sc, Rng& rng) {
  CheckResult res;
  res.name = "ce-bidgla";
  Dgla g = make_small_g(sc.dim, sc.r, sc.max_poly_degree);
  const int tuples = std::max(4, sc.samples / 20);

  auto sample_args = [&](int k) {
    std::vector<Element> args;
    const auto& degs = g.carrier.degrees;
    for (int i = 0; i < k; ++i)
      args.push_back(g.carrier.sample(
          rng, degs[static_cast<std::size_t>(rng.next_int(0, static_cast<long>(degs.size()) - 1))]));
    return args;
  };
  auto expect_zero_map = [&](const char* name, const MultiMap& m) {
    for (int s = 0; s < tuples; ++s) {
      auto args = sample_args(m.arity());
      Element v = m(args);
      ++res.checks_run;
      if (!g.carrier.is_zero(v)) {
        Failure f;
        f.check = name;
        f.arity = m.arity();
        for (const auto& e : args) f.inputs.push_back(element_render(e));
        f.lhs = element_render(v);
        res.failures.push_back(std::move(f));
      }
    }
  };
  auto expect_equal_map = [&](const char* name, const MultiMap& a, const MultiMap& b) {
    for (int s = 0; s < tuples; ++s) {
      auto args = sample_args(a.arity());
      Element va = a(args);
      Element vb = b(args);
      ++res.checks_run;
      if (!g.carrier.equal(va, vb)) {
        Failure f;
        f.check = name;
        f.arity = a.arity();
        for (const auto& e : args) f.inputs.push_back(element_render(e));
        f.lhs = element_render(va);
        f.rhs = element_render(vb);
        res.failures.push_back(std::move(f));
      }
    }
  };

  for (int trial = 0; trial < 3; ++trial) {
    MultiMap f = random_ce_map(rng, g, static_cast<int>(rng.next_int(1, 2)));
    MultiMap q = random_ce_map(rng, g, static_cast<int>(rng.next_int(1, 2)));

    expect_zero_map("d01 d01 = 0", ce_vertical(g, g, ce_vertical(g, g, f)));
    expect_zero_map("d10 d10 = 0", ce_horizontal(g, ce_horizontal(g, f)));
    expect_equal_map("d10 d01 = -d01 d10", ce_horizontal(g, ce_vertical(g, g, f)),
                     mm_neg(ce_vertical(g, g, ce_horizontal(g, f))));

    // graded antisymmetry of the bracket in the total degree
    {
      MultiMap ab = ce_bracket_maps(g, f, q);
      MultiMap ba = ce_bracket_maps(g, q, f);
      int tf = f.arity() + f.degree(), tq = q.arity() + q.degree();
      MultiMap rhs = (tf * tq) % 2 == 0 ? mm_neg(ba) : ba;
      expect_equal_map("bracket antisymmetry", ab, rhs);
      if (tf % 2 == 0) expect_zero_map("[f,f] = 0 for even total degree", ce_bracket_maps(g, f, f));
    }

    // each differential separately is a derivation of the bracket,
    //   d [f,q] = [d f, q] + (-1)^{total(f)} [f, d q]
    {
      const int tf = f.arity() + f.degree();
      auto second = [&](const MultiMap& m) { return (tf % 2 != 0) ? mm_neg(m) : m; };
      expect_equal_map("vertical differential is a derivation",
                       ce_vertical(g, g, ce_bracket_maps(g, f, q)),
                       mm_add(ce_bracket_maps(g, ce_vertical(g, g, f), q),
                              second(ce_bracket_maps(g, f, ce_vertical(g, g, q)))));
      expect_equal_map("horizontal differential is a derivation",
                       ce_horizontal(g, ce_bracket_maps(g, f, q)),
                       mm_add(ce_bracket_maps(g, ce_horizontal(g, f), q),
                              second(ce_bracket_maps(g, f, ce_horizontal(g, q)))));
    }
  }
  return res;
}

CheckResult comomentum_suite(const Scenario& sc, Rng& rng) {
  CheckResult res;
  res.name = "comomentum";
  if (sc.dim < sc.r + 1 || (sc.r == 1 && sc.dim < 3)) {
    throw InvalidInput("comomentum suite needs dim >= r+1 (and dim >= 3 at r = 1)");
  }
  std::vector<int> idx;
  for (int i = 0; i <= sc.r; ++i) idx.push_back(i);
  PolyForm sigma_std = PolyForm::basis(sc.dim, idx);
  Comomentum data = abelian_translation_comomentum(sc.dim, sc.r, sigma_std);
  std::optional<PolyForm> beta;
  if (sc.beta) beta = parse_form(*sc.beta, sc.dim);
  res.merge(comomentum_check(sc.dim, sc.r, sigma_std, data, beta, rng,
                             std::max(5, sc.samples / 10)));
  return res;
}

CheckResult chain_map_suite(const Scenario& sc, Rng& rng) {
  CheckResult res =
      courant_chain_map_check(sc.dim, sc.r, scenario_sigma(sc), rng, std::max(10, sc.samples / 4));
  res.name = "courant-chain-map";
  return res;
}

}  // namespace

const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> names = {
      "cartan",        "dgla-axioms",  "mc-twist",      "embedding",
      "getzler-agreement", "courant-linfty", "rogers-linfty", "phi-morphism",
      "phi-twisted",   "gauge-identity", "chi-beta",     "ce-bidgla",
      "comomentum",    "courant-chain-map"};
  return names;
}

SuiteResult run_suite(const std::string& name, const Scenario& sc) {
  Rng rng = Rng::for_suite(sc.seed, name);
  SuiteResult out;
  out.name = name;
  auto t0 = Clock::now();
  CheckResult res;
  if (name == "cartan")
    res = cartan_suite(sc, rng);
  else if (name == "dgla-axioms")
    res = dgla_axioms_suite(sc, rng);
  else if (name == "mc-twist")
    res = mc_twist_suite(sc, rng, &out.info);
  else if (name == "embedding")
    res = embedding_suite(sc, rng);
  else if (name == "getzler-agreement")
    res = getzler_agreement_suite(sc, rng);
  else if (name == "courant-linfty")
    res = courant_linfty_suite(sc, rng);
  else if (name == "rogers-linfty")
    res = rogers_linfty_suite(sc, rng);
  else if (name == "phi-morphism")
    res = phi_suite(sc, rng);
  else if (name == "phi-twisted")
    res = phi_twisted_suite(sc, rng);
  else if (name == "gauge-identity")
    res = gauge_identity_suite(sc, rng);
  else if (name == "chi-beta")
    res = chi_beta_suite(sc, rng);
  else if (name == "ce-bidgla")
    res = ce_bidgla_suite(sc, rng);
  else if (name == "comomentum")
    res = comomentum_suite(sc, rng);
  else if (name == "courant-chain-map")
    res = chain_map_suite(sc, rng);
  else
    throw InvalidInput("unknown suite: " + name);
  auto t1 = Clock::now();
  out.checks_run = res.checks_run;
  out.failures = std::move(res.failures);
  out.wall_time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return out;
}

Report run(const Scenario& sc) {
  validate_scenario(sc);
  Report rep;
  rep.scenario = sc;
  for (const auto& name : sc.suites) rep.suites.push_back(run_suite(name, sc));
  std::sort(rep.suites.begin(), rep.suites.end(),
            [](const SuiteResult& a, const SuiteResult& b) { return a.name < b.name; });
  return rep;
}

std::string report_to_json(const Report& rep) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json jsc;
  jsc["dim"] = rep.scenario.dim;
  jsc["r"] = rep.scenario.r;
  jsc["sigma"] = rep.scenario.sigma;
  if (rep.scenario.beta) jsc["beta"] = *rep.scenario.beta;
  jsc["max_poly_degree"] = rep.scenario.max_poly_degree;
  jsc["samples"] = rep.scenario.samples;
  jsc["seed"] = rep.scenario.seed;
  jsc["suites"] = rep.scenario.suites;
  jsc["arity_bound"] = rep.scenario.arity_bound;
  j["scenario"] = std::move(jsc);

  nlohmann::ordered_json jsuites = nlohmann::ordered_json::array();
  for (const auto& s : rep.suites) {
    nlohmann::ordered_json js;
    js["name"] = s.name;
    js["checks_run"] = s.checks_run;
    nlohmann::ordered_json jf = nlohmann::ordered_json::array();
    for (const auto& f : s.failures) {
      nlohmann::ordered_json e;
      e["suite"] = s.name;
      e["check"] = f.check;
      e["arity"] = f.arity;
      e["inputs"] = f.inputs;
      e["lhs"] = f.lhs;
      e["rhs"] = f.rhs;
      jf.push_back(std::move(e));
    }
    js["failures"] = std::move(jf);
    if (!s.info.empty()) {
      nlohmann::ordered_json ji;
      for (const auto& [k, v] : s.info) ji[k] = v;
      js["info"] = std::move(ji);
    }
    js["wall_time_ms"] = s.wall_time_ms;
    jsuites.push_back(std::move(js));
  }
  j["suites"] = std::move(jsuites);
  j["failures_total"] = rep.failures_total();
  j["status"] = rep.passed() ? "pass" : "fail";
  return j.dump(2) + "\n";
}

}  // namespace koszul
