#include "pgroup/verdicts.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "pgroup/abelian.hpp"
#include "pgroup/fp.hpp"

namespace pgroup {

const char* verdict_string(Verdict v) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::NotApplicable: return "n/a";
  }
  return "n/a";
}

namespace {

Verdict as_verdict(bool b) { return b ? Verdict::True : Verdict::False; }

bool commutator_set_is(const FiniteGroup& g, int x, const SubgroupSet& target) {
  std::vector<int> cs = commutator_set(g, x);
  return cs == target.members;
}

}  // namespace

bool is_camina_type(const FiniteGroup& g) {
  if (is_abelian(g)) return false;
  SubgroupSet gamma2 = derived_subgroup(g);
  SubgroupSet phi = frattini_subgroup(g);
  for (int x = 0; x < g.order; ++x) {
    if (phi.contains(x)) continue;
    if (!commutator_set_is(g, x, gamma2)) return false;
  }
  return true;
}

bool is_camina(const FiniteGroup& g) {
  if (is_abelian(g)) return false;
  SubgroupSet gamma2 = derived_subgroup(g);
  for (int x = 0; x < g.order; ++x) {
    if (gamma2.contains(x)) continue;
    if (!commutator_set_is(g, x, gamma2)) return false;
  }
  return true;
}

HypothesisACertificate satisfies_hypothesis_a(const FiniteGroup& g, const AutOptions& o) {
  HypothesisACertificate cert;
  cert.autc_order = class_preserving_automorphisms(g, o).order;
  cert.gamma2_order = derived_subgroup(g).order();
  cert.d = minimal_generator_count(g);
  long long bound = 1;
  for (int i = 0; i < cert.d; ++i) bound *= cert.gamma2_order;
  cert.holds = cert.autc_order == bound;
  return cert;
}

bool is_stem(const FiniteGroup& g) {
  return subgroup_contains(derived_subgroup(g), center(g));
}

bool is_metacyclic(const FiniteGroup& g) {
  for (const SubgroupSet& c : cyclic_subgroups(g)) {
    if (!is_normal(g, c)) continue;
    QuotientResult q = quotient_group(g, c);
    if (is_cyclic(q.group)) return true;
  }
  return false;
}

TheoremAReport theorem_a_equivalence(const FiniteGroup& g, const AnalyzeOptions& o) {
  if (g.order > o.theorem_a_cap)
    fail(ErrorCode::SizeCapExceeded, "tuple enumeration is capped at order " +
                                         std::to_string(o.theorem_a_cap));
  TheoremAReport rep;
  AutOptions ao{o.search_budget};
  HypothesisACertificate cert = satisfies_hypothesis_a(g, ao);
  rep.hypothesis_a = cert.holds;

  auto classes = conjugacy_classes(g);
  auto ids = class_ids(g, classes);
  const int d = cert.d;

  // Coordinates modulo the Frattini subgroup: a tuple generates minimally
  // iff the images span the elementary abelian quotient.
  SubgroupSet phi = frattini_subgroup(g);
  QuotientResult q = quotient_group(g, phi);
  const int p = g.prime.value_or(2);
  std::vector<int> qgens = minimal_generating_set(q.group);
  std::vector<std::vector<int>> qcoords(q.group.order);
  {
    std::vector<int> tup(qgens.size(), 0);
    for (;;) {
      int e = q.group.identity;
      for (size_t i = 0; i < qgens.size(); ++i)
        e = q.group.at(e, power_of(q.group, qgens[i], tup[i]));
      qcoords[e] = tup;
      int k = static_cast<int>(qgens.size()) - 1;
      while (k >= 0 && tup[k] == p - 1) tup[k--] = 0;
      if (k < 0) break;
      ++tup[k];
    }
  }

  rep.equality_all_tuples = true;
  std::vector<int> tuple(d, 0);
  // Depth-first over tuples, pruning to linearly independent prefixes mod Phi.
  std::vector<std::vector<int>> rows;
  std::function<void(int)> recurse = [&](int depth) {
    if (depth == d) {
      ++rep.tuple_count;
      long long prod = 1;
      for (int x : tuple) prod *= static_cast<long long>(classes[ids[x]].members.size());
      if (prod != cert.autc_order) {
        if (rep.equality_all_tuples) rep.counterexample = tuple;
        rep.equality_all_tuples = false;
      }
      return;
    }
    for (int x = 0; x < g.order; ++x) {
      rows.push_back(qcoords[q.projection[x]]);
      FpMatrix m = FpMatrix::zero(p, static_cast<int>(rows.size()), d);
      for (size_t r = 0; r < rows.size(); ++r)
        for (int cidx = 0; cidx < d; ++cidx) m.at(static_cast<int>(r), cidx) = rows[r][cidx];
      if (fp_rank(m) == static_cast<int>(rows.size())) {
        tuple[depth] = x;
        recurse(depth + 1);
      }
      rows.pop_back();
    }
  };
  recurse(0);

  rep.biconditional_holds = rep.equality_all_tuples == rep.hypothesis_a;
  return rep;
}

SubgroupSet y_subgroup(const FiniteGroup& g) {
  if (!g.prime || *g.prime != 2) fail(ErrorCode::NotPGroup, "Y(G) is defined for 2-groups");
  auto lcs = lower_central_series(g);
  std::vector<int> gens;
  if (lcs.size() >= 4)
    gens.insert(gens.end(), lcs[3].members.begin(), lcs[3].members.end());  // gamma_4
  if (lcs.size() >= 2)
    for (int u : lcs[1].members) gens.push_back(g.at(u, u));  // squares of gamma_2
  if (gens.empty()) gens.push_back(g.identity);
  return generated_subgroup(g, gens);
}

bool TheoremBReport::all_pass() const {
  for (Verdict v : {d_even, d_ge_2d_gamma2, central_quotient_homocyclic,
                    autcent_eq_autc_iff_z_eq_gamma2, autc_eq_inn_iff_gamma2_cyclic})
    if (v == Verdict::False) return false;
  return true;
}

TheoremBReport theorem_b_suite(const FiniteGroup& g, const AutOptions& o) {
  auto cls = nilpotency_class(g);
  if (!cls || *cls != 2) fail(ErrorCode::WrongClass, "class-2 suite needs class exactly 2");
  if (!is_camina_type(g)) fail(ErrorCode::NotCaminaType, "class-2 suite needs a Camina-type group");

  TheoremBReport rep;
  const int d = minimal_generator_count(g);
  SubgroupSet gamma2 = derived_subgroup(g);
  SubgroupGroup g2 = subgroup_as_group(g, gamma2);
  const int d_gamma2 = g2.group.order == 1 ? 0 : minimal_generator_count(g2.group);
  rep.d_even = as_verdict(d % 2 == 0);
  rep.d_ge_2d_gamma2 = as_verdict(d >= 2 * d_gamma2);

  SubgroupSet z = center(g);
  QuotientResult q = quotient_group(g, z);
  rep.central_quotient_homocyclic = as_verdict(is_homocyclic(q.group));

  const long long autc = class_preserving_automorphisms(g, o).order;
  const long long autcent = central_automorphisms(g, o).order;
  const bool z_eq_gamma2 = subgroup_equal(z, gamma2);
  rep.autcent_eq_autc_iff_z_eq_gamma2 = as_verdict((autcent == autc) == z_eq_gamma2);

  const long long inn = g.order / z.order();
  rep.autc_eq_inn_iff_gamma2_cyclic = as_verdict((autc == inn) == is_cyclic(g2.group));
  return rep;
}

bool TheoremCDReport::all_pass() const {
  for (Verdict v : {d_eq_2d_gamma2_mod_gamma3, cyclic_gamma2_implies_d2, hyp_a_implies_d2,
                    wide_branch_biconditional, narrow_branch_biconditional,
                    gamma2_pth_power_central, second_center_is_frattini})
    if (v == Verdict::False) return false;
  return true;
}

TheoremCDReport theorem_cd_suite(const FiniteGroup& g, const AutOptions& o) {
  auto cls = nilpotency_class(g);
  if (!cls || *cls < 3) fail(ErrorCode::WrongClass, "this suite needs class at least 3");
  if (!g.prime) fail(ErrorCode::NotPGroup, "this suite needs a p-group");
  const int p = *g.prime;

  TheoremCDReport rep;
  auto lcs = lower_central_series(g);
  SubgroupSet gamma2 = lcs[1];
  SubgroupSet gamma3 = lcs[2];
  SubgroupGroup g2 = subgroup_as_group(g, gamma2);
  const bool gamma2_cyclic = is_cyclic(g2.group);
  const int d = minimal_generator_count(g);
  const long long index23 = gamma2.order() / gamma3.order();
  const bool camina_type = is_camina_type(g);

  if (camina_type) {
    // d = 2 d(gamma_2/gamma_3)
    std::vector<int> g3_in_sub;
    for (int m : gamma3.members) g3_in_sub.push_back(g2.index_in_sub[m]);
    std::sort(g3_in_sub.begin(), g3_in_sub.end());
    QuotientResult q23 = quotient_group(g2.group, SubgroupSet{&g2.group, g3_in_sub});
    const int d23 = q23.group.order == 1 ? 0 : minimal_generator_count(q23.group);
    rep.d_eq_2d_gamma2_mod_gamma3 = as_verdict(d == 2 * d23 && d % 2 == 0);
    if (gamma2_cyclic) rep.cyclic_gamma2_implies_d2 = as_verdict(d == 2);
  }

  HypothesisACertificate cert = satisfies_hypothesis_a(g, o);
  if (cert.holds) rep.hyp_a_implies_d2 = as_verdict(d == 2);

  if (index23 > 2) {
    const bool rhs = d == 2 && gamma2_cyclic;
    rep.wide_branch_biconditional = as_verdict(cert.holds == rhs);
  } else if (index23 == 2) {
    const bool rhs = d == 2 && p == 2 && *cls == 3 && is_elementary_abelian(g2.group) &&
                     gamma2.order() <= 8;
    rep.narrow_branch_biconditional = as_verdict(cert.holds == rhs);
  }

  if (camina_type && *cls == 3 && gamma3.order() == p) {
    SubgroupSet z = center(g);
    bool pth_central = true;
    for (int u : gamma2.members)
      if (!z.contains(power_of(g, u, p))) pth_central = false;
    rep.gamma2_pth_power_central = as_verdict(pth_central);
    auto ucs = upper_central_series(g);
    SubgroupSet phi = frattini_subgroup(g);
    rep.second_center_is_frattini =
        as_verdict(ucs.size() >= 3 && subgroup_equal(ucs[2], phi));
  }
  return rep;
}

ExtremalReport central_quotient_extremal(const FiniteGroup& g, const AutOptions& o) {
  ExtremalReport rep;
  SubgroupSet z = center(g);
  SubgroupSet gamma2 = derived_subgroup(g);
  const int d = minimal_generator_count(g);
  long long bound = 1;
  for (int i = 0; i < d; ++i) bound *= gamma2.order();
  rep.extremal = static_cast<long long>(g.order) / z.order() == bound;
  if (rep.extremal && subgroup_contains(gamma2, z)) {
    AutomorphismGroup autc = class_preserving_automorphisms(g, o);
    rep.hyp_a_follows = as_verdict(autc.order == bound);
    bool all_inner = true;
    for (const auto& a : autc.elements)
      if (!a.flags.inner) all_inner = false;
    rep.autc_is_inn = as_verdict(all_inner);
  }
  return rep;
}

// ---- isoclinism -----------------------------------------------------------

namespace {

// All isomorphisms between two small groups via generator-image search.
std::vector<std::vector<int>> all_isomorphisms(const FiniteGroup& a, const FiniteGroup& b,
                                               long long budget) {
  std::vector<std::vector<int>> out;
  if (a.order != b.order) return out;
  std::vector<int> gens = minimal_generating_set(a);
  if (gens.empty()) return {std::vector<int>{b.identity}};
  WordTree wt = build_word_tree(a, gens);
  std::vector<std::vector<int>> candidates;
  for (int s : gens) {
    std::vector<int> c;
    const int ord = element_order(a, s);
    for (int y = 0; y < b.order; ++y)
      if (element_order(b, y) == ord) c.push_back(y);
    candidates.push_back(std::move(c));
  }
  for (const auto& c : candidates)
    if (c.empty()) return out;
  std::vector<size_t> idx(gens.size(), 0);
  std::vector<int> images(gens.size());
  long long nodes = 0;
  for (;;) {
    if (++nodes > budget)
      fail(ErrorCode::SearchBudgetExceeded, "isomorphism search exceeded the node budget");
    for (size_t s = 0; s < gens.size(); ++s) images[s] = candidates[s][idx[s]];
    std::vector<int> img = extend_and_check(a, wt, b, images);
    if (!img.empty()) out.push_back(std::move(img));
    size_t k = 0;
    while (k < gens.size() && ++idx[k] == candidates[k].size()) idx[k++] = 0;
    if (k == gens.size()) break;
  }
  return out;
}

}  // namespace

IsoclinismWitness is_isoclinic(const FiniteGroup& g, const FiniteGroup& h,
                               const AnalyzeOptions& o) {
  if (g.order > o.size_cap || h.order > o.size_cap)
    fail(ErrorCode::SizeCapExceeded, "isoclinism test exceeds the size cap");
  IsoclinismWitness wit;

  SubgroupSet zg = center(g), zh = center(h);
  SubgroupSet g2g = derived_subgroup(g), g2h = derived_subgroup(h);
  if (g.order / zg.order() != h.order / zh.order()) return wit;
  if (g2g.order() != g2h.order()) return wit;

  QuotientResult qg = quotient_group(g, zg);
  QuotientResult qh = quotient_group(h, zh);
  SubgroupGroup sg = subgroup_as_group(g, g2g);
  SubgroupGroup sh = subgroup_as_group(h, g2h);

  // commutator maps on the central quotients
  const int nq = qg.group.order;
  std::vector<int> aG(static_cast<size_t>(nq) * nq), aH(static_cast<size_t>(nq) * nq);
  for (int x = 0; x < nq; ++x)
    for (int y = 0; y < nq; ++y) {
      aG[static_cast<size_t>(x) * nq + y] = sg.index_in_sub[g.commutator(qg.section[x], qg.section[y])];
      aH[static_cast<size_t>(x) * nq + y] = sh.index_in_sub[h.commutator(qh.section[x], qh.section[y])];
    }

  // theta candidates: isomorphisms gamma_2(G) -> gamma_2(H)
  std::vector<std::vector<int>> thetas =
      all_isomorphisms(sg.group, sh.group, o.search_budget);
  if (thetas.empty()) return wit;

  std::vector<int> gens = minimal_generating_set(qg.group);
  if (gens.empty()) {
    // both central quotients trivial: any theta matching the (trivial)
    // commutator map works
    wit.isoclinic = true;
    wit.phi = {qh.group.identity};
    wit.theta = thetas[0];
    return wit;
  }
  WordTree wt = build_word_tree(qg.group, gens);
  std::vector<std::vector<int>> candidates;
  for (int s : gens) {
    std::vector<int> c;
    const int ord = element_order(qg.group, s);
    for (int y = 0; y < nq; ++y)
      if (element_order(qh.group, y) == ord) c.push_back(y);
    candidates.push_back(std::move(c));
  }
  for (const auto& c : candidates)
    if (c.empty()) return wit;

  long long nodes = 0;
  for (const auto& theta : thetas) {
    // depth-first with commutator-compatibility pruning on prefixes
    std::vector<int> images(gens.size(), -1);
    std::function<bool(size_t)> dfs = [&](size_t depth) -> bool {
      if (depth == gens.size()) {
        std::vector<int> phi = extend_and_check(qg.group, wt, qh.group, images);
        if (phi.empty()) return false;
        for (int x = 0; x < nq; ++x)
          for (int y = 0; y < nq; ++y)
            if (theta[aG[static_cast<size_t>(x) * nq + y]] !=
                aH[static_cast<size_t>(phi[x]) * nq + phi[y]])
              return false;
        wit.isoclinic = true;
        wit.phi = phi;
        wit.theta = theta;
        return true;
      }
      for (int cand : candidates[depth]) {
        if (++nodes > o.search_budget)
          fail(ErrorCode::SearchBudgetExceeded, "isoclinism search exceeded the node budget");
        images[depth] = cand;
        bool ok = true;
        for (size_t j = 0; j <= depth && ok; ++j)
          if (theta[aG[static_cast<size_t>(gens[j]) * nq + gens[depth]]] !=
              aH[static_cast<size_t>(images[j]) * nq + cand])
            ok = false;
        if (ok && dfs(depth + 1)) return true;
      }
      images[depth] = -1;
      return false;
    };
    if (dfs(0)) return wit;
  }
  return wit;
}

// ---- full analysis --------------------------------------------------------

bool AnalysisReport::all_checks_pass() const {
  for (const NamedCheck& c : checks)
    if (!c.pass) return false;
  return true;
}

AnalysisReport analyze_group(const FiniteGroup& g, const std::string& name,
                             const AnalyzeOptions& o) {
  using clock = std::chrono::steady_clock;
  AnalysisReport rep;
  rep.name = name;
  rep.order = g.order;
  rep.prime = g.prime;
  auto add_check = [&rep](const std::string& n, bool pass, const std::string& detail = "") {
    rep.checks.push_back({n, pass, detail});
  };
  auto timed = [&](const char* phase, auto fn) {
    const auto t0 = clock::now();
    fn();
    const auto t1 = clock::now();
    rep.timings_ms.emplace_back(phase,
                                std::chrono::duration<double, std::milli>(t1 - t0).count());
  };

  bool table_ok = true;
  timed("validate", [&] {
    try {
      validate(g);
    } catch (const Error&) {
      table_ok = false;
    }
  });
  add_check("table_invariants", table_ok);

  std::vector<ConjugacyClass> classes;
  std::vector<int> ids;
  std::vector<SubgroupSet> lcs, ucs;
  SubgroupSet z{&g, {}}, gamma2{&g, {}}, phi{&g, {}};
  timed("structure", [&] {
    classes = conjugacy_classes(g);
    ids = class_ids(g, classes);
    lcs = lower_central_series(g);
    ucs = upper_central_series(g);
    z = center(g);
    gamma2 = lcs.size() >= 2 ? lcs[1] : trivial_subgroup(g);
    if (g.prime || g.order == 1) phi = frattini_subgroup(g);
    rep.d = minimal_generator_count(g);
  });
  for (const auto& s : lcs) rep.gamma_orders.push_back(s.order());
  for (const auto& s : ucs) rep.upper_central_orders.push_back(s.order());
  rep.center_order = z.order();
  rep.frattini_order = (g.prime || g.order == 1) ? phi.order() : 0;
  auto cls = nilpotency_class(g);
  if (cls) rep.nilpotency_class_value = *cls;

  {
    long long total = 0;
    bool divides = true;
    for (const auto& c : classes) {
      total += static_cast<long long>(c.members.size());
      if (g.order % static_cast<int>(c.members.size()) != 0) divides = false;
    }
    add_check("class_equation", total == g.order && divides);
  }
  {
    // gamma_2 from the series equals the closure of all commutator sets
    std::vector<int> allc;
    for (const auto& c : classes)
      allc.insert(allc.end(), c.commutator_set.begin(), c.commutator_set.end());
    add_check("gamma2_consistency",
              subgroup_equal(generated_subgroup(g, allc), gamma2));
  }
  if (g.prime) {
    QuotientResult q = quotient_group(g, phi);
    bool dmatch = true;
    long long pw = 1;
    for (int i = 0; i < rep.d; ++i) pw *= *g.prime;
    dmatch = pw == static_cast<long long>(q.group.order);
    add_check("frattini_quotient",
              subgroup_contains(phi, gamma2) && is_elementary_abelian(q.group) && dmatch);
  }

  AutOptions ao{o.search_budget};
  AutomorphismGroup autc, inn;
  timed("automorphisms", [&] {
    inn = inner_automorphisms(g);
    autc = class_preserving_automorphisms(g, ao);
    rep.inn_order = inn.order;
    rep.autc_order = autc.order;
    rep.autcent_order = central_automorphisms(g, ao).order;
    if (g.prime || g.order == 1) {
      AutomorphismGroup cb = basis_conjugating_automorphisms(g, ao);
      rep.cb_order = cb.order;
      add_check("cb_closure", cb.closure_verified);
    } else {
      rep.cb_order = 0;
    }
    rep.aut_gamma2_order = gamma2_trivial_automorphisms(g, ao).order;
  });

  {
    long long inner_count = 0;
    for (const auto& a : autc.elements)
      if (a.flags.inner) ++inner_count;
    add_check("autc_contains_inn", inner_count == inn.order);
  }
  {
    long long bound = 1;
    for (int i = 0; i < rep.d; ++i) bound *= gamma2.order();
    long long tuple_bound = 1;
    for (int s : minimal_generating_set(g))
      tuple_bound *= static_cast<long long>(classes[ids[s]].members.size());
    add_check("sandwich_bounds", rep.inn_order <= rep.autc_order &&
                                     rep.autc_order <= tuple_bound && tuple_bound <= bound);
    rep.hypothesis_a = as_verdict(rep.autc_order == bound);
  }
  if (g.prime && rep.cb_order > 0) add_check("autc_within_cb", rep.autc_order <= rep.cb_order);

  timed("verdicts", [&] {
    rep.camina = as_verdict(is_camina(g));
    rep.camina_type = as_verdict(is_camina_type(g));
    rep.stem = as_verdict(is_stem(g));
    QuotientResult q = quotient_group(g, z);
    rep.homocyclic_central_quotient =
        is_abelian(q.group) ? as_verdict(is_homocyclic(q.group)) : Verdict::NotApplicable;
    ExtremalReport ext = central_quotient_extremal(g, ao);
    rep.central_quotient_extremal_flag = as_verdict(ext.extremal);
    if (ext.extremal && ext.hyp_a_follows != Verdict::NotApplicable) {
      add_check("extremal_implies_hyp_a", ext.hyp_a_follows == Verdict::True);
      add_check("extremal_autc_is_inn", ext.autc_is_inn == Verdict::True);
    }
    rep.metacyclic = as_verdict(is_metacyclic(g));
  });

  if (cls && *cls == 2) {
    timed("homc", [&] {
      HomcResult homc = homc_enumerate(g, ao);
      rep.homc_count = homc.count;
      add_check("homc_matches_autc", homc.count == rep.autc_order);
    });
    long long autcent_more = rep.autcent_order;
    add_check("class2_autc_in_autcent", rep.autc_order <= autcent_more);
  }

  if (g.prime && subgroup_contains(phi, z)) {
    AdneyYenReport ay = adney_yen_check(g, ao);
    add_check("adney_yen_match", ay.match);
  }

  if (cls) {
    timed("lie", [&] {
      GradedLieRing l = build_graded_lie_ring(g);
      LieAlgebraModP lbar = mod_p_algebra(l);
      add_check("d_equals_dim_l1",
                g.order == 1 || (lbar.dims.empty() ? rep.d == 0 : rep.d == lbar.dims[0]));
      rep.macdonald = macdonald_analysis(lbar);
    });
  }

  // report invariants
  add_check("camina_implies_camina_type",
            rep.camina != Verdict::True || rep.camina_type == Verdict::True);
  if (!o.with_timings) rep.timings_ms.clear();
  return rep;
}

}  // namespace pgroup
