#include "pgroup/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "pgroup/abelian.hpp"

namespace pgroup {

namespace {

NormalFormWord nfw(std::vector<std::pair<int, int>> letters) {
  NormalFormWord w;
  w.letters = std::move(letters);
  return w;
}

FiniteGroup make_cyclic(int p, int e, const AnalyzeOptions& o) {
  PcPresentation pr;
  pr.prime = p;
  pr.names = {"g"};
  int q = 1;
  for (int i = 0; i < e; ++i) q *= p;
  pr.relative_orders = {q};
  pr.power_words = {{}};
  pr.comm_words = {{}};
  return realize(pr, {o.size_cap});
}

int small_central_generator(const FiniteGroup& g) {
  for (int m : center(g).members)
    if (m != g.identity) return m;
  fail(ErrorCode::InternalCheckFailed, "trivial center");
}

FiniteGroup ut9_class2_quotient(const AnalyzeOptions& o) {
  FiniteGroup g = family_unitriangular(3, 2, o.size_cap);
  SubgroupSet gamma2 = derived_subgroup(g);
  int gen = -1;
  for (int m : gamma2.members)
    if (m != g.identity) {
      gen = m;
      break;
    }
  QuotientResult q = quotient_group(g, generated_subgroup(g, {gen}));
  return std::move(q.group);
}

FiniteGroup k2402_gamma3_quotient(const AnalyzeOptions& o) {
  FiniteGroup k = family_metacyclic_K(2, 4, 0, 2, {o.size_cap});
  auto lcs = lower_central_series(k);
  const SubgroupSet& gamma3 = lcs[2];
  // the unique index-2 subgroup of the cyclic gamma_3
  int gen = -1;
  for (int m : gamma3.members)
    if (element_order(k, m) == gamma3.order() / 2) {
      gen = m;
      break;
    }
  QuotientResult q = quotient_group(k, generated_subgroup(k, {gen}));
  return std::move(q.group);
}

}  // namespace

PcPresentation pres_desk_w32() {
  PcPresentation p;
  p.prime = 2;
  p.names = {"x", "y", "u", "v"};
  p.relative_orders = {2, 4, 2, 2};
  p.power_words.assign(4, {});
  p.comm_words = {{}, {{}}, {{}, {}}, {{}, {}, {}}};
  p.comm_words[1][0] = nfw({{2, 1}});  // [y,x] = u
  p.comm_words[2][1] = nfw({{3, 1}});  // [u,y] = v
  return p;
}

PcPresentation pres_desk_w128() {
  PcPresentation p;
  p.prime = 2;
  p.names = {"x", "y", "u", "v", "w"};
  p.relative_orders = {4, 4, 2, 2, 2};
  p.power_words.assign(5, {});
  p.comm_words = {{}, {{}}, {{}, {}}, {{}, {}, {}}, {{}, {}, {}, {}}};
  p.comm_words[1][0] = nfw({{2, 1}});  // [y,x] = u
  p.comm_words[2][0] = nfw({{3, 1}});  // [u,x] = v
  p.comm_words[2][1] = nfw({{4, 1}});  // [u,y] = w
  return p;
}

std::vector<CorpusEntry> default_corpus() {
  std::vector<CorpusEntry> entries;
  auto add = [&entries](const std::string& name,
                        std::function<FiniteGroup(const AnalyzeOptions&)> fn) {
    entries.push_back({name, std::move(fn)});
  };

  add("C4", [](const AnalyzeOptions& o) { return make_cyclic(2, 2, o); });
  add("C2xC2", [](const AnalyzeOptions& o) {
    FiniteGroup c2 = make_cyclic(2, 1, o);
    return direct_product(c2, c2);
  });
  add("C2xC4", [](const AnalyzeOptions& o) {
    return direct_product(make_cyclic(2, 1, o), make_cyclic(2, 2, o));
  });
  add("C2xC2xC2", [](const AnalyzeOptions& o) {
    FiniteGroup c2 = make_cyclic(2, 1, o);
    return direct_product(direct_product(c2, c2), c2);
  });
  add("C9", [](const AnalyzeOptions& o) { return make_cyclic(3, 2, o); });
  add("C3xC3", [](const AnalyzeOptions& o) {
    FiniteGroup c3 = make_cyclic(3, 1, o);
    return direct_product(c3, c3);
  });

  add("D8", [](const AnalyzeOptions&) { return realize(pres_dihedral8()); });
  add("Q8", [](const AnalyzeOptions&) { return realize(pres_quaternion8()); });
  add("D16", [](const AnalyzeOptions&) { return realize(pres_dihedral16()); });
  add("Q16", [](const AnalyzeOptions&) { return realize(pres_quaternion16()); });
  add("M16", [](const AnalyzeOptions&) { return realize(pres_modular16()); });
  add("C2xD8", [](const AnalyzeOptions& o) {
    return direct_product(make_cyclic(2, 1, o), realize(pres_dihedral8()));
  });

  add("ES(2,2,D)", [](const AnalyzeOptions& o) {
    return family_extraspecial(2, 2, ExtraspecialKind::DType, o.size_cap);
  });
  add("ES(2,2,Q)", [](const AnalyzeOptions& o) {
    return family_extraspecial(2, 2, ExtraspecialKind::QType, o.size_cap);
  });
  add("ES(3,1,p)", [](const AnalyzeOptions& o) {
    return family_extraspecial(3, 1, ExtraspecialKind::ExponentP, o.size_cap);
  });
  add("ES(3,1,p2)", [](const AnalyzeOptions& o) {
    return family_extraspecial(3, 1, ExtraspecialKind::ExponentP2, o.size_cap);
  });
  add("ES(3,2,p)", [](const AnalyzeOptions& o) {
    return family_extraspecial(3, 2, ExtraspecialKind::ExponentP, o.size_cap);
  });
  add("ES(3,2,p2)", [](const AnalyzeOptions& o) {
    return family_extraspecial(3, 2, ExtraspecialKind::ExponentP2, o.size_cap);
  });

  add("UT(3,F5)", [](const AnalyzeOptions& o) { return family_unitriangular(5, 1, o.size_cap); });
  add("UT(3,F9)", [](const AnalyzeOptions& o) { return family_unitriangular(3, 2, o.size_cap); });
  add("UT(3,F9)/C3", ut9_class2_quotient);

  add("K(3,2,1,1)", [](const AnalyzeOptions& o) {
    return family_metacyclic_K(3, 2, 1, 1, {o.size_cap});
  });
  add("K(2,3,0,2)", [](const AnalyzeOptions& o) {
    return family_metacyclic_K(2, 3, 0, 2, {o.size_cap});
  });
  add("K(2,4,0,2)", [](const AnalyzeOptions& o) {
    return family_metacyclic_K(2, 4, 0, 2, {o.size_cap});
  });
  add("K(2,4,0,2)/N2", k2402_gamma3_quotient);

  add("G7(3)", [](const AnalyzeOptions& o) {
    return family_two_generator_G(3, 2, 2, 0, 0, 0, 2, 1, {o.size_cap});
  });

  add("Y(q2,m2)", [](const AnalyzeOptions& o) { return family_y_product(2, 1, 2, o.size_cap); });
  add("Y(q4,m1)", [](const AnalyzeOptions& o) { return family_y_product(2, 2, 1, o.size_cap); });
  add("Y(q9,m1)", [](const AnalyzeOptions& o) { return family_y_product(3, 2, 1, o.size_cap); });

  add("W32", [](const AnalyzeOptions& o) { return realize(pres_desk_w32(), {o.size_cap}); });
  add("W128", [](const AnalyzeOptions& o) { return realize(pres_desk_w128(), {o.size_cap}); });
  return entries;
}

std::optional<Suite> suite_from_string(const std::string& s) {
  if (s == "A") return Suite::A;
  if (s == "B") return Suite::B;
  if (s == "CD") return Suite::CD;
  if (s == "lie") return Suite::Lie;
  if (s == "isoclinism") return Suite::Isoclinism;
  if (s == "extremal") return Suite::Extremal;
  if (s == "quotient") return Suite::Quotient;
  return std::nullopt;
}

const char* suite_name(Suite s) {
  switch (s) {
    case Suite::A: return "A";
    case Suite::B: return "B";
    case Suite::CD: return "CD";
    case Suite::Lie: return "lie";
    case Suite::Isoclinism: return "isoclinism";
    case Suite::Extremal: return "extremal";
    case Suite::Quotient: return "quotient";
  }
  return "?";
}

std::vector<Suite> all_suites() {
  return {Suite::A,          Suite::B,        Suite::CD,      Suite::Lie,
          Suite::Isoclinism, Suite::Extremal, Suite::Quotient};
}

namespace {

SuiteCheck row(Suite s, const std::string& group, const std::string& check, Verdict v,
               std::string detail = "") {
  return {suite_name(s), group, check, v, std::move(detail)};
}

Verdict vb(bool b) { return b ? Verdict::True : Verdict::False; }

void suite_a(const FiniteGroup& g, const AnalysisReport& rep, const AnalyzeOptions& o,
             std::vector<SuiteCheck>& out) {
  if (g.order > 128 || !g.prime) {
    out.push_back(row(Suite::A, rep.name, "biconditional", Verdict::NotApplicable));
    return;
  }
  TheoremAReport ta = theorem_a_equivalence(g, o);
  out.push_back(row(Suite::A, rep.name, "biconditional", vb(ta.biconditional_holds),
                    "tuples=" + std::to_string(ta.tuple_count)));
}

void suite_b(const FiniteGroup& g, const AnalysisReport& rep, const AnalyzeOptions& o,
             std::vector<SuiteCheck>& out) {
  const bool applies = rep.nilpotency_class_value && *rep.nilpotency_class_value == 2 &&
                       rep.camina_type == Verdict::True;
  if (!applies) {
    out.push_back(row(Suite::B, rep.name, "class2_camina_type", Verdict::NotApplicable));
    return;
  }
  TheoremBReport tb = theorem_b_suite(g, {o.search_budget});
  out.push_back(row(Suite::B, rep.name, "d_even", tb.d_even));
  out.push_back(row(Suite::B, rep.name, "d_ge_2d_gamma2", tb.d_ge_2d_gamma2));
  out.push_back(
      row(Suite::B, rep.name, "central_quotient_homocyclic", tb.central_quotient_homocyclic));
  out.push_back(row(Suite::B, rep.name, "autcent_eq_autc_iff_z_eq_gamma2",
                    tb.autcent_eq_autc_iff_z_eq_gamma2));
  out.push_back(
      row(Suite::B, rep.name, "autc_eq_inn_iff_gamma2_cyclic", tb.autc_eq_inn_iff_gamma2_cyclic));
  // at class 2, Camina-type is equivalent to the extremal automorphism count
  out.push_back(
      row(Suite::B, rep.name, "class2_hypothesis_a", vb(rep.hypothesis_a == Verdict::True)));
}

void suite_cd(const FiniteGroup& g, const AnalysisReport& rep, const AnalyzeOptions& o,
              std::vector<SuiteCheck>& out) {
  const bool applies =
      rep.nilpotency_class_value && *rep.nilpotency_class_value >= 3 && g.prime.has_value();
  if (!applies) {
    out.push_back(row(Suite::CD, rep.name, "class_at_least_3", Verdict::NotApplicable));
    return;
  }
  TheoremCDReport tc = theorem_cd_suite(g, {o.search_budget});
  out.push_back(row(Suite::CD, rep.name, "d_eq_2d_gamma2_mod_gamma3", tc.d_eq_2d_gamma2_mod_gamma3));
  out.push_back(row(Suite::CD, rep.name, "cyclic_gamma2_implies_d2", tc.cyclic_gamma2_implies_d2));
  out.push_back(row(Suite::CD, rep.name, "hyp_a_implies_d2", tc.hyp_a_implies_d2));
  out.push_back(row(Suite::CD, rep.name, "wide_branch_biconditional", tc.wide_branch_biconditional));
  out.push_back(
      row(Suite::CD, rep.name, "narrow_branch_biconditional", tc.narrow_branch_biconditional));
  out.push_back(row(Suite::CD, rep.name, "gamma2_pth_power_central", tc.gamma2_pth_power_central));
  out.push_back(
      row(Suite::CD, rep.name, "second_center_is_frattini", tc.second_center_is_frattini));
}

void suite_lie(const FiniteGroup& g, const AnalysisReport& rep, const AnalyzeOptions&,
               std::vector<SuiteCheck>& out) {
  const bool applies = rep.nilpotency_class_value && *rep.nilpotency_class_value == 3 &&
                       g.prime && rep.gamma_orders.size() >= 3 &&
                       rep.gamma_orders[2] == *g.prime && rep.camina_type == Verdict::True;
  if (!applies) {
    out.push_back(row(Suite::Lie, rep.name, "class3_gamma3_p_camina_type", Verdict::NotApplicable));
    return;
  }
  GradedLieRing l = build_graded_lie_ring(g);
  LieAlgebraModP lbar = mod_p_algebra(l);
  MacdonaldReport m = macdonald_analysis(lbar);
  out.push_back(row(Suite::Lie, rep.name, "conditions_hold", vb(m.conditions_hold)));
  out.push_back(row(Suite::Lie, rep.name, "m_eq_2n", vb(m.m_eq_2n)));
  out.push_back(row(Suite::Lie, rep.name, "cbar_dim_eq_n", vb(m.cbar_dim_eq_n)));
  out.push_back(row(Suite::Lie, rep.name, "cbar_equals_centralizers", vb(m.cbar_equals_centralizers)));
  out.push_back(row(Suite::Lie, rep.name, "centralizer_dims_ok", vb(m.centralizer_dims_ok)));
  out.push_back(row(Suite::Lie, rep.name, "lambda_surjective_kernel_cbar",
                    vb(m.lambda_surjective && m.lambda_kernel_is_cbar)));
  out.push_back(row(Suite::Lie, rep.name, "direct_sum_ok", vb(m.direct_sum_ok)));
  out.push_back(row(Suite::Lie, rep.name, "pencil_nonsingular", vb(m.pencil_nonsingular),
                    m.pencil_exhaustive ? "exhaustive" : "sampled"));
  CentralizerStructureReport cs = centralizer_structure_checks(lbar);
  out.push_back(row(Suite::Lie, rep.name, "bracket_nonvanishing", vb(cs.bracket_nonvanishing_ok)));
  out.push_back(row(Suite::Lie, rep.name, "cbar_proper_nonzero", vb(cs.cbar_proper_nonzero)));
  out.push_back(
      row(Suite::Lie, rep.name, "centralizer_alignment", vb(cs.centralizer_alignment_ok)));
}

void suite_extremal(const FiniteGroup& g, const AnalysisReport& rep, const AnalyzeOptions& o,
                    std::vector<SuiteCheck>& out) {
  ExtremalReport ext = central_quotient_extremal(g, {o.search_budget});
  if (!ext.extremal) {
    out.push_back(row(Suite::Extremal, rep.name, "extremal", Verdict::NotApplicable, "not extremal"));
    return;
  }
  out.push_back(row(Suite::Extremal, rep.name, "extremal", Verdict::True));
  if (ext.hyp_a_follows != Verdict::NotApplicable) {
    out.push_back(row(Suite::Extremal, rep.name, "hyp_a_follows", ext.hyp_a_follows));
    out.push_back(row(Suite::Extremal, rep.name, "autc_is_inn", ext.autc_is_inn));
  }
  if (rep.nilpotency_class_value && *rep.nilpotency_class_value == 2) {
    SubgroupGroup g2 = subgroup_as_group(g, derived_subgroup(g));
    out.push_back(
        row(Suite::Extremal, rep.name, "class2_gamma2_cyclic", vb(is_cyclic(g2.group))));
  }
  if (rep.nilpotency_class_value && *rep.nilpotency_class_value >= 3)
    out.push_back(row(Suite::Extremal, rep.name, "class3_d_eq_2", vb(rep.d == 2)));
}

void suite_quotient(const FiniteGroup& g, const AnalysisReport& rep, const AnalyzeOptions& o,
                    std::vector<SuiteCheck>& out) {
  if (g.order > 128 || !g.prime) {
    out.push_back(row(Suite::Quotient, rep.name, "stability", Verdict::NotApplicable));
    return;
  }
  const bool hyp_a = rep.hypothesis_a == Verdict::True;
  const bool camina_type = rep.camina_type == Verdict::True;
  if (!hyp_a && !camina_type) {
    out.push_back(row(Suite::Quotient, rep.name, "stability", Verdict::NotApplicable,
                      "neither property holds"));
    return;
  }
  SubgroupSet gamma2 = derived_subgroup(g);
  long long hyp_checked = 0, camina_checked = 0;
  bool hyp_ok = true, camina_ok = true;
  for (const SubgroupSet& n : normal_subgroups(g)) {
    if (n.order() == 1 || n.order() == g.order) continue;
    QuotientResult q = quotient_group(g, n);
    if (hyp_a) {
      ++hyp_checked;
      if (!satisfies_hypothesis_a(q.group, {o.search_budget}).holds) hyp_ok = false;
    }
    if (camina_type && subgroup_contains(gamma2, n) && !is_abelian(q.group)) {
      ++camina_checked;
      if (!is_camina_type(q.group)) camina_ok = false;
    }
  }
  if (hyp_a)
    out.push_back(row(Suite::Quotient, rep.name, "hyp_a_quotients", vb(hyp_ok),
                      "quotients=" + std::to_string(hyp_checked)));
  if (camina_type)
    out.push_back(row(Suite::Quotient, rep.name, "camina_type_quotients", vb(camina_ok),
                      "quotients=" + std::to_string(camina_checked)));
}

}  // namespace

std::vector<SuiteCheck> run_group_suites(const FiniteGroup& g, const AnalysisReport& rep,
                                         const std::vector<Suite>& suites,
                                         const AnalyzeOptions& opts) {
  std::vector<SuiteCheck> out;
  for (Suite s : suites) {
    switch (s) {
      case Suite::A: suite_a(g, rep, opts, out); break;
      case Suite::B: suite_b(g, rep, opts, out); break;
      case Suite::CD: suite_cd(g, rep, opts, out); break;
      case Suite::Lie: suite_lie(g, rep, opts, out); break;
      case Suite::Extremal: suite_extremal(g, rep, opts, out); break;
      case Suite::Quotient: suite_quotient(g, rep, opts, out); break;
      case Suite::Isoclinism: break;  // pair suite, handled separately
    }
  }
  return out;
}

std::vector<SuiteCheck> run_isoclinism_suite(const AnalyzeOptions& opts) {
  struct Pair {
    std::string name;
    std::function<FiniteGroup()> a;
    std::function<FiniteGroup()> b;
    bool expected;
  };
  const int cap = opts.size_cap;
  std::vector<Pair> pairs = {
      {"D8~Q8", [] { return realize(pres_dihedral8()); },
       [] { return realize(pres_quaternion8()); }, true},
      {"D8~M16", [] { return realize(pres_dihedral8()); },
       [] { return realize(pres_modular16()); }, true},
      {"ES27p~ES27p2",
       [cap] { return family_extraspecial(3, 1, ExtraspecialKind::ExponentP, cap); },
       [cap] { return family_extraspecial(3, 1, ExtraspecialKind::ExponentP2, cap); }, true},
      {"ES32D~ES32Q", [cap] { return family_extraspecial(2, 2, ExtraspecialKind::DType, cap); },
       [cap] { return family_extraspecial(2, 2, ExtraspecialKind::QType, cap); }, true},
      {"D8*C4~D8",
       [cap] {
         FiniteGroup d8 = realize(pres_dihedral8());
         PcPresentation c4p;
         c4p.prime = 2;
         c4p.names = {"c"};
         c4p.relative_orders = {4};
         c4p.power_words = {{}};
         c4p.comm_words = {{}};
         FiniteGroup c4 = realize(c4p);
         const int z = small_central_generator(d8);
         const int c2 = power_of(c4, c4.generators[0], 2);
         return central_product({&d8, &c4}, {z, c2}, cap);
       },
       [] { return realize(pres_dihedral8()); }, true},
      {"G7~K(3,2,1,1)", [cap] { return family_two_generator_G(3, 2, 2, 0, 0, 0, 2, 1, {cap}); },
       [cap] { return family_metacyclic_K(3, 2, 1, 1, {cap}); }, true},
      {"UT(3,F9)~Heis27xHeis27", [cap] { return family_unitriangular(3, 2, cap); },
       [cap] {
         FiniteGroup h = heisenberg_mod(3, 1, cap);
         return direct_product(h, h);
       },
       false},
      {"D8~C2xC2xC2", [] { return realize(pres_dihedral8()); },
       [cap]() -> FiniteGroup {
         PcPresentation c2p;
         c2p.prime = 2;
         c2p.names = {"c"};
         c2p.relative_orders = {2};
         c2p.power_words = {{}};
         c2p.comm_words = {{}};
         FiniteGroup c2 = realize(c2p);
         return direct_product(direct_product(c2, c2), c2);
       },
       false},
  };

  std::vector<SuiteCheck> out;
  for (const Pair& p : pairs) {
    FiniteGroup a = p.a();
    FiniteGroup b = p.b();
    IsoclinismWitness wit = is_isoclinic(a, b, opts);
    out.push_back(row(Suite::Isoclinism, p.name, "isoclinic_matches_expected",
                      vb(wit.isoclinic == p.expected)));
    if (wit.isoclinic) {
      AutOptions ao{opts.search_budget};
      const long long autc_a = class_preserving_automorphisms(a, ao).order;
      const long long autc_b = class_preserving_automorphisms(b, ao).order;
      out.push_back(row(Suite::Isoclinism, p.name, "autc_orders_equal", vb(autc_a == autc_b)));
      if (is_camina_type(a) && is_stem(b)) {
        out.push_back(row(Suite::Isoclinism, p.name, "camina_type_transfers_to_stem",
                          vb(is_camina_type(b))));
        out.push_back(row(Suite::Isoclinism, p.name, "d_matches_stem",
                          vb(minimal_generator_count(a) == minimal_generator_count(b))));
      }
    }
  }
  return out;
}

CorpusRunResult run_corpus(const std::vector<CorpusEntry>& entries,
                           const std::vector<Suite>& suites, const AnalyzeOptions& opts,
                           int jobs) {
  CorpusRunResult result;
  result.reports.resize(entries.size());
  std::vector<std::vector<SuiteCheck>> per_group(entries.size());

  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= entries.size()) return;
      FiniteGroup g = entries[i].build(opts);
      result.reports[i] = analyze_group(g, entries[i].name, opts);
      per_group[i] = run_group_suites(g, result.reports[i], suites, opts);
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (auto& rows : per_group)
    result.checks.insert(result.checks.end(), rows.begin(), rows.end());
  if (std::find(suites.begin(), suites.end(), Suite::Isoclinism) != suites.end()) {
    auto rows = run_isoclinism_suite(opts);
    result.checks.insert(result.checks.end(), rows.begin(), rows.end());
  }

  for (const SuiteCheck& c : result.checks) {
    if (c.verdict == Verdict::True) ++result.pass;
    else if (c.verdict == Verdict::False) ++result.fail;
    else ++result.not_applicable;
  }
  return result;
}

}  // namespace pgroup
