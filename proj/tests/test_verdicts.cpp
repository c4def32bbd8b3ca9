#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pgroup/corpus.hpp"
#include "pgroup/verdicts.hpp"
#include "support/oracles.hpp"

using namespace pgroup;

TEST_CASE("camina-type predicate") {
  CHECK_FALSE(is_camina_type(oracles::cyclic(8)));  // abelian answers false
  CHECK(is_camina_type(realize(pres_dihedral8())));
  CHECK(is_camina_type(family_metacyclic_K(3, 2, 1, 1)));
  CHECK_FALSE(is_camina_type(direct_product(oracles::cyclic(2), realize(pres_dihedral8()))));
}

TEST_CASE("camina predicate") {
  CHECK(is_camina(oracles::heisenberg(3)));
  CHECK(is_camina(realize(pres_dihedral8())));
  CHECK_FALSE(is_camina(family_metacyclic_K(3, 2, 1, 1)));  // Phi strictly exceeds gamma_2
  // for p-groups: camina <=> camina-type and gamma_2 = Phi
  for (const FiniteGroup& g : {realize(pres_dihedral8()), realize(pres_modular16()),
                               family_metacyclic_K(3, 2, 1, 1), oracles::heisenberg(3)}) {
    const bool expected = is_camina_type(g) &&
                          subgroup_equal(derived_subgroup(g), frattini_subgroup(g));
    CHECK(is_camina(g) == expected);
  }
}

TEST_CASE("hypothesis A certificates") {
  HypothesisACertificate c = satisfies_hypothesis_a(direct_product(oracles::cyclic(2), oracles::cyclic(2)));
  CHECK(c.holds);
  CHECK(c.autc_order == 1);

  HypothesisACertificate k = satisfies_hypothesis_a(family_metacyclic_K(3, 2, 1, 1));
  CHECK(k.holds);
  CHECK(k.autc_order == 81);
  CHECK(k.gamma2_order == 9);
  CHECK(k.d == 2);

  HypothesisACertificate d16 = satisfies_hypothesis_a(realize(pres_dihedral16()));
  CHECK_FALSE(d16.holds);  // gamma_2 = C4 is not elementary abelian
}

TEST_CASE("stem predicate") {
  CHECK(is_stem(realize(pres_dihedral8())));
  CHECK(is_stem(family_unitriangular(3, 2)));
  CHECK_FALSE(is_stem(direct_product(oracles::cyclic(2), realize(pres_dihedral8()))));
}

TEST_CASE("metacyclic test") {
  CHECK(is_metacyclic(realize(pres_dihedral8())));
  CHECK(is_metacyclic(family_metacyclic_K(3, 2, 1, 1)));
  CHECK(is_metacyclic(oracles::cyclic(12)));
  CHECK_FALSE(is_metacyclic(oracles::heisenberg(3)));
  CHECK_FALSE(is_metacyclic(family_two_generator_G(3, 2, 2, 0, 0, 0, 2, 1)));
  CHECK_FALSE(is_metacyclic(direct_product(oracles::cyclic(2),
                                           direct_product(oracles::cyclic(2), oracles::cyclic(2)))));
}

TEST_CASE("theorem A equivalence") {
  TheoremAReport d8 = theorem_a_equivalence(realize(pres_dihedral8()));
  CHECK(d8.tuple_count == 24);
  CHECK(d8.equality_all_tuples);
  CHECK(d8.hypothesis_a);
  CHECK(d8.biconditional_holds);

  // C2 x D8 fails Hypothesis A, and some minimal generating tuple misses
  TheoremAReport cd = theorem_a_equivalence(
      direct_product(oracles::cyclic(2), realize(pres_dihedral8())));
  CHECK_FALSE(cd.hypothesis_a);
  CHECK_FALSE(cd.equality_all_tuples);
  CHECK(cd.biconditional_holds);
  CHECK_FALSE(cd.counterexample.empty());

  TheoremAReport ab = theorem_a_equivalence(direct_product(oracles::cyclic(3), oracles::cyclic(3)));
  CHECK(ab.biconditional_holds);
  CHECK(ab.equality_all_tuples);

  AnalyzeOptions tiny;
  tiny.theorem_a_cap = 100;
  CHECK_THROWS_AS((void)theorem_a_equivalence(family_metacyclic_K(3, 2, 1, 1), tiny), Error);
}

TEST_CASE("isoclinism") {
  FiniteGroup d8 = realize(pres_dihedral8());
  IsoclinismWitness self = is_isoclinic(d8, d8);
  CHECK(self.isoclinic);

  IsoclinismWitness dq = is_isoclinic(d8, realize(pres_quaternion8()));
  CHECK(dq.isoclinic);
  REQUIRE_FALSE(dq.phi.empty());
  REQUIRE_FALSE(dq.theta.empty());

  // the witness really intertwines the commutator maps
  FiniteGroup q8 = realize(pres_quaternion8());
  QuotientResult qd = quotient_group(d8, center(d8));
  QuotientResult qq = quotient_group(q8, center(q8));
  SubgroupGroup sd = subgroup_as_group(d8, derived_subgroup(d8));
  SubgroupGroup sq = subgroup_as_group(q8, derived_subgroup(q8));
  for (int x = 0; x < qd.group.order; ++x)
    for (int y = 0; y < qd.group.order; ++y) {
      const int lhs = dq.theta[sd.index_in_sub[d8.commutator(qd.section[x], qd.section[y])]];
      const int rhs =
          sq.index_in_sub[q8.commutator(qq.section[dq.phi[x]], qq.section[dq.phi[y]])];
      CHECK(lhs == rhs);
    }

  // profile mismatch rejects quickly
  CHECK_FALSE(is_isoclinic(d8, oracles::cyclic(8)).isoclinic);
  // deep negative: same profile, inequivalent commutator structure
  FiniteGroup h = oracles::heisenberg(3);
  CHECK_FALSE(is_isoclinic(family_unitriangular(3, 2), direct_product(h, h)).isoclinic);
}

TEST_CASE("y subgroup") {
  CHECK(y_subgroup(realize(pres_dihedral8())).order() == 1);
  CHECK(y_subgroup(realize(pres_dihedral16())).order() == 2);  // gamma_2 = C4 has a square
  CHECK(y_subgroup(realize(pres_desk_w32())).order() == 1);
  CHECK_THROWS_AS((void)y_subgroup(oracles::heisenberg(3)), Error);
}

TEST_CASE("class-2 suite") {
  TheoremBReport d8 = theorem_b_suite(realize(pres_dihedral8()));
  CHECK(d8.d_even == Verdict::True);
  CHECK(d8.d_ge_2d_gamma2 == Verdict::True);
  CHECK(d8.central_quotient_homocyclic == Verdict::True);
  CHECK(d8.all_pass());

  TheoremBReport ut = theorem_b_suite(family_unitriangular(3, 2));
  CHECK(ut.all_pass());

  CHECK_THROWS_AS((void)theorem_b_suite(realize(pres_dihedral16())), Error);  // class 3
  CHECK_THROWS_AS((void)theorem_b_suite(direct_product(oracles::cyclic(2), realize(pres_dihedral8()))),
                  Error);  // not Camina-type
}

TEST_CASE("class-3 suite") {
  TheoremCDReport k = theorem_cd_suite(family_metacyclic_K(3, 2, 1, 1));
  CHECK(k.d_eq_2d_gamma2_mod_gamma3 == Verdict::True);
  CHECK(k.cyclic_gamma2_implies_d2 == Verdict::True);
  CHECK(k.hyp_a_implies_d2 == Verdict::True);
  CHECK(k.wide_branch_biconditional == Verdict::True);
  CHECK(k.gamma2_pth_power_central == Verdict::True);
  CHECK(k.second_center_is_frattini == Verdict::True);
  CHECK(k.all_pass());

  TheoremCDReport g7 = theorem_cd_suite(family_two_generator_G(3, 2, 2, 0, 0, 0, 2, 1));
  CHECK(g7.all_pass());

  TheoremCDReport w128 = theorem_cd_suite(realize(pres_desk_w128()));
  CHECK(w128.narrow_branch_biconditional == Verdict::True);
  CHECK(w128.all_pass());

  // D16 fails Hypothesis A but the suite's biconditionals still hold
  TheoremCDReport d16 = theorem_cd_suite(realize(pres_dihedral16()));
  CHECK(d16.all_pass());

  CHECK_THROWS_AS((void)theorem_cd_suite(realize(pres_dihedral8())), Error);
}

TEST_CASE("central quotient extremality") {
  ExtremalReport h = central_quotient_extremal(oracles::heisenberg(3));
  CHECK(h.extremal);
  CHECK(h.hyp_a_follows == Verdict::True);
  CHECK(h.autc_is_inn == Verdict::True);

  ExtremalReport k = central_quotient_extremal(family_metacyclic_K(3, 2, 1, 1));
  CHECK(k.extremal);
  CHECK(k.autc_is_inn == Verdict::True);

  ExtremalReport cd = central_quotient_extremal(
      direct_product(oracles::cyclic(2), realize(pres_dihedral8())));
  CHECK_FALSE(cd.extremal);

  // Burnside's group is Hypothesis-A but not extremal: Aut_c exceeds Inn
  ExtremalReport ut = central_quotient_extremal(family_unitriangular(3, 2));
  CHECK_FALSE(ut.extremal);
}

TEST_CASE("analysis report invariants") {
  AnalyzeOptions o;
  o.with_timings = false;
  AnalysisReport rep = analyze_group(realize(pres_dihedral8()), "D8", o);
  CHECK(rep.all_checks_pass());
  CHECK(rep.order == 8);
  CHECK(rep.d == 2);
  CHECK(rep.autc_order == 4);
  CHECK(rep.hypothesis_a == Verdict::True);
  CHECK(rep.camina == Verdict::True);
  CHECK(rep.stem == Verdict::True);
  CHECK(rep.metacyclic == Verdict::True);
  CHECK(rep.homc_count == 4);
  CHECK(rep.timings_ms.empty());

  AnalysisReport k = analyze_group(family_metacyclic_K(3, 2, 1, 1), "K", o);
  CHECK(k.all_checks_pass());
  CHECK(k.nilpotency_class_value == 3);
  CHECK(k.gamma_orders == std::vector<long long>{243, 9, 3, 1});
  CHECK(k.central_quotient_extremal_flag == Verdict::True);
  CHECK(k.camina == Verdict::False);
  CHECK(k.camina_type == Verdict::True);

  AnalysisReport ab = analyze_group(oracles::cyclic(9), "C9", o);
  CHECK(ab.all_checks_pass());
  CHECK(ab.hypothesis_a == Verdict::True);
  CHECK(ab.camina_type == Verdict::False);
}

TEST_CASE("default corpus suite run stays clean on a slice") {
  // a fast subset: the order <= 32 entries with every suite
  std::vector<CorpusEntry> entries;
  for (CorpusEntry& e : default_corpus()) {
    AnalyzeOptions probe;
    if (e.name == "D8" || e.name == "Q8" || e.name == "M16" || e.name == "W32" ||
        e.name == "Y(q2,m2)" || e.name == "C2xD8")
      entries.push_back(std::move(e));
  }
  AnalyzeOptions o;
  o.with_timings = false;
  CorpusRunResult r = run_corpus(entries, all_suites(), o, 2);
  CHECK(r.fail == 0);
  CHECK(r.pass > 0);
  for (const AnalysisReport& rep : r.reports) CHECK(rep.all_checks_pass());
}
