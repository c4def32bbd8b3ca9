#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pgroup/autos.hpp"
#include "pgroup/group.hpp"
#include "pgroup/lie.hpp"

namespace pgroup {

// Tri-state verdict: theorems carry hypotheses, and "hypothesis unmet" is
// distinct from "false".
enum class Verdict { True, False, NotApplicable };

const char* verdict_string(Verdict v);  // "true" / "false" / "n/a"

struct AnalyzeOptions {
  int size_cap = 4096;
  long long search_budget = 10'000'000;
  int theorem_a_cap = 256;
  bool with_timings = true;
};

/// [x,G] = gamma_2(G) for every x outside the Frattini subgroup. Abelian
/// groups answer false (the notion concerns non-abelian groups only).
bool is_camina_type(const FiniteGroup& g);

/// [x,G] = gamma_2(G) for every x outside gamma_2(G).
bool is_camina(const FiniteGroup& g);

struct HypothesisACertificate {
  long long autc_order = 0;
  long long gamma2_order = 0;
  int d = 0;
  bool holds = false;  // autc_order == gamma2_order^d
};

HypothesisACertificate satisfies_hypothesis_a(const FiniteGroup& g, const AutOptions& o = {});

/// Z(G) <= gamma_2(G).
bool is_stem(const FiniteGroup& g);

/// Search for a cyclic normal subgroup with cyclic quotient.
bool is_metacyclic(const FiniteGroup& g);

struct TheoremAReport {
  long long tuple_count = 0;          // minimal generating d-tuples
  bool equality_all_tuples = false;   // prod |x_i^G| == |Aut_c| for every tuple
  bool hypothesis_a = false;
  bool biconditional_holds = false;
  std::vector<int> counterexample;    // first tuple violating equality, if any
};

/// Enumerates every minimal generating tuple (images spanning G/Phi) and
/// confirms: equality holds for all of them iff |Aut_c| = |gamma_2|^d.
TheoremAReport theorem_a_equivalence(const FiniteGroup& g, const AnalyzeOptions& o = {});

struct IsoclinismWitness {
  bool isoclinic = false;
  std::vector<int> phi;    // G/Z -> H/Z (element map between the quotients)
  std::vector<int> theta;  // gamma_2(G) members -> gamma_2(H) members
};

/// Backtracking search for an isoclinism (phi, theta): an isomorphism pair
/// making the commutator squares agree.
IsoclinismWitness is_isoclinic(const FiniteGroup& g, const FiniteGroup& h,
                               const AnalyzeOptions& o = {});

/// Y(G) = gamma_4(G) (gamma_2(G))^2 for 2-groups.
SubgroupSet y_subgroup(const FiniteGroup& g);

struct TheoremBReport {
  Verdict d_even = Verdict::NotApplicable;
  Verdict d_ge_2d_gamma2 = Verdict::NotApplicable;
  Verdict central_quotient_homocyclic = Verdict::NotApplicable;
  Verdict autcent_eq_autc_iff_z_eq_gamma2 = Verdict::NotApplicable;
  Verdict autc_eq_inn_iff_gamma2_cyclic = Verdict::NotApplicable;
  bool all_pass() const;
};

/// Class-2 Camina-type checks (WrongClass / NotCaminaType otherwise).
TheoremBReport theorem_b_suite(const FiniteGroup& g, const AutOptions& o = {});

struct TheoremCDReport {
  Verdict d_eq_2d_gamma2_mod_gamma3 = Verdict::NotApplicable;  // Camina-type only
  Verdict cyclic_gamma2_implies_d2 = Verdict::NotApplicable;
  Verdict hyp_a_implies_d2 = Verdict::NotApplicable;
  Verdict wide_branch_biconditional = Verdict::NotApplicable;  // |gamma2/gamma3| > 2
  Verdict narrow_branch_biconditional = Verdict::NotApplicable;  // |gamma2/gamma3| = 2
  Verdict gamma2_pth_power_central = Verdict::NotApplicable;     // |gamma3| = p cases
  Verdict second_center_is_frattini = Verdict::NotApplicable;
  bool all_pass() const;
};

/// Class >= 3 checks (WrongClass otherwise).
TheoremCDReport theorem_cd_suite(const FiniteGroup& g, const AutOptions& o = {});

struct ExtremalReport {
  bool extremal = false;  // |G/Z| == |gamma_2|^d
  Verdict hyp_a_follows = Verdict::NotApplicable;   // checked when extremal and Z <= gamma_2
  Verdict autc_is_inn = Verdict::NotApplicable;
};

ExtremalReport central_quotient_extremal(const FiniteGroup& g, const AutOptions& o = {});

struct NamedCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct AnalysisReport {
  std::string name;
  long long order = 0;
  std::optional<int> prime;
  std::optional<int> nilpotency_class_value;
  int d = 0;
  std::vector<long long> gamma_orders;          // gamma_1, gamma_2, ...
  std::vector<long long> upper_central_orders;  // Z_0, Z_1, ...
  long long center_order = 0;
  long long frattini_order = 0;
  long long autc_order = 0;
  long long inn_order = 0;
  long long autcent_order = 0;
  long long cb_order = 0;
  long long aut_gamma2_order = 0;
  std::optional<long long> homc_count;  // class 2 only
  Verdict camina = Verdict::NotApplicable;
  Verdict camina_type = Verdict::NotApplicable;
  Verdict hypothesis_a = Verdict::NotApplicable;
  Verdict stem = Verdict::NotApplicable;
  Verdict homocyclic_central_quotient = Verdict::NotApplicable;
  Verdict central_quotient_extremal_flag = Verdict::NotApplicable;
  Verdict metacyclic = Verdict::NotApplicable;
  std::optional<MacdonaldReport> macdonald;
  std::vector<NamedCheck> checks;
  std::vector<std::pair<std::string, double>> timings_ms;

  bool all_checks_pass() const;
};

/// Full per-group analysis: orders, automorphism groups, verdicts, the
/// graded Lie algebra report, and the internal cross-checks.
AnalysisReport analyze_group(const FiniteGroup& g, const std::string& name,
                             const AnalyzeOptions& o = {});

}  // namespace pgroup
