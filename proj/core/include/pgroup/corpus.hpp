#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pgroup/pcp.hpp"
#include "pgroup/verdicts.hpp"

namespace pgroup {

struct CorpusEntry {
  std::string name;
  std::function<FiniteGroup(const AnalyzeOptions&)> build;
};

/// The built-in instance catalog: abelian controls, the order <= 16 stock
/// groups, extraspecial groups, unitriangular groups and a class-2 central
/// quotient, metacyclic instances and a derived quotient, the order-p^6
/// two-generator instance, central products, and two hand-picked
/// two-generator 2-groups of class 3 with elementary abelian derived
/// subgroup.
std::vector<CorpusEntry> default_corpus();

/// Frozen class-3 2-group presentations used by the corpus and the tests.
PcPresentation pres_desk_w32();   // order 32, gamma_2 = C2 x C2
PcPresentation pres_desk_w128();  // order 128, gamma_2 = C2 x C2 x C2

enum class Suite { A, B, CD, Lie, Isoclinism, Extremal, Quotient };

std::optional<Suite> suite_from_string(const std::string& s);
const char* suite_name(Suite s);
std::vector<Suite> all_suites();

struct SuiteCheck {
  std::string suite;
  std::string group;
  std::string check;
  Verdict verdict = Verdict::NotApplicable;
  std::string detail;
};

struct CorpusRunResult {
  std::vector<AnalysisReport> reports;  // one per entry, input order
  std::vector<SuiteCheck> checks;
  long long pass = 0;
  long long fail = 0;
  long long not_applicable = 0;
  bool any_failure() const { return fail > 0; }
};

/// Runs the selected suites over the entries. Groups are analyzed
/// concurrently up to `jobs`; output order follows input order.
CorpusRunResult run_corpus(const std::vector<CorpusEntry>& entries,
                           const std::vector<Suite>& suites, const AnalyzeOptions& opts,
                           int jobs = 1);

/// Suite checks for one already-analyzed group (everything except the
/// isoclinism suite, which works on pairs).
std::vector<SuiteCheck> run_group_suites(const FiniteGroup& g, const AnalysisReport& rep,
                                         const std::vector<Suite>& suites,
                                         const AnalyzeOptions& opts);

/// The constructed isoclinic/non-isoclinic pairs exercised by the
/// isoclinism suite.
std::vector<SuiteCheck> run_isoclinism_suite(const AnalyzeOptions& opts);

}  // namespace pgroup
