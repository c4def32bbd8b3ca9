// pgroup: build finite p-groups from power-commutator presentations or the
// built-in families, analyze their class-preserving automorphism structure,
// and run the verification suites over the instance corpus.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "pgroup/corpus.hpp"
#include "pgroup/report_json.hpp"

using namespace pgroup;
using ordered_json = nlohmann::ordered_json;

namespace {

struct GlobalOpts {
  int cap = 4096;
  long long budget = 10'000'000;
  int jobs = 1;
  std::string json_path;
  bool no_timings = false;
  bool verbose = false;

  AnalyzeOptions analyze_options() const {
    AnalyzeOptions o;
    o.size_cap = cap;
    o.search_budget = budget;
    o.with_timings = !no_timings;
    return o;
  }
};

void emit(const GlobalOpts& g, const std::string& text) {
  if (g.json_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(g.json_path);
  if (!out) fail(ErrorCode::FileNotFound, "cannot open output file " + g.json_path);
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::FileNotFound, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct FamilyParams {
  int p = 0, m = 0, n = 0, i = 0, j = 0, k = 0, r = 0, s = 0, t = 0, e = 1;
  std::string kind;
};

FiniteGroup build_family(const std::string& name, const FamilyParams& fp, const GlobalOpts& g) {
  RealizeOptions ro{g.cap};
  if (name == "metacyclic_K") return family_metacyclic_K(fp.p, fp.r, fp.s, fp.t, ro);
  if (name == "two_generator_G")
    return family_two_generator_G(fp.p, fp.m, fp.n, fp.i, fp.j, fp.k, fp.r, fp.s, ro);
  if (name == "unitriangular") return family_unitriangular(fp.p, fp.m, g.cap);
  if (name == "extraspecial")
    return family_extraspecial(fp.p, fp.n, extraspecial_kind_from_string(fp.kind, fp.p), g.cap);
  if (name == "y_product") return family_y_product(fp.p, fp.e, fp.m, g.cap);
  fail(ErrorCode::ParameterViolation, "unknown family '" + name + "' (see `family list`)");
}

PcPresentation build_family_presentation(const std::string& name, const FamilyParams& fp) {
  if (name == "metacyclic_K") return pres_metacyclic_K(fp.p, fp.r, fp.s, fp.t);
  if (name == "two_generator_G")
    return pres_two_generator_G(fp.p, fp.m, fp.n, fp.i, fp.j, fp.k, fp.r, fp.s);
  if (name == "unitriangular") return pres_unitriangular(fp.p, fp.m);
  if (name == "extraspecial")
    return pres_extraspecial(fp.p, fp.n, extraspecial_kind_from_string(fp.kind, fp.p));
  if (name == "y_product") return pres_y_product(fp.p, fp.e, fp.m);
  fail(ErrorCode::ParameterViolation, "unknown family '" + name + "' (see `family list`)");
}

// Descriptor: either a presentation file path or family(name=value,...).
FiniteGroup build_descriptor(const std::string& desc, const GlobalOpts& g) {
  const size_t open = desc.find('(');
  if (open == std::string::npos || desc.back() != ')') {
    PcPresentation p = parse_presentation(read_file(desc));
    return realize(p, {g.cap});
  }
  const std::string name = desc.substr(0, open);
  FamilyParams fp;
  std::string body = desc.substr(open + 1, desc.size() - open - 2);
  std::istringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const size_t eq = item.find('=');
    if (eq == std::string::npos)
      fail(ErrorCode::ParameterViolation, "descriptor parameter '" + item + "' needs key=value");
    const std::string key = item.substr(0, eq);
    const std::string val = item.substr(eq + 1);
    if (key == "kind") {
      fp.kind = val;
      continue;
    }
    int v = 0;
    try {
      v = std::stoi(val);
    } catch (...) {
      fail(ErrorCode::ParameterViolation, "descriptor value '" + val + "' is not an integer");
    }
    if (key == "p") fp.p = v;
    else if (key == "m") fp.m = v;
    else if (key == "n") fp.n = v;
    else if (key == "i") fp.i = v;
    else if (key == "j") fp.j = v;
    else if (key == "k") fp.k = v;
    else if (key == "r") fp.r = v;
    else if (key == "s") fp.s = v;
    else if (key == "t") fp.t = v;
    else if (key == "e") fp.e = v;
    else fail(ErrorCode::ParameterViolation, "unknown descriptor key '" + key + "'");
  }
  return build_family(name, fp, g);
}

int run_analyze(const GlobalOpts& g, const std::string& input, const std::string& family,
                const FamilyParams& fp, const std::string& display_name) {
  FiniteGroup grp = [&]() {
    if (!family.empty()) return build_family(family, fp, g);
    PcPresentation p = parse_presentation(read_file(input));
    return realize(p, {g.cap});
  }();
  std::string name = display_name;
  if (name.empty()) name = family.empty() ? input : family;
  AnalysisReport rep = analyze_group(grp, name, g.analyze_options());
  emit(g, report_to_json(rep));
  return rep.all_checks_pass() ? 0 : 2;
}

int run_family_list() {
  std::cout << "metacyclic_K      params: p r s t      constraints: 1 <= t < r, 0 <= s <= t, "
               "t >= 2 if p = 2\n"
            << "two_generator_G   params: p m n i j k r s  constraints: 1 <= s < r, s >= 2 if "
               "p = 2; other tuples checked at realization\n"
            << "unitriangular     params: p m          constraints: p odd, m >= 1, p^(3m) <= cap\n"
            << "extraspecial      params: p n kind     constraints: kind D|Q when p = 2, "
               "p|p2 when p odd; p^(2n+1) <= cap\n"
            << "y_product         params: p e m        constraints: m >= 1, (p^e)^(2m+1) <= cap\n";
  return 0;
}

int run_family_build(const GlobalOpts& g, const std::string& name, const FamilyParams& fp) {
  PcPresentation p = build_family_presentation(name, fp);
  emit(g, render_presentation(p));
  return 0;
}

int run_corpus_cmd(const GlobalOpts& g, const std::vector<std::string>& files,
                   const std::string& suites_csv, bool no_default) {
  std::vector<Suite> suites;
  if (suites_csv.empty()) {
    suites = all_suites();
  } else {
    std::istringstream ss(suites_csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto s = suite_from_string(item);
      if (!s) fail(ErrorCode::ParameterViolation, "unknown suite '" + item + "'");
      suites.push_back(*s);
    }
  }

  std::vector<CorpusEntry> entries;
  if (!no_default) entries = default_corpus();
  for (const std::string& f : files) {
    std::string text = read_file(f);
    entries.push_back({f, [text](const AnalyzeOptions& o) {
                         return realize(parse_presentation(text), {o.size_cap});
                       }});
  }

  CorpusRunResult result = run_corpus(entries, suites, g.analyze_options(), g.jobs);

  bool any_analysis_failure = false;
  for (const AnalysisReport& rep : result.reports) {
    if (!rep.all_checks_pass()) any_analysis_failure = true;
    std::cout << rep.name << ": order=" << rep.order << " d=" << rep.d
              << " |gamma2|=" << (rep.gamma_orders.size() > 1 ? rep.gamma_orders[1] : 1)
              << " |Aut_c|=" << rep.autc_order
              << " hypothesis_a=" << verdict_string(rep.hypothesis_a)
              << " checks=" << (rep.all_checks_pass() ? "pass" : "FAIL") << "\n";
  }
  for (const SuiteCheck& c : result.checks) {
    if (!g.verbose && c.verdict == Verdict::NotApplicable) continue;
    std::cout << "[" << c.suite << "] " << c.group << " :: " << c.check << " = "
              << verdict_string(c.verdict);
    if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
    std::cout << "\n";
  }
  std::cout << "suite summary: pass=" << result.pass << " fail=" << result.fail
            << " n/a=" << result.not_applicable << "\n";

  if (!g.json_path.empty()) {
    ordered_json j;
    j["schema_version"] = 1;
    ordered_json groups = ordered_json::array();
    for (const AnalysisReport& rep : result.reports)
      groups.push_back(ordered_json::parse(report_to_json(rep)));
    j["groups"] = groups;
    ordered_json checks = ordered_json::array();
    for (const SuiteCheck& c : result.checks) {
      ordered_json e;
      e["suite"] = c.suite;
      e["group"] = c.group;
      e["check"] = c.check;
      e["verdict"] = verdict_string(c.verdict);
      if (!c.detail.empty()) e["detail"] = c.detail;
      checks.push_back(e);
    }
    j["suite_checks"] = checks;
    j["summary"] = {{"pass", result.pass},
                    {"fail", result.fail},
                    {"not_applicable", result.not_applicable}};
    std::ofstream out(g.json_path);
    if (!out) fail(ErrorCode::FileNotFound, "cannot open output file " + g.json_path);
    out << j.dump(2) << "\n";
  }
  return (result.any_failure() || any_analysis_failure) ? 2 : 0;
}

int run_isoclinic(const GlobalOpts& g, const std::string& da, const std::string& db) {
  FiniteGroup a = build_descriptor(da, g);
  FiniteGroup b = build_descriptor(db, g);
  IsoclinismWitness wit = is_isoclinic(a, b, g.analyze_options());
  ordered_json j;
  j["schema_version"] = 1;
  j["a"] = da;
  j["b"] = db;
  j["isoclinic"] = wit.isoclinic;
  if (wit.isoclinic && g.verbose) {
    j["phi"] = wit.phi;
    j["theta"] = wit.theta;
  }
  emit(g, j.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite p-group analyzer: class-preserving automorphisms, Camina-type "
               "structure, and graded Lie algebra verdicts"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--cap", g.cap, "group order cap (default 4096)");
  app.add_option("--budget", g.budget, "search node budget (default 10^7)");
  app.add_option("--jobs", g.jobs, "concurrent corpus workers (default 1)");
  app.add_option("--json", g.json_path, "write output to this file instead of stdout");
  app.add_flag("--no-timings", g.no_timings, "omit timings from reports");
  app.add_flag("--verbose", g.verbose, "include large/optional output");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "analyze one group and print a JSON report");
  std::string input, family, display_name;
  FamilyParams fp;
  analyze->add_option("input", input, "presentation file (.pgrp)");
  analyze->add_option("--family", family, "built-in family name (see `family list`)");
  analyze->add_option("--name", display_name, "display name used in the report");
  analyze->add_option("--p", fp.p, "prime");
  analyze->add_option("--m", fp.m, "parameter m");
  analyze->add_option("--n", fp.n, "parameter n");
  analyze->add_option("--i", fp.i, "parameter i");
  analyze->add_option("--j", fp.j, "parameter j");
  analyze->add_option("--k", fp.k, "parameter k");
  analyze->add_option("--r", fp.r, "parameter r");
  analyze->add_option("--s", fp.s, "parameter s");
  analyze->add_option("--t", fp.t, "parameter t");
  analyze->add_option("--e", fp.e, "parameter e");
  analyze->add_option("--kind", fp.kind, "extraspecial kind (D, Q, p, p2)");

  // family
  auto* fam = app.add_subcommand("family", "list families or emit presentation text");
  auto* fam_list = fam->add_subcommand("list", "list family constructors and constraints");
  auto* fam_build = fam->add_subcommand("build", "emit the canonical presentation of a family");
  std::string build_name;
  FamilyParams bp;
  fam_build->add_option("name", build_name, "family name")->required();
  fam_build->add_option("--p", bp.p, "prime");
  fam_build->add_option("--m", bp.m, "parameter m");
  fam_build->add_option("--n", bp.n, "parameter n");
  fam_build->add_option("--i", bp.i, "parameter i");
  fam_build->add_option("--j", bp.j, "parameter j");
  fam_build->add_option("--k", bp.k, "parameter k");
  fam_build->add_option("--r", bp.r, "parameter r");
  fam_build->add_option("--s", bp.s, "parameter s");
  fam_build->add_option("--t", bp.t, "parameter t");
  fam_build->add_option("--e", bp.e, "parameter e");
  fam_build->add_option("--kind", bp.kind, "extraspecial kind");
  fam->require_subcommand(1);

  // corpus
  auto* corpus = app.add_subcommand("corpus", "run verification suites over the corpus");
  std::vector<std::string> corpus_files;
  std::string suites_csv;
  bool no_default = false;
  corpus->add_option("files", corpus_files, "extra presentation files");
  corpus->add_option("--suites", suites_csv, "comma list from A,B,CD,lie,isoclinism,extremal,quotient");
  corpus->add_flag("--no-default", no_default, "skip the built-in corpus");

  // isoclinic
  auto* iso = app.add_subcommand("isoclinic", "test two groups for isoclinism");
  std::string desc_a, desc_b;
  iso->add_option("A", desc_a, "file or family descriptor, e.g. metacyclic_K(p=3,r=2,s=1,t=1)")
      ->required();
  iso->add_option("B", desc_b, "file or family descriptor")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) {
      if (input.empty() && family.empty())
        fail(ErrorCode::ParameterViolation, "analyze needs a presentation file or --family");
      return run_analyze(g, input, family, fp, display_name);
    }
    if (*fam) {
      if (*fam_list) return run_family_list();
      if (*fam_build) return run_family_build(g, build_name, bp);
    }
    if (*corpus) return run_corpus_cmd(g, corpus_files, suites_csv, no_default);
    if (*iso) return run_isoclinic(g, desc_a, desc_b);
  } catch (const Error& e) {
    ordered_json j;
    j["error"] = {{"code", error_code_name(e.code())}, {"message", e.what()}};
    std::cerr << j.dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
