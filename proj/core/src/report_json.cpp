#include "pgroup/report_json.hpp"

#include <json.hpp>

namespace pgroup {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json macdonald_json(const MacdonaldReport& m) {
  ordered_json j;
  j["m"] = m.m;
  j["n"] = m.n;
  j["cond_dim_l3_is_1"] = m.cond_dim_l3_is_1;
  j["cond_brackets_transitive"] = m.cond_brackets_transitive;
  j["conditions_hold"] = m.conditions_hold;
  auto flag = [&](const char* k, bool v) {
    j[k] = m.conditions_hold ? (v ? "true" : "false") : "n/a";
  };
  flag("m_even", m.m_even);
  flag("m_ge_2n", m.m_ge_2n);
  flag("m_eq_2n", m.m_eq_2n);
  if (m.conditions_hold)
    j["cbar_dim"] = m.cbar_dim;
  else
    j["cbar_dim"] = "n/a";
  flag("cbar_dim_eq_n", m.cbar_dim_eq_n);
  flag("cbar_equals_centralizers", m.cbar_equals_centralizers);
  flag("centralizer_dims_ok", m.centralizer_dims_ok);
  flag("lambda_surjective", m.lambda_surjective);
  flag("lambda_kernel_is_cbar", m.lambda_kernel_is_cbar);
  flag("direct_sum_ok", m.direct_sum_ok);
  flag("pencil_nonsingular", m.pencil_nonsingular);
  if (m.conditions_hold) {
    j["pencil_exhaustive"] = m.pencil_exhaustive;
    j["pencil_samples"] = m.pencil_samples;
  }
  return j;
}

}  // namespace

std::string report_to_json(const AnalysisReport& rep, bool pretty) {
  ordered_json j;
  j["schema_version"] = 1;
  j["name"] = rep.name;
  j["order"] = rep.order;
  if (rep.prime)
    j["prime"] = *rep.prime;
  else
    j["prime"] = nullptr;
  if (rep.nilpotency_class_value)
    j["nilpotency_class"] = *rep.nilpotency_class_value;
  else
    j["nilpotency_class"] = nullptr;
  j["d"] = rep.d;
  j["gamma_orders"] = rep.gamma_orders;
  j["upper_central_orders"] = rep.upper_central_orders;
  j["center_order"] = rep.center_order;
  j["frattini_order"] = rep.frattini_order;
  j["inn_order"] = rep.inn_order;
  j["autc_order"] = rep.autc_order;
  j["autcent_order"] = rep.autcent_order;
  j["cb_order"] = rep.cb_order;
  j["aut_gamma2_order"] = rep.aut_gamma2_order;
  if (rep.homc_count)
    j["homc_count"] = *rep.homc_count;
  else
    j["homc_count"] = nullptr;

  ordered_json flags;
  flags["camina"] = verdict_string(rep.camina);
  flags["camina_type"] = verdict_string(rep.camina_type);
  flags["hypothesis_a"] = verdict_string(rep.hypothesis_a);
  flags["stem"] = verdict_string(rep.stem);
  flags["homocyclic_central_quotient"] = verdict_string(rep.homocyclic_central_quotient);
  flags["central_quotient_extremal"] = verdict_string(rep.central_quotient_extremal_flag);
  flags["metacyclic"] = verdict_string(rep.metacyclic);
  j["flags"] = flags;

  if (rep.macdonald)
    j["macdonald"] = macdonald_json(*rep.macdonald);
  else
    j["macdonald"] = nullptr;

  ordered_json checks;
  for (const NamedCheck& c : rep.checks) {
    ordered_json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(e);
  }
  j["checks"] = checks;
  j["checks_pass"] = rep.all_checks_pass();

  if (!rep.timings_ms.empty()) {
    ordered_json t;
    for (const auto& [k, v] : rep.timings_ms) t[k] = v;
    j["timings_ms"] = t;
  }
  return pretty ? j.dump(2) + "\n" : j.dump() + "\n";
}

}  // namespace pgroup
