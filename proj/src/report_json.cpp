#include "odom/report_json.hpp"

#include "odom/ideal_text.hpp"

namespace odom {

using nlohmann::json;

namespace {

json variable_names(VarSet vars, const VariableTable& table) {
  json out = json::array();
  for (auto v : members(vars)) out.push_back(table.name(v));
  return out;
}

}  // namespace

json betti_json(const BettiTable& betti, const VariableTable& table) {
  json graded = json::array();
  for (const auto& [key, count] : betti.graded) graded.push_back({key.first, key.second, count});
  json multigraded = json::array();
  for (const auto& [key, count] : betti.multigraded) {
    multigraded.push_back({key.first, render(key.second, table), count});
  }
  return {{"betti", betti.total},
          {"graded_betti", std::move(graded)},
          {"multigraded_betti", std::move(multigraded)},
          {"pd", betti.pd}};
}

json nets_json(const MinimalNetFamily& family, const VariableTable& table) {
  json out = json::array();
  for (VarSet net : family.nets) out.push_back(variable_names(net, table));
  return out;
}

json report_json(const InvariantReport& report) {
  const VariableTable& table = report.ideal.table();
  json out = betti_json(report.betti, table);
  out["ideal"] = render(report.ideal);
  out["vars"] = table.names();
  out["n"] = report.n();
  out["q"] = report.q();
  out["field"] = report.field;
  out["codim"] = report.codim;
  out["odom"] = report.odom_dominance;
  out["taylor_minimal"] = report.taylor_minimal;
  out["scarf"] = report.scarf;
  out["complete_intersection"] = report.complete_intersection;
  out["cohen_macaulay"] = report.cohen_macaulay;
  out["minimal_nets"] = {{"base", nets_json(report.nets, table)},
                         {"polarized", nets_json(report.polarized_nets, report.polarized.table())}};

  json dominant = json::array();
  for (auto g : report.dominance_witness.generators) {
    dominant.push_back(render(report.ideal.generator(g), table));
  }
  out["witnesses"] = {{"dominant_set", std::move(dominant)},
                      {"net", variable_names(report.net_witness, report.polarized.table())}};

  json checks = json::array();
  for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"status", to_string(c.status)}});
  out["checks"] = std::move(checks);
  return out;
}

json fuzz_json(const FuzzSummary& summary, const FuzzParams& params) {
  json checks = json::object();
  for (const auto& [name, tally] : summary.checks) {
    checks[name] = {{"pass", tally.pass}, {"fail", tally.fail}, {"vacuous", tally.vacuous}};
  }
  json gaps = json::object();
  for (const auto& [gap, count] : summary.gap_histogram) gaps[std::to_string(gap)] = count;
  json failure = nullptr;
  if (summary.failure) {
    const auto& f = *summary.failure;
    failure = {{"ideal", f.ideal}, {"vars", f.vars},   {"seed", f.seed},
               {"trial", f.trial}, {"check", f.check}, {"detail", f.detail}};
  }
  return {{"ideals", summary.ideals},
          {"checks", std::move(checks)},
          {"pd_minus_odom", std::move(gaps)},
          {"lemma", {{"instances", summary.lemma_instances}, {"satisfied", summary.lemma_satisfied}}},
          {"failure", std::move(failure)},
          {"params",
           {{"n_max", params.n_max},
            {"q_max", params.q_max},
            {"exp_max", params.exp_max},
            {"trials", params.trials},
            {"seed", params.seed},
            {"exhaustive", params.exhaustive}}}};
}

std::string emit_json(const InvariantReport& report) { return report_json(report).dump(2); }

}  // namespace odom
