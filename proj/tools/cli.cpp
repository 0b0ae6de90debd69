#include "cli.hpp"

#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "odom/dominance.hpp"
#include "odom/errors.hpp"
#include "odom/ideal_text.hpp"
#include "odom/nets.hpp"
#include "odom/report_json.hpp"
#include "odom/resolution.hpp"
#include "odom/taylor.hpp"
#include "odom/verify.hpp"

namespace odom::cli {

namespace {

struct IdealOptions {
  std::string ideal;
  std::string vars;
  bool json = false;
  std::string field = "rational";
  std::uint32_t prime = 32003;
};

void add_ideal_options(CLI::App* cmd, IdealOptions& opts) {
  cmd->add_option("--ideal", opts.ideal, "generators, e.g. \"a^2*e, b^3*f\"; '-' reads stdin")
      ->required();
  cmd->add_option("--vars", opts.vars, "ordered variable list, e.g. \"a,b,c,d\"");
  cmd->add_flag("--json", opts.json, "emit JSON on stdout");
  cmd->add_option("--field", opts.field, "coefficient field")
      ->check(CLI::IsMember({"rational", "prime"}));
  cmd->add_option("--prime", opts.prime, "modulus for --field prime");
}

FieldSpec field_of(const IdealOptions& opts) {
  FieldSpec f = opts.field == "prime" ? FieldSpec::prime_field(opts.prime) : FieldSpec::rational();
  f.validate();
  return f;
}

MonomialIdeal load_ideal(const IdealOptions& opts, std::istream& in, std::ostream& err) {
  std::string text = opts.ideal;
  if (text == "-") text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  std::optional<std::vector<std::string>> vars;
  if (!opts.vars.empty()) vars = parse_variable_list(opts.vars);
  auto parsed = parse_ideal(text, vars);
  if (parsed.reduced) {
    err << "warning: input was not minimal; using (" << render(parsed.ideal) << ")\n";
  }
  return std::move(parsed.ideal);
}

std::string symbol_text(GenSet symbol, const MonomialIdeal& ideal) {
  std::string out = "[";
  for (auto g : members(symbol)) {
    if (out.size() > 1) out += ", ";
    out += render(ideal.generator(g), ideal.table());
  }
  return out + "]";
}

std::string join(const std::vector<std::size_t>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + std::to_string(values[i]);
  return out + ")";
}

void print_nets(std::ostream& out, const MinimalNetFamily& family, const VariableTable& table) {
  for (VarSet net : family.nets) out << "  " << render_variables(net, table) << "\n";
  out << "  (" << family.nets.size() << " minimal nets, cardinality " << family.min_card << ".."
      << family.max_card << ")\n";
}

void print_betti(std::ostream& out, const BettiTable& betti, const VariableTable& table) {
  out << "betti: " << join(betti.total) << "\npd: " << betti.pd << "\ngraded:\n";
  for (const auto& [key, count] : betti.graded) {
    out << "  beta_{" << key.first << "," << key.second << "} = " << count << "\n";
  }
  out << "multigraded:\n";
  for (const auto& [key, count] : betti.multigraded) {
    out << "  beta_{" << key.first << "," << render(key.second, table) << "} = " << count << "\n";
  }
}

void print_report(std::ostream& out, const InvariantReport& r) {
  const auto& table = r.ideal.table();
  out << "ideal: (" << render(r.ideal) << ")\n"
      << "ring: k[";
  for (std::size_t i = 0; i < table.size(); ++i) out << (i ? "," : "") << table.name(i);
  out << "]  n = " << r.n() << "  q = " << r.q() << "  field = " << r.field << "\n"
      << "codim = " << r.codim << "\n"
      << "odom = " << r.odom_dominance << " (dominant sets), " << r.odom_nets << " (nets)\n"
      << "pd = " << r.pd << "\n"
      << "betti = " << join(r.betti.total) << "\n"
      << "taylor minimal: " << std::boolalpha << r.taylor_minimal << "\n"
      << "scarf: " << r.scarf << "\n"
      << "complete intersection: " << r.complete_intersection << "\n"
      << "cohen-macaulay: " << r.cohen_macaulay << "\n";
  out << "dominant set witness:";
  for (std::size_t j = 0; j < r.dominance_witness.size(); ++j) {
    out << " " << render(r.ideal.generator(r.dominance_witness.generators[j]), table) << " ("
        << table.name(r.dominance_witness.dominant_vars[j]) << ")";
  }
  out << "\nlargest minimal net of the polarization: "
      << render_variables(r.net_witness, r.polarized.table()) << "\n";
  out << "minimal nets:\n";
  print_nets(out, r.nets, table);
  out << "minimal nets of the polarization:\n";
  print_nets(out, r.polarized_nets, r.polarized.table());
  out << "checks:\n";
  for (const auto& c : r.checks) {
    out << "  " << to_string(c.status) << "  " << c.name << "  [" << c.detail << "]\n";
  }
  out << "status: " << (r.ok() ? "OK" : "FAILED") << "\n";
}

int cmd_analyze(const IdealOptions& opts, std::istream& in, std::ostream& out, std::ostream& err) {
  auto ideal = load_ideal(opts, in, err);
  ReportOptions options;
  options.field = field_of(opts);
  auto report = check_report(ideal, options);
  if (opts.json) {
    out << emit_json(report) << "\n";
  } else {
    print_report(out, report);
  }
  if (const auto* failed = report.first_failure()) {
    err << "check failed: " << failed->name << " [" << failed->detail << "]\n";
    return kInvariantViolation;
  }
  return kOk;
}

int cmd_betti(const IdealOptions& opts, bool oracle, std::istream& in, std::ostream& out,
              std::ostream& err) {
  auto ideal = load_ideal(opts, in, err);
  MinimizeOptions options;
  options.field = field_of(opts);
  BettiTable betti = oracle ? betti_oracle(ideal, options.field) : minimize(ideal, options).betti;
  if (opts.json) {
    out << betti_json(betti, ideal.table()).dump(2) << "\n";
  } else {
    print_betti(out, betti, ideal.table());
  }
  return kOk;
}

int cmd_resolution(const IdealOptions& opts, bool show_matrices, std::istream& in,
                   std::ostream& out, std::ostream& err) {
  auto ideal = load_ideal(opts, in, err);
  MinimizeOptions options;
  options.field = field_of(opts);
  auto res = minimize(ideal, options);
  auto taylor = build_taylor(ideal);

  if (opts.json) {
    nlohmann::json strata = nlohmann::json::array();
    for (const auto& stratum : res.strata) {
      nlohmann::json labels = nlohmann::json::array();
      for (GenSet s : stratum) {
        labels.push_back({{"symbol", symbol_text(s, ideal)},
                          {"mdeg", render(taylor->mdeg(s), ideal.table())}});
      }
      strata.push_back(std::move(labels));
    }
    nlohmann::json doc = {{"field", res.field},
                          {"cancellations", res.cancellations},
                          {"strata", std::move(strata)},
                          {"betti", res.betti.total}};
    if (show_matrices) {
      nlohmann::json matrices = nlohmann::json::array();
      for (std::size_t s = 1; s < res.matrices.size(); ++s) {
        nlohmann::json entries = nlohmann::json::array();
        for (const auto& e : res.matrices[s]) {
          entries.push_back({symbol_text(e.row, ideal), symbol_text(e.column, ideal), e.scalar});
        }
        matrices.push_back({{"degree", s}, {"entries", std::move(entries)}});
      }
      doc["matrices"] = std::move(matrices);
    }
    out << doc.dump(2) << "\n";
    return kOk;
  }

  out << "field: " << res.field << "\ncancellations: " << res.cancellations << "\n";
  for (std::size_t s = 0; s < res.strata.size(); ++s) {
    if (res.strata[s].empty()) continue;
    out << "F_" << s << " (rank " << res.strata[s].size() << "):\n";
    for (GenSet sym : res.strata[s]) {
      out << "  " << symbol_text(sym, ideal) << "  mdeg " << render(taylor->mdeg(sym), ideal.table())
          << "\n";
    }
  }
  if (show_matrices) {
    for (std::size_t s = 1; s < res.matrices.size(); ++s) {
      if (res.strata[s].empty()) continue;
      out << "f_" << s << ":\n";
      for (const auto& e : res.matrices[s]) {
        out << "  " << symbol_text(e.column, ideal) << " -> " << e.scalar << " * "
            << render(taylor->entry_monomial(e.row, e.column), ideal.table()) << " "
            << symbol_text(e.row, ideal) << "\n";
      }
    }
  }
  return kOk;
}

int cmd_nets(const IdealOptions& opts, bool polarized, std::istream& in, std::ostream& out,
             std::ostream& err) {
  auto ideal = load_ideal(opts, in, err);
  MonomialIdeal target = polarized ? polarize(ideal) : ideal;
  auto family = minimal_nets(target);
  if (opts.json) {
    out << nlohmann::json{{"ideal", render(target)},
                          {"minimal_nets", nets_json(family, target.table())},
                          {"min_card", family.min_card},
                          {"max_card", family.max_card}}
               .dump(2)
        << "\n";
  } else {
    out << "minimal nets of (" << render(target) << "):\n";
    print_nets(out, family, target.table());
  }
  return kOk;
}

int cmd_odom(const IdealOptions& opts, const std::string& method, std::istream& in,
             std::ostream& out, std::ostream& err) {
  auto ideal = load_ideal(opts, in, err);
  nlohmann::json doc = {{"ideal", render(ideal)}};
  std::optional<std::size_t> by_dominance, by_nets;
  std::ostringstream text;

  if (method != "nets") {
    auto r = odom_by_dominance(ideal);
    by_dominance = r.value;
    nlohmann::json pairs = nlohmann::json::array();
    text << "odom (dominant sets) = " << r.value << "\n  witness:";
    for (std::size_t j = 0; j < r.witness.size(); ++j) {
      const auto gen = render(ideal.generator(r.witness.generators[j]), ideal.table());
      const auto& var = ideal.table().name(r.witness.dominant_vars[j]);
      pairs.push_back({gen, var});
      text << " " << gen << " (" << var << ")";
    }
    text << "\n";
    doc["dominant_sets"] = {{"odom", r.value}, {"witness", std::move(pairs)}};
  }
  if (method != "dominant-sets") {
    auto r = odom_by_nets(ideal);
    by_nets = r.value;
    nlohmann::json net = nlohmann::json::array();
    for (auto v : members(r.witness)) net.push_back(r.polarized.table().name(v));
    text << "odom (nets) = " << r.value << "\n  witness: "
         << render_variables(r.witness, r.polarized.table()) << "\n";
    doc["nets"] = {{"odom", r.value}, {"witness", std::move(net)}};
  }
  if (opts.json) {
    out << doc.dump(2) << "\n";
  } else {
    out << text.str();
  }
  if (by_dominance && by_nets && *by_dominance != *by_nets) {
    err << "odom routes disagree: " << *by_dominance << " vs " << *by_nets << "\n";
    return kInvariantViolation;
  }
  return kOk;
}

int cmd_scarf(const IdealOptions& opts, std::istream& in, std::ostream& out, std::ostream& err) {
  auto ideal = load_ideal(opts, in, err);
  MinimizeOptions options;
  options.field = field_of(opts);
  auto basis = scarf_basis(ideal);
  bool scarf = is_scarf(basis, minimize(ideal, options).betti);
  if (opts.json) {
    nlohmann::json symbols = nlohmann::json::array();
    for (GenSet s : basis.symbols) symbols.push_back(symbol_text(s, ideal));
    out << nlohmann::json{{"symbols", std::move(symbols)}, {"ranks", basis.ranks}, {"scarf", scarf}}
               .dump(2)
        << "\n";
  } else {
    out << "scarf basis:\n";
    for (GenSet s : basis.symbols) out << "  " << symbol_text(s, ideal) << "\n";
    out << "ranks: " << join(basis.ranks) << "\nscarf ideal: " << std::boolalpha << scarf << "\n";
  }
  return kOk;
}

int cmd_polarize(const IdealOptions& opts, std::istream& in, std::ostream& out, std::ostream& err) {
  auto ideal = load_ideal(opts, in, err);
  auto pol = polarize(ideal);
  if (opts.json) {
    out << nlohmann::json{{"ideal", render(pol)}, {"vars", pol.table().names()}}.dump(2) << "\n";
  } else {
    out << render(pol) << "\n";
  }
  return kOk;
}

int cmd_verify(const FuzzParams& params, bool json, std::ostream& out, std::ostream& err) {
  auto summary = fuzz(params);
  if (json) {
    out << fuzz_json(summary, params).dump(2) << "\n";
  } else {
    out << "ideals checked: " << summary.ideals << "\n";
    for (const auto& [name, t] : summary.checks) {
      out << "  " << name << ": pass " << t.pass << ", fail " << t.fail << ", vacuous " << t.vacuous
          << "\n";
    }
    out << "pd - odom:";
    for (const auto& [gap, count] : summary.gap_histogram) out << " " << gap << ":" << count;
    out << "\nlemma instances: " << summary.lemma_instances
        << " (satisfied " << summary.lemma_satisfied << ")\n";
  }
  if (summary.failure) {
    const auto& f = *summary.failure;
    err << "FAILED " << f.check << " on (" << f.ideal << ") seed " << f.seed << " trial "
        << f.trial << " [" << f.detail << "]\n";
    return kInvariantViolation;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Minimal free resolutions and order of dominance of monomial ideals", "odom"};
  app.require_subcommand(1);

  IdealOptions opts;
  bool show_matrices = false, polarized = false, oracle = false, verify_json = false;
  std::string method = "both";
  FuzzParams params;

  auto* analyze = app.add_subcommand("analyze", "full invariant report with property checks");
  auto* betti = app.add_subcommand("betti", "total, graded and multigraded Betti numbers");
  auto* resolution = app.add_subcommand("resolution", "minimal resolution by cancellation");
  auto* nets = app.add_subcommand("nets", "minimal nets");
  auto* odom = app.add_subcommand("odom", "order of dominance");
  auto* scarf = app.add_subcommand("scarf", "Scarf basis");
  auto* polarize_cmd = app.add_subcommand("polarize", "polarization");
  auto* verify = app.add_subcommand("verify", "randomized or exhaustive property checks");

  for (auto* cmd : {analyze, betti, resolution, nets, odom, scarf, polarize_cmd}) {
    add_ideal_options(cmd, opts);
  }
  betti->add_flag("--oracle", oracle, "use the Tor-strand computation");
  resolution->add_flag("--show-matrices", show_matrices, "print the differential matrices");
  nets->add_flag("--polarized", polarized, "minimal nets of the polarization");
  odom->add_option("--method", method, "computation route")
      ->check(CLI::IsMember({"dominant-sets", "nets", "both"}));
  verify->add_option("--trials", params.trials);
  verify->add_option("--seed", params.seed);
  verify->add_option("--n-max", params.n_max);
  verify->add_option("--q-max", params.q_max);
  verify->add_option("--exp-max", params.exp_max);
  verify->add_flag("--exhaustive", params.exhaustive);
  verify->add_flag("--json", verify_json);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kParseError;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(opts, in, out, err);
    if (betti->parsed()) return cmd_betti(opts, oracle, in, out, err);
    if (resolution->parsed()) return cmd_resolution(opts, show_matrices, in, out, err);
    if (nets->parsed()) return cmd_nets(opts, polarized, in, out, err);
    if (odom->parsed()) return cmd_odom(opts, method, in, out, err);
    if (scarf->parsed()) return cmd_scarf(opts, in, out, err);
    if (polarize_cmd->parsed()) return cmd_polarize(opts, in, out, err);
    if (verify->parsed()) return cmd_verify(params, verify_json, out, err);
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kGuardExceeded;
  } catch (const InvariantViolation& e) {
    err << "error: " << e.what() << "\n";
    return kInvariantViolation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
  return kParseError;
}

}  // namespace odom::cli
