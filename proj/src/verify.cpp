#include "odom/verify.hpp"

#include <algorithm>
#include <sstream>

#include "odom/errors.hpp"
#include "odom/ideal_text.hpp"

namespace odom {

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Vacuous: return "vacuous";
  }
  return "unknown";
}

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

template <class... Args>
std::string describe(Args&&... parts) {
  std::ostringstream out;
  ((out << parts), ...);
  return out.str();
}

CheckStatus verdict(bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Fail; }

bool betti_dominates_binomials(const BettiTable& betti, std::size_t top) {
  for (std::size_t r = 0; r <= top; ++r) {
    if (betti.at(r) < binomial(top, r)) return false;
  }
  return true;
}

// Assignments of dominant variables with the exponent of lcm(G), visited as
// (members, variables) lists in member order.
void for_each_lemma_assignment(const MonomialIdeal& ideal, GenSet subset, const Monomial& top,
                               const std::function<void(const std::vector<std::size_t>&,
                                                        const std::vector<VarIndex>&)>& visit) {
  const auto gens = members(subset);
  std::vector<std::vector<VarIndex>> options;
  for (auto g : gens) {
    std::vector<VarIndex> vars;
    for (auto v : members(dominant_variables(ideal, g, subset))) {
      if (ideal.generator(g)[v] == top[v]) vars.push_back(v);
    }
    if (vars.empty()) return;
    options.push_back(std::move(vars));
  }
  std::vector<VarIndex> chosen(gens.size());
  std::function<void(std::size_t)> recurse = [&](std::size_t j) {
    if (j == gens.size()) {
      visit(gens, chosen);
      return;
    }
    for (auto v : options[j]) {
      chosen[j] = v;
      recurse(j + 1);
    }
  };
  recurse(0);
}

}  // namespace

std::vector<LemmaInstance> check_lemma_hypotheses(const MonomialIdeal& ideal,
                                                  const BettiTable& betti) {
  const Monomial top = ideal.lcm_all();
  const std::size_t upper =
      std::min<std::size_t>(ideal.q(), static_cast<std::size_t>(popcount(ideal.used_variables())));
  std::vector<LemmaInstance> out;

  std::function<void(std::size_t, GenSet)> subsets = [&](std::size_t start, GenSet partial) {
    if (partial != 0) {
      for_each_lemma_assignment(ideal, partial, top, [&](const auto& gens, const auto& vars) {
        LemmaInstance inst;
        std::vector<std::size_t> order(gens.size());
        for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
        std::sort(order.begin(), order.end(), [&](auto a, auto b) { return vars[a] < vars[b]; });
        inst.witness.members = partial;
        inst.witness.lcm = ideal.lcm_of(partial);
        for (auto j : order) {
          inst.witness.generators.push_back(gens[j]);
          inst.witness.dominant_vars.push_back(vars[j]);
          inst.witness.exponents.push_back(top[vars[j]]);
        }
        inst.satisfied = std::all_of(
            ideal.generators().begin(), ideal.generators().end(), [&](const Monomial& m) {
              return std::any_of(vars.begin(), vars.end(),
                                 [&](VarIndex v) { return m[v] >= top[v]; });
            });
        if (inst.satisfied) {
          const std::size_t degree = gens.size();
          for (const auto& [key, count] : betti.multigraded) {
            if (key.first != degree || count == 0) continue;
            const Monomial& m = key.second;
            bool matches = divides(m, top) && std::all_of(vars.begin(), vars.end(),
                                                         [&](VarIndex v) { return m[v] == top[v]; });
            if (matches) {
              inst.betti_witness = m;
              break;
            }
          }
        }
        out.push_back(std::move(inst));
      });
    }
    if (static_cast<std::size_t>(popcount(partial)) == upper) return;
    for (std::size_t i = start; i < ideal.q(); ++i) {
      GenSet next = partial | bit(i);
      if (is_dominant_set(ideal, next)) subsets(i + 1, next);
    }
  };
  subsets(0, 0);
  return out;
}

std::vector<LemmaInstance> check_lemma_hypotheses(const MonomialIdeal& ideal,
                                                  const FieldSpec& field, const Limits& limits) {
  return check_lemma_hypotheses(ideal, betti_oracle(ideal, field, limits));
}

bool InvariantReport::ok() const { return first_failure() == nullptr; }

const CheckResult* InvariantReport::first_failure() const {
  for (const auto& c : checks) {
    if (c.status == CheckStatus::Fail) return &c;
  }
  return nullptr;
}

CheckStatus InvariantReport::status(const std::string& check) const {
  for (const auto& c : checks) {
    if (c.name == check) return c.status;
  }
  throw ArgumentError("no check named " + check);
}

InvariantReport check_report(const MonomialIdeal& ideal, const ReportOptions& options) {
  InvariantReport r;
  r.ideal = ideal;
  r.field = options.field.name();

  MinimizeOptions minimize_options;
  minimize_options.field = options.field;
  minimize_options.limits = options.limits;
  auto taylor = build_taylor(ideal, options.limits);
  const Resolution resolution = minimize(ideal, minimize_options);
  const BettiTable oracle = betti_oracle(*taylor, options.field);

  r.betti = resolution.betti;
  r.pd = r.betti.pd;
  r.nets = minimal_nets(ideal, options.limits);
  r.codim = r.nets.min_card;
  auto by_dominance = odom_by_dominance(ideal, options.limits);
  r.odom_dominance = by_dominance.value;
  r.dominance_witness = std::move(by_dominance.witness);
  auto by_nets = odom_by_nets(ideal, options.limits);
  r.odom_nets = by_nets.value;
  r.polarized = std::move(by_nets.polarized);
  r.net_witness = by_nets.witness;
  r.polarized_nets = minimal_nets(r.polarized, options.limits);
  r.taylor_minimal = is_taylor_minimal(ideal);
  r.scarf_basis = scarf_basis(*taylor);
  r.scarf = is_scarf(r.scarf_basis, r.betti);
  r.complete_intersection = is_complete_intersection(ideal);
  r.cohen_macaulay = r.codim == r.pd;

  const std::size_t n = ideal.n(), q = ideal.q();
  const std::size_t codim = r.codim, odom = r.odom_dominance, pd = r.pd;
  const bool uniform = r.polarized_nets.uniform();
  auto add = [&](const char* name, CheckStatus status, std::string detail) {
    r.checks.push_back({name, status, std::move(detail)});
  };

  add(checks::kOdomRoutes, verdict(r.odom_dominance == r.odom_nets),
      describe("dominance=", r.odom_dominance, " nets=", r.odom_nets));

  add(checks::kChain, verdict(codim <= odom && odom <= pd),
      describe("codim=", codim, " odom=", odom, " pd=", pd));

  {
    const bool pd_full = pd == n;
    const bool odom_full = odom == n;
    const bool full_set = has_full_dominant_set(ideal, options.limits);
    const bool binomials = betti_dominates_binomials(r.betti, n);
    const bool net_full = r.polarized_nets.max_card == n;
    const bool agree = pd_full == odom_full && odom_full == full_set && full_set == binomials &&
                       binomials == net_full;
    add(checks::kFullDimension, verdict(agree),
        describe("n=", n, " pd=n:", pd_full, " odom=n:", odom_full, " full-dominant-set:", full_set,
                 " betti>=C(n,i):", binomials, " polarized-net-of-size-n:", net_full));
  }

  add(checks::kPdOne, verdict((pd == 1) == (odom == 1)), describe("pd=", pd, " odom=", odom));

  if (n >= 1 && odom == n - 1) {
    add(checks::kOdomNMinusOne, verdict(pd == n - 1), describe("n=", n, " pd=", pd));
  } else {
    add(checks::kOdomNMinusOne, CheckStatus::Vacuous, describe("odom=", odom, " n=", n));
  }

  if (odom + 1 == q) {
    add(checks::kOdomQMinusOne, verdict(pd + 1 == q), describe("q=", q, " pd=", pd));
  } else {
    add(checks::kOdomQMinusOne, CheckStatus::Vacuous, describe("odom=", odom, " q=", q));
  }

  if (r.scarf) {
    add(checks::kScarfPd, verdict(pd == odom), describe("pd=", pd, " odom=", odom));
  } else {
    add(checks::kScarfPd, CheckStatus::Vacuous, "not scarf");
  }

  add(checks::kTaylorMinimal, verdict(r.taylor_minimal == (odom == q)),
      describe("taylor-minimal=", r.taylor_minimal, " odom=", odom, " q=", q));

  add(checks::kBinomialOdom, verdict(betti_dominates_binomials(r.betti, odom)),
      describe("odom=", odom));
  add(checks::kBinomialPd, verdict(betti_dominates_binomials(r.betti, pd)), describe("pd=", pd));

  // 2^codim + 2^(codim-1) = 3 * 2^(codim-1); codim >= 1 for a proper ideal.
  const std::size_t boocher_seiner = 3 * (std::size_t{1} << (codim - 1));
  const std::size_t total = r.betti.sum();
  if (odom > codim) {
    const std::size_t power = std::size_t{1} << odom;
    add(checks::kTotalBettiOdom, verdict(total >= power && power > boocher_seiner),
        describe("sum=", total, " 2^odom=", power, " 2^codim+2^(codim-1)=", boocher_seiner));
  } else {
    add(checks::kTotalBettiOdom, CheckStatus::Vacuous, "odom = codim");
  }
  if (!r.complete_intersection) {
    add(checks::kTotalBettiNonCi, verdict(total >= boocher_seiner),
        describe("sum=", total, " 2^codim+2^(codim-1)=", boocher_seiner));
  } else {
    add(checks::kTotalBettiNonCi, CheckStatus::Vacuous, "complete intersection");
  }

  if (n == 3) {
    add(checks::kThreeVariables, verdict(pd == odom && r.cohen_macaulay == uniform),
        describe("pd=", pd, " odom=", odom, " cm=", r.cohen_macaulay, " uniform-nets=", uniform));
  } else {
    add(checks::kThreeVariables, CheckStatus::Vacuous, describe("n=", n));
  }

  if (r.scarf) {
    add(checks::kScarfCm, verdict(r.cohen_macaulay == uniform),
        describe("cm=", r.cohen_macaulay, " uniform-nets=", uniform));
  } else {
    add(checks::kScarfCm, CheckStatus::Vacuous, "not scarf");
  }

  {
    const std::size_t polarized_odom = odom_by_dominance(r.polarized, options.limits).value;
    add(checks::kPolarizedOdom, verdict(polarized_odom == odom),
        describe("odom=", odom, " odom(pol)=", polarized_odom));
  }

  add(checks::kEngineOracle, verdict(r.betti == oracle),
      describe("engine-sum=", r.betti.sum(), " oracle-sum=", oracle.sum()));

  {
    auto instances = check_lemma_hypotheses(ideal, oracle);
    r.lemma_instances = instances.size();
    std::size_t failures = 0;
    for (const auto& inst : instances) {
      if (inst.satisfied) ++r.lemma_satisfied;
      if (!inst.holds()) ++failures;
    }
    add(checks::kLemmaSymbol,
        r.lemma_satisfied == 0 ? CheckStatus::Vacuous : verdict(failures == 0),
        describe("instances=", instances.size(), " satisfied=", r.lemma_satisfied,
                 " failures=", failures));
  }
  return r;
}

void FuzzParams::validate() const {
  if (n_max < 1 || q_max < 1 || exp_max < 1) {
    throw ArgumentError("n_max, q_max and exp_max must all be at least 1");
  }
  if (n_max > 26) throw ArgumentError("n_max is limited to 26 variables");
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

std::vector<std::string> letter_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  return names;
}

}  // namespace

MonomialIdeal random_ideal(const FuzzParams& params, std::uint64_t trial_index) {
  params.validate();
  // t-th output of SplitMix64(seed) without stepping through the stream.
  SplitMix64 stream(params.seed + 0x9E3779B97F4A7C15ULL * trial_index);
  SplitMix64 rng(stream.next());

  const std::size_t n = 1 + rng.next() % params.n_max;
  const std::size_t count = 1 + rng.next() % params.q_max;
  auto table = std::make_shared<const VariableTable>(letter_names(n));
  std::vector<Monomial> monomials;
  for (std::size_t k = 0; k < count; ++k) {
    Monomial m(n);
    for (int attempt = 0; attempt < 64 && m.is_unit(); ++attempt) {
      for (std::size_t v = 0; v < n; ++v) {
        m[v] = static_cast<Exponent>(rng.next() % (params.exp_max + 1));
      }
    }
    if (m.is_unit()) m[0] = 1;
    monomials.push_back(std::move(m));
  }
  return minimalize(std::move(table), monomials);
}

void enumerate_ideals(std::size_t n, std::size_t exp_max, std::size_t q_max,
                      const std::function<void(const MonomialIdeal&)>& visit) {
  auto table = std::make_shared<const VariableTable>(letter_names(n));
  std::vector<Monomial> candidates;
  Monomial m(n);
  while (true) {
    if (!m.is_unit()) candidates.push_back(m);
    std::size_t v = 0;
    while (v < n && m[v] == exp_max) m[v++] = 0;
    if (v == n) break;
    ++m[v];
  }
  std::sort(candidates.begin(), candidates.end(), canonical_before);

  std::vector<Monomial> chosen;
  std::function<void(std::size_t)> recurse = [&](std::size_t start) {
    if (!chosen.empty()) visit(minimalize(table, chosen));
    if (chosen.size() == q_max) return;
    for (std::size_t i = start; i < candidates.size(); ++i) {
      const Monomial& c = candidates[i];
      bool comparable = std::any_of(chosen.begin(), chosen.end(), [&](const Monomial& g) {
        return divides(g, c) || divides(c, g);
      });
      if (comparable) continue;
      chosen.push_back(c);
      recurse(i + 1);
      chosen.pop_back();
    }
  };
  recurse(0);
}

FuzzSummary fuzz(const FuzzParams& params, const ReportOptions& options) {
  params.validate();
  FuzzSummary summary;

  auto run_one = [&](const MonomialIdeal& ideal, std::size_t trial) -> bool {
    InvariantReport report = check_report(ideal, options);
    ++summary.ideals;
    for (const auto& c : report.checks) {
      auto& tally = summary.checks[c.name];
      switch (c.status) {
        case CheckStatus::Pass: ++tally.pass; break;
        case CheckStatus::Fail: ++tally.fail; break;
        case CheckStatus::Vacuous: ++tally.vacuous; break;
      }
    }
    if (report.pd >= report.odom_dominance) ++summary.gap_histogram[report.pd - report.odom_dominance];
    summary.lemma_instances += report.lemma_instances;
    summary.lemma_satisfied += report.lemma_satisfied;
    if (const CheckResult* failed = report.first_failure()) {
      summary.failure = FuzzFailure{render(ideal), ideal.table().names(), params.seed, trial,
                                    failed->name, failed->detail};
      return false;
    }
    return true;
  };

  if (params.exhaustive) {
    std::size_t trial = 0;
    for (std::size_t n = 1; n <= params.n_max && !summary.failure; ++n) {
      enumerate_ideals(n, params.exp_max, params.q_max, [&](const MonomialIdeal& ideal) {
        if (!summary.failure) run_one(ideal, trial++);
      });
    }
    return summary;
  }
  for (std::size_t t = 0; t < params.trials; ++t) {
    if (!run_one(random_ideal(params, t), t)) break;
  }
  return summary;
}

}  // namespace odom
