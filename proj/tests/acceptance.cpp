// Acceptance run: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "odom/dominance.hpp"
#include "odom/ideal_text.hpp"
#include "odom/nets.hpp"
#include "odom/resolution.hpp"
#include "odom/verify.hpp"

using namespace odom;

namespace {

MonomialIdeal ideal(const std::string& text, const std::string& vars = "") {
  std::optional<std::vector<std::string>> v;
  if (!vars.empty()) v = parse_variable_list(vars);
  return parse_ideal(text, v).ideal;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

VarSet vars_of(const MonomialIdeal& I, std::initializer_list<const char*> names) {
  VarSet out = 0;
  for (auto n : names) out |= bit(*I.table().find(n));
  return out;
}

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, double budget_s, const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget_s > 0 && secs > budget_s) {
    o.pass = false;
    o.detail += " (over the " + std::to_string(static_cast<int>(budget_s)) + " s budget)";
  }
  if (!o.pass) ++failures;
  std::printf("%s  criterion %2d  %-44s %8.3f s  %s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(),
              secs, o.detail.c_str());
  std::fflush(stdout);
}

FuzzParams params(std::size_t n, std::size_t q, std::size_t e) {
  FuzzParams p;
  p.n_max = n;
  p.q_max = q;
  p.exp_max = e;
  return p;
}

// The ideal sets of criterion 9.
void for_each_suite_ideal(const std::function<void(const MonomialIdeal&)>& visit) {
  for (std::size_t n = 1; n <= 2; ++n) enumerate_ideals(n, 2, 9, visit);
  for (std::size_t n = 1; n <= 4; ++n) enumerate_ideals(n, 1, 5, visit);
  auto p = params(4, 5, 3);
  for (std::size_t t = 0; t < 1000; ++t) visit(random_ideal(p, t));
}

}  // namespace

int main() {
  criterion(1, "M1 = (a,b,c)", 1.0, [] {
    auto I = ideal("a, b, c");
    auto c = codim(I);
    auto o = odom_by_dominance(I).value;
    auto pd = minimize(I).betti.pd;
    std::ostringstream d;
    d << "codim=" << c << " odom=" << o << " pd=" << pd;
    return Outcome{c == 3 && o == 3 && pd == 3, d.str()};
  });

  criterion(2, "M2 = (ad,bd,cd)", 1.0, [] {
    auto I = ideal("a*d, b*d, c*d", "a,b,c,d");
    auto c = codim(I);
    auto o = odom_by_dominance(I).value;
    auto pd = minimize(I).betti.pd;
    auto beta = betti_oracle(I).total;
    bool tm = is_taylor_minimal(I);
    std::ostringstream d;
    d << "codim=" << c << " odom=" << o << " pd=" << pd << " taylor-minimal=" << tm
      << " betti=" << join(beta);
    return Outcome{c == 1 && o == 3 && pd == 3 && tm && beta == std::vector<std::size_t>{1, 3, 3, 1},
                   d.str()};
  });

  criterion(3, "M3 = (ad,bd,cd,d^2)", 1.0, [] {
    auto I = ideal("a*d, b*d, c*d, d^2", "a,b,c,d");
    auto c = codim(I);
    auto o = odom_by_dominance(I).value;
    auto pd = minimize(I).betti.pd;
    auto P = polarize(I);
    std::set<std::string> nets;
    for (auto s : minimal_nets(P).nets) nets.insert(render_variables(s, P.table()));
    const std::set<std::string> expected{"{d_1}", "{a_1, b_1, c_1, d_2}"};
    std::ostringstream d;
    d << "codim=" << c << " odom=" << o << " pd=" << pd << " polarized nets=" << nets.size();
    return Outcome{c == 1 && o == 4 && pd == 4 && nets == expected, d.str()};
  });

  criterion(4, "dominance in (a^2b, ab^3c, bc^2, a^2c^2)", 0, [] {
    auto I = ideal("a^2*b, a*b^3*c, b*c^2, a^2*c^2", "a,b,c");
    const GenSet all = (GenSet{1} << I.q()) - 1;
    std::vector<std::string> dominant;
    bool var_ok = true;
    GenSet sub = 0;
    for (std::size_t g = 0; g < I.q(); ++g) {
      auto text = render(I.generator(g), I.table());
      auto vars = dominant_variables(I, g, all);
      if (vars != 0) {
        dominant.push_back(text);
        var_ok = var_ok && vars == bit(*I.table().find("b"));
      }
      if (text != "a^2*c^2") sub |= bit(g);
    }
    bool sub_dominant = is_dominant_set(I, sub);
    std::ostringstream d;
    d << "dominant generators=" << dominant.size() << " sub-dominant=" << sub_dominant;
    return Outcome{dominant == std::vector<std::string>{"a*b^3*c"} && var_ok && sub_dominant, d.str()};
  });

  criterion(5, "minimal nets of (a^2e, b^3f, ce^2, d^2f^3)", 0, [] {
    auto I = ideal("a^2*e, b^3*f, c*e^2, d^2*f^3", "a,b,c,d,e,f");
    std::set<std::string> nets;
    for (auto s : minimal_nets(I).nets) nets.insert(render_variables(s, I.table()));
    const std::set<std::string> expected{"{e, f}", "{a, b, c, d}", "{a, c, f}", "{b, d, e}"};
    bool x5 = is_net(I, vars_of(I, {"d", "e", "f"})) && !is_minimal_net(I, vars_of(I, {"d", "e", "f"}));
    bool x6 = is_net(I, vars_of(I, {"b", "d", "e", "f"})) &&
              !is_minimal_net(I, vars_of(I, {"b", "d", "e", "f"}));
    std::ostringstream d;
    d << "nets=" << nets.size() << " X5 non-minimal=" << x5 << " X6 non-minimal=" << x6;
    return Outcome{nets == expected && x5 && x6, d.str()};
  });

  criterion(6, "odom of (ae,be,ce,de,ab,cd)", 0, [] {
    auto I = ideal("a*e, b*e, c*e, d*e, a*b, c*d", "a,b,c,d,e");
    auto o = odom_by_nets(I).value;
    auto pd = minimize(I).betti.pd;
    std::ostringstream d;
    d << "odom(nets)=" << o << " pd=" << pd << " n=" << I.n();
    return Outcome{o == 4 && pd == 4 && pd == I.n() - 1, d.str()};
  });

  criterion(7, "(ab,cd,ac,bd)", 0, [] {
    auto r = check_report(ideal("a*b, c*d, a*c, b*d", "a,b,c,d"));
    std::ostringstream d;
    d << "codim=" << r.codim << " odom=" << r.odom_dominance << " pd=" << r.pd << " cm=" << r.cohen_macaulay
      << " scarf=" << r.scarf;
    return Outcome{r.codim == 2 && r.odom_dominance == 2 && r.pd == 3 && !r.cohen_macaulay && !r.scarf,
                   d.str()};
  });

  criterion(8, "(x1^2, x1x2, ..., x1xn), n = 4, 5", 5.0, [] {
    bool ok = true;
    std::ostringstream d;
    for (std::size_t n : {4, 5}) {
      std::string text = "x1^2";
      std::string vars = "x1";
      for (std::size_t i = 2; i <= n; ++i) {
        text += ", x1*x" + std::to_string(i);
        vars += ",x" + std::to_string(i);
      }
      auto I = ideal(text, vars);
      auto c = codim(I);
      auto pd = minimize(I).betti.pd;
      d << "n=" << n << ": codim=" << c << " pd=" << pd << "  ";
      ok = ok && c == 1 && pd == n;
    }
    return Outcome{ok, d.str()};
  });

  criterion(9, "property suite", 120.0, [] {
    std::size_t ideals = 0;
    std::ostringstream d;
    auto run = [&](FuzzParams p) -> bool {
      auto s = fuzz(p);
      ideals += s.ideals;
      if (s.failure) {
        d << "failure " << s.failure->check << " on (" << s.failure->ideal << ") ";
        return false;
      }
      return true;
    };
    auto small = params(2, 9, 2);
    small.exhaustive = true;
    auto squarefree = params(4, 5, 1);
    squarefree.exhaustive = true;
    auto random = params(4, 5, 3);
    random.trials = 1000;
    random.seed = 42;
    bool ok = run(small) && run(squarefree) && run(random);
    d << "ideals=" << ideals;
    return Outcome{ok, d.str()};
  });

  criterion(10, "cancellation-order independence", 60.0, [] {
    auto p = params(4, 6, 3);
    p.seed = 42;
    // the first 50 seeded ideals whose Taylor complex is not already minimal
    std::size_t mismatches = 0, runs = 0, ideals = 0, cancellations = 0;
    for (std::size_t t = 0; ideals < 50 && t < 100000; ++t) {
      auto I = random_ideal(p, t);
      auto canonical = minimize(I);
      if (canonical.cancellations == 0) continue;
      ++ideals;
      cancellations += canonical.cancellations;
      for (std::uint64_t k = 0; k < 20; ++k) {
        MinimizeOptions o;
        o.pivot_seed = SplitMix64(t * 1000 + k).next();
        if (minimize(I, o).betti != canonical.betti) ++mismatches;
        ++runs;
      }
    }
    std::ostringstream d;
    d << "ideals=" << ideals << " runs=" << runs << " mismatches=" << mismatches
      << " canonical cancellations=" << cancellations;
    return Outcome{mismatches == 0 && ideals == 50, d.str()};
  });

  criterion(11, "lemma symbol existence", 0, [] {
    std::size_t instances = 0, satisfied = 0, missing = 0;
    for_each_suite_ideal([&](const MonomialIdeal& I) {
      for (const auto& inst : check_lemma_hypotheses(I)) {
        ++instances;
        if (!inst.satisfied) continue;
        ++satisfied;
        if (!inst.holds()) ++missing;
      }
    });
    std::ostringstream d;
    d << "instances=" << instances << " satisfied=" << satisfied << " missing witnesses=" << missing;
    return Outcome{missing == 0 && satisfied > 0, d.str()};
  });

  std::printf("%s: %d failing criteria\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
