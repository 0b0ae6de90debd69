#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "odom/dominance.hpp"
#include "odom/nets.hpp"
#include "odom/resolution.hpp"
#include "odom/taylor.hpp"

namespace odom {

enum class CheckStatus { Pass, Fail, Vacuous };
std::string to_string(CheckStatus status);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

// Stable check names, in report order.
namespace checks {
inline constexpr const char* kChain = "codim-le-odom-le-pd";
inline constexpr const char* kFullDimension = "pd-eq-n-equivalences";
inline constexpr const char* kPdOne = "pd-eq-1-iff-odom-eq-1";
inline constexpr const char* kOdomNMinusOne = "odom-eq-n-minus-1-implies-pd";
inline constexpr const char* kOdomQMinusOne = "odom-eq-q-minus-1-implies-pd";
inline constexpr const char* kScarfPd = "scarf-implies-pd-eq-odom";
inline constexpr const char* kTaylorMinimal = "taylor-minimal-iff-odom-eq-q";
inline constexpr const char* kBinomialOdom = "betti-ge-binomial-odom";
inline constexpr const char* kBinomialPd = "betti-ge-binomial-pd";
inline constexpr const char* kTotalBettiOdom = "total-betti-bound-odom-gt-codim";
inline constexpr const char* kTotalBettiNonCi = "total-betti-bound-non-ci";
inline constexpr const char* kThreeVariables = "three-variables-pd-and-cm";
inline constexpr const char* kScarfCm = "scarf-cm-iff-uniform-nets";
inline constexpr const char* kPolarizedOdom = "odom-polarization-invariant";
inline constexpr const char* kEngineOracle = "engine-betti-eq-oracle";
inline constexpr const char* kOdomRoutes = "odom-routes-agree";
inline constexpr const char* kLemmaSymbol = "lemma-symbol-existence";
}  // namespace checks

// One dominant subset with an assignment of dominant variables whose
// exponents match those of lcm(G). `satisfied` records whether every
// generator is divisible by one of the x_{i_j}^{alpha_{i_j}}; when it is, a
// multidegree m with beta_{|D|, m} >= 1, m_{i_j} = alpha_{i_j}, and
// m <= lcm(G) elsewhere is required.
struct LemmaInstance {
  DominanceWitness witness;
  bool satisfied = false;
  std::optional<Monomial> betti_witness;

  bool holds() const { return !satisfied || betti_witness.has_value(); }
};

std::vector<LemmaInstance> check_lemma_hypotheses(const MonomialIdeal& ideal,
                                                  const BettiTable& betti);
std::vector<LemmaInstance> check_lemma_hypotheses(const MonomialIdeal& ideal,
                                                  const FieldSpec& field = {},
                                                  const Limits& limits = default_limits());

struct ReportOptions {
  FieldSpec field;
  Limits limits;
};

struct InvariantReport {
  MonomialIdeal ideal;
  MonomialIdeal polarized;
  std::string field;
  std::size_t codim = 0;
  std::size_t odom_dominance = 0;
  std::size_t odom_nets = 0;
  std::size_t pd = 0;
  BettiTable betti;
  bool taylor_minimal = false;
  bool scarf = false;
  bool complete_intersection = false;
  bool cohen_macaulay = false;
  MinimalNetFamily nets;
  MinimalNetFamily polarized_nets;
  DominanceWitness dominance_witness;
  VarSet net_witness = 0;  // over the polarized table
  ScarfBasis scarf_basis;
  std::size_t lemma_instances = 0;
  std::size_t lemma_satisfied = 0;
  std::vector<CheckResult> checks;

  std::size_t n() const { return ideal.n(); }
  std::size_t q() const { return ideal.q(); }
  bool ok() const;
  const CheckResult* first_failure() const;
  CheckStatus status(const std::string& check) const;
};

// Computes every invariant and evaluates every property check. Failed checks
// are recorded, never thrown.
InvariantReport check_report(const MonomialIdeal& ideal, const ReportOptions& options = {});

struct FuzzParams {
  std::size_t n_max = 4;
  std::size_t q_max = 5;
  std::size_t exp_max = 3;
  std::size_t trials = 1000;
  std::uint64_t seed = 42;
  bool exhaustive = false;

  void validate() const;
};

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}
  std::uint64_t next();

 private:
  std::uint64_t state_;
};

// Trial t draws from SplitMix64(t-th output of SplitMix64(seed)): first
// n = 1 + r % n_max, then q' = 1 + r % q_max, then q' monomials whose
// exponents are r % (exp_max + 1), redrawing units (at most 64 times, then
// falling back to the first variable). Variables are named a, b, c, ...
MonomialIdeal random_ideal(const FuzzParams& params, std::uint64_t trial_index);

// Every minimal monomial ideal in exactly n variables with exponents at most
// exp_max and at most q_max generators, each up to generator order.
void enumerate_ideals(std::size_t n, std::size_t exp_max, std::size_t q_max,
                      const std::function<void(const MonomialIdeal&)>& visit);

struct CheckTally {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t vacuous = 0;
};

struct FuzzFailure {
  std::string ideal;
  std::vector<std::string> vars;
  std::uint64_t seed = 0;
  std::size_t trial = 0;
  std::string check;
  std::string detail;
};

struct FuzzSummary {
  std::size_t ideals = 0;
  std::map<std::string, CheckTally> checks;
  // pd - odom, informational
  std::map<std::size_t, std::size_t> gap_histogram;
  std::size_t lemma_instances = 0;
  std::size_t lemma_satisfied = 0;
  std::optional<FuzzFailure> failure;

  bool ok() const { return !failure.has_value(); }
};

// Runs check_report over random (or, when exhaustive, all) ideals and stops
// at the first failed check.
FuzzSummary fuzz(const FuzzParams& params, const ReportOptions& options = {});

}  // namespace odom
