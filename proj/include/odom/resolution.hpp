#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "odom/field.hpp"
#include "odom/limits.hpp"
#include "odom/monomial.hpp"
#include "odom/taylor.hpp"

namespace odom {

struct BettiTable {
  std::vector<std::size_t> total;  // beta_0 .. beta_pd
  std::map<std::pair<std::size_t, std::uint64_t>, std::size_t> graded;
  std::map<std::pair<std::size_t, Monomial>, std::size_t> multigraded;
  std::size_t pd = 0;

  std::size_t sum() const;
  std::size_t at(std::size_t i) const { return i < total.size() ? total[i] : 0; }
  std::size_t multigraded_at(std::size_t i, const Monomial& m) const;

  bool operator==(const BettiTable&) const = default;
};

// Betti table of the labels (Taylor symbols) that span each F_i.
BettiTable betti_from_labels(const TaylorComplex& taylor,
                             const std::vector<std::vector<GenSet>>& strata);

struct MinimizeOptions {
  FieldSpec field;
  // Pick pivots uniformly at random instead of in canonical scan order.
  std::optional<std::uint64_t> pivot_seed;
  // Re-check multihomogeneity and d^2 = 0 after every cancellation.
  bool check_each_step = false;
  // Check them once on the final complex.
  bool check_result = true;
  Limits limits;
};

struct MatrixEntry {
  GenSet row = 0;
  GenSet column = 0;
  std::string scalar;
};

struct Resolution {
  BettiTable betti;
  std::vector<std::vector<GenSet>> strata;      // surviving labels per degree
  std::vector<std::vector<MatrixEntry>> matrices;  // index s: f_s, s >= 1
  std::size_t cancellations = 0;
  std::string field;
};

// Minimal resolution by consecutive cancellations from the Taylor
// resolution.
Resolution minimize(const MonomialIdeal& ideal, const MinimizeOptions& options = {});

// beta_{i,m} as the i-th homology of the strand of symbols with mdeg exactly
// m in the Taylor complex tensored with k. Independent of the cancellation
// engine.
BettiTable betti_oracle(const MonomialIdeal& ideal, const FieldSpec& field = {},
                        const Limits& limits = default_limits());
BettiTable betti_oracle(const TaylorComplex& taylor, const FieldSpec& field = {});

// Generators with pairwise disjoint supports.
bool is_complete_intersection(const MonomialIdeal& ideal);

// codim = pd.
bool is_cohen_macaulay(const MonomialIdeal& ideal, const MinimizeOptions& options = {});

// Scarf ranks equal the Betti numbers in every homological degree.
bool is_scarf(const ScarfBasis& scarf, const BettiTable& betti);
bool is_scarf(const MonomialIdeal& ideal, const MinimizeOptions& options = {});

}  // namespace odom
