#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "odom/limits.hpp"
#include "odom/monomial.hpp"

namespace odom {

// A dominant subset D of the generators together with one dominant variable
// per member. Pairs are ordered by ascending variable index, so
// dominant_vars is the increasing sequence i_1 < ... < i_k.
struct DominanceWitness {
  GenSet members = 0;
  std::vector<std::size_t> generators;
  std::vector<VarIndex> dominant_vars;
  // exponents[j] = exponent of dominant_vars[j] in generators[j], which is
  // also its exponent in lcm.
  std::vector<Exponent> exponents;
  Monomial lcm;

  std::size_t size() const { return generators.size(); }
};

// Variables whose exponent in generator `m` strictly exceeds their exponent
// in every other member of `subset`.
VarSet dominant_variables(const MonomialIdeal& ideal, std::size_t m, GenSet subset);

bool is_dominant_set(const MonomialIdeal& ideal, GenSet subset);

// Witness using the least dominant variable of each member, or nullopt when
// the set is not dominant.
std::optional<DominanceWitness> dominant_set_witness(const MonomialIdeal& ideal, GenSet subset);

// Every generator dividing lcm(D) is divisible by x_{i_j}^{alpha_{i_j}} for
// some pair (d_j, x_{i_j}) of the witness.
bool satisfies_lcm_condition(const MonomialIdeal& ideal, const DominanceWitness& witness);

struct DominanceOdom {
  std::size_t value = 0;
  DominanceWitness witness;
};

// Order of dominance: the largest dominant subset D with a dominant-variable
// assignment satisfying the lcm condition. Ties go to the lexicographically
// least generator index list.
DominanceOdom odom_by_dominance(const MonomialIdeal& ideal,
                                const Limits& limits = default_limits());

// The Taylor resolution is minimal exactly when all generators form a
// dominant set.
bool is_taylor_minimal(const MonomialIdeal& ideal);

// A dominant subset of size n (the number of table variables) whose lcm is
// strongly divided by no generator.
std::optional<DominanceWitness> full_dominant_set(const MonomialIdeal& ideal,
                                                  const Limits& limits = default_limits());
inline bool has_full_dominant_set(const MonomialIdeal& ideal,
                                  const Limits& limits = default_limits()) {
  return full_dominant_set(ideal, limits).has_value();
}

}  // namespace odom
