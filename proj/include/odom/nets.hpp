#pragma once

#include <cstddef>
#include <vector>

#include "odom/dominance.hpp"
#include "odom/limits.hpp"
#include "odom/monomial.hpp"

namespace odom {

// A net is a set of variables such that every generator is divisible by one
// of them, i.e. a transversal of the support hypergraph.
bool is_net(const MonomialIdeal& ideal, VarSet vars);
bool is_minimal_net(const MonomialIdeal& ideal, VarSet vars);

// Sets of variables ordered by ascending cardinality, then by their sorted
// index lists.
bool canonical_set_less(VarSet a, VarSet b);

struct MinimalNetFamily {
  std::vector<VarSet> nets;  // canonical order
  std::size_t min_card = 0;
  std::size_t max_card = 0;

  bool uniform() const { return min_card == max_card; }
};

// All minimal nets. Throws GuardExceeded when the family is larger than
// limits.max_minimal_nets.
MinimalNetFamily minimal_nets(const MonomialIdeal& ideal, const Limits& limits = default_limits());

std::size_t codim(const MonomialIdeal& ideal, const Limits& limits = default_limits());

struct NetsOdom {
  std::size_t value = 0;
  MonomialIdeal polarized;
  // Least maximum-cardinality minimal net of the polarization, as a set of
  // polarized variables.
  VarSet witness = 0;
};

NetsOdom odom_by_nets(const MonomialIdeal& ideal, const Limits& limits = default_limits());

// Builds a dominant subset from a minimal net X = {x_{i_1} < ... < x_{i_q}}:
// G_k holds the generators divisible by x_{i_k} but by none of
// x_{i_1}^{e_1}, ..., x_{i_{k-1}}^{e_{k-1}}, x_{i_{k+1}}, ..., x_{i_q};
// e_k is the least exponent of x_{i_k} over G_k and d_k the first generator
// attaining it. Throws ArgumentError when X is not a minimal net.
DominanceWitness dominant_set_from_net(const MonomialIdeal& ideal, VarSet net);

// Minimal nets read as the generating sets of the minimal monomial primes
// over the ideal; big_height is the largest prime over the polarization.
struct PrimeView {
  std::vector<VarSet> primes;
  std::size_t big_height = 0;
};

PrimeView associated_prime_view(const MonomialIdeal& ideal,
                                const Limits& limits = default_limits());

}  // namespace odom
