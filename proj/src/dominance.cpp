#include "odom/dominance.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "odom/errors.hpp"

namespace odom {

namespace {

void check_guard(const MonomialIdeal& ideal, const Limits& limits) {
  if (ideal.q() > limits.max_dominance_generators || ideal.q() >= 64) {
    throw GuardExceeded("dominant subset enumeration over q = " + std::to_string(ideal.q()) +
                        " generators exceeds the limit of " +
                        std::to_string(limits.max_dominance_generators));
  }
}

DominanceWitness make_witness(const MonomialIdeal& ideal, GenSet subset,
                              const std::vector<std::size_t>& gens,
                              const std::vector<VarIndex>& vars) {
  DominanceWitness w;
  w.members = subset;
  w.lcm = ideal.lcm_of(subset);
  std::vector<std::size_t> order(gens.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return vars[a] < vars[b]; });
  for (auto j : order) {
    w.generators.push_back(gens[j]);
    w.dominant_vars.push_back(vars[j]);
    w.exponents.push_back(ideal.generator(gens[j])[vars[j]]);
  }
  return w;
}

// Searches dominant-variable assignments of a dominant subset for one that
// satisfies the lcm condition. Members are tried in index order, variables in
// ascending order, so the first hit is deterministic.
std::optional<DominanceWitness> assign_with_lcm_condition(const MonomialIdeal& ideal,
                                                          GenSet subset) {
  const auto gens = members(subset);
  std::vector<VarSet> options;
  VarSet all_options = 0;
  for (auto g : gens) {
    VarSet vars = dominant_variables(ideal, g, subset);
    if (vars == 0) return std::nullopt;
    options.push_back(vars);
    all_options |= vars;
  }
  const Monomial top = ideal.lcm_of(subset);

  // For each generator dividing lcm(D): the candidate variables through
  // which it would satisfy the condition.
  std::vector<VarSet> obligations;
  for (std::size_t i = 0; i < ideal.q(); ++i) {
    const Monomial& m = ideal.generator(i);
    if (!divides(m, top)) continue;
    VarSet hits = 0;
    for (auto v : members(all_options & m.support_mask())) {
      if (m[v] == top[v]) hits |= bit(v);
    }
    if (hits == 0) return std::nullopt;
    obligations.push_back(hits);
  }

  std::vector<VarIndex> chosen(gens.size());
  std::function<bool(std::size_t, VarSet, VarSet)> search =
      [&](std::size_t j, VarSet picked, VarSet undecided) -> bool {
    for (VarSet hits : obligations) {
      if ((hits & (picked | undecided)) == 0) return false;
    }
    if (j == gens.size()) return true;
    VarSet rest = undecided & ~options[j];
    for (auto v : members(options[j])) {
      chosen[j] = v;
      if (search(j + 1, picked | bit(v), rest)) return true;
    }
    return false;
  };
  if (!search(0, 0, all_options)) return std::nullopt;
  return make_witness(ideal, subset, gens, chosen);
}

// Visits k-subsets of the generators in lexicographic order of their index
// lists, skipping every branch whose partial set is already non-dominant.
// Stops at the first subset for which `visit` returns true.
bool find_dominant_subset(const MonomialIdeal& ideal, std::size_t k,
                          const std::function<bool(GenSet)>& visit) {
  const std::size_t q = ideal.q();
  std::function<bool(std::size_t, GenSet, std::size_t)> recurse =
      [&](std::size_t start, GenSet partial, std::size_t size) -> bool {
    if (size == k) return visit(partial);
    for (std::size_t i = start; i + (k - size) <= q; ++i) {
      GenSet next = partial | bit(i);
      if (!is_dominant_set(ideal, next)) continue;
      if (recurse(i + 1, next, size + 1)) return true;
    }
    return false;
  };
  return recurse(0, 0, 0);
}

}  // namespace

VarSet dominant_variables(const MonomialIdeal& ideal, std::size_t m, GenSet subset) {
  if (subset == 0) throw ArgumentError("dominance is undefined for an empty set");
  if (m >= ideal.q() || !contains(subset, m)) {
    throw ArgumentError("generator " + std::to_string(m) + " is not in the set");
  }
  const Monomial& g = ideal.generator(m);
  VarSet result = g.support_mask();
  for (auto other : members(subset & ~bit(m))) {
    const Monomial& h = ideal.generator(other);
    for (auto v : members(result)) {
      if (h[v] >= g[v]) result &= ~bit(v);
    }
    if (result == 0) break;
  }
  return result;
}

bool is_dominant_set(const MonomialIdeal& ideal, GenSet subset) {
  if (subset == 0) return false;
  for (auto m : members(subset)) {
    if (dominant_variables(ideal, m, subset) == 0) return false;
  }
  return true;
}

std::optional<DominanceWitness> dominant_set_witness(const MonomialIdeal& ideal, GenSet subset) {
  if (subset == 0) return std::nullopt;
  std::vector<std::size_t> gens;
  std::vector<VarIndex> vars;
  for (auto m : members(subset)) {
    VarSet dom = dominant_variables(ideal, m, subset);
    if (dom == 0) return std::nullopt;
    gens.push_back(m);
    vars.push_back(static_cast<VarIndex>(__builtin_ctzll(dom)));
  }
  return make_witness(ideal, subset, gens, vars);
}

bool satisfies_lcm_condition(const MonomialIdeal& ideal, const DominanceWitness& witness) {
  for (const auto& m : ideal.generators()) {
    if (!divides(m, witness.lcm)) continue;
    bool hit = false;
    for (std::size_t j = 0; j < witness.size() && !hit; ++j) {
      hit = m[witness.dominant_vars[j]] >= witness.lcm[witness.dominant_vars[j]];
    }
    if (!hit) return false;
  }
  return true;
}

DominanceOdom odom_by_dominance(const MonomialIdeal& ideal, const Limits& limits) {
  check_guard(ideal, limits);
  const std::size_t upper =
      std::min<std::size_t>(ideal.q(), static_cast<std::size_t>(popcount(ideal.used_variables())));
  for (std::size_t k = upper; k >= 1; --k) {
    std::optional<DominanceWitness> found;
    find_dominant_subset(ideal, k, [&](GenSet subset) {
      found = assign_with_lcm_condition(ideal, subset);
      return found.has_value();
    });
    if (found) return {k, std::move(*found)};
  }
  // Any single generator qualifies, so this is unreachable for valid ideals.
  throw InvariantViolation("no dominant subset satisfies the lcm condition");
}

bool is_taylor_minimal(const MonomialIdeal& ideal) {
  if (ideal.q() >= 64) return false;
  return is_dominant_set(ideal, bit(ideal.q()) - 1);
}

std::optional<DominanceWitness> full_dominant_set(const MonomialIdeal& ideal,
                                                  const Limits& limits) {
  check_guard(ideal, limits);
  const std::size_t n = ideal.n();
  if (n > ideal.q()) return std::nullopt;
  std::optional<DominanceWitness> found;
  find_dominant_subset(ideal, n, [&](GenSet subset) {
    const Monomial top = ideal.lcm_of(subset);
    for (const auto& m : ideal.generators()) {
      if (strongly_divides(m, top)) return false;
    }
    found = dominant_set_witness(ideal, subset);
    return true;
  });
  return found;
}

}  // namespace odom
