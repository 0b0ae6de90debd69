#include "odom/nets.hpp"

#include <algorithm>
#include <functional>

#include "odom/errors.hpp"

namespace odom {

namespace {

void check_variables(const MonomialIdeal& ideal, VarSet vars) {
  if (ideal.n() < 64 && (vars >> ideal.n()) != 0) {
    throw ArgumentError("net refers to a variable outside the table");
  }
}

class TransversalSearch {
 public:
  TransversalSearch(const MonomialIdeal& ideal, std::size_t limit)
      : limit_(limit), covers_(ideal.n(), 0) {
    if (ideal.q() >= 64) {
      throw GuardExceeded("minimal net enumeration supports at most 63 generators");
    }
    all_edges_ = bit(ideal.q()) - 1;
    for (std::size_t e = 0; e < ideal.q(); ++e) {
      for (auto v : members(ideal.support_mask(e))) covers_[v] |= bit(e);
    }
    for (auto v : members(ideal.used_variables())) order_.push_back(v);
    std::stable_sort(order_.begin(), order_.end(), [&](VarIndex a, VarIndex b) {
      return popcount(covers_[a]) > popcount(covers_[b]);
    });
    suffix_cover_.assign(order_.size() + 1, 0);
    for (std::size_t i = order_.size(); i-- > 0;) {
      suffix_cover_[i] = suffix_cover_[i + 1] | covers_[order_[i]];
    }
  }

  std::vector<VarSet> run() {
    search(0, 0, all_edges_);
    return std::move(found_);
  }

 private:
  // Every chosen variable still covers an edge no other chosen variable does.
  bool irredundant(VarSet chosen) const {
    for (auto u : members(chosen)) {
      GenSet others = 0;
      for (auto w : members(chosen & ~bit(u))) others |= covers_[w];
      if ((covers_[u] & ~others) == 0) return false;
    }
    return true;
  }

  void search(std::size_t pos, VarSet chosen, GenSet uncovered) {
    if (uncovered == 0) {
      found_.push_back(chosen);
      if (found_.size() > limit_) {
        throw GuardExceeded("more than " + std::to_string(limit_) + " minimal nets");
      }
      return;
    }
    if (pos == order_.size() || (uncovered & ~suffix_cover_[pos]) != 0) return;
    const VarIndex v = order_[pos];
    if ((covers_[v] & uncovered) != 0) {
      VarSet next = chosen | bit(v);
      if (irredundant(next)) search(pos + 1, next, uncovered & ~covers_[v]);
    }
    search(pos + 1, chosen, uncovered);
  }

  std::size_t limit_;
  GenSet all_edges_ = 0;
  std::vector<GenSet> covers_;
  std::vector<VarIndex> order_;
  std::vector<GenSet> suffix_cover_;
  std::vector<VarSet> found_;
};

}  // namespace

bool is_net(const MonomialIdeal& ideal, VarSet vars) {
  check_variables(ideal, vars);
  return std::all_of(ideal.support_masks().begin(), ideal.support_masks().end(),
                     [&](VarSet s) { return (s & vars) != 0; });
}

bool is_minimal_net(const MonomialIdeal& ideal, VarSet vars) {
  if (!is_net(ideal, vars)) return false;
  for (auto v : members(vars)) {
    if (is_net(ideal, vars & ~bit(v))) return false;
  }
  return true;
}

bool canonical_set_less(VarSet a, VarSet b) {
  int ca = popcount(a), cb = popcount(b);
  if (ca != cb) return ca < cb;
  return members(a) < members(b);
}

MinimalNetFamily minimal_nets(const MonomialIdeal& ideal, const Limits& limits) {
  auto nets = TransversalSearch(ideal, limits.max_minimal_nets).run();
  std::sort(nets.begin(), nets.end(), canonical_set_less);

  // Antichain filter: drop any set containing another one.
  std::vector<VarSet> family;
  for (VarSet x : nets) {
    bool superset = std::any_of(family.begin(), family.end(),
                                [&](VarSet y) { return (x & y) == y; });
    if (!superset) family.push_back(x);
  }

  MinimalNetFamily result;
  result.nets = std::move(family);
  result.min_card = static_cast<std::size_t>(popcount(result.nets.front()));
  result.max_card = static_cast<std::size_t>(popcount(result.nets.back()));
  return result;
}

std::size_t codim(const MonomialIdeal& ideal, const Limits& limits) {
  return minimal_nets(ideal, limits).min_card;
}

NetsOdom odom_by_nets(const MonomialIdeal& ideal, const Limits& limits) {
  NetsOdom result{0, polarize(ideal), 0};
  auto family = minimal_nets(result.polarized, limits);
  result.value = family.max_card;
  result.witness = *std::find_if(family.nets.begin(), family.nets.end(), [&](VarSet x) {
    return static_cast<std::size_t>(popcount(x)) == family.max_card;
  });
  return result;
}

DominanceWitness dominant_set_from_net(const MonomialIdeal& ideal, VarSet net) {
  if (!is_minimal_net(ideal, net)) throw ArgumentError("not a minimal net");
  const auto vars = members(net);
  const std::size_t q = vars.size();
  std::vector<Exponent> eps(q, 0);

  DominanceWitness w;
  for (std::size_t k = 0; k < q; ++k) {
    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < ideal.q(); ++i) {
      const Monomial& m = ideal.generator(i);
      if (m[vars[k]] == 0) continue;
      bool excluded = false;
      for (std::size_t j = 0; j < q && !excluded; ++j) {
        if (j < k) excluded = m[vars[j]] >= eps[j];
        if (j > k) excluded = m[vars[j]] != 0;
      }
      if (excluded) continue;
      if (!pick || m[vars[k]] < ideal.generator(*pick)[vars[k]]) pick = i;
    }
    if (!pick) throw InvariantViolation("empty generator class while building a dominant set");
    eps[k] = ideal.generator(*pick)[vars[k]];
    w.members |= bit(*pick);
    w.generators.push_back(*pick);
    w.dominant_vars.push_back(vars[k]);
    w.exponents.push_back(eps[k]);
  }
  w.lcm = ideal.lcm_of(w.members);
  return w;
}

PrimeView associated_prime_view(const MonomialIdeal& ideal, const Limits& limits) {
  PrimeView view;
  view.primes = minimal_nets(ideal, limits).nets;
  view.big_height = minimal_nets(polarize(ideal), limits).max_card;
  return view;
}

}  // namespace odom
