#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <vector>

#include "odom/limits.hpp"
#include "odom/monomial.hpp"

namespace odom {

// A Taylor symbol [m_{i_1}, ..., m_{i_s}] is identified with the bitmask of
// its generator indices.
struct TaylorSymbol {
  GenSet members = 0;
  std::size_t hdeg = 0;
  Monomial mdeg;
};

// One entry of the Taylor differential: the coefficient of `row` in the
// boundary of a symbol is sign * mdeg(symbol) / mdeg(row).
struct TaylorEntry {
  GenSet row = 0;
  int sign = 1;
};

class TaylorComplex {
 public:
  explicit TaylorComplex(MonomialIdeal ideal, const Limits& limits = default_limits());

  const MonomialIdeal& ideal() const { return ideal_; }
  std::size_t q() const { return ideal_.q(); }
  std::size_t symbol_count() const { return mdegs_.size(); }

  const Monomial& mdeg(GenSet symbol) const { return mdegs_.at(symbol); }
  TaylorSymbol symbol(GenSet members) const;

  // Symbols of homological degree s in ascending bitmask order.
  const std::vector<GenSet>& stratum(std::size_t s) const { return strata_.at(s); }

  // Removing the j-th smallest member (j = 1, 2, ...) contributes with sign
  // (-1)^(j+1).
  std::vector<TaylorEntry> boundary(GenSet symbol) const;

  Monomial entry_monomial(GenSet row, GenSet column) const;

 private:
  MonomialIdeal ideal_;
  std::vector<Monomial> mdegs_;  // indexed by bitmask
  std::vector<std::vector<GenSet>> strata_;
};

// Throws TaylorTooLarge when q exceeds limits.max_taylor_generators.
std::shared_ptr<const TaylorComplex> build_taylor(const MonomialIdeal& ideal,
                                                  const Limits& limits = default_limits());

// Checks f_{s-1} o f_s = 0 symbolically. Every path from a symbol to a
// codimension-two face carries the same monomial, so the check reduces to
// the signs.
bool taylor_boundary_squares_to_zero(const TaylorComplex& complex);

struct ScarfBasis {
  std::vector<GenSet> symbols;    // ascending hdeg, then bitmask
  std::vector<std::size_t> ranks;  // per homological degree up to the top one
};

// Symbols whose multidegree no other Taylor symbol shares.
ScarfBasis scarf_basis(const TaylorComplex& complex);
ScarfBasis scarf_basis(const MonomialIdeal& ideal, const Limits& limits = default_limits());

// For every multidegree, the number of symbols attaining it per homological
// degree.
using MultiplicityTable = std::map<Monomial, std::map<std::size_t, std::size_t>>;
MultiplicityTable mdeg_multiplicity_table(const TaylorComplex& complex);
MultiplicityTable mdeg_multiplicity_table(const MonomialIdeal& ideal,
                                          const Limits& limits = default_limits());

}  // namespace odom
