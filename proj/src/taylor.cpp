#include "odom/taylor.hpp"

#include <algorithm>

#include "odom/errors.hpp"

namespace odom {

TaylorComplex::TaylorComplex(MonomialIdeal ideal, const Limits& limits)
    : ideal_(std::move(ideal)) {
  const std::size_t q = ideal_.q();
  if (q > limits.max_taylor_generators || q >= 63) {
    throw TaylorTooLarge(q, limits.max_taylor_generators);
  }
  const std::size_t count = std::size_t{1} << q;
  mdegs_.reserve(count);
  mdegs_.emplace_back(ideal_.n());
  strata_.assign(q + 1, {});
  strata_[0].push_back(0);
  for (GenSet s = 1; s < count; ++s) {
    GenSet low = s & (~s + 1);
    std::size_t g = static_cast<std::size_t>(__builtin_ctzll(low));
    mdegs_.push_back(lcm(mdegs_[s ^ low], ideal_.generator(g)));
    strata_[static_cast<std::size_t>(popcount(s))].push_back(s);
  }
}

TaylorSymbol TaylorComplex::symbol(GenSet members) const {
  return {members, static_cast<std::size_t>(popcount(members)), mdeg(members)};
}

std::vector<TaylorEntry> TaylorComplex::boundary(GenSet symbol) const {
  std::vector<TaylorEntry> out;
  int sign = 1;
  for (auto i : members(symbol)) {
    out.push_back({symbol & ~bit(i), sign});
    sign = -sign;
  }
  return out;
}

Monomial TaylorComplex::entry_monomial(GenSet row, GenSet column) const {
  return quotient(mdeg(column), mdeg(row));
}

std::shared_ptr<const TaylorComplex> build_taylor(const MonomialIdeal& ideal,
                                                  const Limits& limits) {
  return std::make_shared<const TaylorComplex>(ideal, limits);
}

bool taylor_boundary_squares_to_zero(const TaylorComplex& complex) {
  std::map<GenSet, int> faces;
  for (std::size_t s = 2; s <= complex.q(); ++s) {
    for (GenSet sigma : complex.stratum(s)) {
      faces.clear();
      for (const auto& outer : complex.boundary(sigma)) {
        for (const auto& inner : complex.boundary(outer.row)) {
          faces[inner.row] += outer.sign * inner.sign;
        }
      }
      for (const auto& [face, total] : faces) {
        if (total != 0) return false;
      }
    }
  }
  return true;
}

MultiplicityTable mdeg_multiplicity_table(const TaylorComplex& complex) {
  MultiplicityTable table;
  for (std::size_t s = 0; s <= complex.q(); ++s) {
    for (GenSet sigma : complex.stratum(s)) ++table[complex.mdeg(sigma)][s];
  }
  return table;
}

MultiplicityTable mdeg_multiplicity_table(const MonomialIdeal& ideal, const Limits& limits) {
  return mdeg_multiplicity_table(*build_taylor(ideal, limits));
}

ScarfBasis scarf_basis(const TaylorComplex& complex) {
  std::map<Monomial, std::size_t> counts;
  for (GenSet s = 0; s < complex.symbol_count(); ++s) ++counts[complex.mdeg(s)];

  ScarfBasis basis;
  for (std::size_t s = 0; s <= complex.q(); ++s) {
    std::size_t rank = 0;
    for (GenSet sigma : complex.stratum(s)) {
      if (counts[complex.mdeg(sigma)] == 1) {
        basis.symbols.push_back(sigma);
        ++rank;
      }
    }
    basis.ranks.push_back(rank);
  }
  while (basis.ranks.size() > 1 && basis.ranks.back() == 0) basis.ranks.pop_back();
  return basis;
}

ScarfBasis scarf_basis(const MonomialIdeal& ideal, const Limits& limits) {
  return scarf_basis(*build_taylor(ideal, limits));
}

}  // namespace odom
