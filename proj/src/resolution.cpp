#include "odom/resolution.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "odom/errors.hpp"
#include "odom/free_complex.hpp"
#include "odom/nets.hpp"

namespace odom {

std::string FieldSpec::name() const {
  return kind == Kind::Rational ? "QQ" : "GF(" + std::to_string(prime) + ")";
}

void FieldSpec::validate() const {
  if (kind == Kind::Rational) return;
  if (prime < 2 || prime >= (1U << 31)) throw ArgumentError("prime out of range");
  for (std::uint32_t d = 2; std::uint64_t{d} * d <= prime; ++d) {
    if (prime % d == 0) throw ArgumentError(std::to_string(prime) + " is not prime");
  }
}

std::size_t BettiTable::sum() const { return std::accumulate(total.begin(), total.end(), std::size_t{0}); }

std::size_t BettiTable::multigraded_at(std::size_t i, const Monomial& m) const {
  auto it = multigraded.find({i, m});
  return it == multigraded.end() ? 0 : it->second;
}

BettiTable betti_from_labels(const TaylorComplex& taylor,
                             const std::vector<std::vector<GenSet>>& strata) {
  BettiTable table;
  for (std::size_t i = 0; i < strata.size(); ++i) {
    table.total.push_back(strata[i].size());
    for (GenSet sigma : strata[i]) {
      const Monomial& m = taylor.mdeg(sigma);
      ++table.graded[{i, m.degree()}];
      ++table.multigraded[{i, m}];
    }
  }
  while (table.total.size() > 1 && table.total.back() == 0) table.total.pop_back();
  table.pd = table.total.size() - 1;
  return table;
}

namespace {

template <class Field>
Resolution run_minimize(const std::shared_ptr<const TaylorComplex>& taylor, Field field,
                        const MinimizeOptions& options) {
  FreeComplex<Field> complex(taylor, field);
  if (options.pivot_seed) {
    complex.minimize_random(*options.pivot_seed, options.check_each_step);
  } else {
    complex.minimize_canonical(options.check_each_step);
  }
  if (options.check_each_step || options.check_result) complex.check_invariants();

  Resolution result;
  for (std::size_t s = 0; s <= complex.length(); ++s) {
    const auto& live = complex.stratum(s);
    result.strata.emplace_back(live.begin(), live.end());
  }
  result.matrices.resize(complex.length() + 1);
  for (std::size_t s = 1; s <= complex.length(); ++s) {
    for (const auto& [column, rows] : complex.matrix(s).columns) {
      for (const auto& [row, value] : rows) {
        result.matrices[s].push_back({row, column, field.to_string(value)});
      }
    }
  }
  result.betti = betti_from_labels(*taylor, result.strata);
  result.cancellations = complex.cancellations();
  return result;
}

template <class Field>
std::size_t rank_of(std::vector<std::vector<typename Field::Scalar>> rows, const Field& f) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && f.is_zero(rows[pivot][c])) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (f.is_zero(rows[r][c])) continue;
      auto factor = f.div(rows[r][c], rows[rank][c]);
      for (std::size_t k = c; k < cols; ++k) {
        rows[r][k] = f.sub(rows[r][k], f.mul(factor, rows[rank][k]));
      }
    }
    ++rank;
  }
  return rank;
}

template <class Field>
BettiTable run_oracle(const TaylorComplex& taylor, const Field& field) {
  std::map<Monomial, std::vector<GenSet>> strands;
  for (GenSet s = 0; s < taylor.symbol_count(); ++s) strands[taylor.mdeg(s)].push_back(s);

  const std::size_t q = taylor.q();
  BettiTable table;
  table.total.assign(q + 1, 0);
  for (const auto& [m, symbols] : strands) {
    std::vector<std::vector<GenSet>> by_degree(q + 2);
    for (GenSet s : symbols) by_degree[static_cast<std::size_t>(popcount(s))].push_back(s);

    // rank of the strand differential C_i -> C_{i-1}
    std::vector<std::size_t> ranks(q + 2, 0);
    for (std::size_t i = 1; i <= q; ++i) {
      const auto& cols = by_degree[i];
      const auto& rows = by_degree[i - 1];
      if (cols.empty() || rows.empty()) continue;
      std::unordered_map<GenSet, std::size_t> row_index;
      for (std::size_t r = 0; r < rows.size(); ++r) row_index[rows[r]] = r;
      std::vector<std::vector<typename Field::Scalar>> matrix(
          cols.size(), std::vector<typename Field::Scalar>(rows.size(), field.from_int(0)));
      for (std::size_t c = 0; c < cols.size(); ++c) {
        for (const auto& e : taylor.boundary(cols[c])) {
          auto it = row_index.find(e.row);
          if (it != row_index.end()) matrix[c][it->second] = field.from_int(e.sign);
        }
      }
      ranks[i] = rank_of(std::move(matrix), field);
    }
    for (std::size_t i = 0; i <= q; ++i) {
      std::size_t beta = by_degree[i].size() - ranks[i] - ranks[i + 1];
      if (beta == 0) continue;
      table.total[i] += beta;
      table.graded[{i, m.degree()}] += beta;
      table.multigraded[{i, m}] += beta;
    }
  }
  while (table.total.size() > 1 && table.total.back() == 0) table.total.pop_back();
  table.pd = table.total.size() - 1;
  return table;
}

}  // namespace

Resolution minimize(const MonomialIdeal& ideal, const MinimizeOptions& options) {
  options.field.validate();
  auto taylor = build_taylor(ideal, options.limits);
  Resolution result =
      options.field.kind == FieldSpec::Kind::Rational
          ? run_minimize(taylor, RationalField{}, options)
          : run_minimize(taylor, PrimeField{options.field.prime}, options);
  result.field = options.field.name();
  return result;
}

BettiTable betti_oracle(const TaylorComplex& taylor, const FieldSpec& field) {
  field.validate();
  if (field.kind == FieldSpec::Kind::Rational) return run_oracle(taylor, RationalField{});
  return run_oracle(taylor, PrimeField{field.prime});
}

BettiTable betti_oracle(const MonomialIdeal& ideal, const FieldSpec& field, const Limits& limits) {
  return betti_oracle(*build_taylor(ideal, limits), field);
}

bool is_complete_intersection(const MonomialIdeal& ideal) {
  VarSet seen = 0;
  for (VarSet s : ideal.support_masks()) {
    if ((seen & s) != 0) return false;
    seen |= s;
  }
  return true;
}

bool is_cohen_macaulay(const MonomialIdeal& ideal, const MinimizeOptions& options) {
  return codim(ideal, options.limits) == minimize(ideal, options).betti.pd;
}

bool is_scarf(const ScarfBasis& scarf, const BettiTable& betti) {
  return scarf.ranks == betti.total;
}

bool is_scarf(const MonomialIdeal& ideal, const MinimizeOptions& options) {
  return is_scarf(scarf_basis(ideal, options.limits), minimize(ideal, options).betti);
}

}  // namespace odom
