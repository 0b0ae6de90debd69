#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "odom/errors.hpp"
#include "odom/taylor.hpp"

namespace odom {

// A free complex obtained from the Taylor resolution by consecutive
// cancellations. Basis labels are Taylor symbols; matrices store scalars
// only, the monomial part of entry (row, column) being
// mdeg(column) / mdeg(row).
template <class Field>
class FreeComplex {
 public:
  using Scalar = typename Field::Scalar;

  struct Pivot {
    std::size_t degree = 0;  // the matrix F_degree -> F_{degree-1}
    GenSet row = 0;
    GenSet column = 0;
    bool operator==(const Pivot&) const = default;
  };

  // Matrix of f_s: columns are labels of degree s, rows labels of degree s-1.
  struct Matrix {
    std::map<GenSet, std::map<GenSet, Scalar>> columns;
    std::map<GenSet, std::set<GenSet>> rows;
  };

  FreeComplex(std::shared_ptr<const TaylorComplex> taylor, Field field)
      : taylor_(std::move(taylor)), field_(field) {
    const std::size_t q = taylor_->q();
    strata_.resize(q + 1);
    matrices_.resize(q + 1);
    for (std::size_t s = 0; s <= q; ++s) {
      strata_[s].insert(taylor_->stratum(s).begin(), taylor_->stratum(s).end());
    }
    for (std::size_t s = 1; s <= q; ++s) {
      for (GenSet sigma : taylor_->stratum(s)) {
        for (const auto& e : taylor_->boundary(sigma)) {
          set(matrices_[s], e.row, sigma, field_.from_int(e.sign));
        }
      }
    }
  }

  const TaylorComplex& taylor() const { return *taylor_; }
  const Field& field() const { return field_; }
  std::size_t length() const { return strata_.size() - 1; }
  const std::set<GenSet>& stratum(std::size_t s) const { return strata_.at(s); }
  const Matrix& matrix(std::size_t s) const { return matrices_.at(s); }
  std::size_t cancellations() const { return cancellations_; }

  std::optional<Scalar> entry(std::size_t s, GenSet row, GenSet column) const {
    const auto& cols = matrices_.at(s).columns;
    auto c = cols.find(column);
    if (c == cols.end()) return std::nullopt;
    auto r = c->second.find(row);
    if (r == c->second.end()) return std::nullopt;
    return r->second;
  }

  // Nonzero scalar and equal multidegrees, i.e. a unit of S.
  bool is_invertible(std::size_t s, GenSet row, GenSet column) const {
    auto value = entry(s, row, column);
    return value && !field_.is_zero(*value) && taylor_->mdeg(row) == taylor_->mdeg(column);
  }

  // First invertible entry by ascending degree, column, row.
  std::optional<Pivot> find_invertible_entry() const {
    for (std::size_t s = 1; s < matrices_.size(); ++s) {
      for (const auto& [column, rows] : matrices_[s].columns) {
        if (auto row = first_invertible_row(s, column, rows)) return Pivot{s, *row, column};
      }
    }
    return std::nullopt;
  }

  std::vector<Pivot> invertible_entries() const {
    std::vector<Pivot> out;
    for (std::size_t s = 1; s < matrices_.size(); ++s) {
      for (const auto& [column, rows] : matrices_[s].columns) {
        for (const auto& [row, value] : rows) {
          if (!field_.is_zero(value) && taylor_->mdeg(row) == taylor_->mdeg(column)) {
            out.push_back({s, row, column});
          }
        }
      }
    }
    return out;
  }

  // Removes the pair (column, row) and updates the remaining entries of the
  // same matrix by a(t, c) -= a(t, pivot col) * a(pivot row, c) / pivot.
  // The neighbouring matrices only lose the corresponding row or column.
  // Returns the columns of matrix s whose entries changed.
  std::vector<GenSet> cancel(const Pivot& pivot) {
    if (pivot.degree == 0 || pivot.degree >= matrices_.size() ||
        !is_invertible(pivot.degree, pivot.row, pivot.column)) {
      throw ArgumentError("cancellation pivot is not an invertible entry");
    }
    Matrix& m = matrices_[pivot.degree];
    const Scalar p = *entry(pivot.degree, pivot.row, pivot.column);

    // Snapshot the pivot column and row before mutating.
    std::vector<std::pair<GenSet, Scalar>> col_entries;
    for (const auto& [row, value] : m.columns.at(pivot.column)) {
      if (row != pivot.row) col_entries.emplace_back(row, value);
    }
    std::vector<std::pair<GenSet, Scalar>> row_entries;
    for (GenSet column : m.rows.at(pivot.row)) {
      if (column != pivot.column) row_entries.emplace_back(column, *entry(pivot.degree, pivot.row, column));
    }

    std::vector<GenSet> touched;
    for (const auto& [column, a_rc] : row_entries) {
      const Scalar factor = field_.div(a_rc, p);
      for (const auto& [row, a_tp] : col_entries) {
        Scalar current = entry(pivot.degree, row, column).value_or(field_.from_int(0));
        set(m, row, column, field_.sub(current, field_.mul(a_tp, factor)));
      }
      touched.push_back(column);
    }

    erase_column(m, pivot.column);
    erase_row(m, pivot.row);
    if (pivot.degree + 1 < matrices_.size()) erase_row(matrices_[pivot.degree + 1], pivot.column);
    if (pivot.degree >= 2) erase_column(matrices_[pivot.degree - 1], pivot.row);
    strata_[pivot.degree].erase(pivot.column);
    strata_[pivot.degree - 1].erase(pivot.row);
    ++cancellations_;
    return touched;
  }

  // Cancels in canonical scan order until no invertible entry is left.
  // Cancelling in matrix s never creates invertible entries in matrices
  // below s, so degrees are finished one at a time; inside a degree only
  // columns touched by an update need to be looked at again.
  void minimize_canonical(bool check_each_step = false) {
    for (std::size_t s = 1; s < matrices_.size(); ++s) {
      std::set<GenSet> pending;
      for (const auto& [column, rows] : matrices_[s].columns) pending.insert(column);
      while (!pending.empty()) {
        GenSet column = *pending.begin();
        auto it = matrices_[s].columns.find(column);
        std::optional<GenSet> row;
        if (it != matrices_[s].columns.end()) row = first_invertible_row(s, column, it->second);
        if (!row) {
          pending.erase(pending.begin());
          continue;
        }
        for (GenSet c : cancel({s, *row, column})) pending.insert(c);
        pending.erase(column);
        if (check_each_step) check_invariants();
      }
    }
  }

  // Cancels a uniformly chosen invertible entry at every step.
  void minimize_random(std::uint64_t seed, bool check_each_step = false) {
    std::mt19937_64 rng(seed);
    while (true) {
      auto options = invertible_entries();
      if (options.empty()) break;
      std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
      cancel(options[pick(rng)]);
      if (check_each_step) check_invariants();
    }
  }

  bool is_minimal() const { return !find_invertible_entry().has_value(); }

  // f_{s-1} o f_s = 0. The monomial part of every summand contributing to
  // entry (rho, sigma) of the product is mdeg(sigma) / mdeg(rho), so it
  // suffices to multiply the scalar matrices.
  bool d_squared_is_zero() const {
    for (std::size_t s = 2; s < matrices_.size(); ++s) {
      const Matrix& upper = matrices_[s];
      const Matrix& lower = matrices_[s - 1];
      for (const auto& [sigma, rows] : upper.columns) {
        std::map<GenSet, Scalar> product;
        for (const auto& [tau, a] : rows) {
          auto lc = lower.columns.find(tau);
          if (lc == lower.columns.end()) continue;
          for (const auto& [rho, b] : lc->second) {
            auto [it, fresh] = product.try_emplace(rho, field_.from_int(0));
            it->second = field_.add(it->second, field_.mul(b, a));
          }
        }
        for (const auto& [rho, value] : product) {
          if (!field_.is_zero(value)) return false;
        }
      }
    }
    return true;
  }

  // Nonzero entries only where mdeg(row) divides mdeg(column), and only
  // between live labels.
  bool is_multihomogeneous() const {
    for (std::size_t s = 1; s < matrices_.size(); ++s) {
      for (const auto& [column, rows] : matrices_[s].columns) {
        if (!strata_[s].count(column)) return false;
        for (const auto& [row, value] : rows) {
          if (!strata_[s - 1].count(row)) return false;
          if (!divides(taylor_->mdeg(row), taylor_->mdeg(column))) return false;
        }
      }
    }
    return true;
  }

  void check_invariants() const {
    if (!is_multihomogeneous()) throw InvariantViolation("complex lost multihomogeneity");
    if (!d_squared_is_zero()) throw InvariantViolation("consecutive differentials do not compose to zero");
  }

 private:
  std::optional<GenSet> first_invertible_row(std::size_t, GenSet column,
                                             const std::map<GenSet, Scalar>& rows) const {
    const Monomial& target = taylor_->mdeg(column);
    for (const auto& [row, value] : rows) {
      if (!field_.is_zero(value) && taylor_->mdeg(row) == target) return row;
    }
    return std::nullopt;
  }

  void set(Matrix& m, GenSet row, GenSet column, Scalar value) {
    if (field_.is_zero(value)) {
      auto c = m.columns.find(column);
      if (c != m.columns.end()) {
        c->second.erase(row);
        if (c->second.empty()) m.columns.erase(c);
      }
      auto r = m.rows.find(row);
      if (r != m.rows.end()) {
        r->second.erase(column);
        if (r->second.empty()) m.rows.erase(r);
      }
      return;
    }
    m.columns[column][row] = std::move(value);
    m.rows[row].insert(column);
  }

  static void erase_column(Matrix& m, GenSet column) {
    auto c = m.columns.find(column);
    if (c == m.columns.end()) return;
    for (const auto& [row, value] : c->second) {
      auto r = m.rows.find(row);
      r->second.erase(column);
      if (r->second.empty()) m.rows.erase(r);
    }
    m.columns.erase(c);
  }

  static void erase_row(Matrix& m, GenSet row) {
    auto r = m.rows.find(row);
    if (r == m.rows.end()) return;
    for (GenSet column : r->second) {
      auto c = m.columns.find(column);
      c->second.erase(row);
      if (c->second.empty()) m.columns.erase(c);
    }
    m.rows.erase(r);
  }

  std::shared_ptr<const TaylorComplex> taylor_;
  Field field_;
  std::vector<std::set<GenSet>> strata_;
  std::vector<Matrix> matrices_;  // index 0 unused
  std::size_t cancellations_ = 0;
};

}  // namespace odom
