#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace odom {

using VarIndex = std::size_t;
using Exponent = std::uint32_t;

// Bitmask over variable indices of one table. Tables hold at most 64
// variables.
using VarSet = std::uint64_t;
// Bitmask over generator indices of one ideal.
using GenSet = std::uint64_t;

inline constexpr std::size_t kMaxVariables = 64;

inline int popcount(std::uint64_t mask) { return __builtin_popcountll(mask); }
inline bool contains(std::uint64_t mask, std::size_t i) { return (mask >> i) & 1U; }
inline std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

// Ordered indices of the set bits.
std::vector<std::size_t> members(std::uint64_t mask);

class VariableTable {
 public:
  // Where a polarized variable comes from: x_{base, copy}, copy >= 1.
  struct Origin {
    VarIndex base;
    Exponent copy;
    bool operator==(const Origin&) const = default;
  };

  VariableTable() = default;
  explicit VariableTable(std::vector<std::string> names);
  VariableTable(std::initializer_list<std::string> names)
      : VariableTable(std::vector<std::string>(names)) {}
  VariableTable(std::vector<std::string> names, std::vector<std::optional<Origin>> origins);

  std::size_t size() const { return names_.size(); }
  const std::string& name(VarIndex i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<VarIndex> find(std::string_view name) const;

  // Only set on tables produced by polarize().
  const std::optional<Origin>& origin(VarIndex i) const { return origins_.at(i); }
  bool is_polarized() const;

  bool operator==(const VariableTable& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::vector<std::optional<Origin>> origins_;
};

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t n) : exponents_(n, 0) {}
  explicit Monomial(std::vector<Exponent> exponents) : exponents_(std::move(exponents)) {}
  Monomial(std::initializer_list<Exponent> exponents) : exponents_(exponents) {}

  std::size_t size() const { return exponents_.size(); }
  Exponent operator[](VarIndex i) const { return exponents_[i]; }
  Exponent& operator[](VarIndex i) { return exponents_[i]; }
  std::span<const Exponent> exponents() const { return exponents_; }

  bool is_unit() const;
  std::uint64_t degree() const;
  VarSet support_mask() const;

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<Exponent> exponents_;
};

Monomial lcm(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);
// a strongly divides b: every exponent of a that is nonzero is strictly
// smaller than the matching exponent of b. The unit strongly divides
// everything.
bool strongly_divides(const Monomial& a, const Monomial& b);
// b / a; requires divides(a, b).
Monomial quotient(const Monomial& b, const Monomial& a);
std::vector<VarIndex> support(const Monomial& m);

// Minimal generating set over a variable table, in canonical order
// (descending lexicographic on exponent vectors).
class MonomialIdeal {
 public:
  const VariableTable& table() const { return *table_; }
  const std::shared_ptr<const VariableTable>& table_ptr() const { return table_; }
  std::size_t n() const { return table_->size(); }
  std::size_t q() const { return generators_.size(); }

  const std::vector<Monomial>& generators() const { return generators_; }
  const Monomial& generator(std::size_t i) const { return generators_.at(i); }
  VarSet support_mask(std::size_t i) const { return supports_.at(i); }
  const std::vector<VarSet>& support_masks() const { return supports_; }

  Monomial lcm_of(GenSet subset) const;
  Monomial lcm_all() const;
  // Variables that occur in some generator.
  VarSet used_variables() const;
  bool is_squarefree() const;

  bool operator==(const MonomialIdeal& other) const {
    return *table_ == *other.table_ && generators_ == other.generators_;
  }

 private:
  friend MonomialIdeal minimalize(const VariableTable&, std::span<const Monomial>);
  friend MonomialIdeal minimalize(std::shared_ptr<const VariableTable>,
                                  std::span<const Monomial>);
  std::shared_ptr<const VariableTable> table_;
  std::vector<Monomial> generators_;
  std::vector<VarSet> supports_;
};

// Drops units, duplicates and every monomial divisible by another one, then
// sorts canonically. Throws InvalidIdeal when nothing non-unit remains.
MonomialIdeal minimalize(const VariableTable& table, std::span<const Monomial> monomials);
MonomialIdeal minimalize(std::shared_ptr<const VariableTable> table,
                         std::span<const Monomial> monomials);

// x_i^k becomes x_{i,1} ... x_{i,k}. The result lives over the table of
// variables that actually occur, named `base_copy`.
MonomialIdeal polarize(const MonomialIdeal& ideal);

bool canonical_before(const Monomial& a, const Monomial& b);

}  // namespace odom
