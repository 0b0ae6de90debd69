#include "odom/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <unordered_set>

#include "odom/errors.hpp"

namespace odom {

std::vector<std::size_t> members(std::uint64_t mask) {
  std::vector<std::size_t> out;
  out.reserve(popcount(mask));
  while (mask != 0) {
    out.push_back(static_cast<std::size_t>(__builtin_ctzll(mask)));
    mask &= mask - 1;
  }
  return out;
}

namespace {

bool is_identifier(const std::string& name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

void require_same_length(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) {
    throw StructuralError("monomials over different variable tables (" +
                          std::to_string(a.size()) + " vs " + std::to_string(b.size()) +
                          " variables)");
  }
}

}  // namespace

VariableTable::VariableTable(std::vector<std::string> names)
    : VariableTable(std::move(names), {}) {}

VariableTable::VariableTable(std::vector<std::string> names,
                             std::vector<std::optional<Origin>> origins)
    : names_(std::move(names)), origins_(std::move(origins)) {
  if (names_.size() > kMaxVariables) {
    throw ArgumentError("at most " + std::to_string(kMaxVariables) +
                        " variables are supported, got " + std::to_string(names_.size()));
  }
  std::unordered_set<std::string> seen;
  for (const auto& name : names_) {
    if (!is_identifier(name)) throw ArgumentError("invalid variable name '" + name + "'");
    if (!seen.insert(name).second) throw ArgumentError("duplicate variable '" + name + "'");
  }
  if (origins_.empty()) origins_.resize(names_.size());
  if (origins_.size() != names_.size()) {
    throw ArgumentError("variable origins do not match the variable names");
  }
}

std::optional<VarIndex> VariableTable::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<VarIndex>(it - names_.begin());
}

bool VariableTable::is_polarized() const {
  return !origins_.empty() &&
         std::all_of(origins_.begin(), origins_.end(), [](const auto& o) { return o.has_value(); });
}

bool Monomial::is_unit() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](Exponent e) { return e == 0; });
}

std::uint64_t Monomial::degree() const {
  return std::accumulate(exponents_.begin(), exponents_.end(), std::uint64_t{0});
}

VarSet Monomial::support_mask() const {
  VarSet mask = 0;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] != 0) mask |= bit(i);
  }
  return mask;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_length(a, b);
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

bool divides(const Monomial& a, const Monomial& b) {
  require_same_length(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

bool strongly_divides(const Monomial& a, const Monomial& b) {
  require_same_length(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && a[i] >= b[i]) return false;
  }
  return true;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  if (!divides(a, b)) throw ArgumentError("quotient of non-dividing monomials");
  Monomial out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = b[i] - a[i];
  return out;
}

std::vector<VarIndex> support(const Monomial& m) { return members(m.support_mask()); }

bool canonical_before(const Monomial& a, const Monomial& b) { return a > b; }

Monomial MonomialIdeal::lcm_of(GenSet subset) const {
  Monomial out(n());
  for (std::size_t i : members(subset)) {
    const auto& g = generators_.at(i);
    for (std::size_t v = 0; v < out.size(); ++v) out[v] = std::max(out[v], g[v]);
  }
  return out;
}

Monomial MonomialIdeal::lcm_all() const {
  GenSet all = q() == 64 ? ~GenSet{0} : bit(q()) - 1;
  return lcm_of(all);
}

VarSet MonomialIdeal::used_variables() const {
  VarSet used = 0;
  for (VarSet s : supports_) used |= s;
  return used;
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(generators_.begin(), generators_.end(), [](const Monomial& g) {
    auto e = g.exponents();
    return std::all_of(e.begin(), e.end(), [](Exponent x) { return x <= 1; });
  });
}

MonomialIdeal minimalize(const VariableTable& table, std::span<const Monomial> monomials) {
  return minimalize(std::make_shared<const VariableTable>(table), monomials);
}

MonomialIdeal minimalize(std::shared_ptr<const VariableTable> table,
                         std::span<const Monomial> monomials) {
  std::vector<Monomial> candidates;
  for (const auto& m : monomials) {
    if (m.size() != table->size()) {
      throw StructuralError("monomial has " + std::to_string(m.size()) +
                            " exponents but the table has " + std::to_string(table->size()) +
                            " variables");
    }
    if (!m.is_unit()) candidates.push_back(m);
  }
  if (candidates.empty()) throw InvalidIdeal("ideal has no non-unit generator");

  // Sorted by total degree, every divisor of a monomial precedes it.
  std::sort(candidates.begin(), candidates.end(), [](const Monomial& a, const Monomial& b) {
    auto da = a.degree(), db = b.degree();
    return da != db ? da < db : a < b;
  });
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::vector<Monomial> kept;
  for (auto& m : candidates) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](const Monomial& g) { return divides(g, m); });
    if (!redundant) kept.push_back(std::move(m));
  }
  std::sort(kept.begin(), kept.end(), canonical_before);

  MonomialIdeal ideal;
  ideal.table_ = std::move(table);
  ideal.generators_ = std::move(kept);
  for (const auto& g : ideal.generators_) ideal.supports_.push_back(g.support_mask());
  return ideal;
}

MonomialIdeal polarize(const MonomialIdeal& ideal) {
  const Monomial top = ideal.lcm_all();
  std::vector<std::string> names;
  std::vector<std::optional<VariableTable::Origin>> origins;
  std::vector<std::size_t> first_copy(ideal.n(), 0);
  for (VarIndex i = 0; i < ideal.n(); ++i) {
    first_copy[i] = names.size();
    for (Exponent c = 1; c <= top[i]; ++c) {
      names.push_back(ideal.table().name(i) + "_" + std::to_string(c));
      origins.push_back(VariableTable::Origin{i, c});
    }
  }
  auto table = std::make_shared<const VariableTable>(std::move(names), std::move(origins));

  std::vector<Monomial> polarized;
  polarized.reserve(ideal.q());
  for (const auto& g : ideal.generators()) {
    Monomial p(table->size());
    for (VarIndex i = 0; i < ideal.n(); ++i) {
      for (Exponent c = 0; c < g[i]; ++c) p[first_copy[i] + c] = 1;
    }
    polarized.push_back(std::move(p));
  }
  return minimalize(std::move(table), polarized);
}

}  // namespace odom
