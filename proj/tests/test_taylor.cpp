#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "odom/dominance.hpp"
#include "odom/errors.hpp"
#include "odom/ideal_text.hpp"
#include "odom/resolution.hpp"
#include "odom/taylor.hpp"
#include "odom/verify.hpp"
#include "oracles.hpp"

using namespace odom;

namespace {

std::string symbol_text(const MonomialIdeal& I, GenSet s) {
  std::string out = "[";
  for (auto g : members(s)) out += (out.size() > 1 ? "," : "") + render(I.generator(g), I.table());
  return out + "]";
}

}  // namespace

TEST(Taylor, TwoVariableDifferential) {
  auto I = oracle::ideal("a, b");
  TaylorComplex T(I);
  ASSERT_EQ(T.symbol_count(), 4U);
  auto d2 = T.boundary(0b11);
  ASSERT_EQ(d2.size(), 2U);
  // f2([a,b]) = a*[b] - b*[a]
  for (const auto& e : d2) {
    if (e.row == 0b01) {
      EXPECT_EQ(e.sign, -1);
      EXPECT_EQ(render(T.entry_monomial(e.row, 0b11), I.table()), "b");
    } else {
      EXPECT_EQ(e.row, 0b10U);
      EXPECT_EQ(e.sign, 1);
      EXPECT_EQ(render(T.entry_monomial(e.row, 0b11), I.table()), "a");
    }
  }
  auto d1 = T.boundary(0b01);
  ASSERT_EQ(d1.size(), 1U);
  EXPECT_EQ(d1[0].row, 0U);
  EXPECT_EQ(d1[0].sign, 1);
  EXPECT_EQ(render(T.entry_monomial(0, 0b01), I.table()), "a");
}

TEST(Taylor, SymbolInvariants) {
  auto I = oracle::ideal("a*d, b*d, c*d, d^2");
  TaylorComplex T(I);
  EXPECT_TRUE(T.mdeg(0).is_unit());
  for (GenSet s = 0; s < T.symbol_count(); ++s) {
    auto sym = T.symbol(s);
    EXPECT_EQ(sym.hdeg, static_cast<std::size_t>(popcount(s)));
    EXPECT_EQ(sym.mdeg, I.lcm_of(s));
    for (GenSet t = 0; t < T.symbol_count(); ++t) {
      if ((s & t) == s) {
        EXPECT_TRUE(divides(T.mdeg(s), T.mdeg(t)));
      }
    }
  }
  for (std::size_t s = 0; s <= T.q(); ++s) {
    EXPECT_TRUE(std::is_sorted(T.stratum(s).begin(), T.stratum(s).end()));
  }
}

TEST(Taylor, DistinctMdegsForM2) {
  auto I = oracle::ideal("a*d, b*d, c*d");
  TaylorComplex T(I);
  std::set<Monomial> mdegs;
  for (GenSet s = 0; s < T.symbol_count(); ++s) mdegs.insert(T.mdeg(s));
  EXPECT_EQ(mdegs.size(), 8U);
}

TEST(Taylor, BoundarySquaresToZero) {
  FuzzParams p;
  p.n_max = 4;
  p.q_max = 7;
  p.exp_max = 3;
  for (std::uint64_t t = 0; t < 100; ++t) {
    auto T = build_taylor(random_ideal(p, t));
    EXPECT_TRUE(taylor_boundary_squares_to_zero(*T));
  }
}

TEST(Taylor, Guard) {
  auto I = oracle::ideal("a, b, c, d, e, f, g, h, i, j, k, l, m, n, o");
  EXPECT_THROW(build_taylor(I), TaylorTooLarge);
  Limits narrow = default_limits();
  narrow.max_taylor_generators = 2;
  EXPECT_THROW(build_taylor(oracle::ideal("a, b, c"), narrow), GuardExceeded);
}

TEST(Scarf, Examples) {
  auto I = oracle::ideal("a^2, a*b, b^2");
  auto basis = scarf_basis(I);
  std::vector<std::string> symbols;
  for (auto s : basis.symbols) symbols.push_back(symbol_text(I, s));
  EXPECT_EQ(symbols, (std::vector<std::string>{"[]", "[a^2]", "[a*b]", "[b^2]", "[a^2,a*b]", "[a*b,b^2]"}));
  EXPECT_EQ(basis.ranks, (std::vector<std::size_t>{1, 3, 2}));
  EXPECT_TRUE(is_scarf(I));

  EXPECT_EQ(scarf_basis(oracle::ideal("a")).symbols.size(), 2U);
  EXPECT_EQ(scarf_basis(oracle::ideal("a*d, b*d, c*d")).symbols.size(), 8U);
  EXPECT_TRUE(is_scarf(oracle::ideal("a^2*b, a*b^3*c, b*c^2")));
  EXPECT_FALSE(is_scarf(oracle::ideal("a*b, c*d, a*c, b*d")));
}

TEST(Scarf, MultiplicityTable) {
  auto I = oracle::ideal("a^2, a*b, b^2");
  auto table = mdeg_multiplicity_table(I);
  Monomial top{2, 2};
  EXPECT_EQ(table.at(top), (std::map<std::size_t, std::size_t>{{2, 1}, {3, 1}}));
  for (const auto& [m, counts] : mdeg_multiplicity_table(oracle::ideal("a, b"))) {
    for (const auto& [h, c] : counts) EXPECT_EQ(c, 1U);
  }
  auto J = oracle::ideal("a*d, b*d, c*d, d^2", "a,b,c,d");
  // the full symbol has mdeg abcd^2, so abcd is reached once
  EXPECT_EQ(mdeg_multiplicity_table(J).at(Monomial{1, 1, 1, 1}),
            (std::map<std::size_t, std::size_t>{{3, 1}}));
  EXPECT_EQ(mdeg_multiplicity_table(J).at(Monomial{1, 1, 1, 2}),
            (std::map<std::size_t, std::size_t>{{4, 1}}));
}

TEST(Scarf, RanksBoundedByBetti) {
  FuzzParams p;
  p.n_max = 4;
  p.q_max = 6;
  p.exp_max = 3;
  for (std::uint64_t t = 0; t < 150; ++t) {
    auto I = random_ideal(p, t);
    auto ranks = scarf_basis(I).ranks;
    auto betti = minimize(I).betti;
    for (std::size_t i = 0; i < ranks.size(); ++i) EXPECT_LE(ranks[i], betti.at(i)) << render(I);
  }
}

TEST(Scarf, InvariantUnderGeneratorOrder) {
  FuzzParams p;
  p.n_max = 4;
  p.q_max = 6;
  p.exp_max = 3;
  std::mt19937_64 rng(17);
  for (std::uint64_t t = 0; t < 100; ++t) {
    auto I = random_ideal(p, t);
    auto gens = I.generators();
    std::shuffle(gens.begin(), gens.end(), rng);
    // Scarf ranks recomputed directly on the shuffled generator list
    std::vector<std::size_t> ranks(gens.size() + 1, 0);
    std::map<Monomial, std::size_t> count;
    for (GenSet s = 0; s < (GenSet{1} << gens.size()); ++s) {
      Monomial m(I.n());
      for (auto g : members(s)) m = lcm(m, gens[g]);
      ++count[m];
    }
    for (GenSet s = 0; s < (GenSet{1} << gens.size()); ++s) {
      Monomial m(I.n());
      for (auto g : members(s)) m = lcm(m, gens[g]);
      if (count[m] == 1) ++ranks[popcount(s)];
    }
    while (ranks.size() > 1 && ranks.back() == 0) ranks.pop_back();
    EXPECT_EQ(scarf_basis(I).ranks, ranks) << render(I);
  }
}

TEST(Scarf, DominantIdealsAreFullTaylor) {
  FuzzParams p;
  p.n_max = 4;
  p.q_max = 5;
  p.exp_max = 3;
  for (std::uint64_t t = 0; t < 200; ++t) {
    auto I = random_ideal(p, t);
    if (!is_dominant_set(I, (GenSet{1} << I.q()) - 1)) continue;
    EXPECT_EQ(scarf_basis(I).symbols.size(), std::size_t{1} << I.q());
    EXPECT_TRUE(is_taylor_minimal(I));
  }
}
