#include <gtest/gtest.h>

#include <random>

#include "odom/errors.hpp"
#include "odom/ideal_text.hpp"
#include "odom/monomial.hpp"
#include "oracles.hpp"

using namespace odom;

namespace {

Monomial random_monomial(std::mt19937_64& rng, std::size_t n, std::uint32_t max_exp) {
  std::uniform_int_distribution<std::uint32_t> d(0, max_exp);
  Monomial m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = d(rng);
  return m;
}

}  // namespace

TEST(Monomial, LcmExamples) {
  EXPECT_EQ(lcm(Monomial{2, 1, 0}, Monomial{1, 3, 1}), (Monomial{2, 3, 1}));
  EXPECT_EQ(lcm(Monomial{0, 0}, Monomial{0, 4}), (Monomial{0, 4}));
  EXPECT_THROW(lcm(Monomial{1}, Monomial{1, 0}), StructuralError);
}

TEST(Monomial, LcmLaws) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 500; ++t) {
    auto a = random_monomial(rng, 4, 3), b = random_monomial(rng, 4, 3), c = random_monomial(rng, 4, 3);
    EXPECT_EQ(lcm(a, b), lcm(b, a));
    EXPECT_EQ(lcm(lcm(a, b), c), lcm(a, lcm(b, c)));
    EXPECT_EQ(lcm(a, a), a);
    EXPECT_TRUE(divides(a, lcm(a, b)));
    EXPECT_EQ(divides(a, b), lcm(a, b) == b);
    if (divides(a, b)) {
      auto quot = quotient(b, a);
      for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(quot[i] + a[i], b[i]);
    }
  }
}

TEST(Monomial, StrongDivisibility) {
  // a*b strongly divides a^2*b^2*c but not a^2*b
  EXPECT_TRUE(strongly_divides(Monomial{1, 1, 0}, Monomial{2, 2, 1}));
  EXPECT_FALSE(strongly_divides(Monomial{1, 1, 0}, Monomial{2, 1, 0}));
  EXPECT_TRUE(strongly_divides(Monomial{0, 0, 0}, Monomial{0, 0, 0}));
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    auto a = random_monomial(rng, 3, 3), b = random_monomial(rng, 3, 3);
    if (strongly_divides(a, b)) {
      EXPECT_TRUE(divides(a, b));
    }
  }
}

TEST(Monomial, DegreeAndSupport) {
  Monomial m{2, 0, 3};
  EXPECT_EQ(m.degree(), 5U);
  EXPECT_EQ(m.support_mask(), 0b101U);
  EXPECT_EQ(support(m), (std::vector<VarIndex>{0, 2}));
  EXPECT_TRUE(Monomial(3).is_unit());
}

TEST(VariableTable, RejectsBadNames) {
  EXPECT_THROW(VariableTable({"a", "a"}), Error);
  EXPECT_THROW(VariableTable({"1x"}), Error);
  VariableTable t{"a", "b"};
  EXPECT_EQ(t.find("b"), VarIndex{1});
  EXPECT_FALSE(t.find("c").has_value());
}

TEST(Minimalize, DropsRedundantGenerators) {
  VariableTable t{"a", "b"};
  std::vector<Monomial> gens{{1, 0}, {1, 1}, {1, 0}, {0, 0}, {0, 2}};
  auto I = minimalize(t, gens);
  EXPECT_EQ(I.q(), 2U);
  EXPECT_EQ(render(I), "a, b^2");
  std::vector<Monomial> units{{0, 0}};
  EXPECT_THROW(minimalize(t, units), InvalidIdeal);
}

TEST(Minimalize, IdempotentAntichain) {
  std::mt19937_64 rng(3);
  VariableTable t{"a", "b", "c", "d"};
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Monomial> gens;
    for (int k = 0; k < 6; ++k) gens.push_back(random_monomial(rng, 4, 3));
    bool has_non_unit = std::any_of(gens.begin(), gens.end(), [](const Monomial& m) { return !m.is_unit(); });
    if (!has_non_unit) continue;
    auto I = minimalize(t, gens);
    for (std::size_t i = 0; i < I.q(); ++i) {
      for (std::size_t j = 0; j < I.q(); ++j) {
        if (i != j) {
          EXPECT_FALSE(divides(I.generator(i), I.generator(j)));
        }
      }
    }
    // every input non-unit is a multiple of some generator
    for (const auto& g : gens) {
      if (g.is_unit()) continue;
      EXPECT_TRUE(std::any_of(I.generators().begin(), I.generators().end(),
                              [&](const Monomial& m) { return divides(m, g); }));
    }
    EXPECT_EQ(minimalize(t, I.generators()), I);
  }
}

TEST(Minimalize, CanonicalOrder) {
  auto I = oracle::ideal("d^2*f^3, c*e^2, b^3*f, a^2*e", "a,b,c,d,e,f");
  EXPECT_EQ(render(I), "a^2*e, b^3*f, c*e^2, d^2*f^3");
  EXPECT_EQ(render(oracle::ideal("c*d, a*d, b*d", "a,b,c,d")), "a*d, b*d, c*d");
}

TEST(Polarize, ExampleAndProperties) {
  auto I = oracle::ideal("a*d, b*d, c*d, d^2", "a,b,c,d");
  auto P = polarize(I);
  EXPECT_EQ(P.table().names(), (std::vector<std::string>{"a_1", "b_1", "c_1", "d_1", "d_2"}));
  EXPECT_EQ(render(P), "a_1*d_1, b_1*d_1, c_1*d_1, d_1*d_2");
  EXPECT_TRUE(P.is_squarefree());
  EXPECT_TRUE(P.table().is_polarized());
  EXPECT_EQ(P.table().origin(4)->base, 3U);
  EXPECT_EQ(P.table().origin(4)->copy, 2U);
  EXPECT_EQ(polarize(P).generators(), P.generators());
}

TEST(Polarize, PreservesShape) {
  std::mt19937_64 rng(5);
  VariableTable t{"a", "b", "c"};
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Monomial> gens;
    for (int k = 0; k < 4; ++k) gens.push_back(random_monomial(rng, 3, 3));
    if (std::all_of(gens.begin(), gens.end(), [](const Monomial& m) { return m.is_unit(); })) continue;
    auto I = minimalize(t, gens);
    auto P = polarize(I);
    EXPECT_EQ(P.q(), I.q());
    std::set<std::uint64_t> degrees, pol_degrees;
    for (const auto& g : I.generators()) degrees.insert(g.degree());
    for (const auto& g : P.generators()) pol_degrees.insert(g.degree());
    EXPECT_EQ(degrees, pol_degrees);
  }
}

TEST(Parse, ExamplesAndWarnings) {
  auto parsed = parse_ideal("a*d, b*d, c*d", parse_variable_list("a,b,c,d"));
  EXPECT_FALSE(parsed.reduced);
  EXPECT_EQ(parsed.ideal.n(), 4U);
  EXPECT_EQ(parsed.ideal.q(), 3U);

  auto reduced = parse_ideal("a, a*b");
  EXPECT_TRUE(reduced.reduced);
  EXPECT_EQ(render(reduced.ideal), "a");
  EXPECT_EQ(reduced.ideal.n(), 2U);

  auto inferred = parse_ideal(" a^2 * e ,b^3*f,c*e^2,d^2*f^3 ");
  EXPECT_EQ(inferred.ideal.table().names(), (std::vector<std::string>{"a", "e", "b", "f", "c", "d"}));

  auto with_unused = parse_ideal("a", parse_variable_list("a,b,c"));
  EXPECT_EQ(with_unused.ideal.n(), 3U);
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_ideal(""), ParseError);
  EXPECT_THROW(parse_ideal("a^"), ParseError);
  EXPECT_THROW(parse_ideal("a^0"), ParseError);
  EXPECT_THROW(parse_ideal("a**b"), ParseError);
  EXPECT_THROW(parse_ideal("a,,b"), ParseError);
  EXPECT_THROW(parse_ideal("a*z", parse_variable_list("a,b")), ParseError);
  EXPECT_THROW(parse_ideal("1"), ParseError);
  try {
    parse_ideal("a*b, c^x");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 7U);
  }
}

TEST(Parse, RenderRoundTrip) {
  std::mt19937_64 rng(13);
  auto table = std::make_shared<const VariableTable>(std::vector<std::string>{"x", "y", "zz", "w1"});
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Monomial> gens;
    for (int k = 0; k < 5; ++k) gens.push_back(random_monomial(rng, 4, 4));
    if (std::all_of(gens.begin(), gens.end(), [](const Monomial& m) { return m.is_unit(); })) continue;
    auto I = minimalize(table, gens);
    auto again = parse_ideal(render(I), table->names());
    EXPECT_FALSE(again.reduced);
    EXPECT_EQ(again.ideal, I);
  }
}
