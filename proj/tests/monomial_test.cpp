#include <random>

#include <gtest/gtest.h>

#include "support.hpp"

using namespace posets;
using namespace posets::testing;

namespace {

MonomialIdeal random_ideal(std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> nvars(1, 5), ngens(1, 6);
  std::uniform_int_distribution<Exponent> e(0, 3);
  const std::size_t n = nvars(rng);
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < n; ++i) vars.push_back(std::string(1, static_cast<char>('a' + i)));
  std::vector<Monomial> gens;
  for (std::size_t k = ngens(rng); k > 0; --k) {
    Monomial m{std::vector<Exponent>(n)};
    for (auto& x : m.exponents) x = e(rng);
    if (!m.is_one()) gens.push_back(m);
  }
  if (gens.empty()) gens.push_back(Monomial{std::vector<Exponent>(n, 1)});
  return MonomialIdeal(vars, gens);
}

}  // namespace

TEST(Monomial, LcmDividesAndFormatting) {
  Monomial a{{3, 2, 1, 0}}, b{{2, 0, 1, 1}};
  EXPECT_EQ(lcm(a, b), (Monomial{{3, 2, 1, 1}}));
  EXPECT_TRUE(divides(b, lcm(a, b)));
  EXPECT_FALSE(divides(a, b));
  EXPECT_THROW(divides(a, Monomial{{1}}), VariableMismatch);
  const std::vector<std::string> v{"a", "b", "c", "d"};
  EXPECT_EQ(to_string(a, v), "a^3*b^2*c");
  EXPECT_EQ(to_string(Monomial{{0, 0, 0, 0}}, v), "1");
  EXPECT_EQ(a.degree(), 6u);
}

TEST(Ideal, Minimalize) {
  auto m = minimalize({"x"}, {Monomial{{1}}, Monomial{{2}}});
  EXPECT_EQ(m.generators(), std::vector<Monomial>{Monomial{{1}}});
  auto xy = minimalize({"x", "y"}, {Monomial{{1, 0}}, Monomial{{0, 1}}});
  EXPECT_EQ(xy.generators().size(), 2u);
  EXPECT_EQ(five_generator_ideal().generators().size(), 5u);
  // pairwise: no generator divides another
  const auto ideal = five_generator_ideal();
  const auto& g = ideal.generators();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (i != j) {
        EXPECT_FALSE(divides(g[i], g[j]));
      }
}

TEST(LcmLattice, FiveGeneratorIdeal) {
  auto lat = lcm_lattice(five_generator_ideal());
  EXPECT_EQ(lat.poset.size(), 11u);
  EXPECT_EQ(covering_relations(lat.poset).size(), 16u);
  EXPECT_EQ(lat.top, "a^3*b^2*c^2*d");
  EXPECT_EQ(lat.bottom, "1");
  std::set<Label> expected;
  for (const auto& m : subset_lcms(five_generator_ideal())) expected.insert(five_generator_ideal().to_string(m));
  EXPECT_EQ(std::set<Label>(lat.poset.elements().begin(), lat.poset.elements().end()), expected);
}

TEST(LcmLattice, SmallCases) {
  auto principal = lcm_lattice(MonomialIdeal({"x"}, {Monomial{{2}}}));
  EXPECT_EQ(principal.poset.elements(), (std::vector<Label>{"1", "x^2"}));
  auto xy = lcm_lattice(MonomialIdeal({"x", "y"}, {Monomial{{1, 0}}, Monomial{{0, 1}}}));
  EXPECT_EQ(covering_relations(xy.poset).size(), 4u);
  EXPECT_THROW(lcm_lattice(MonomialIdeal({"x"}, {})), DomainError);
}

class LcmProperty : public ::testing::TestWithParam<unsigned> {};

TEST_P(LcmProperty, AtomicLatticeMatchingSubsetLcms) {
  std::mt19937 rng(GetParam());
  const auto ideal = random_ideal(rng);
  const auto lat = lcm_lattice(ideal);
  EXPECT_TRUE(is_lattice(lat.poset));
  EXPECT_EQ(lat.poset.size(), subset_lcms(ideal).size());
  // atoms are the generators
  std::set<Label> atoms, gens;
  for (const auto& c : covering_relations(lat.poset))
    if (c.lower == lat.bottom) atoms.insert(c.upper);
  for (const auto& g : ideal.generators()) gens.insert(ideal.to_string(g));
  EXPECT_EQ(atoms, gens);
  // each element is the lcm of the atoms below it
  for (const auto& x : lat.poset.elements()) {
    Monomial acc{std::vector<Exponent>(ideal.variables().size(), 0)};
    for (const auto& g : ideal.generators())
      if (divides(g, lat.monomial(x))) acc = lcm(acc, g);
    EXPECT_EQ(acc, lat.monomial(x)) << x;
  }
  // Euler consistency on every interval, and total Betti numbers agree with Koszul complexes
  for (const auto& b : lat.poset.elements())
    if (b != lat.bottom) {
      EXPECT_TRUE(chain_complex_consistent(order_complex(open_interval(lat.poset, lat.bottom, b))));
    }
  EXPECT_EQ(betti_numbers(lat), koszul_betti(ideal));
  EXPECT_EQ(total_betti(ideal, 1), ideal.generators().size());
}

INSTANTIATE_TEST_SUITE_P(Seeds, LcmProperty, ::testing::Range(0u, 60u));

TEST(MultigradedBetti, FiveGeneratorIdeal) {
  auto lat = lcm_lattice(five_generator_ideal());
  for (int i = 1; i <= 3; ++i) EXPECT_EQ(multigraded_betti(lat, Monomial{{2, 2, 2, 1}}, i), 0u);
  EXPECT_EQ(multigraded_betti(lat, Monomial{{3, 2, 1, 1}}, 2), 2u);
  const auto ideal = five_generator_ideal();
  for (const auto& g : ideal.generators()) EXPECT_EQ(multigraded_betti(lat, g, 1), 1u);
  EXPECT_EQ(multigraded_betti(lat, Monomial{{0, 0, 0, 0}}, 1), 0u);
  EXPECT_THROW(multigraded_betti(lat, Monomial{{1, 1, 1, 1}}, 1), NotInLattice);
  EXPECT_THROW(multigraded_betti(lat, Monomial{{3, 2, 1, 1}}, 0), DomainError);
  EXPECT_EQ(betti_numbers(lat), koszul_betti(five_generator_ideal()));
}

TEST(TotalBetti, TwoVariables) {
  MonomialIdeal xy({"x", "y"}, {Monomial{{1, 0}}, Monomial{{0, 1}}});
  EXPECT_EQ(total_betti(xy, 1), 2u);
  EXPECT_EQ(total_betti(xy, 2), 1u);
  EXPECT_EQ(total_betti(xy, 3), 0u);
  EXPECT_EQ(koszul_betti(xy), (std::vector<std::size_t>{1, 2, 1}));
}

TEST(Divisors, Examples) {
  EXPECT_EQ(divisor_poset(12).size(), 6u);
  EXPECT_EQ(divisor_poset(1).size(), 1u);
  EXPECT_EQ(covering_relations(divisor_poset(13)).size(), 1u);
  EXPECT_THROW(divisor_poset(0), DomainError);
}

TEST(Hibi, DivisorsOfTwelve) {
  auto h = hibi_ideal(divisor_poset(12));
  EXPECT_EQ(h.generators().size(), 10u);
  for (const auto& g : h.generators()) EXPECT_EQ(g.degree(), 6u);
  EXPECT_EQ(total_betti(h, 1), 10u);
  EXPECT_EQ(total_betti(h, 2), 12u);
  EXPECT_EQ(total_betti(h, 3), 3u);
  EXPECT_EQ(total_betti(h, 4), 0u);
}

TEST(Hibi, AntichainOfTwoAndEmpty) {
  auto h = hibi_ideal(antichain(2));
  std::set<Label> got;
  for (const auto& g : h.generators()) got.insert(h.to_string(g));
  EXPECT_EQ(got, (std::set<Label>{"y0*y1", "x0*y1", "x1*y0", "x0*x1"}));
  auto e = hibi_ideal(Poset{});
  ASSERT_EQ(e.generators().size(), 1u);
  EXPECT_TRUE(e.generators().front().is_one());
}

TEST(Hibi, GeneratorCountMatchesDistributiveLattice) {
  std::mt19937 rng(3);
  for (std::size_t n = 0; n <= 8; ++n) {
    auto p = random_poset(rng, n, 0.3);
    EXPECT_EQ(hibi_ideal(p).generators().size(), distributive_lattice(p).size());
  }
}

TEST(Hibi, RoutesAgreeOnAllSmallPosets) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& p : canonical_posets(n)) {
      auto [covers, homology] = hibi_routes(p);
      EXPECT_EQ(covers, homology);
      // projective dimension equals the Dilworth number
      EXPECT_EQ(covers.size(), dilworth_number(p) + 1);
    }
}
