#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "hvec/groebner.hpp"
#include "hvec/parse.hpp"
#include "oracle.hpp"

using namespace hvec;

namespace {

const Ring R4(4);

Polynomial P(const std::string& s, const Ring& r = R4) { return parse_polynomial(s, r); }

Ideal I_of(std::initializer_list<const char*> gens, const Ring& r = R4) {
  std::vector<Polynomial> ps;
  for (auto g : gens) ps.push_back(P(g, r));
  return Ideal(r, ps);
}

Ideal ex1() {
  return I_of({"x^2*w^2", "x^6", "x^4*y^3 - z*w^6", "w^8", "y^9*w^2", "z^11", "x^2*z^10", "y^12*w",
               "y^12*z", "y^13 - x^3*z^9*w", "x^3*y^12", "y^9*z^10"});
}

Polynomial random_form(std::mt19937_64& rng, const Ring& r, int d, int terms) {
  std::vector<Term> ts;
  auto mons = oracle::monomials(r.nvars, d);
  for (int k = 0; k < terms; ++k)
    ts.push_back({mons[rng() % mons.size()], static_cast<Scalar>(1 + rng() % 100)});
  return Polynomial(r, ts);
}

}  // namespace

TEST(IdealType, Validation) {
  EXPECT_THROW(I_of({"x^2 + y"}), DomainError);
  EXPECT_THROW(Ideal(R4, {Polynomial::constant(R4, 3)}), DomainError);
  EXPECT_THROW(Ideal(R4, {Polynomial(R4)}), DomainError);
  Ideal zero(R4);
  EXPECT_TRUE(zero.is_zero());
  EXPECT_EQ(ex1().generator_degrees(), (std::vector<int>{4, 6, 7, 8, 11, 11, 12, 13, 13, 13, 15, 19}));
}

TEST(Buchberger, Ex1BasisIsReducedAndComplete) {
  auto I = ex1();
  auto gb = buchberger(I);
  EXPECT_TRUE(satisfies_s_pair_criterion(gb));
  EXPECT_TRUE(is_reduced(gb));
  for (const auto& g : I.generators()) EXPECT_TRUE(contains(gb, g));
}

TEST(Buchberger, RandomIdealsSatisfyCriterion) {
  std::mt19937_64 rng(17);
  Ring r(3);
  for (int k = 0; k < 25; ++k) {
    std::vector<Polynomial> gens;
    int n = 2 + static_cast<int>(rng() % 3);
    for (int j = 0; j < n; ++j) gens.push_back(random_form(rng, r, 2 + static_cast<int>(rng() % 3), 3));
    auto gb = buchberger(r, gens);
    EXPECT_TRUE(satisfies_s_pair_criterion(gb));
    EXPECT_TRUE(is_reduced(gb));
    for (const auto& g : gens) EXPECT_TRUE(contains(gb, g));
  }
}

TEST(Buchberger, UnitIdeal) {
  Ring r(2);
  auto gb = buchberger(r, {P("x + 1", r), P("x", r)});
  EXPECT_TRUE(gb.is_unit());
}

TEST(Buchberger, Budgets) {
  GroebnerOptions tight;
  tight.max_reduction_steps = 2;
  EXPECT_THROW(buchberger(ex1(), tight), ResourceError);
  GroebnerOptions small;
  small.max_basis_size = 3;
  try {
    buchberger(ex1(), small);
    FAIL();
  } catch (const ResourceError& e) {
    EXPECT_EQ(e.budget(), "max_basis_size");
  }
}

TEST(Buchberger, OrderIndependentHilbertData) {
  Ring lex(4, FieldSpec{}, MonomialOrder::deglex());
  std::vector<Polynomial> gens;
  auto I = ex1();
  for (const auto& g : I.generators()) gens.push_back(g.in_ring(lex));
  auto a = buchberger(ex1());
  auto b = buchberger(lex, gens);
  EXPECT_TRUE(satisfies_s_pair_criterion(b));
  // same number of standard monomials in each degree
  for (int d = 0; d <= 8; ++d) {
    std::int64_t ca = 0, cb = 0;
    for (const auto& m : oracle::monomials(4, d)) {
      auto lma = a.initial_ideal(), lmb = b.initial_ideal();
      ca += std::none_of(lma.begin(), lma.end(), [&](const Monomial& l) { return l.divides(m); });
      cb += std::none_of(lmb.begin(), lmb.end(), [&](const Monomial& l) { return l.divides(m); });
    }
    EXPECT_EQ(ca, cb) << d;
  }
}

TEST(NormalForm, Idempotent) {
  auto gb = buchberger(ex1());
  std::mt19937_64 rng(2);
  for (int k = 0; k < 30; ++k) {
    auto f = random_form(rng, R4, 3 + static_cast<int>(rng() % 8), 5);
    auto nf = normal_form(f, gb);
    EXPECT_EQ(normal_form(nf, gb), nf);
    EXPECT_TRUE(contains(gb, f - nf));
  }
}

TEST(Membership, PrintedCases) {
  EXPECT_FALSE(ideal_membership(P("x^4*y^3 - z*w^6"), I_of({"x^2"})));
  EXPECT_TRUE(ideal_membership(P("x^2*w^2*z + x^6"), ex1()));
  EXPECT_FALSE(ideal_membership(P("x*w^2"), ex1()));
}

TEST(Membership, CombinationsAreMembers) {
  std::mt19937_64 rng(23);
  auto I = ex1();
  for (int k = 0; k < 10; ++k) {
    Polynomial f(R4);
    int d = 12;
    for (const auto& g : I.generators())
      if (g.degree() <= d) f += g * random_form(rng, R4, d - g.degree(), 2);
    if (f.is_zero()) continue;
    EXPECT_TRUE(ideal_membership(f, I));
  }
}

TEST(Colon, SmallCases) {
  auto c = colon(I_of({"x^2", "x*y"}), P("x"));
  ASSERT_FALSE(c.unit());
  EXPECT_EQ(c.ideal->size(), 2u);
  EXPECT_TRUE(ideal_membership(P("x"), *c.ideal));
  EXPECT_TRUE(ideal_membership(P("y"), *c.ideal));
  EXPECT_FALSE(ideal_membership(P("z"), *c.ideal));
  EXPECT_TRUE(colon(I_of({"x^2", "x*y"}), P("x*y")).unit());
  EXPECT_THROW(colon(ex1(), Polynomial(R4)), DomainError);
}

TEST(Colon, Ex1ByXSquaredContainsWSquared) {
  auto c = colon(ex1(), P("x^2"));
  ASSERT_FALSE(c.unit());
  EXPECT_TRUE(ideal_membership(P("w^2"), *c.ideal));
  EXPECT_FALSE(ideal_membership(P("z^2"), *c.ideal));
}

TEST(Colon, DefiningPropertyAndRankRoute) {
  auto I = ex1();
  auto gb = buchberger(I);
  auto f = P("2*x - 5*y + 13*z - 7*w");
  auto c = colon(I, f);
  ASSERT_FALSE(c.unit());
  // every generator of I : f times f lies in I
  for (const auto& q : c.ideal->generators()) EXPECT_TRUE(contains(gb, q * f));
}

TEST(Intersection, Principal) {
  auto J = intersect_principal(I_of({"x^2", "y^3"}), P("x*y"));
  EXPECT_TRUE(ideal_membership(P("x^2*y"), J));
  EXPECT_TRUE(ideal_membership(P("x*y^3"), J));
  EXPECT_FALSE(ideal_membership(P("x*y"), J));
  EXPECT_FALSE(ideal_membership(P("x^2"), J));
}

TEST(MinimalGenerators, DropsRedundant) {
  auto I = I_of({"x^2", "x^2*y", "x*y", "x^2 + x*y"});
  auto m = minimal_generators(I);
  EXPECT_EQ(m.size(), 2u);
  EXPECT_EQ(minimal_generators(ex1()).generator_degrees(), ex1().generator_degrees());
}

TEST(Truncation, AgreesBelowBound) {
  GroebnerOptions o;
  o.max_degree = 9;
  auto t = buchberger(ex1(), o);
  auto full = buchberger(ex1());
  ASSERT_TRUE(t.truncated_at);
  for (const auto& g : full.elements)
    if (g.degree() <= 9) EXPECT_TRUE(contains(t, g));
}
