#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "hvec/analysis.hpp"
#include "oracle.hpp"

using namespace hvec;
using V = std::vector<std::int64_t>;

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
Ideal ex2() {
  return I_of({"y^2*w^2", "y^4*w", "y^4*z", "x*y^4", "w^8", "x^6*y^2", "z^10*w^2", "y^2*z^11 - x^7*w^6",
               "x^13", "x^6*z^10", "z^21", "y^26 - x^5*z^20*w"});
}
std::vector<Polynomial> ex1_forms() { return {P("2*x - 5*y + 13*z - 7*w"), P("-11*x - 4*y + 5*z + 9*w")}; }
std::vector<Polynomial> ex2_forms() { return {P("x - 3*y + 15*z - 2*w"), P("-13*x - 4*y + 5*z + 8*w")}; }

std::string S(const Polynomial& f) { return f.to_string(default_variable_names(f.ring().nvars)); }

}  // namespace

TEST(Reduction, Ex1PrintedForms) {
  auto r = artinian_reduction(ex1(), ex1_forms(), 0, 2);
  EXPECT_EQ(r.f_vector.values(), (V{1, 2, 3, 4, 4, 4, 3, 1}));
  EXPECT_EQ(r.initial_degree_a, 4);
  EXPECT_EQ(r.second_gap_m, 2);
  EXPECT_FALSE(r.seed);
  EXPECT_TRUE(r.genericity_confirmed);
}

TEST(Reduction, Ex2PrintedForms) {
  auto r = artinian_reduction(ex2(), ex2_forms(), 0, 2);
  EXPECT_EQ(r.f_vector.values(), (V{1, 2, 3, 4, 4, 2, 2, 2, 1}));
  EXPECT_EQ(r.initial_degree_a, 4);
  EXPECT_EQ(r.second_gap_m, 1);
}

TEST(Reduction, SeededFormsAgreeWithPrintedForms) {
  auto r = artinian_reduction(ex1(), kDefaultSeed, 2);
  EXPECT_EQ(r.f_vector.values(), (V{1, 2, 3, 4, 4, 4, 3, 1}));
  EXPECT_EQ(r.seed, kDefaultSeed);
  EXPECT_EQ(r.forms.size(), 2u);
  auto again = artinian_reduction(ex1(), kDefaultSeed, 2);
  EXPECT_EQ(S(again.forms[0]), S(r.forms[0]));
}

TEST(Reduction, OneFormIsFirstHalfDifference) {
  auto r = artinian_reduction(ex1(), {ex1_forms()[0]}, 0, 1);
  EXPECT_EQ(r.f_vector.values(), (V{1, 3, 6, 10, 14, 18, 21, 22, 21, 20, 20, 18, 13, 4}));
}

TEST(Reduction, ZeroIdeal) {
  ReductionOptions o;
  o.max_degree = 6;
  auto r = artinian_reduction(Ideal(R4), kDefaultSeed, 2, o);
  EXPECT_EQ(r.f_vector.values(), (V{1, 2, 3, 4, 5, 6, 7}));
}

TEST(Reduction, DependentFormsRejected) {
  EXPECT_THROW(artinian_reduction(ex1(), {P("x + y"), P("2*x + 2*y")}, 0, 2), DomainError);
  EXPECT_THROW(artinian_reduction(ex1(), kDefaultSeed, 4), DomainError);
  EXPECT_THROW(artinian_reduction(ex1(), {P("x^2"), P("y")}, 0, 2), DomainError);
}

TEST(Reduction, MatchesAdjoiningTheForms) {
  // Quotient by (I, l1, l2) directly in four variables
  auto I = ex1();
  auto forms = ex1_forms();
  auto direct = hilbert_function(I.with(forms[0]).with(forms[1]), 12);
  auto r = artinian_reduction(I, forms, 0, 2);
  for (std::size_t d = 0; d <= 12; ++d) EXPECT_EQ(direct.at(d), r.f_vector.at(d));
}

TEST(ColonByForm, Ex1ByXSquared) {
  auto c = colon_by_form(ex1(), P("x^2"));
  ASSERT_FALSE(c.unit);
  EXPECT_EQ(c.h_vector.socle_degree(), 24);
  EXPECT_EQ(c.expected_socle, 24);
  EXPECT_TRUE(*c.socle_matches);
  EXPECT_TRUE(*c.symmetric);
  EXPECT_EQ(c.h_vector.at(2), 9);
  EXPECT_FALSE(c.b_vector);
}

TEST(ColonByForm, LinearFormGivesBVector) {
  auto c = colon_by_form(ex1(), ex1_forms()[0]);
  ASSERT_TRUE(c.b_vector);
  EXPECT_EQ((*c.b_vector)[0], 0);
  EXPECT_EQ((*c.b_vector)[1], 1);
  EXPECT_EQ(c.h_vector.socle_degree(), 25);
  EXPECT_TRUE(*c.symmetric);
}

TEST(ColonByForm, TrivialCases) {
  auto c = colon_by_form(I_of({"x^2", "x*y"}), P("x"));
  ASSERT_FALSE(c.unit);
  EXPECT_EQ(c.quotient_ideal->size(), 2u);
  EXPECT_TRUE(colon_by_form(ex1(), P("x^6")).unit);
  EXPECT_THROW(colon_by_form(ex1(), Polynomial(R4)), DomainError);
}

TEST(GradedGcd, PrintedCases) {
  auto g6 = graded_gcd(ex1(), 6);
  ASSERT_FALSE(g6.is_unit());
  EXPECT_EQ(S(*g6.gcd_poly), "x^2");
  EXPECT_EQ(g6.gcd_degree, 2);
  EXPECT_TRUE(graded_gcd(ex1(), 7).is_unit());
  for (int t : {5, 6, 7}) {
    auto g = graded_gcd(ex2(), t);
    ASSERT_FALSE(g.is_unit());
    EXPECT_EQ(S(*g.gcd_poly), "y^2");
  }
  EXPECT_THROW(graded_gcd(ex1(), 3), DomainError);
}

TEST(ExactSequence, Ex1AtSix) {
  auto rec = check_exact_sequence_identity(ex1(), 6);
  EXPECT_EQ(rec.status, CheckStatus::passed);
  bool saw = false;
  for (const auto& row : rec.rows)
    if (row.degree == 4) {
      EXPECT_EQ(row.lhs, 9);
      EXPECT_EQ(row.rhs, 34 - (35 - 10));
      saw = true;
    }
  EXPECT_TRUE(saw);
}

TEST(ExactSequence, ToyIdeal) {
  auto rec = check_exact_sequence_identity(I_of({"x^2*y", "x^3"}), 3);
  EXPECT_EQ(rec.status, CheckStatus::passed);
  for (const auto& row : rec.rows)
    if (row.degree == 3) EXPECT_EQ(row.lhs, 2);
}

TEST(ExactSequence, HoldsWhereverTheGcdIsNonUnit) {
  for (const auto& I : {ex1(), ex2()})
    for (int t = I.initial_degree(); t <= 12; ++t) {
      auto g = graded_gcd(I, t);
      if (g.is_unit()) {
        EXPECT_THROW(check_exact_sequence_identity(I, t), PreconditionError);
        continue;
      }
      EXPECT_EQ(check_exact_sequence_identity(I, t).status, CheckStatus::passed) << t;
    }
}

TEST(SingleGenerator, Ex1AndEx2) {
  for (auto [I, forms] : {std::pair{ex1(), ex1_forms()}, std::pair{ex2(), ex2_forms()}}) {
    auto r = artinian_reduction(I, forms, 0, 2);
    auto rec = check_single_generator_pattern(I, r);
    EXPECT_EQ(rec.status, CheckStatus::passed);
  }
  auto r1 = artinian_reduction(ex1(), ex1_forms(), 0, 2);
  auto rec = check_single_generator_pattern(ex1(), r1);
  EXPECT_EQ(rec.values.at("a"), 4);
  EXPECT_EQ(rec.values.at("m"), 2);
}

TEST(SingleGenerator, PrincipalAndPrecondition) {
  auto I = I_of({"x^3 + y*z*w"});
  ReductionOptions o;
  o.max_degree = 10;
  auto r = artinian_reduction(I, kDefaultSeed, 2, o);
  auto rec = check_single_generator_pattern(I, r);
  EXPECT_EQ(rec.status, CheckStatus::passed);
  EXPECT_FALSE(rec.values.count("m"));
  auto two = I_of({"x^2", "y^2", "z^3", "w^3"});
  auto r2 = artinian_reduction(two, kDefaultSeed, 2);
  EXPECT_THROW(check_single_generator_pattern(two, r2), PreconditionError);
}

TEST(GcdTransfer, Ex1Triple) {
  auto res = check_gcd_transfer(P("x^2*w^2"), P("x^6"), P("x^4*y^3 - z*w^6"), kDefaultSeed, ex1_forms());
  EXPECT_EQ(res.record.status, CheckStatus::passed);
  EXPECT_EQ(res.j_table.values(), (V{1, 2, 3, 4, 4, 4, 3, 1}));
  EXPECT_EQ(res.jd_table.values(), (V{1, 2, 2, 2, 2, 2, 2, 1}));
  EXPECT_EQ(S(res.gcd), "x^2");
}

TEST(GcdTransfer, ToyTriple) {
  auto res = check_gcd_transfer(P("x^3*y"), P("x^3*z^2"), P("y^6"), kDefaultSeed);
  EXPECT_EQ(res.record.status, CheckStatus::passed);
}

TEST(GcdTransfer, Preconditions) {
  try {
    check_gcd_transfer(P("x^2*w^2"), P("x^6"), P("y^6"), kDefaultSeed);
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_EQ(e.clause(), "deg_h_eq_deg_g_plus_1");
  }
  try {
    check_gcd_transfer(P("x^2*w^2"), P("x^6"), P("x^2*y^5"), kDefaultSeed);
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_EQ(e.clause(), "h_not_in_D");
  }
  try {
    check_gcd_transfer(P("x^4*w^2"), P("y^6"), P("z^7"), kDefaultSeed);
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_EQ(e.clause(), "gcd_degree_range");
  }
}

TEST(Green, Ex1EqualityAtFour) {
  auto r = artinian_reduction(ex1(), {ex1_forms()[0]}, 0, 1);
  auto rec = check_green_bound(ex1(), r);
  EXPECT_EQ(rec.status, CheckStatus::passed);
  EXPECT_EQ(rec.values.at("equality_at_4"), 1);
}

TEST(Green, ZeroIdeal) {
  ReductionOptions o;
  o.max_degree = 10;
  auto r = artinian_reduction(Ideal(R4), kDefaultSeed, 1, o);
  auto rec = check_green_bound(Ideal(R4), r);
  EXPECT_EQ(rec.status, CheckStatus::passed);
  EXPECT_EQ(rec.rows.size(), 10u);
}

TEST(Green, RandomMonomialSuite) {
  std::mt19937_64 rng(31);
  int violations = 0;
  for (int k = 0; k < 100; ++k) {
    int n = 2 + static_cast<int>(rng() % 3);
    Ring r(n);
    std::vector<Polynomial> gens;
    for (const auto& m : oracle::random_monomials(rng, n, 5, 5)) gens.push_back(Polynomial::monomial(r, m));
    Ideal I(r, gens);
    ReductionOptions o;
    o.max_degree = 12;
    o.validate = false;
    auto red = artinian_reduction(I, k, 1, o);
    if (!check_green_bound(I, red).passed()) ++violations;
  }
  EXPECT_EQ(violations, 0);
}

TEST(Bookkeeping, Ex1ThreeTerms) {
  auto b = check_reduction_bookkeeping(ex1(), ex1_forms(), 27);
  EXPECT_EQ(b.record.status, CheckStatus::passed);
  EXPECT_EQ(b.b[1], 1);
}

TEST(Analyze, Ex1Report) {
  AnalysisOptions o;
  o.forms = ex1_forms();
  auto rep = analyze(ex1(), o, "ex1");
  EXPECT_EQ(rep.socle_degree, 26);
  EXPECT_TRUE(*rep.predicates.unimodal);
  EXPECT_TRUE(*rep.predicates.si_sequence);
  EXPECT_TRUE(rep.predicates.gorenstein_consistent);
  EXPECT_NE(std::find(rep.maximal_growth_degrees.begin(), rep.maximal_growth_degrees.end(), 4),
            rep.maximal_growth_degrees.end());
  EXPECT_EQ(rep.reduction.f_vector.values(), (V{1, 2, 3, 4, 4, 4, 3, 1}));
  EXPECT_TRUE(rep.errors.empty());
  for (const auto& c : rep.lemma_checks) EXPECT_NE(c.status, CheckStatus::failed) << c.name;
  // predicates recomputable from the vector
  EXPECT_EQ(*rep.predicates.symmetric, is_symmetric(rep.h_vector));
}

TEST(Analyze, ZeroIdealLimitedPredicates) {
  AnalysisOptions o;
  o.max_degree = 8;
  auto rep = analyze(Ideal(R4), o);
  EXPECT_FALSE(rep.h_vector.is_artinian());
  EXPECT_TRUE(rep.predicates.o_sequence);
  EXPECT_FALSE(rep.predicates.symmetric);
  EXPECT_FALSE(rep.predicates.unimodal);
  EXPECT_FALSE(rep.predicates.si_sequence);
  EXPECT_FALSE(rep.predicates.gorenstein_consistent);
}

TEST(Analyze, ResourceErrorsAreRecordedPerSection) {
  AnalysisOptions o;
  o.groebner.max_basis_size = 40;
  o.forms = ex1_forms();
  AnalysisReport rep;
  EXPECT_NO_THROW(rep = analyze(ex1(), o));
  ASSERT_FALSE(rep.errors.empty());
  EXPECT_NE(rep.errors.front().find("resource"), std::string::npos);
}
