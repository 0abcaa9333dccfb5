#include <gtest/gtest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "hvec/combinatorics.hpp"

using namespace hvec;
using V = std::vector<std::int64_t>;

namespace {

// Direct check of the defining shape: strictly decreasing tops, consecutive
// bottoms from i down to j >= 1, top >= bottom, and the right sum.
template <class Int>
bool well_formed(const BinomialExpansion<Int>& ex, const Int& h, int i) {
  if (ex.terms.empty() || ex.terms.front().bottom != i) return false;
  for (std::size_t k = 0; k < ex.terms.size(); ++k) {
    const auto& t = ex.terms[k];
    if (t.bottom < 1 || t.top < Int(t.bottom)) return false;
    if (k && (t.bottom != ex.terms[k - 1].bottom - 1 || !(t.top < ex.terms[k - 1].top))) return false;
  }
  return ex.value() == h;
}

}  // namespace

TEST(Binomial, SmallValues) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(7, -1), 0);
  EXPECT_EQ(binomial<std::int64_t>(30, 15), 155117520);
}

TEST(Binomial, BigIntegerRow) {
  Integer c = binomial(200, 100);
  EXPECT_EQ(c.str(), "90548514656103281165404177077484163874504589675413336841320");
}

TEST(Binomial, OverflowIsReported) {
  EXPECT_THROW(binomial<std::int64_t>(200, 100), DomainError);
}

TEST(Expansion, KnownCases) {
  auto ex = binomial_expansion(34, 4);
  using T = BinomialExpansion<>::Term;
  std::vector<T> want{{6, 4}, {5, 3}, {4, 2}, {3, 1}};
  EXPECT_EQ(ex.terms, want);

  auto e20 = binomial_expansion(20, 3);
  ASSERT_EQ(e20.terms.size(), 1u);
  EXPECT_EQ(e20.terms[0].top, 6);

  auto one = binomial_expansion(1, 5);
  ASSERT_EQ(one.terms.size(), 1u);
  EXPECT_EQ(one.terms[0].top, 5);
}

TEST(Expansion, RejectsBadInput) {
  EXPECT_THROW(binomial_expansion(0, 3), DomainError);
  EXPECT_THROW(binomial_expansion(-4, 3), DomainError);
  EXPECT_THROW(binomial_expansion(5, 0), DomainError);
}

TEST(Expansion, UniqueShapeOnSample) {
  for (int i = 1; i <= 10; ++i)
    for (std::int64_t h = 1; h <= 5000; ++h) {
      auto ex = binomial_expansion<std::int64_t>(h, i);
      ASSERT_TRUE(well_formed<std::int64_t>(ex, h, i)) << h << " " << i;
    }
}

TEST(Expansion, FixedWidthMatchesBigInteger) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 2000; ++k) {
    std::int64_t h = 1 + static_cast<std::int64_t>(rng() % 1'000'000'000'000ULL);
    int i = 1 + static_cast<int>(rng() % 12);
    auto a = binomial_expansion<std::int64_t>(h, i);
    auto b = binomial_expansion<Integer>(Integer(h), i);
    ASSERT_EQ(a.terms.size(), b.terms.size());
    for (std::size_t t = 0; t < a.terms.size(); ++t) EXPECT_EQ(Integer(a.terms[t].top), b.terms[t].top);
  }
}

TEST(Expansion, HugeValues) {
  Integer h = binomial(400, 7) + binomial(100, 6) + 17;
  auto ex = binomial_expansion(h, 7);
  EXPECT_TRUE(well_formed<Integer>(ex, h, 7));
  EXPECT_EQ(ex.terms[0].top, 400);
}

TEST(Bounds, PrintedValues) {
  EXPECT_EQ(growth_bound(20, 3), 35);
  EXPECT_EQ(growth_bound(34, 4), 52);
  EXPECT_EQ(green_bound(34, 4), 14);
  EXPECT_EQ(green_bound(10, 2), 6);
  EXPECT_EQ(green_bound(4, 4), 0);
  EXPECT_EQ(growth_bound(0, 3), 0);
  EXPECT_EQ(green_bound(0, 3), 0);
}

TEST(Bounds, FullRingIsExtremal) {
  // C(i+n-1, i) grows to C(i+n, i+1) and restricts to C(i+n-2, i)
  for (int n = 2; n <= 6; ++n)
    for (int i = 1; i <= 12; ++i) {
      EXPECT_EQ(growth_bound(binomial(i + n - 1, i), i), binomial(i + n, i + 1));
      EXPECT_EQ(green_bound(binomial(i + n - 1, i), i), binomial(i + n - 2, i));
    }
}

TEST(Bounds, MonotoneInH) {
  for (int i = 1; i <= 8; ++i) {
    std::int64_t prev_growth = 0, prev_green = 0;
    for (std::int64_t h = 0; h <= 3000; ++h) {
      auto g = growth_bound<std::int64_t>(h, i);
      auto r = green_bound<std::int64_t>(h, i);
      ASSERT_GE(g, prev_growth);
      ASSERT_GE(r, prev_green);
      ASSERT_LE(r, h);
      ASSERT_GE(g, h);
      prev_growth = g;
      prev_green = r;
    }
  }
}

TEST(Bounds, RejectBadInput) {
  EXPECT_THROW(growth_bound(5, 0), DomainError);
  EXPECT_THROW(green_bound(-1, 2), DomainError);
}

TEST(Predicates, OSequence) {
  EXPECT_TRUE(is_o_sequence(V{1, 3, 6, 10, 14, 18, 21, 22, 21, 20, 20, 18, 13, 4}));
  EXPECT_TRUE(is_o_sequence(V{1, 4, 10, 20, 34, 52}));
  auto bad = is_o_sequence(V{1, 2, 4});
  EXPECT_FALSE(bad);
  EXPECT_EQ(bad.index, 2u);
  EXPECT_FALSE(is_o_sequence(V{2, 1}));
  EXPECT_FALSE(is_o_sequence(V{1, 2, 0, 1}));
  EXPECT_FALSE(is_o_sequence(V{1, -1}));
}

TEST(Predicates, Unimodal) {
  EXPECT_TRUE(is_unimodal(V{1, 3, 5, 5, 3, 1}));
  auto v = is_unimodal(V{1, 3, 2, 3, 1});
  EXPECT_FALSE(v);
  EXPECT_EQ(v.index, 1u);
  EXPECT_TRUE(is_unimodal(V{}));
}

TEST(Predicates, SymmetricAndSI) {
  auto h = HVector::artinian({1, 4, 10, 20, 34, 20, 10, 4, 1});
  EXPECT_TRUE(is_symmetric(h));
  EXPECT_TRUE(is_si_sequence(h));
  auto not_si = HVector::artinian({1, 2, 4, 2, 1});
  EXPECT_TRUE(is_symmetric(not_si));
  EXPECT_FALSE(is_si_sequence(not_si));
  EXPECT_FALSE(is_symmetric(HVector::artinian({1, 2, 2})));
  EXPECT_THROW(is_symmetric(HVector::raw({1, 2, 3})), DomainError);
}

TEST(Predicates, SIImpliesUnimodalExhaustive) {
  // all symmetric sequences with h_0 = 1, socle degree <= 8, entries <= 12
  std::int64_t checked = 0;
  for (int e = 0; e <= 8; ++e) {
    int half = e / 2;
    std::vector<std::int64_t> first(static_cast<std::size_t>(half + 1), 1);
    auto visit = [&](auto&& self, int pos) -> void {
      if (pos > half) {
        std::vector<std::int64_t> full(static_cast<std::size_t>(e + 1));
        for (int i = 0; i <= e; ++i) full[static_cast<std::size_t>(i)] = first[static_cast<std::size_t>(std::min(i, e - i))];
        auto h = HVector::artinian(full);
        ++checked;
        if (is_si_sequence(h)) ASSERT_TRUE(is_unimodal(h));
        return;
      }
      for (std::int64_t v = 1; v <= 12; ++v) {
        first[static_cast<std::size_t>(pos)] = v;
        self(self, pos + 1);
      }
    };
    visit(visit, 1);
  }
  EXPECT_GT(checked, 20000);
}

TEST(Predicates, MaximalGrowth) {
  std::vector<std::int64_t> h{1, 4, 10, 20, 34, 52, 73};
  auto deg = maximal_growth_degrees(h);
  EXPECT_NE(std::find(deg.begin(), deg.end(), 4), deg.end());
  std::vector<std::int64_t> f{1, 2, 3, 4, 4, 2, 2, 2, 1};
  auto fd = maximal_growth_degrees(f);
  EXPECT_NE(std::find(fd.begin(), fd.end(), 5), fd.end());
  EXPECT_NE(std::find(fd.begin(), fd.end(), 6), fd.end());
  EXPECT_EQ(std::find(fd.begin(), fd.end(), 4), fd.end());
}

TEST(Differences, RoundTrip) {
  V h{1, 4, 10, 20, 34, 52};
  auto d = first_difference(h);
  EXPECT_EQ(d.values(), (V{1, 3, 6, 10, 14, 18}));
  EXPECT_EQ(prefix_sum(d.span()).values(), h);
}

TEST(HVectorType, Accessors) {
  auto a = HVector::artinian({1, 3, 1, 0, 0});
  EXPECT_EQ(a.size(), 3u);
  EXPECT_EQ(a.socle_degree(), 2);
  EXPECT_EQ(a.at(7), 0);
  auto t = HVector::raw({1, 2, 3});
  EXPECT_FALSE(t.socle_degree());
  EXPECT_THROW(t.at(3), DomainError);
  EXPECT_THROW(HVector::artinian({0}), DomainError);
  EXPECT_THROW(HVector::artinian({1, -1}), DomainError);
}
