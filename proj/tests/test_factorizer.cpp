#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "snakealg/explorer.hpp"
#include "snakealg/factorizer.hpp"

using namespace snakealg;
using fixtures::g;
using fixtures::w;

namespace {

std::vector<MonoidElement> sorted_weights(const Factorization& f) {
  auto out = f.weights();
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MonoidElement> sorted(std::vector<MonoidElement> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(Factorizer, CanonicalOrder) {
  EXPECT_EQ(canonical_order(w("w{0,2}*w{-1,1}", 3)), (std::vector<Interval>{{0, 2}, {-1, 1}}));
  EXPECT_EQ(canonical_order(g(0, 5, 6)), (std::vector<Interval>{{0, 5}}));
  EXPECT_EQ(canonical_order(w("w{0,2}^2", 3)), (std::vector<Interval>{{0, 2}, {0, 2}}));
}

TEST(Factorizer, Profile) {
  auto s = fixtures::s_star();
  auto p = extract_profile(w("w{0,6}*w{-1,4}", 6), s);
  EXPECT_EQ(p.a1, 1);
  EXPECT_EQ(p.a2, 0);
  EXPECT_EQ(p.a3, 0);
  EXPECT_EQ(p.b, 0);
  EXPECT_EQ(p.rest, g(-1, 4, 6));

  p = extract_profile(w("w{0,6}*w{0,5}", 6), s);
  EXPECT_EQ(p.a1, 1);
  EXPECT_EQ(p.a3, 1);
  EXPECT_EQ(p.a2 + p.b, 0);
  EXPECT_TRUE(p.rest.is_identity());

  p = extract_profile(g(0, 4, 6), s);
  EXPECT_EQ(p.a2, 1);
  EXPECT_EQ(p.a1 + p.a3 + p.b, 0);
  EXPECT_TRUE(p.rest.is_identity());
}

TEST(Factorizer, StarExamples) {
  auto s = fixtures::s_star();
  auto f = factor(w("w{0,6}*w{-1,4}", 6), s);
  ASSERT_EQ(f.factors.size(), 1u);
  EXPECT_EQ(f.factors[0].payload, Snake({{0, 6}, {-1, 4}}, Rank(6)));

  f = factor(w("w{0,6}*w{0,5}", 6), s);
  EXPECT_EQ(sorted_weights(f), sorted({g(0, 5, 6), g(0, 6, 6)}));
}

TEST(Factorizer, TwoIntervalExamples) {
  auto s = fixtures::s_two();
  auto f = factor(w("w{0,2}*w{-1,1}", 3), s);
  ASSERT_EQ(f.factors.size(), 1u);
  EXPECT_EQ(f.factors[0].payload, s);

  f = factor(w("w{0,1}*w{-1,2}", 3), s);
  EXPECT_EQ(sorted_weights(f), sorted({g(0, 1, 3), g(-1, 2, 3)}));

  f = factor(w("w{0,2}^3", 3), s);
  EXPECT_EQ(f.weights(), std::vector<MonoidElement>(3, g(0, 2, 3)));
  EXPECT_TRUE(factor(MonoidElement(Rank(3)), s).factors.empty());
}

TEST(Factorizer, RejectsNonMembers) {
  EXPECT_THROW(factor(g(0, 3, 6), fixtures::s_star()), PreconditionError);
}

TEST(Factorizer, CompatibleProduct) {
  auto s = fixtures::s_two();
  auto a = factor(g(0, 1, 3), s), b = factor(g(-1, 2, 3), s);
  EXPECT_TRUE(compatible_product(a, b, s));
  auto c = factor(g(0, 2, 3), s), d = factor(g(-1, 1, 3), s);
  EXPECT_FALSE(compatible_product(c, d, s));
  EXPECT_TRUE(compatible_product(c, Factorization{}, s));
}

TEST(Factorizer, SoundOnStarElements) {
  auto s = fixtures::s_star();
  Factorizer fz;
  const auto& cat = fz.catalog(s);
  int seen = 0;
  for_each_element(fz.generators(s), s.rank(), 3, [&](const MonoidElement& x) {
    auto f = fz.factor(x, s);
    EXPECT_EQ(f.weight(s.rank()), x) << format(x);
    for (const auto& d : f.factors) EXPECT_TRUE(cat.contains(d.weight));
    EXPECT_EQ(fz.factor(f.weight(s.rank()), s).weights(), f.weights());
    ++seen;
  });
  EXPECT_GT(seen, 300);
}

TEST(Factorizer, MatchesOracleOnStar) {
  auto s = fixtures::s_star();
  Factorizer fz;
  const auto& cat = fz.catalog(s);
  for_each_element(fz.generators(s), s.rank(), 2, [&](const MonoidElement& x) {
    auto candidates = oracle_factorizations(x, cat, 4);
    auto mine = sorted_weights(fz.factor(x, s));
    EXPECT_NE(std::find(candidates.begin(), candidates.end(), mine), candidates.end())
        << format(x);
  });
}
