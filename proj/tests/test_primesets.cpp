#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "snakealg/primesets.hpp"

using namespace snakealg;
using fixtures::g;
using fixtures::w;

namespace {

IntervalSet star_set() {
  return {{3, 4}, {2, 3}, {2, 4}, {1, 3}, {2, 5}, {1, 4},
          {1, 5}, {0, 4}, {0, 5}, {-1, 4}, {0, 6}, {-1, 5}};
}

std::set<MonoidElement> weights(const std::vector<PrimeDescriptor>& ds) {
  std::set<MonoidElement> out;
  for (const auto& d : ds) out.insert(d.weight);
  return out;
}

}  // namespace

TEST(PrimeSets, TildeIntervalSet) {
  auto s = fixtures::s_star();
  auto tilde = tilde_interval_set(s);
  auto expected = star_set();
  expected.insert({3, 3});
  expected.insert({-1, 6});
  EXPECT_EQ(tilde, expected);
  EXPECT_TRUE(tilde.count({0, 5}));
  EXPECT_FALSE(tilde.count({0, 3}));
}

TEST(PrimeSets, IntervalSet) {
  auto s = fixtures::s_star();
  auto set = interval_set(s);
  EXPECT_EQ(set, star_set());
  EXPECT_FALSE(set.count({-1, 6}));
  for (const auto& iv : s.intervals()) EXPECT_TRUE(set.count(iv));
}

TEST(PrimeSets, Closure) {
  auto s = fixtures::s_star();
  auto set = interval_set(s);
  EXPECT_TRUE(set.count({2, 4}) && set.count({1, 5}));
  EXPECT_TRUE(closure_check(s));
  EXPECT_TRUE(boundary_set_identity(s));
}

TEST(PrimeSets, WindowSnakes) {
  auto s = fixtures::s_star();
  EXPECT_EQ(window_snake(s, 0, 0, 0, 2), Snake({{-1, 4}}, Rank(6)));
  EXPECT_EQ(window_snake(s, 0, 0, 1, 4), Snake({{2, 5}, {1, 3}}, Rank(6)));
  auto prefixed = window_snake(s, 1, 0, 1, 4);
  EXPECT_EQ(prefixed, Snake({{0, 4}, {2, 5}, {1, 3}}, Rank(6)));
  EXPECT_TRUE(is_prime(prefixed));
}

TEST(PrimeSets, TwoIntervalSets) {
  auto s = fixtures::s_two();
  EXPECT_EQ(weights(pr_set(s)), (std::set<MonoidElement>{g(0, 2, 3), g(-1, 1, 3)}));
  EXPECT_EQ(weights(fr_set(s)),
            (std::set<MonoidElement>{w("w{0,2}*w{-1,1}", 3), g(0, 1, 3), g(-1, 2, 3)}));
}

TEST(PrimeSets, SingleInterval) {
  Snake s({{0, 2}}, Rank(3));
  EXPECT_EQ(weights(pr_set(s)), (std::set<MonoidElement>{g(0, 2, 3)}));
  EXPECT_TRUE(fr_set(s).empty());
}

TEST(PrimeSets, StarDescriptors) {
  auto s = fixtures::s_star();
  auto fr = weights(fr_set(s));
  EXPECT_TRUE(fr.count(w("w{0,6}*w{-1,5}", 6)));
  for (const auto& x : fr) EXPECT_FALSE(x.is_identity());
  auto pr = pr_set(s);
  EXPECT_EQ(weights(pr).size(), 27u);
  for (const auto& d : pr) {
    EXPECT_TRUE(is_prime(d.payload)) << format(d.payload);
    EXPECT_EQ(d.payload.weight(), d.weight);
  }
  std::set<MonoidElement> overlap;
  auto prw = weights(pr);
  std::set_intersection(prw.begin(), prw.end(), fr.begin(), fr.end(),
                        std::inserter(overlap, overlap.begin()));
  EXPECT_TRUE(overlap.empty());
}

TEST(PrimeSets, Membership) {
  auto s = fixtures::s_star();
  EXPECT_TRUE(submonoid_member(w("w{0,5}*w{1,4}", 6), s));
  EXPECT_FALSE(submonoid_member(g(0, 3, 6), s));
  EXPECT_TRUE(submonoid_member(MonoidElement(Rank(6)), s));
}

TEST(PrimeSets, CatalogPrefersPr) {
  PrimeCatalog cat(fixtures::s_two());
  EXPECT_EQ(cat.find(g(0, 2, 3))->kind, DescriptorKind::Interval);
  EXPECT_TRUE(cat.contains(w("w{0,2}*w{-1,1}", 3)));
  EXPECT_FALSE(cat.contains(w("w{0,2}^2", 3)));
}

TEST(PrimeSets, ShortSnakesHaveNoWindowSet) {
  EXPECT_THROW(interval_set(fixtures::s_two()), PreconditionError);
}
