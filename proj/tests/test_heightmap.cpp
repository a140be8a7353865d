#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "snakealg/explorer.hpp"
#include "snakealg/heightmap.hpp"

using namespace snakealg;
using fixtures::g;
using fixtures::w;

TEST(HeightMap, StarSequence) {
  auto s = fixtures::s_star();
  EXPECT_EQ(n_of(s), 6);
  EXPECT_EQ(p_sequence(s), (std::vector<int>{1, 2, 3, 5, 6}));
  auto h = height_profile(s);
  EXPECT_EQ(h.xi, (std::vector<int>{7, 6, 7, 6, 5, 6}));
  EXPECT_EQ(h.upper(3), (Interval{2, 5}));
  EXPECT_EQ(h.upper(6), (Interval{0, 6}));
  EXPECT_FALSE(height_failure(h).has_value());
}

TEST(HeightMap, NoDoubleStepsGiveIdentitySequence) {
  CorpusSpec spec{.r_min = 3, .r_max = 3, .span = 5, .n_max = 5};
  for (const auto& s : enumerate_snakes(spec)) {
    EXPECT_EQ(n_of(s), 3);
    EXPECT_EQ(p_sequence(s), (std::vector<int>{1, 2, 3}));
  }
}

TEST(HeightMap, NeedsThreeIntervals) {
  EXPECT_THROW(height_profile(fixtures::s_two()), PreconditionError);
}

TEST(HeightMap, StarIntervalSetAndSnake) {
  auto s = fixtures::s_star();
  auto h = height_profile(s);
  IntervalSet expected{{3, 4}, {2, 3}, {2, 4}, {1, 3}, {2, 5}, {1, 4},
                       {1, 5}, {0, 4}, {0, 5}, {-1, 4}, {0, 6}, {-1, 5}};
  EXPECT_EQ(interval_set_xi(h), expected);
  EXPECT_EQ(snake_of_xi(h), s);
}

TEST(HeightMap, StarPrimeAndFrozen) {
  auto h = height_profile(fixtures::s_star());
  auto fr = fr_xi(h);
  EXPECT_EQ(fr.size(), 6u);
  EXPECT_TRUE(fr.count(w("w{3,4}*w{2,3}", 6)));
  EXPECT_EQ(pr_xi(h).size(), 27u);
  EXPECT_EQ(omega_pair(h, 2, 3), w("w{2,5}*w{1,3}", 6));
  auto pi = pair_index(h, 2, 3);
  EXPECT_EQ(materialize_window(h.snake, pi.window).weight(), omega_pair(h, 2, 3));
}

TEST(HeightMap, StarBijection) {
  auto h = height_profile(fixtures::s_star());
  auto b = pr_bijection(h);
  EXPECT_TRUE(b.ok()) << b.failure.value_or("");
  EXPECT_TRUE(b.composed);
  EXPECT_EQ(b.map.size(), 27u);
}

TEST(HeightMap, Cluster) {
  auto c = cluster_export(fixtures::s_star());
  EXPECT_EQ(c.type, "A_6");
  EXPECT_EQ(c.N, 6);
  EXPECT_EQ(c.frozen.size(), 6u);
  EXPECT_EQ(c.variables.size(), 27u);
  EXPECT_EQ(c.correspondence.size(), 27u);
}

TEST(HeightMap, ClusterNeedsBoundary) {
  Snake s({{0, 6}, {-1, 4}, {2, 5}, {1, 3}, {3, 4}}, Rank(7));
  ASSERT_TRUE(is_prime(s));
  ASSERT_FALSE(is_boundary(s));
  EXPECT_THROW(cluster_export(s), PreconditionError);
}

TEST(HeightMap, IdentitiesOnCorpus) {
  CorpusSpec spec{.r_min = 3, .r_max = 4, .span = 7, .n_max = 7};
  int boundary = 0;
  for_each_snake(spec, [&](const Snake& s) {
    auto h = height_profile(s);
    EXPECT_FALSE(height_failure(h).has_value()) << format(s);
    Snake x = snake_of_xi(h);
    EXPECT_TRUE(is_prime(x)) << format(s);
    auto e = extremes(x);
    EXPECT_EQ(e.j_min, e.i_max) << format(s);
    EXPECT_EQ(e.j_max - e.i_min, h.N + 1) << format(s);
    EXPECT_EQ(interval_set_xi(h), interval_set(x)) << format(s);
    EXPECT_EQ(snake_of_xi(x), x) << format(s);
    auto b = pr_bijection(h);
    EXPECT_TRUE(b.ok()) << format(s) << " " << b.failure.value_or("");
    EXPECT_EQ(b.composed, is_boundary(s)) << format(s);
    boundary += is_boundary(s) ? 1 : 0;
    return true;
  });
  EXPECT_GT(boundary, 10);
}
