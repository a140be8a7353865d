#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "snakealg/explorer.hpp"

using namespace snakealg;
using fixtures::g;
using fixtures::w;

TEST(Explorer, PairCorpusContainsTranslate) {
  CorpusSpec spec{.r_max = 2, .span = 3};
  auto all = enumerate_snakes(spec);
  auto target = translate(fixtures::s_two(), 1);
  EXPECT_NE(std::find(all.begin(), all.end(), target), all.end());
  for (const auto& s : all) EXPECT_TRUE(is_prime(s));
}

TEST(Explorer, SingleIntervals) {
  CorpusSpec spec{.r_max = 1, .span = 4, .n_max = 4};
  for (const auto& s : enumerate_snakes(spec)) {
    ASSERT_EQ(s.size(), 1);
    int len = s.at(1).length();
    EXPECT_GT(len, 0);
    EXPECT_LT(len, s.rank().wrap());
    EXPECT_EQ(s.left(1), 0);
  }
}

TEST(Explorer, Deterministic) {
  CorpusSpec spec{.r_max = 3, .span = 6};
  EXPECT_EQ(enumerate_snakes(spec), enumerate_snakes(spec));
  EXPECT_EQ(random_snake(17, spec), random_snake(17, spec));
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto s = random_snake(seed, spec);
    EXPECT_TRUE(is_prime(s));
    EXPECT_TRUE(check_enumeration(s)) << format(s);
  }
}

TEST(Explorer, Oracle) {
  auto s = fixtures::s_two();
  auto pair = w("w{0,2}*w{-1,1}", 3);
  auto cands = oracle_factorizations(pair, s);
  ASSERT_EQ(cands.size(), 2u);
  EXPECT_NE(std::find(cands.begin(), cands.end(), std::vector<MonoidElement>{pair}), cands.end());
  std::vector<MonoidElement> split{g(0, 2, 3), g(-1, 1, 3)};
  std::sort(split.begin(), split.end());
  EXPECT_NE(std::find(cands.begin(), cands.end(), split), cands.end());

  auto id = oracle_factorizations(MonoidElement(Rank(3)), s);
  EXPECT_EQ(id, std::vector<std::vector<MonoidElement>>{{}});
  auto cube = oracle_factorizations(w("w{0,2}^3", 3), s);
  EXPECT_EQ(cube, std::vector<std::vector<MonoidElement>>{std::vector<MonoidElement>(3, g(0, 2, 3))});
}

TEST(Explorer, OracleCap) {
  EXPECT_THROW(oracle_factorizations(w("w{0,2}^5", 3), fixtures::s_two(), 4), PreconditionError);
}

TEST(Explorer, BadSpec) {
  CorpusSpec spec{.span = 100};
  EXPECT_THROW(enumerate_snakes(spec), PreconditionError);
}
