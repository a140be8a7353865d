#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "snakealg/explorer.hpp"
#include "snakealg/isomorph.hpp"

using namespace snakealg;
using fixtures::g;
using fixtures::w;

namespace {
Snake wide_two() { return Snake({{0, 3}, {-2, 1}}, Rank(5)); }
}  // namespace

TEST(Isomorph, Conditions) {
  EXPECT_TRUE(check_iso_conditions(fixtures::s_star(), fixtures::s_star()));
  EXPECT_TRUE(check_iso_conditions(fixtures::s_two(), wide_two()));
  EXPECT_FALSE(check_iso_conditions(fixtures::s_two(), reflect(fixtures::s_two())));
  EXPECT_THROW(check_iso_conditions(fixtures::s_two(), fixtures::s_star()), PreconditionError);
}

TEST(Isomorph, EtaIsIndexWise) {
  SnakeIso iso(fixtures::s_two(), wide_two());
  EXPECT_EQ(eta(iso, w("w{0,2}*w{-1,1}", 3)), w("w{0,3}*w{-2,1}", 5));
  EXPECT_EQ(iso.image({0, 1}), (Interval{0, 1}));
  EXPECT_EQ(iso.image({-1, 2}), (Interval{-2, 3}));
  EXPECT_TRUE(eta(iso, MonoidElement(Rank(3))).is_identity());
  EXPECT_THROW(eta(iso, w("w{0,3}", 3)), PreconditionError);
}

TEST(Isomorph, Transport) {
  SnakeIso iso(fixtures::s_two(), wide_two());
  EXPECT_TRUE(transport_check(iso, w("w{0,2}*w{-1,1}", 3)));
  EXPECT_TRUE(transport_check(iso, w("w{0,1}^2*w{-1,2}", 3)));
  EXPECT_TRUE(descriptor_map_check(iso));

  SnakeIso self(fixtures::s_star(), fixtures::s_star());
  for (const auto& [a, b] : self.generator_map()) EXPECT_EQ(a, b);
  EXPECT_TRUE(transport_check(self, w("w{0,6}*w{0,5}*w{1,3}", 6)));
  EXPECT_TRUE(descriptor_map_check(self));
}

TEST(Isomorph, FailedConditionsThrow) {
  EXPECT_THROW(SnakeIso(fixtures::s_two(), reflect(fixtures::s_two())), PreconditionError);
}

TEST(Isomorph, TranslatesAreIsomorphic) {
  CorpusSpec spec{.r_min = 2, .r_max = 3, .span = 6, .n_max = 6};
  for_each_snake(spec, [&](const Snake& s) {
    auto t = translate(s, 2);
    EXPECT_TRUE(check_iso_conditions(s, t)) << format(s);
    SnakeIso iso(s, t);
    EXPECT_TRUE(descriptor_map_check(iso)) << format(s);
    EXPECT_TRUE(transport_check(iso, s.weight())) << format(s);
    return true;
  });
}
