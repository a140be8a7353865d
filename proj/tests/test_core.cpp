#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace snakealg;
using fixtures::g;
using fixtures::w;

TEST(Rank, RejectsNonPositive) {
  EXPECT_THROW(Rank(0), PreconditionError);
  EXPECT_EQ(Rank(4).wrap(), 5);
}

TEST(Monoid, TrivialGeneratorsNormalizeAway) {
  EXPECT_TRUE(normalize_generator({2, 2}, Rank(5)).is_identity());
  EXPECT_TRUE(normalize_generator({-1, 6}, Rank(6)).is_identity());
  auto x = normalize_generator({0, 5}, Rank(6));
  EXPECT_EQ(x.height(), 1);
  EXPECT_EQ(x.exponent({0, 5}), 1);
}

TEST(Monoid, RankBoundEnforced) {
  EXPECT_THROW(MonoidElement::generator({0, 8}, Rank(6)), PreconditionError);
  EXPECT_THROW(MonoidElement::generator({3, 2}, Rank(6)), PreconditionError);
}

TEST(Monoid, ProductIsFreeAndCommutative) {
  auto a = g(0, 2, 3), b = g(-1, 1, 3);
  EXPECT_EQ(product(a, b), product(b, a));
  EXPECT_EQ(product(a, b).height(), 2);
  EXPECT_EQ(product(a, MonoidElement(Rank(3))), a);
  EXPECT_EQ(product(a, a), power(a, 2));
  EXPECT_EQ(product(a, a).exponent({0, 2}), 2);
  EXPECT_THROW(product(a, g(0, 2, 4)), PreconditionError);
}

TEST(Monoid, Quotient) {
  auto a = g(0, 2, 3), b = g(-1, 1, 3);
  EXPECT_EQ(quotient(product(a, b), a), b);
  EXPECT_FALSE(quotient(a, b).has_value());
  EXPECT_TRUE(quotient(a, a)->is_identity());
  EXPECT_TRUE(divides(a, product(a, b)));
}

TEST(Monoid, Height) {
  EXPECT_EQ(height_of(MonoidElement(Rank(3))), 0);
  EXPECT_EQ(height_of(w("w{0,2}*w{-1,1}", 3)), 2);
  EXPECT_EQ(height_of(w("w{0,5}^3", 6)), 3);
}

TEST(Snake, Subsnake) {
  auto s = fixtures::s_star();
  EXPECT_EQ(subsnake(s, 2, 4), Snake({{-1, 4}, {2, 5}, {1, 3}}, Rank(6)));
  EXPECT_EQ(subsnake(s, 1, 5), s);
  EXPECT_EQ(subsnake(s, 3, 3), Snake({{2, 5}}, Rank(6)));
  EXPECT_THROW(subsnake(s, 4, 6), PreconditionError);
  EXPECT_EQ(concat(subsnake(s, 1, 2), subsnake(s, 3, 5)), s);
}

TEST(Snake, PositionsAreOneBased) {
  auto s = fixtures::s_two();
  EXPECT_EQ(s.at(1), (Interval{0, 2}));
  EXPECT_TRUE(s.has(2));
  EXPECT_FALSE(s.has(0));
  EXPECT_THROW(s.at(3), PreconditionError);
  EXPECT_THROW(Snake({}, Rank(3)), PreconditionError);
}

TEST(Snake, ReflectAndTranslate) {
  auto s = fixtures::s_two();
  EXPECT_EQ(reflect(s), Snake({{-2, 0}, {-1, 1}}, Rank(3)));
  EXPECT_EQ(reflect(reflect(fixtures::s_star())), fixtures::s_star());
  EXPECT_EQ(reflect(g(0, 5, 6)), g(-5, 0, 6));
  EXPECT_EQ(translate(s, 3), Snake({{3, 5}, {2, 4}}, Rank(3)));
  EXPECT_EQ(translate(s, 0), s);
  EXPECT_EQ(translate(translate(s, 2), -2), s);
  EXPECT_EQ(translate(g(0, 2, 3), 1), g(1, 3, 3));
}

TEST(Text, RoundTrip) {
  auto s = fixtures::s_star();
  EXPECT_EQ(parse_snake(format(s)), s);
  auto x = w("w{0,6} * w{-1,4}^2", 6);
  EXPECT_EQ(parse_monoid(format(x), Rank(6)), x);
  EXPECT_EQ(format(MonoidElement(Rank(6))), "1");
  EXPECT_TRUE(parse_monoid("1", Rank(6)).is_identity());
}

TEST(Text, Errors) {
  EXPECT_THROW(parse_snake("[(0,2),(-1,1)]"), ParseError);
  EXPECT_THROW(parse_snake("[(0,2)(-1,1)] @ n=3"), ParseError);
  EXPECT_THROW(parse_snake("[] @ n=3"), ParseError);
  EXPECT_THROW(parse_monoid("w{0,2", Rank(3)), ParseError);
  EXPECT_THROW(parse_monoid("w{0,9}", Rank(3)), ParseError);
}
