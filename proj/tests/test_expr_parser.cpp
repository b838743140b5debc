#include <gtest/gtest.h>

#include <random>

#include "random_polys.hpp"
#include "stdbasis/errors.hpp"
#include "stdbasis/expr_parser.hpp"

using namespace stdbasis;

TEST(ParsePoly, PrefixOfG1) {
  const Polynomial f = parse_poly("X1+X4+X6+2X4^2", 6, 3, OrderKind::NegDegLex);
  EXPECT_EQ(f.size(), 4u);
  EXPECT_EQ(f.leading_monomial(), Monomial::variable(6, 0));
}

TEST(ParsePoly, Forms) {
  const Ring r(5, 3, OrderKind::DegLex);
  EXPECT_TRUE(parse_poly("0", r).is_zero());
  EXPECT_EQ(parse_poly("- X1 + 7 * X2 * X3^2", r), parse_poly("4X1+2X2X3^2", r));
  EXPECT_EQ(parse_poly("X1X1", r), parse_poly("X1^2", r));
  EXPECT_EQ(parse_poly("3*X1", r), parse_poly("3X1", r));
  EXPECT_EQ(parse_poly("X1^0", r), Polynomial::constant(r, 1));
  EXPECT_EQ(parse_poly("123456789012345678901234567890", r), Polynomial::constant(r, 0));
  EXPECT_EQ(parse_poly("x2", r), parse_poly("X2", r));
  EXPECT_EQ(parse_poly("2X1\n + 3", r), parse_poly("2X1+3", r));
}

TEST(ParsePoly, Errors) {
  const Ring r(3, 6, OrderKind::Lex);
  try {
    parse_poly("X7", r);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 2u);
    EXPECT_NE(std::string(e.what()).find("out of range"), std::string::npos);
  }
  EXPECT_THROW(parse_poly("X0", r), ParseError);
  EXPECT_THROW(parse_poly("", r), ParseError);
  EXPECT_THROW(parse_poly("X1+", r), ParseError);
  EXPECT_THROW(parse_poly("X1^", r), ParseError);
  EXPECT_THROW(parse_poly("X1^-2", r), ParseError);
  EXPECT_THROW(parse_poly("2*", r), ParseError);
  EXPECT_THROW(parse_poly("(X1+1)^2", r), ParseError);
  EXPECT_THROW(parse_poly("X\xe2\x82\x81", r), ParseError);
  try {
    parse_poly("X1+\nX2 $", r);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 4u);
  }
}

TEST(PrintPoly, Canonical) {
  const Ring r(3, 6, OrderKind::NegDegLex);
  const Polynomial g2 = parse_poly("2X4X5^2 + X5 + X2 + 2X5^2 + X4X5 + 2X4", r);
  EXPECT_EQ(print_poly(g2), "X2+2X4+X5+X4X5+2X5^2+2X4X5^2");
  EXPECT_EQ(print_poly(Polynomial(r)), "0");
  EXPECT_EQ(print_poly(parse_poly("-1", r)), "2");
  EXPECT_EQ(print_poly(parse_poly("X1-1", r.with_order(OrderKind::Lex))), "X1+2");
}

TEST(PrintPoly, RoundTrip) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const Ring r(testgen::random_small_prime(rng), n,
                 static_cast<OrderKind>(rng() % 4));
    const Polynomial f = testgen::random_poly(rng, r, 6, 8);
    const std::string text = print_poly(f);
    EXPECT_EQ(parse_poly(text, r), f) << text;
    if (!f.is_zero()) {
      const Polynomial g = f + Polynomial::term(r, 1, testgen::random_monomial(rng, n, 6));
      if (!(g == f)) EXPECT_NE(print_poly(g), text);
    }
  }
}
