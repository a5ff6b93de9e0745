#include "cartan/detail/expression.hpp"
#include "cartan/polynomial.hpp"

#include <gtest/gtest.h>

#include <random>

namespace cartan {
namespace {

ContextPtr xy() { return VariableContext::make({"x", "y"}); }

TEST(Polynomial, ArithmeticAndDegrees) {
  const auto ctx = xy();
  const auto x = Polynomial::variable(ctx, 0);
  const auto y = Polynomial::variable(ctx, 1);
  const auto p = (x + y) * (x - y);
  EXPECT_EQ(p, x.pow(2) - y.pow(2));
  EXPECT_EQ(p.degree(), 4U);
  EXPECT_TRUE(p.is_homogeneous());
  EXPECT_FALSE((x + Polynomial::constant(ctx, 1)).is_homogeneous());
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((p - p).degree(), std::nullopt);
}

TEST(Polynomial, ToStringOrdersByDegreeThenLex) {
  const auto ctx = VariableContext::make({"x2", "x3"});
  const auto p = parse_polynomial("2*(x2^2 + x2*x3 + x3^2)", ctx);
  EXPECT_EQ(to_string(p), "2*x2^2 + 2*x2*x3 + 2*x3^2");
  EXPECT_EQ(to_string(Polynomial(ctx)), "0");
  EXPECT_EQ(to_string(parse_polynomial("1 - x3/2 + x2^2", ctx)), "x2^2 - 1/2*x3 + 1");
}

TEST(Polynomial, ParseRoundTripsRandomPolynomials) {
  const auto ctx = VariableContext::make({"a", "b", "c"});
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<unsigned> exp(0, 3);
  for (int trial = 0; trial < 100; ++trial) {
    Polynomial p(ctx);
    for (int t = 0; t < 5; ++t) p.add_term({exp(rng), exp(rng), exp(rng)}, Rational(coeff(rng), 1 + exp(rng)));
    ASSERT_EQ(parse_polynomial(to_string(p), ctx), p) << to_string(p);
  }
}

TEST(Polynomial, ParseErrors) {
  const auto ctx = xy();
  EXPECT_THROW(parse_polynomial("x +", ctx), ParseError);
  EXPECT_THROW(parse_polynomial("z", ctx), ParseError);
  EXPECT_THROW(parse_polynomial("x/y", ctx), ParseError);
  EXPECT_THROW(parse_polynomial("x^-1", ctx), ParseError);
  EXPECT_THROW(parse_polynomial("", ctx), ParseError);
}

TEST(Polynomial, DifferentRingsDoNotMix) {
  const auto a = Polynomial::variable(xy(), 0);
  const auto b = Polynomial::variable(VariableContext::make({"u"}), 0);
  EXPECT_THROW(a + b, ContextMismatch);
  EXPECT_THROW(poly_mul(a, b), ContextMismatch);
}

TEST(Polynomial, EvaluateAndWeights) {
  const auto ctx = VariableContext::make({"u", "v"}, {4, 2});
  const auto p = parse_polynomial("u*v + v^3", ctx);
  EXPECT_EQ(p.degree(), 6U);
  const std::vector<Rational> at{2, 3};
  EXPECT_EQ(p.evaluate(at), Rational(33));
  EXPECT_THROW(VariableContext::make({"w"}, {3}), std::invalid_argument);
}

TEST(LinearSubstitution, RestrictsToSubtorus) {
  const auto src = VariableContext::make({"x1", "x2", "x3", "x4"});
  const auto dst = VariableContext::make({"x2", "x3"});
  const LinearSubstitution j(src, dst, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  const auto pf = parse_polynomial("x1*x2*x3*x4", src);
  EXPECT_TRUE(substitute_linear(pf, j).is_zero());
  const auto e1 = parse_polynomial("x1^2 + x2^2 + x3^2 + x4^2", src);
  EXPECT_EQ(to_string(substitute_linear(e1, j)), "2*x2^2 + 2*x2*x3 + 2*x3^2");
  EXPECT_THROW(substitute_linear(Polynomial::variable(dst, 0), j), ContextMismatch);
}

TEST(LinearSubstitution, IsARingMap) {
  const auto src = VariableContext::make({"a", "b"});
  const auto dst = VariableContext::make({"s", "t"});
  const LinearSubstitution s(src, dst, {{1, 2}, {Rational(-1, 3), 1}});
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<unsigned> exp(0, 3);
  for (int trial = 0; trial < 40; ++trial) {
    Polynomial f(src);
    Polynomial g(src);
    for (int t = 0; t < 3; ++t) {
      f.add_term({exp(rng), exp(rng)}, coeff(rng));
      g.add_term({exp(rng), exp(rng)}, coeff(rng));
    }
    ASSERT_EQ(substitute_linear(f * g, s), substitute_linear(f, s) * substitute_linear(g, s));
    ASSERT_EQ(substitute_linear(f + g, s), substitute_linear(f, s) + substitute_linear(g, s));
  }
  EXPECT_EQ(substitute_linear(parse_polynomial("a*b", src), LinearSubstitution::identity(src)),
            parse_polynomial("a*b", src));
}

TEST(LinearSubstitution, RejectsShapeErrors) {
  const auto src = VariableContext::make({"a", "b"});
  const auto dst = VariableContext::make({"s"});
  EXPECT_THROW(LinearSubstitution(src, dst, {{1}}), std::invalid_argument);
  EXPECT_THROW(LinearSubstitution(src, dst, {{1, 2}, {1}}), std::invalid_argument);
}

}  // namespace
}  // namespace cartan
