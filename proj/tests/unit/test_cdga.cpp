#include "cartan/cdga.hpp"
#include "cartan/detail/expression.hpp"

#include "cdga_checks.hpp"

#include <gtest/gtest.h>

namespace cartan {
namespace {

std::shared_ptr<const GradedAlgebra> algebra(std::vector<GeneratorSpec> gens) {
  return std::make_shared<const GradedAlgebra>(std::move(gens));
}

FreeCDGA cp1() {
  auto a = algebra({{"u", 2}, {"y3", 3}});
  return FreeCDGA(a, {{}, a->parse("u^2")});
}

FreeCDGA su3_over_torus() {
  const auto ctx = VariableContext::make({"x1", "x2"});
  return build_cartan_algebra({{"x1", 2}, {"x2", 2}}, {{"y3", 3}, {"y5", 5}},
                              {parse_polynomial("-(x1^2 + x1*x2 + x2^2)", ctx),
                               parse_polynomial("-x1*x2*(x1 + x2)", ctx)});
}

TEST(GradedAlgebra, KoszulSigns) {
  auto a = algebra({{"u", 2}, {"y3", 3}, {"y5", 5}});
  EXPECT_EQ(a->format(a->parse("y3*y5 + y5*y3")), "0");
  EXPECT_EQ(a->format(a->parse("y3*y3")), "0");
  EXPECT_EQ(a->format(a->parse("u*y3 - y3*u")), "0");
  EXPECT_EQ(a->format(a->parse("y5*y3")), "-y3*y5");
  EXPECT_THROW(a->parse("w"), ParseError);
  EXPECT_THROW(algebra({{"u", 2}, {"u", 4}}), std::invalid_argument);
}

TEST(GradedAlgebra, BasisSizes) {
  auto a = algebra({{"u", 2}, {"v", 4}, {"y3", 3}});
  EXPECT_EQ(graded_basis(*a, 0).monomials.size(), 1U);
  EXPECT_EQ(graded_basis(*a, 4).monomials.size(), 2U);  // u^2, v
  EXPECT_EQ(graded_basis(*a, 7).monomials.size(), 2U);  // u^2*y3, v*y3
  EXPECT_EQ(graded_basis(*a, 1).monomials.size(), 0U);
}

TEST(FreeCDGA, ProjectiveLine) {
  const auto a = cp1();
  EXPECT_EQ(poincare_polynomial(a, 6).to_string(), "1 + t^2");
}

TEST(FreeCDGA, ExteriorOnOneGenerator) {
  auto alg = algebra({{"y3", 3}});
  const FreeCDGA a(alg, {{}});
  EXPECT_EQ(poincare_polynomial(a, 8).to_string(), "1 + t^3");
}

TEST(FreeCDGA, FlagManifoldSu3) {
  const auto p = poincare_polynomial(su3_over_torus(), 12);
  EXPECT_EQ(p.to_string(), "1 + 2*t^2 + 2*t^4 + t^6");
  EXPECT_EQ(p.evaluate(1), 6);
}

TEST(FreeCDGA, SummaryIsConsistent) {
  const auto s = cochain_summary(su3_over_torus(), 10);
  for (std::size_t k = 0; k <= 10; ++k) {
    const std::size_t incoming = k == 0 ? 0 : s.differential_ranks[k - 1];
    EXPECT_EQ(s.cohomology_dims[k], s.cochain_dims[k] - s.differential_ranks[k] - incoming);
  }
}

TEST(FreeCDGA, RejectsBadDifferentials) {
  auto a = algebra({{"u", 2}, {"y3", 3}, {"y5", 5}});
  EXPECT_THROW(FreeCDGA(a, {{}, a->parse("u"), {}}), DifferentialError);
  // d(y5) = u*y3 is fine in degree, but d^2(y5) = u^3 != 0.
  try {
    FreeCDGA(a, {{}, a->parse("u^2"), a->parse("u*y3")});
    FAIL();
  } catch (const DifferentialError& e) {
    EXPECT_EQ(e.generator(), "y5");
  }
  EXPECT_THROW(FreeCDGA(a, {{}}), std::invalid_argument);
}

TEST(FreeCDGA, CartanAlgebraChecksRing) {
  const auto ctx = VariableContext::make({"x1"});
  EXPECT_THROW(build_cartan_algebra({{"x2", 2}}, {{"y3", 3}}, {parse_polynomial("x1^2", ctx)}), std::invalid_argument);
  EXPECT_THROW(build_cartan_algebra({{"x1", 2}}, {{"y3", 3}}, {parse_polynomial("x1^3", ctx)}), DegreeMismatch);
}

TEST(CdgaProperty, DifferentialSquaresToZeroAndIsADerivation) {
  // An even generator that is not closed: d(z) = u*y3.
  auto a = algebra({{"u", 2}, {"v", 2}, {"y3", 3}, {"z", 4}, {"y5", 5}, {"w", 5}});
  const FreeCDGA mixed(a, {{}, {}, {}, a->parse("u*y3"), a->parse("u^3 - v^3"), a->parse("v^3")});
  std::string why;
  const FreeCDGA algs[] = {cp1(), su3_over_torus()};
  for (const auto& c : algs) {
    EXPECT_TRUE(checks::d_squared_vanishes(c, 12, &why)) << why;
    EXPECT_TRUE(checks::leibniz_holds(c, 10, &why)) << why;
  }
  EXPECT_TRUE(checks::d_squared_vanishes(mixed, 10, &why)) << why;
  EXPECT_TRUE(checks::leibniz_holds(mixed, 9, &why)) << why;
}

}  // namespace
}  // namespace cartan
