#include "cartan/errors.hpp"
#include "cartan/liedata.hpp"

#include <gtest/gtest.h>

#include <algorithm>

namespace cartan {
namespace {

const Catalog& catalog() {
  static const Catalog c = load_validated_catalog(CARTAN_TEST_CATALOG);
  return c;
}

bool has_issue(const CatalogLoad& load, const std::string& record) {
  return std::any_of(load.issues.begin(), load.issues.end(), [&](const auto& i) { return i.record == record; });
}

TEST(Catalog, BundledCatalogValidates) {
  const auto load = load_catalog_file(CARTAN_TEST_CATALOG);
  for (const auto& i : load.issues) ADD_FAILURE() << i.record << ": " << i.message;
  EXPECT_TRUE(load.ok());
}

TEST(Catalog, So8) {
  const auto& g = catalog().lookup_group("so(8)");
  EXPECT_EQ(g.dimension, 28U);
  EXPECT_EQ(g.rank, 4U);
  EXPECT_EQ(g.weyl_order, 192U);
  auto p = g.primitive_degrees;
  std::sort(p.begin(), p.end());
  EXPECT_EQ(p, (std::vector<unsigned>{3, 7, 7, 11}));
}

TEST(Catalog, G2AndSu2) {
  const auto& g2 = catalog().lookup_group("g2");
  EXPECT_EQ(g2.dimension, 14U);
  EXPECT_EQ(g2.rank, 2U);
  EXPECT_EQ(g2.primitive_degrees, (std::vector<unsigned>{3, 11}));
  const auto& su2 = catalog().lookup_group("su(2)");
  EXPECT_EQ(su2.dimension, 3U);
  EXPECT_EQ(su2.primitive_degrees, (std::vector<unsigned>{3}));
}

TEST(Catalog, RealForms) {
  EXPECT_EQ(catalog().lookup_real_form("so(4,4)").dimension, 28U);
  EXPECT_EQ(catalog().lookup_real_form("so(4,4)").d_value, 16U);
  EXPECT_EQ(catalog().lookup_real_form("g2(2)").d_value, 8U);
  EXPECT_EQ(catalog().lookup_real_form("su(1,2)").dimension, 8U);
  EXPECT_EQ(catalog().lookup_real_form("su(1,2)").d_value, 4U);
  for (const auto* r : catalog().real_forms()) {
    EXPECT_EQ(r->d_value, r->dimension - catalog().lookup_group(r->maximal_compact).dimension) << r->name;
  }
}

TEST(Catalog, UnknownKeysThrow) {
  EXPECT_THROW(catalog().lookup_group("e9"), UnknownKey);
  EXPECT_THROW(catalog().lookup_real_form("so(9,9)"), UnknownKey);
  EXPECT_THROW(catalog().lookup_embedding("none"), UnknownKey);
}

TEST(CatalogProperty, PrimitiveProductAtOneIsTwoToTheRank) {
  for (const auto* g : catalog().groups()) {
    EXPECT_EQ(PoincareSeries::exterior(g->primitive_degrees).evaluate(1), Integer(1) << g->rank) << g->name;
  }
}

TEST(Catalog, EmbeddingKillsThePfaffian) {
  const auto& e = catalog().lookup_embedding("so(3)xso(3)-in-so(8)");
  EXPECT_EQ(e.restriction.source()->size(), catalog().lookup_group(e.ambient).rank);
  EXPECT_EQ(e.restriction.target()->size(), catalog().lookup_group(e.subgroup).rank);
  const auto pf = parse_polynomial("x1*x2*x3*x4", e.restriction.source());
  EXPECT_TRUE(substitute_linear(pf, e.restriction).is_zero());
  EXPECT_EQ(e.presentation.size(), 2U);
  EXPECT_EQ(e.literal_presentation.size(), 2U);
  EXPECT_EQ(to_string(e.literal_presentation[0].image), "x2^2");
}

const char* kGroup =
    "[group]\nname = so(8)\ntype = D4\ndimension = 28\nrank = 4\nweyl_order = 192\n"
    "primitive_degrees = 3, 7, 11, 7\ninvariant_degrees = 4, 8, 12, 8\n";

TEST(CatalogValidation, CatchesWrongWeylOrder) {
  std::string text = kGroup;
  text.replace(text.find("192"), 3, "190");
  const auto load = load_catalog(parse_text_document(text, "t"));
  ASSERT_FALSE(load.ok());
  EXPECT_TRUE(has_issue(load, "so(8)"));
  EXPECT_NE(load.issues[0].message.find("weyl_order"), std::string::npos);
}

TEST(CatalogValidation, CatchesDimensionAndDegreeTypos) {
  std::string text = kGroup;
  text.replace(text.find("= 28"), 4, "= 29");
  EXPECT_FALSE(load_catalog(parse_text_document(text, "t")).ok());
  text = kGroup;
  text.replace(text.find("11, 7\n"), 5, "9, 7");
  EXPECT_FALSE(load_catalog(parse_text_document(text, "t")).ok());
}

TEST(CatalogValidation, ProductsAndRealForms) {
  const std::string base =
      "[group]\nname = so(3)\ntype = B1\ndimension = 3\nrank = 1\nweyl_order = 2\nprimitive_degrees = 3\n"
      "invariant_degrees = 4\n"
      "[group]\nname = p\ntype = product\nfactors = so(3), so(3)\ndimension = 6\nrank = 2\nweyl_order = 4\n"
      "primitive_degrees = 3, 3\ninvariant_degrees = 4, 4\n";
  EXPECT_TRUE(load_catalog(parse_text_document(base, "t")).ok());
  auto bad = base;
  bad.replace(bad.find("weyl_order = 4"), 14, "weyl_order = 8");
  EXPECT_TRUE(has_issue(load_catalog(parse_text_document(bad, "t")), "p"));

  const auto rf = base +
                  "[real_form]\nname = r\ncompact_dual = p\ndimension = 6\nd_value = 2\nmaximal_compact = so(3)\n";
  const auto load = load_catalog(parse_text_document(rf, "t"));
  EXPECT_TRUE(has_issue(load, "r"));  // 6 - 3 = 3, not 2
}

TEST(CatalogValidation, EmptyCatalogIsValid) {
  const auto load = load_catalog(parse_text_document("# nothing\n", "empty"));
  EXPECT_TRUE(load.ok());
  EXPECT_TRUE(load.catalog.groups().empty());
}

TEST(CatalogValidation, SyntaxErrorsThrow) {
  EXPECT_THROW(load_catalog(parse_text_document("[group]\nname = x\ntype = Q3\n", "t")), InputError);
  EXPECT_THROW(load_catalog(parse_text_document("[planet]\nname = x\n", "t")), InputError);
  EXPECT_THROW(load_catalog(parse_text_document(std::string(kGroup) + kGroup, "t")), InputError);
}

TEST(Cases, ReferenceList) {
  const auto cases = paper_case_list(catalog());
  ASSERT_EQ(cases.size(), 4U);
  EXPECT_EQ(cases[0].name, "SO(4,4)/SU(1,2)");
  EXPECT_TRUE(cases[3].h_compact);
  EXPECT_FALSE(cases[0].h_compact);
  const auto& c = cases[2];
  EXPECT_EQ(c.g_u.name, "so(8)");
  EXPECT_EQ(c.h_u.name, "g2");
  EXPECT_EQ(c.g.maximal_compact, "so(3)xso(5)");
  EXPECT_EQ(c.k_h.name, "so(3)xso(3)");
  EXPECT_TRUE(c.embedding.has_value());
}

TEST(Cases, ParseCaseFile) {
  const auto c = parse_case(parse_text_document("[case]\nname = X\ng = so(3,5)\nh = g2(2)\nk_h = so(3)xso(3)\n"
                                                "embedding = so(3)xso(3)-in-so(8)\n",
                                                "x.case"),
                            catalog());
  EXPECT_EQ(c.name, "X");
  EXPECT_EQ(c.k_h.dimension, 6U);
  try {
    parse_case(parse_text_document("[case]\nname = X\ng = so(4,4)\nh = sp(9)\n", "y.case"), catalog());
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.line(), 4U);
    EXPECT_EQ(e.token(), "sp(9)");
  }
  EXPECT_THROW(parse_case(parse_text_document("[case]\nname = X\ng = so(4,4)\nh = g2\nh_compact = false\n", "z"), catalog()),
               InputError);
  EXPECT_THROW(parse_case(parse_text_document("[case]\nname = X\ng = so(4,4)\nh = g2\ncolour = red\n", "z"), catalog()),
               InputError);
}

}  // namespace
}  // namespace cartan
