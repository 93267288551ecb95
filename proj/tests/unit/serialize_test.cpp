#include <gtest/gtest.h>

#include "generators.hpp"
#include "kcycles/coefficients.hpp"
#include "kcycles/errors.hpp"
#include "kcycles/serialize.hpp"
#include "kcycles/tree_poly.hpp"

namespace {

using kcycles::Partition;
using kcycles::Rational;

TEST(Serialize, PolynomialRoundTrip) {
  gen::Source src(13);
  for (int i = 0; i < 40; ++i) {
    const auto p = src.poly(static_cast<std::size_t>(src.uniform(0, 4)));
    const auto doc = kcycles::poly_to_json(p);
    EXPECT_EQ(kcycles::poly_from_json(nlohmann::json::parse(doc.dump())), p);
  }
  const auto t3 = kcycles::reduced_tree_poly(3);
  EXPECT_EQ(kcycles::poly_from_json(kcycles::poly_to_json(t3)), t3);
}

TEST(Serialize, PolynomialDocumentShape) {
  kcycles::MultiPoly p(2);
  p.add_term({1, 2}, Rational(-3, 4));
  EXPECT_EQ(kcycles::poly_to_json(p).dump(), R"({"num_vars":2,"terms":[{"coeff":"-3/4","exp":[1,2]}]})");
}

TEST(Serialize, RejectsMalformedPolynomial) {
  EXPECT_THROW(kcycles::poly_from_json(nlohmann::json::parse(R"({"num_vars":2,"terms":[{"coeff":"1","exp":[1]}]})")),
               kcycles::ShapeMismatch);
  EXPECT_THROW(kcycles::poly_from_json(nlohmann::json::parse(R"({"terms":[]})")), nlohmann::json::exception);
}

TEST(Serialize, PartitionRoundTrip) {
  const Partition p{3, 1, 1};
  EXPECT_EQ(kcycles::partition_to_json(p).dump(), "[3,1,1]");
  EXPECT_EQ(kcycles::partition_from_json(kcycles::partition_to_json(p)), p);
}

TEST(Serialize, TableDocument) {
  kcycles::CoeffTable t;
  const auto doc = kcycles::table_to_json(t.b_matrix(2), t.a_matrix(2));
  EXPECT_EQ(doc.at("version"), kcycles::kTableSchemaVersion);
  EXPECT_EQ(doc.at("order").dump(), "[[2],[1,1]]");
  EXPECT_EQ(doc.at("b").dump(), R"([["-1/120","0"],["29/720","1/72"]])");
  EXPECT_THROW(kcycles::table_to_json(t.b_matrix(2), t.a_matrix(3)), kcycles::ShapeMismatch);
}

TEST(Serialize, CupDocument) {
  kcycles::CoeffTable t;
  const auto doc = kcycles::cup_to_json({1}, {1}, t.cup_coeff({1}, {1}));
  EXPECT_EQ(doc.dump(), R"({"lambda":[1],"mu":[1],"terms":{"1,1":"2","2":"29/5"}})");
}

}  // namespace
