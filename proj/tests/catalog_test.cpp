#include <set>

#include <gtest/gtest.h>

#include "kscontext/catalog.hpp"
#include "kscontext/error.hpp"
#include "kscontext/ortho_graph.hpp"

namespace kscontext {
namespace {

InputErrorKind parse_error_kind(const std::string& text) {
  try {
    parse_vector_set(text);
  } catch (const InputError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for " << text;
  return InputErrorKind::kSyntax;
}

// One coordinate (a + b*s2) + i(c + e*s2) with integer a.
std::string coord(int a) { return "[" + std::to_string(a) + ",1,0,1,0,1,0,1]"; }

TEST(Catalog, ListsFiveSets) {
  const auto& entries = builtin_catalog();
  ASSERT_EQ(entries.size(), 5U);
  std::vector<std::pair<std::string, std::size_t>> got;
  for (const auto& e : entries) got.emplace_back(e.name, e.ray_count);
  std::vector<std::pair<std::string, std::size_t>> want{
      {"peres33", 33}, {"cabello18", 18}, {"peres_mermin24", 24}, {"stabilizer2q", 60}, {"e8", 120}};
  EXPECT_EQ(got, want);
}

TEST(Catalog, BuiltinSizesAndDimensions) {
  const std::vector<std::tuple<std::string, std::size_t, int>> want{
      {"peres33", 33, 3}, {"cabello18", 18, 4}, {"peres_mermin24", 24, 4}, {"stabilizer2q", 60, 4}, {"e8", 120, 8}};
  for (const auto& [name, rays, d] : want) {
    VectorSet s = load_builtin(name);
    EXPECT_EQ(s.size(), rays) << name;
    EXPECT_EQ(s.dimension, d) << name;
    EXPECT_NO_THROW(validate(s)) << name;
  }
}

TEST(Catalog, UnknownName) {
  try {
    load_builtin("peres34");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.kind(), InputErrorKind::kUnknownName);
  }
}

TEST(Catalog, StabilizerGeneratorGivesSixtyRays) {
  VectorSet s = generate_stabilizer_rays();
  EXPECT_EQ(s.size(), 60U);
  EXPECT_EQ(s.dimension, 4);
}

TEST(Catalog, StabilizerEntriesAreUnitsUpToScale) {
  const std::set<std::string> allowed{"0", "1", "-1", "i", "-i"};
  for (const auto& ray : generate_stabilizer_rays().rays) {
    for (const auto& x : canonical_ray(ray)) EXPECT_TRUE(allowed.count(x.to_string())) << x.to_string();
  }
}

TEST(Catalog, StabilizerGraphHasFullBases) {
  EXPECT_EQ(clique_number(build_graph(generate_stabilizer_rays())), 4);
}

TEST(Catalog, StabilizerGeneratorMatchesBuiltinAndEmbedded) {
  EXPECT_TRUE(same_rays(generate_stabilizer_rays(), load_builtin("stabilizer2q")));
  EXPECT_TRUE(same_rays(generate_stabilizer_rays(), embedded_builtin("stabilizer2q")));
}

TEST(Catalog, E8RootCounts) {
  auto roots = e8_roots();
  ASSERT_EQ(roots.size(), 240U);
  int integer_type = 0;
  for (const auto& r : roots) {
    if (r[0].re_unit().get_den() == 1) ++integer_type;
  }
  EXPECT_EQ(integer_type, 112);
  EXPECT_EQ(generate_e8_rays().size(), 120U);
  EXPECT_TRUE(same_rays(generate_e8_rays(), embedded_builtin("e8")));
}

TEST(Catalog, E8InnerProductsAreSmallIntegers) {
  auto roots = e8_roots();
  const std::set<std::string> allowed{"-2", "-1", "0", "1", "2"};
  for (std::size_t a = 0; a < roots.size(); ++a) {
    EXPECT_EQ(inner_product(roots[a], roots[a]).to_string(), "2");
    for (std::size_t b = a + 1; b < roots.size(); ++b) {
      std::string ip = inner_product(roots[a], roots[b]).to_string();
      EXPECT_TRUE(allowed.count(ip)) << ip;
      // +-2 between distinct roots only for antipodes.
      if (ip == "-2") EXPECT_TRUE(projectively_equal(roots[a], roots[b]));
      EXPECT_NE(ip, "2");
    }
  }
}

TEST(Catalog, BuiltinsAreProjectivelyDistinct) {
  for (const auto& e : builtin_catalog()) {
    VectorSet s = load_builtin(e.name);
    std::set<std::string> keys;
    for (const auto& ray : s.rays) {
      std::string key;
      for (const auto& x : canonical_ray(ray)) key += x.to_string() + ",";
      keys.insert(key);
    }
    EXPECT_EQ(keys.size(), s.size()) << e.name;
  }
}

TEST(Catalog, SerializeRoundTrip) {
  for (const auto& e : builtin_catalog()) {
    VectorSet s = load_builtin(e.name);
    VectorSet back = parse_vector_set(serialize_vector_set(s));
    EXPECT_EQ(back.name, s.name);
    EXPECT_EQ(back.dimension, s.dimension);
    EXPECT_EQ(back.rays, s.rays) << e.name;
  }
}

TEST(ParseVectorSet, MinimalWellFormed) {
  std::string text = R"({"name":"tiny","dimension":2,"rays":[[)" + coord(1) + "," + coord(0) + "],[" + coord(0) + "," +
                     coord(1) + "],[" + coord(1) + "," + coord(1) + "]]}";
  VectorSet s = parse_vector_set(text);
  EXPECT_EQ(s.size(), 3U);
  EXPECT_EQ(s.dimension, 2);
}

TEST(ParseVectorSet, RejectsProjectiveDuplicate) {
  std::string text = R"({"name":"dup","dimension":2,"rays":[[)" + coord(1) + "," + coord(1) + "],[" + coord(2) + "," +
                     coord(2) + "]]}";
  EXPECT_EQ(parse_error_kind(text), InputErrorKind::kProjectiveDuplicate);
}

TEST(ParseVectorSet, RejectsDimensionMismatch) {
  std::string text = R"({"name":"short","dimension":4,"rays":[[)" + coord(1) + "," + coord(0) + "," + coord(0) + "]]}";
  EXPECT_EQ(parse_error_kind(text), InputErrorKind::kDimensionMismatch);
}

TEST(ParseVectorSet, RejectsZeroRayAndBadSyntax) {
  std::string zero = R"({"name":"z","dimension":2,"rays":[[)" + coord(0) + "," + coord(0) + "]]}";
  EXPECT_EQ(parse_error_kind(zero), InputErrorKind::kZeroRay);
  EXPECT_EQ(parse_error_kind("{\"name\": "), InputErrorKind::kSyntax);
  std::string bad_den = R"({"name":"z","dimension":1,"rays":[[[1,0,0,1,0,1,0,1]]]})";
  EXPECT_EQ(parse_error_kind(bad_den), InputErrorKind::kSchema);
}

TEST(ParseVectorSet, AcceptsDecimalStringIntegers) {
  std::string text = R"({"name":"big","dimension":1,"rays":[[["123456789012345678901234567890","7",0,1,0,1,0,1]]]})";
  VectorSet s = parse_vector_set(text);
  EXPECT_EQ(s.rays[0][0].re_unit(), mpq_class("17636684144620811271604938270"));
  EXPECT_EQ(s.rays[0][0].re_unit() * 7, mpq_class("123456789012345678901234567890"));
}

}  // namespace
}  // namespace kscontext
