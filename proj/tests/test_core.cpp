#include <gtest/gtest.h>

#include "bing/complex_ops.hpp"
#include "corpus.hpp"

namespace bing {
namespace {

using testing::make;

TEST(Simplex, SortsAndDeduplicatesIds) {
  Simplex s{3, 1, 2};
  EXPECT_EQ(s.to_vector(), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(s.dim(), 2);
  EXPECT_TRUE(s.contains(2));
  EXPECT_EQ(s.facet(0), (Simplex{2, 3}));
  EXPECT_TRUE((Simplex{1, 3}).is_face_of(s));
  EXPECT_FALSE((Simplex{1, 4}).is_face_of(s));
  std::vector<int> raw{1, 1};
  EXPECT_TRUE(Simplex::raw(raw).has_duplicates());
}

TEST(Simplex, EnumeratesAllNonemptyFaces) {
  int n = 0;
  Simplex{0, 1, 2, 3}.for_each_face([&](const Simplex&) { ++n; });
  EXPECT_EQ(n, 15);
}

TEST(Complex, ClosureOfATriangle) {
  auto k = testing::simplex(2);
  EXPECT_EQ(k.count(0), 3u);
  EXPECT_EQ(k.count(1), 3u);
  EXPECT_EQ(k.count(2), 1u);
  EXPECT_TRUE(validate(k).ok());
}

TEST(Complex, ValidateReportsMissingEdge) {
  auto k = SimplicialComplex::unchecked({{0, {}}, {1, {}}, {2, {}}},
                                        {Simplex{0}, Simplex{1}, Simplex{2}, Simplex{0, 2}, Simplex{1, 2}, Simplex{0, 1, 2}});
  auto r = validate(k);
  ASSERT_FALSE(r.ok());
  EXPECT_NE(r.issues[0].find("closure violation"), std::string::npos) << r.issues[0];
}

TEST(Complex, ValidateReportsRepeatedVertexAndUnknownId) {
  std::vector<int> rep{0, 0};
  auto k = SimplicialComplex::unchecked({{0, {}}}, {Simplex{0}, Simplex::raw(rep), Simplex{5}});
  auto r = validate(k);
  EXPECT_EQ(r.issues.size(), 2u);
}

TEST(Complex, ValidateChecksOrientation) {
  auto k = testing::sphere(3);
  auto o = orient(k);
  ASSERT_TRUE(o);
  k.set_orientation(o);
  EXPECT_TRUE(validate(k).ok());
  auto bad = *o;
  bad[0] = -bad[0];
  k.set_orientation(bad);
  EXPECT_FALSE(validate(k).ok());
  EXPECT_FALSE(orient(testing::rp2()));
}

TEST(Complex, EulerCharacteristic) {
  EXPECT_EQ(euler_characteristic(testing::sphere(3)), 2);
  EXPECT_EQ(euler_characteristic(testing::torus7()), 0);
  EXPECT_EQ(euler_characteristic(testing::rp2()), 1);
  EXPECT_EQ(euler_characteristic(testing::dunce_hat()), 1);
}

TEST(Complex, StarAndLink) {
  auto lk = link_of(testing::cone_over_square(), 4);
  EXPECT_EQ(lk.count(0), 4u);
  EXPECT_EQ(lk.count(1), 4u);
  EXPECT_EQ(lk.dim(), 1);
  auto sl = star_link(testing::sphere(3), 0);
  EXPECT_EQ(sl.link.count(1), 3u);
  EXPECT_EQ(sl.star.count(2), 3u);
  EXPECT_THROW(star_link(testing::sphere(3), 9), TopologyError);
}

TEST(Complex, Components) {
  EXPECT_EQ(components(testing::disjoint_pair(testing::sphere(3), 10)).second, 2);
  EXPECT_TRUE(is_connected(testing::theta()));
}

TEST(Complex, ClassifySurface) {
  auto t = classify_surface(testing::torus7());
  EXPECT_TRUE(t.is_surface && t.closed && t.orientable);
  EXPECT_EQ(t.euler, 0);
  EXPECT_TRUE(classify_surface(testing::octahedron()).is_sphere());
  auto m = classify_surface(testing::moebius());
  EXPECT_TRUE(m.is_surface);
  EXPECT_FALSE(m.closed);
  EXPECT_FALSE(m.orientable);
  EXPECT_EQ(m.boundary_components, 1);
  EXPECT_TRUE(classify_surface(testing::simplex(2)).is_disk());
  EXPECT_FALSE(classify_surface(testing::dunce_hat()).is_surface);
}

TEST(Complex, ClosedPseudomanifold) {
  EXPECT_TRUE(is_closed_pseudomanifold(testing::sphere(4), 3).ok);
  EXPECT_TRUE(is_closed_pseudomanifold(testing::torus7(), 2).ok);
  auto m = is_closed_pseudomanifold(testing::moebius(), 2);
  EXPECT_FALSE(m.ok);
  EXPECT_TRUE(m.witness.has_value());
  EXPECT_FALSE(is_closed_pseudomanifold(make({{0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {0, 2, 3}, {1, 2, 3}}), 2).ok);
  // suspension of RP2 has non-sphere links at the cone points
  EXPECT_FALSE(is_closed_pseudomanifold(testing::suspension(testing::rp2(), 20, 21), 3).ok);
}

TEST(Complex, ProductOfEdges) {
  auto r = product(testing::simplex(1), testing::simplex(1));
  EXPECT_EQ(r.complex.count(2), 2u);
  EXPECT_EQ(r.complex.count(0), 4u);
  EXPECT_TRUE(classify_surface(r.complex).is_disk());
}

TEST(Complex, ProductOfCirclesIsTorus) {
  auto r = product(testing::cycle(3), testing::cycle(3));
  EXPECT_EQ(r.complex.count(0), 9u);
  EXPECT_EQ(r.complex.count(2), 18u);
  EXPECT_EQ(euler_characteristic(r.complex), 0);
  auto info = classify_surface(r.complex);
  EXPECT_TRUE(info.closed && info.orientable);
}

TEST(Complex, ProductEulerIsMultiplicative) {
  auto r = product(testing::torus7(), testing::simplex(1));
  EXPECT_EQ(euler_characteristic(r.complex), 0);
  auto s = product(testing::rp2(), testing::cycle(4));
  EXPECT_EQ(euler_characteristic(s.complex), 0);
  auto t = product(testing::octahedron(), testing::simplex(2));
  EXPECT_EQ(euler_characteristic(t.complex), 2);
}

TEST(Complex, GlueTrianglesAlongEdge) {
  auto a = make({{0, 1, 2}});
  auto b = make({{0, 1, 2}});
  GluingTable t{{0, {Simplex{1, 2}}, 1, {Simplex{0, 1}}, {{1, 0}, {2, 1}}}};
  auto g = glue({a, b}, t);
  EXPECT_EQ(g.complex.count(0), 4u);
  EXPECT_EQ(g.complex.count(1), 5u);
  EXPECT_EQ(g.complex.count(2), 2u);
  EXPECT_TRUE(classify_surface(g.complex).is_disk());
}

TEST(Complex, GlueDisksIntoSphere) {
  testing::Tri disk;
  for (int i = 0; i < 6; ++i) disk.push_back({6, i, (i + 1) % 6});
  auto d = make(disk);
  std::map<int, int> id;
  std::vector<Simplex> rim;
  for (int i = 0; i < 6; ++i) {
    id[i] = i;
    rim.push_back(Simplex{i, (i + 1) % 6});
  }
  auto g = glue({d, d}, {{0, rim, 1, rim, id}});
  EXPECT_EQ(euler_characteristic(g.complex), 2);
  EXPECT_TRUE(classify_surface(g.complex).is_sphere());
}

TEST(Complex, GlueRejectsBadTables) {
  auto a = make({{0, 1, 2}});
  // regions of different shape
  EXPECT_THROW(glue({a, a}, {{0, {Simplex{0, 1}}, 1, {Simplex{0, 1, 2}}, {{0, 0}, {1, 1}}}}), TopologyError);
  // identifying two vertices of one triangle
  EXPECT_THROW(glue({a}, {{0, {Simplex{0}}, 0, {Simplex{1}}, {{0, 1}}}}), TopologyError);
}

TEST(Complex, BarycentricSubdivision) {
  auto sd = barycentric_subdivision(testing::simplex(2));
  EXPECT_EQ(sd.complex.count(0), 7u);
  EXPECT_EQ(sd.complex.count(2), 6u);
  EXPECT_EQ(sd.carrier.size(), 7u);
  auto sd3 = barycentric_subdivision(testing::sphere(3));
  EXPECT_EQ(sd3.complex.count(2), 24u);
  EXPECT_EQ(euler_characteristic(sd3.complex), 2);
}

TEST(Complex, Isomorphism) {
  auto a = testing::cycle(5);
  auto b = make({{10, 12}, {12, 14}, {14, 11}, {11, 13}, {13, 10}});
  EXPECT_TRUE(isomorphic(a, b));
  EXPECT_FALSE(isomorphic(testing::cycle(5), testing::cycle(4)));
  EXPECT_FALSE(isomorphic(testing::theta(), make({{0, 1}, {1, 2}, {2, 0}, {0, 3}})));
  EXPECT_TRUE(isomorphic(testing::octahedron(), testing::suspension(testing::cycle(4), 7, 8)));
}

}  // namespace
}  // namespace bing
