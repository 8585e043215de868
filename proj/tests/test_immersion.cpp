#include <gtest/gtest.h>

#include "bing/immersion.hpp"
#include "corpus.hpp"

namespace bing {
namespace {

using testing::make;

SimplicialMap make_map(const SimplicialComplex& src, const SimplicialComplex& tgt, std::map<int, int> vm) {
  return {std::make_shared<SimplicialComplex>(src), std::make_shared<SimplicialComplex>(tgt), std::move(vm)};
}

SimplicialMap identity(const SimplicialComplex& k) {
  std::map<int, int> vm;
  for (const auto& v : k.vertices()) vm[v.id] = v.id;
  return make_map(k, k, vm);
}

SimplicialComplex cone(const SimplicialComplex& k, int apex) {
  std::vector<Simplex> tops;
  for (const auto& s : k.facets()) tops.push_back(s.with(apex));
  return SimplicialComplex::from_tops(tops);
}

TEST(Immersion, DoubleCoverOfCircle) {
  std::map<int, int> vm;
  for (int i = 0; i < 6; ++i) vm[i] = 10 + i % 3;
  auto f = make_map(testing::cycle(6), make({{10, 11}, {11, 12}, {12, 10}}), vm);
  EXPECT_TRUE(is_pl_immersion(f).ok());
  auto m = multiplicity(f);
  EXPECT_TRUE(m.constant(2));
  EXPECT_EQ(m.histogram(), (std::map<long, long>{{2, 3}}));
  EXPECT_FALSE(semicontinuity_violation(f));
  EXPECT_TRUE(additivity_check(f, m).ok);
  auto push = pushforward_fundamental(f);
  EXPECT_EQ(push.weights, (std::vector<long>{0, 0, 0}));
  auto [g, reduced] = reduced_weights(m);
  EXPECT_EQ(g, 2);
  EXPECT_TRUE(z2_cycle_test(*f.target, reduced));
}

TEST(Immersion, EmbeddedSphereCarriesAZ2Cycle) {
  auto f = identity(testing::sphere(3));
  EXPECT_TRUE(is_pl_immersion(f).ok());
  EXPECT_TRUE(multiplicity(f).constant(1));
  EXPECT_TRUE(z2_cycle_test(*f.target, SheetChain::ones(*f.target)));
  EXPECT_EQ(pushforward_fundamental(f).weights, std::vector<long>(4, 1));
}

TEST(Immersion, ConePointMapIsDegenerate) {
  // collapse one vertex of the tetrahedron boundary onto another
  auto f = make_map(testing::sphere(3), make({{0, 1, 2}}), {{0, 0}, {1, 1}, {2, 2}, {3, 0}});
  auto v = is_pl_immersion(f);
  EXPECT_EQ(v.status, ImmersionStatus::Degenerate);
  EXPECT_FALSE(v.ok());
  EXPECT_TRUE(v.first.has_value());
  EXPECT_FALSE(is_nondegenerate(f));
}

TEST(Immersion, FoldedStarIsNotImmersion) {
  // the square around the cone point folds onto one triangle
  auto f = make_map(testing::cone_over_square(), make({{4, 0, 1}}), {{4, 4}, {0, 0}, {1, 1}, {2, 0}, {3, 1}});
  EXPECT_TRUE(is_nondegenerate(f));
  auto v = is_pl_immersion(f);
  EXPECT_EQ(v.status, ImmersionStatus::NotImmersion);
  ASSERT_TRUE(v.vertex.has_value());
  EXPECT_EQ(f.image(*v.first), f.image(*v.second));
  EXPECT_TRUE(v.first && v.second);
}

TEST(Immersion, OnesChainOnABranchedComplexIsNotACycle) {
  // three triangles on one edge
  auto y = make({{0, 1, 2}, {0, 1, 3}, {0, 1, 4}});
  EXPECT_FALSE(z2_cycle_test(y, SheetChain::ones(y)));
  auto a = additivity_check(y, std::vector<long>{1, 1, 1});
  EXPECT_FALSE(a.ok);
  ASSERT_TRUE(a.witness.has_value());
  EXPECT_EQ(a.witness->dim(), 1);
}

TEST(Immersion, SemicontinuityViolationIsReported) {
  // two triangles on one edge fold onto a single triangle
  auto f = make_map(make({{0, 1, 2}, {0, 1, 3}}), make({{10, 11, 12}}), {{0, 10}, {1, 11}, {2, 12}, {3, 12}});
  auto bad = semicontinuity_violation(f);
  ASSERT_TRUE(bad.has_value());
  EXPECT_EQ(bad->first, (Simplex{10}));
  EXPECT_EQ(bad->second, (Simplex{10, 12}));
  EXPECT_EQ(fiber_counts(f, 2), (std::vector<long>{2}));
}

TEST(Census, GraphLinks) {
  EXPECT_EQ(classify_vertex(cone(testing::cycle(5), 9), 9), LocalModel::Sheet);
  EXPECT_EQ(classify_vertex(cone(testing::theta(), 9), 9), LocalModel::Triple);
  auto k4 = make({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(classify_vertex(cone(k4, 9), 9), LocalModel::ConeK4);
  EXPECT_EQ(classify_vertex(cone(testing::disjoint_pair(testing::cycle(3), 10), 9), 9), std::nullopt);
  EXPECT_EQ(classify_vertex(cone(barycentric_subdivision(testing::theta()).complex, 99), 99), LocalModel::Triple);
}

TEST(Census, SurfaceLinksInDimensionThree) {
  EXPECT_EQ(classify_vertex(testing::sphere(4), 0), LocalModel::Sheet);
  auto triple = cone(testing::suspension(testing::theta(), 20, 21), 30);
  EXPECT_EQ(classify_vertex(triple, 30), LocalModel::Triple);
  auto k4 = make({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  auto corner = cone(testing::suspension(k4, 20, 21), 30);
  EXPECT_EQ(classify_vertex(corner, 30), LocalModel::ConeK4);
  EXPECT_EQ(classify_vertex(cone(testing::torus7(), 50), 50), std::nullopt);
}

TEST(Census, CountsAndErrors) {
  auto c = local_model_census(testing::sphere(3));
  EXPECT_EQ(c.counts.at("sheet"), 4);
  EXPECT_EQ(c.counts.at("triple"), 0);
  EXPECT_EQ(c.counts.at("cone_k4"), 0);
  EXPECT_THROW(local_model_census(make({{0, 1, 2}, {0, 3, 4}})), TopologyError);
}

}  // namespace
}  // namespace bing
