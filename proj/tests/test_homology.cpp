#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "bing/complex_ops.hpp"
#include "bing/homology.hpp"
#include "corpus.hpp"

namespace bing {
namespace {

using testing::make;

long alternating(const std::vector<long>& b) {
  long s = 0;
  for (std::size_t i = 0; i < b.size(); ++i) s += (i % 2 ? -1 : 1) * b[i];
  return s;
}

// Number of even invariant factors in one degree.
long even_torsion(const std::vector<std::string>& t) {
  return std::count_if(t.begin(), t.end(), [](const std::string& s) { return BigInt(s) % 2 == 0; });
}

TEST(Homology, CorpusIsLargeEnough) { EXPECT_GE(testing::corpus().size(), 20u); }

TEST(Homology, Z2BettiMatchesBruteForce) {
  for (const auto& [name, k] : testing::corpus()) {
    EXPECT_EQ(homology(k, Coefficients::Z2).betti, testing::gf2_betti(k)) << name;
  }
}

TEST(Homology, EulerEqualsAlternatingBettiSum) {
  for (const auto& [name, k] : testing::corpus()) {
    EXPECT_EQ(euler_characteristic(k), alternating(homology(k).betti)) << name;
    EXPECT_EQ(euler_characteristic(k), alternating(testing::gf2_betti(k))) << name;
  }
}

TEST(Homology, UniversalCoefficients) {
  for (const auto& [name, k] : testing::corpus()) {
    auto z = homology(k);
    auto z2 = homology(k, Coefficients::Z2);
    for (std::size_t d = 0; d < z.betti.size(); ++d) {
      long t = even_torsion(z.torsion[d]) + (d > 0 ? even_torsion(z.torsion[d - 1]) : 0);
      EXPECT_EQ(z2.betti[d], z.betti[d] + t) << name << " degree " << d;
    }
  }
}

TEST(Homology, SubdivisionInvariance) {
  for (const auto& [name, k] : testing::corpus()) {
    auto sd = barycentric_subdivision(k).complex;
    auto a = homology(k), b = homology(sd);
    EXPECT_EQ(a.betti, b.betti) << name;
    EXPECT_EQ(a.torsion, b.torsion) << name;
  }
}

TEST(Homology, BoundaryOfBoundaryVanishes) {
  for (const auto& [name, k] : testing::corpus()) {
    auto ms = boundary_matrices(k);
    for (std::size_t i = 0; i + 1 < ms.size(); ++i) EXPECT_TRUE(composes_to_zero(ms[i], ms[i + 1])) << name;
  }
}

TEST(Homology, EdgeBoundaryColumn) {
  auto m = boundary_matrix(make({{0, 1}}), 1).to_dense();
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m[0][0], -1);
  EXPECT_EQ(m[1][0], 1);
}

TEST(Homology, KnownProfiles) {
  auto s2 = homology(testing::sphere(3));
  EXPECT_EQ(s2.betti, (std::vector<long>{1, 0, 1}));
  EXPECT_FALSE(s2.has_torsion());
  auto rp = homology(testing::rp2());
  EXPECT_EQ(rp.betti, (std::vector<long>{1, 0, 0}));
  EXPECT_EQ(rp.torsion[1], (std::vector<std::string>{"2"}));
  EXPECT_EQ(homology(testing::rp2(), Coefficients::Z2).betti, (std::vector<long>{1, 1, 1}));
  EXPECT_EQ(homology(testing::torus7()).betti, (std::vector<long>{1, 2, 1}));
  EXPECT_TRUE(homology(testing::dunce_hat()).is_acyclic());
  EXPECT_EQ(homology(testing::theta()).betti, (std::vector<long>{1, 2}));
  EXPECT_EQ(homology(barycentric_subdivision(testing::theta()).complex).betti, (std::vector<long>{1, 2}));
}

TEST(Homology, SuspensionShiftsTorsion) {
  auto h = homology(testing::suspension(testing::rp2(), 20, 21));
  EXPECT_EQ(h.betti, (std::vector<long>{1, 0, 0, 0}));
  EXPECT_EQ(h.torsion[2], (std::vector<std::string>{"2"}));
}

TEST(Homology, FundamentalCycle) {
  auto s = fundamental_cycle(testing::sphere(3));
  EXPECT_TRUE(s.chain.has_value());
  auto m = fundamental_cycle(testing::moebius());
  EXPECT_FALSE(m.chain.has_value());
  ASSERT_TRUE(m.witness.has_value());
  EXPECT_EQ(m.witness->dim(), 1);
  EXPECT_TRUE(fundamental_cycle(testing::rp2()).chain.has_value());
}

// ---------------------------------------------------------------------------
// Smith normal form.

TEST(Snf, SmallCases) {
  EXPECT_EQ(smith_normal_form({{1, 0}, {0, 1}}).d, (std::vector<BigInt>{1, 1}));
  EXPECT_EQ(smith_normal_form({{2, 4}, {6, 8}}).d, (std::vector<BigInt>{2, 4}));
  auto z = smith_normal_form({{0}});
  EXPECT_TRUE(z.d.empty());
  EXPECT_EQ(z.rank, 0u);
}

BigInt det(IntMatrix m) {
  // Bareiss fraction-free elimination
  const std::size_t n = m.size();
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

BigInt gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) a = std::exchange(b, a % b);
  return a;
}

// gcd of all k x k minors
BigInt determinantal_divisor(const IntMatrix& a, std::size_t k) {
  const std::size_t r = a.size(), c = a[0].size();
  BigInt g = 0;
  std::vector<bool> rs(r, false), cs(c, false);
  std::fill(rs.begin(), rs.begin() + static_cast<long>(k), true);
  do {
    std::fill(cs.begin(), cs.end(), false);
    std::fill(cs.begin(), cs.begin() + static_cast<long>(k), true);
    do {
      IntMatrix m;
      for (std::size_t i = 0; i < r; ++i) {
        if (!rs[i]) continue;
        m.emplace_back();
        for (std::size_t j = 0; j < c; ++j)
          if (cs[j]) m.back().push_back(a[i][j]);
      }
      g = gcd(g, det(m));
    } while (std::prev_permutation(cs.begin(), cs.end()));
  } while (std::prev_permutation(rs.begin(), rs.end()));
  return g;
}

TEST(Snf, RandomMatricesFactorAndMatchMinors) {
  std::mt19937 rng(20260101);
  std::uniform_int_distribution<int> entry(-9, 9), size(1, 5), zero(0, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = static_cast<std::size_t>(size(rng)), c = static_cast<std::size_t>(size(rng));
    IntMatrix a(r, std::vector<BigInt>(c));
    for (auto& row : a)
      for (auto& x : row) x = zero(rng) == 0 ? 0 : entry(rng);
    auto s = smith_normal_form(a, true);
    ASSERT_TRUE(s.U && s.V);
    auto p = multiply(multiply(*s.U, a), *s.V);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        BigInt want = (i == j && i < s.d.size()) ? s.d[i] : BigInt(0);
        ASSERT_EQ(p[i][j], want) << "trial " << trial;
      }
    EXPECT_EQ(abs(det(*s.U)), 1);
    EXPECT_EQ(abs(det(*s.V)), 1);
    ASSERT_EQ(s.rank, s.d.size());
    BigInt prod = 1;
    for (std::size_t i = 0; i < s.d.size(); ++i) {
      EXPECT_GT(s.d[i], 0);
      if (i + 1 < s.d.size()) EXPECT_EQ(s.d[i + 1] % s.d[i], 0);
      prod *= s.d[i];
      EXPECT_EQ(prod, determinantal_divisor(a, i + 1)) << "trial " << trial;
    }
    if (s.rank < std::min(r, c)) EXPECT_EQ(determinantal_divisor(a, s.rank + 1), 0);
    // sparse elimination agrees with the dense form
    SparseMatrix sp;
    sp.rows = r;
    sp.cols.resize(c);
    for (std::size_t j = 0; j < c; ++j)
      for (std::size_t i = 0; i < r; ++i)
        if (a[i][j] != 0) sp.cols[j].push_back({static_cast<int>(i), static_cast<std::int64_t>(a[i][j])});
    auto inv = invariant_factors(sp);
    EXPECT_EQ(inv.rank, s.rank);
    std::vector<BigInt> nonunit;
    for (const auto& d : s.d)
      if (d != 1) nonunit.push_back(d);
    EXPECT_EQ(inv.nonunit, nonunit);
  }
}

}  // namespace
}  // namespace bing
