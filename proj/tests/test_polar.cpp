#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hgc/counting.hpp"
#include "hgc/polar.hpp"

namespace {

using namespace hgc;

// Number of nonzero vectors x with Σ x_i^(q+1) = 0, by running through all of GF(q²)^m.
std::uint64_t brute_isotropic_vectors(const Field& f, int m) {
  std::uint64_t total = 1;
  for (int i = 0; i < m; ++i) total *= f.q2();
  std::uint64_t count = 0;
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    Elem s = 0;
    for (std::uint64_t r = idx; r; r /= f.q2()) s = f.add(s, f.norm(static_cast<Elem>(r % f.q2())));
    count += s == 0;
  }
  return count;
}

struct Instance {
  int m, p;
};

class PolarCounts : public ::testing::TestWithParam<Instance> {};
class PolarLines : public ::testing::TestWithParam<Instance> {};

TEST_P(PolarCounts, PointsMatchBruteForceAndFormula) {
  const Field f = Field::make(GetParam().p, 1);
  const int m = GetParam().m;
  const HermitianSpace s(f, m);
  const auto pts = enumerate_points(s);
  EXPECT_EQ(pts.size() * (f.q2() - 1), brute_isotropic_vectors(f, m));
  EXPECT_EQ(BigInt(pts.size()), mu(m, f.q()));
  EXPECT_TRUE(std::is_sorted(pts.begin(), pts.end()));
  EXPECT_EQ(std::set<ProjectivePoint>(pts.begin(), pts.end()).size(), pts.size());
  for (const auto& p : pts) {
    EXPECT_TRUE(is_isotropic(s, p.coords));
    EXPECT_EQ(p.coords[p.coords.lead()], 1);
  }
}

TEST_P(PolarLines, LinesMatchCollinearPairCount) {
  const Field f = Field::make(GetParam().p, 1);
  const int m = GetParam().m;
  const HermitianSpace s(f, m);
  const auto pts = enumerate_points(s);
  const auto lines = enumerate_lines(s, pts);
  // Each line holds q²+1 points, so (q²+1)q² ordered pairs of distinct collinear points.
  std::uint64_t pairs = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j) pairs += i != j && eta(s, pts[i].coords, pts[j].coords) == 0;
  const std::uint64_t per_line = static_cast<std::uint64_t>(f.q2() + 1) * f.q2();
  EXPECT_EQ(pairs % per_line, 0u);
  EXPECT_EQ(lines.size(), pairs / per_line);
  EXPECT_EQ(BigInt(lines.size()), line_count(m, f.q()));
  EXPECT_TRUE(std::is_sorted(lines.begin(), lines.end()));

  std::set<std::vector<Elem>> keys;
  for (const auto& l : lines) {
    EXPECT_TRUE(is_isotropic(s, l.v));
    EXPECT_TRUE(is_isotropic(s, l.w));
    EXPECT_EQ(eta(s, l.v, l.w), 0);
    EXPECT_LT(l.v.lead(), l.w.lead());
    EXPECT_EQ(l.w[l.v.lead()], 0);
    EXPECT_EQ(l.v[l.w.lead()], 0);
    const auto on = points_on(f, l);
    EXPECT_EQ(on.size(), static_cast<std::size_t>(f.q2() + 1));
    EXPECT_EQ(std::set<ProjectivePoint>(on.begin(), on.end()).size(), on.size());
    for (const auto& p : on) EXPECT_GE(find_point(pts, p), 0);
    keys.insert(Subspace::span(f, std::vector<Vec>{l.v, l.w}, m).key());
  }
  EXPECT_EQ(keys.size(), lines.size());
}

TEST_P(PolarLines, StarHasOneEntryPerLineThroughAPoint) {
  const Field f = Field::make(GetParam().p, 1);
  const int m = GetParam().m;
  const HermitianSpace s(f, m);
  const auto pts = enumerate_points(s);
  const auto lines = enumerate_lines(s, pts);
  const PointStar star(s, pts, lines);
  ASSERT_EQ(star.size(), pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    EXPECT_EQ(BigInt(star.through(i).size()), mu(m - 2, f.q()));
    for (const auto& b : star.through(i)) {
      EXPECT_TRUE(is_isotropic(s, b));
      EXPECT_EQ(eta(s, pts[i].coords, b), 0);
      EXPECT_NE(ProjectivePoint::of(f, b), pts[i]);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Small, PolarCounts,
                         ::testing::Values(Instance{2, 2}, Instance{3, 2}, Instance{4, 2}, Instance{5, 2},
                                           Instance{3, 3}, Instance{4, 3}),
                         [](const auto& info) {
                           return "m" + std::to_string(info.param.m) + "p" + std::to_string(info.param.p);
                         });
INSTANTIATE_TEST_SUITE_P(Small, PolarLines, ::testing::Values(Instance{4, 2}, Instance{5, 2}, Instance{4, 3}),
                         [](const auto& info) {
                           return "m" + std::to_string(info.param.m) + "p" + std::to_string(info.param.p);
                         });

TEST(Polar, EtaIsSesquilinearAndHermitian) {
  const Field f = Field::make(3, 1);
  const HermitianSpace s(f, 4);
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    Vec x(4), y(4);
    for (int i = 0; i < 4; ++i) {
      x[i] = static_cast<Elem>(rng() % 9);
      y[i] = static_cast<Elem>(rng() % 9);
    }
    const Elem a = static_cast<Elem>(rng() % 9);
    EXPECT_EQ(eta(s, scale(f, a, x), y), f.mul(f.frob(a), eta(s, x, y)));
    EXPECT_EQ(eta(s, x, scale(f, a, y)), f.mul(a, eta(s, x, y)));
    EXPECT_EQ(eta(s, y, x), f.frob(eta(s, x, y)));
  }
}

TEST(Polar, PerpDimensionsAndDoublePerp) {
  const Field f = Field::make(2, 1);
  const HermitianSpace s(f, 6);
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    Matrix m(1 + trial % 5, 6);
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < 6; ++j) m(i, j) = static_cast<Elem>(rng() % 4);
    const Subspace w = Subspace::span(f, m);
    const Subspace wp = perp(s, w);
    EXPECT_EQ(wp.dim(), 6 - w.dim());
    EXPECT_EQ(perp(s, wp), w);
  }
}

TEST(Polar, RadicalProfileCountMatchesConeFormula) {
  const Field f = Field::make(2, 1);
  const HermitianSpace s(f, 6);
  std::mt19937_64 rng(8);
  std::set<std::pair<int, int>> seen;
  for (int trial = 0; trial < 300; ++trial) {
    const int d = 1 + trial % 5;
    std::vector<Vec> vs;
    // Bias towards isotropic vectors so that degenerate profiles turn up.
    const auto pts = enumerate_points(s);
    for (int i = 0; i < d; ++i) vs.push_back(pts[rng() % pts.size()].coords);
    const Subspace r = Subspace::span(f, vs, 6);
    const auto prof = radical_profile(s, r);
    EXPECT_EQ(prof.d, r.dim());
    EXPECT_EQ(prof.t, intersect(f, r, perp(s, r)).dim());
    ASSERT_TRUE(prof.counted_points.has_value());
    EXPECT_EQ(*prof.counted_points, prof.formula_points) << prof.label();
    EXPECT_EQ(BigInt(prof.formula_points), cone_points(prof.d, prof.t, 2));
    EXPECT_EQ(prof.label(), "[Pi_" + std::to_string(prof.t) + "]H_" + std::to_string(prof.d - prof.t));
    seen.insert({prof.d, prof.t});
  }
  EXPECT_GT(seen.size(), 6u);
}

TEST(Polar, OtherGramMatrixGivesSameCounts) {
  const Field f = Field::make(2, 1);
  const int m = 4;
  Matrix h(m, m);
  for (int i = 0; i < m; ++i) h(i, m - 1 - i) = 1;  // Σ conj(x_i)·y_(m-1-i)
  const HermitianSpace s(f, h);
  EXPECT_FALSE(s.identity_gram());
  const auto pts = enumerate_points(s);
  EXPECT_EQ(BigInt(pts.size()), mu(m, 2));
  EXPECT_EQ(BigInt(enumerate_lines(s, pts).size()), line_count(m, 2));
}

TEST(Polar, RejectsBadGramMatrices) {
  const Field f = Field::make(2, 1);
  Matrix not_hermitian = Matrix::identity(3);
  not_hermitian(0, 1) = 2;
  EXPECT_THROW(HermitianSpace(f, not_hermitian), std::invalid_argument);
  Matrix singular(3, 3);
  singular(0, 0) = 1;
  EXPECT_THROW(HermitianSpace(f, singular), std::invalid_argument);
  EXPECT_THROW(HermitianSpace(f, Matrix(2, 3)), std::invalid_argument);
}

TEST(Polar, FindPoint) {
  const Field f = Field::make(2, 1);
  const HermitianSpace s(f, 3);
  const auto pts = enumerate_points(s);
  for (std::size_t i = 0; i < pts.size(); ++i) EXPECT_EQ(find_point(pts, pts[i]), static_cast<long>(i));
  EXPECT_EQ(find_point(pts, ProjectivePoint::of(f, Vec{1, 0, 0})), -1);
}

}  // namespace
