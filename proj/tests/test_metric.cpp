#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"
#include "ghlab/metric.hpp"
#include "ghlab/rng.hpp"

using namespace ghlab;

namespace {

// Circle sample with exact step distances k * unit, immune to arccos noise.
FiniteMetricSpace cycle_space(int m, double unit) {
  std::vector<std::string> labels;
  std::vector<double> dist(static_cast<size_t>(m) * m, 0.0);
  for (int i = 0; i < m; ++i) labels.push_back("v" + std::to_string(i));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int step = std::min(std::abs(i - j), m - std::abs(i - j));
      dist[static_cast<size_t>(i) * m + j] = step * unit;
    }
  return FiniteMetricSpace(std::move(labels), std::move(dist));
}

FiniteMetricSpace two_points(double d) {
  return FiniteMetricSpace({"a", "b"}, {0.0, d, d, 0.0});
}

FiniteMetricSpace one_point() { return FiniteMetricSpace({"a"}, {0.0}); }

FiniteMetricSpace random_space(int m, uint64_t seed) {
  std::vector<SpherePoint> pts;
  for (int i = 0; i < m; ++i) pts.emplace_back(sample_sphere(2, seed, i));
  return FiniteMetricSpace::from_sphere_points(pts);
}

// Independent oracle: enumerate every subset of X x Y, keep correspondences,
// minimize distortion directly. Exponential, for tiny inputs only.
double gh_by_subset_enumeration(const FiniteMetricSpace& X,
                                const FiniteMetricSpace& Y) {
  int nx = X.size(), ny = Y.size();
  int cells = nx * ny;
  REQUIRE(cells <= 16);
  double best = std::numeric_limits<double>::infinity();
  for (unsigned mask = 1; mask < (1u << cells); ++mask) {
    Relation r;
    for (int c = 0; c < cells; ++c)
      if (mask >> c & 1) r.pairs.emplace_back(c / ny, c % ny);
    if (!r.is_correspondence(nx, ny)) continue;
    best = std::min(best, distortion(r, X, Y));
  }
  return best / 2.0;
}

}  // namespace

TEST_SUITE("metric") {

TEST_CASE("construction validation") {
  CHECK_THROWS_AS(FiniteMetricSpace({"a", "b"}, {0, 1, 2, 0}), ValidationError);
  CHECK_THROWS_AS(FiniteMetricSpace({"a", "b"}, {0.5, 1, 1, 0}), ValidationError);
  CHECK_THROWS_AS(FiniteMetricSpace({"a", "b"}, {0, -1, -1, 0}), ValidationError);
  // Triangle violation: d(a,c) = 5 > 1 + 1.
  CHECK_THROWS_AS(FiniteMetricSpace({"a", "b", "c"},
                                    {0, 1, 5, 1, 0, 1, 5, 1, 0}),
                  ValidationError);
  // Involution must preserve distances.
  CHECK_THROWS_AS(FiniteMetricSpace({"a", "b", "c"},
                                    {0, 1, 2, 1, 0, 1.5, 2, 1.5, 0},
                                    std::vector<int>{1, 0, 2}),
                  ValidationError);
  CHECK_THROWS_AS(FiniteMetricSpace({"a", "b"}, {0, 1, 1, 0},
                                    std::vector<int>{1, 1}),
                  ValidationError);
}

TEST_CASE("antipode pairing") {
  std::vector<SpherePoint> pts;
  for (int i = 0; i < 4; ++i) {
    SpherePoint p(sample_sphere(2, 3, static_cast<uint64_t>(i)));
    pts.push_back(p);
    pts.push_back(p.antipode());
  }
  FiniteMetricSpace X = FiniteMetricSpace::from_sphere_points(pts, false, true);
  CHECK(X.iota(0) == 1);
  CHECK(X.iota(5) == 4);
  for (int i = 0; i < X.size(); ++i)
    for (int j = 0; j < X.size(); ++j)
      CHECK(X.d(i, j) == X.d(X.iota(i), X.iota(j)));
  CHECK_THROWS_AS(
      FiniteMetricSpace::from_sphere_points(
          {SpherePoint(Vec{1, 0}), SpherePoint(Vec{0, 1})}, false, true),
      ValidationError);
}

TEST_CASE("subset diameter") {
  FiniteMetricSpace hex = cycle_space(6, M_PI / 3);
  CHECK(subset_diameter(hex, {2}) == 0.0);
  CHECK(subset_diameter(hex, {0, 1, 2, 3, 4, 5}) == doctest::Approx(M_PI));
  CHECK(subset_diameter(two_points(M_PI), {0, 1}) == doctest::Approx(M_PI));
  CHECK_THROWS_AS(subset_diameter(hex, {}), ValidationError);
}

TEST_CASE("distortion") {
  FiniteMetricSpace hex = cycle_space(6, M_PI / 3);
  Relation identity;
  for (int i = 0; i < 6; ++i) identity.pairs.emplace_back(i, i);
  CHECK(distortion(identity, hex, hex) == 0.0);

  Relation full;
  full.pairs = {{0, 0}, {1, 0}};
  CHECK(distortion(full, two_points(1.0), one_point()) == doctest::Approx(1.0));

  Relation bad;
  bad.pairs = {{0, 7}};
  CHECK_THROWS_AS(distortion(bad, hex, hex), ValidationError);
  CHECK_THROWS_AS(distortion(Relation{}, hex, hex), ValidationError);

  // Matched pairs within epsilon inside a common space distort by <= 2 eps.
  FiniteMetricSpace big = random_space(14, 99);
  for (double eps : {0.3, 0.7}) {
    Relation r;
    for (int i = 0; i < big.size(); ++i)
      for (int j = 0; j < big.size(); ++j)
        if (big.d(i, j) <= eps) r.pairs.emplace_back(i, j);
    CHECK(distortion(r, big, big) <= 2 * eps + 1e-12);
  }
}

TEST_CASE("function distortion matches the relation formula") {
  FiniteMetricSpace X = random_space(6, 17);
  FiniteMetricSpace Y = random_space(5, 18);
  SplitMix64 rng(123);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> g(static_cast<size_t>(X.size()));
    for (int& v : g) v = static_cast<int>(rng.next() % Y.size());
    CHECK(function_distortion(g, X, Y) ==
          distortion(Relation::graph_of(g), X, Y));
  }
}

TEST_CASE("codistortion") {
  FiniteMetricSpace hex = cycle_space(6, M_PI / 3);
  std::vector<int> id = {0, 1, 2, 3, 4, 5};
  CHECK(codistortion(id, id, hex, hex) == 0.0);

  double d = 0.8;
  FiniteMetricSpace pair = two_points(d);
  CHECK(codistortion({0, 1}, {1, 0}, pair, pair) == doctest::Approx(d));
}

TEST_CASE("hausdorff distance") {
  FiniteMetricSpace hex = cycle_space(6, M_PI / 3);
  CHECK(hausdorff_distance(hex, {0, 2, 4}, {0, 2, 4}) == 0.0);
  CHECK(hausdorff_distance(hex, {1}, {1, 4}) == doctest::Approx(M_PI));
  CHECK(hausdorff_distance(hex, {0, 1, 2, 3, 4, 5}, {0, 2, 4}) ==
        doctest::Approx(M_PI / 3));
  CHECK_THROWS_AS(hausdorff_distance(hex, {}, {0}), ValidationError);
}

TEST_CASE("brute-force oracle: simple exact values") {
  for (double d : {0.5, 1.0, 2.0})
    CHECK(gh_bruteforce(one_point(), two_points(d)) == doctest::Approx(d / 2));
  FiniteMetricSpace X = random_space(4, 5);
  CHECK(gh_bruteforce(X, X) == 0.0);
  CHECK(gh_bruteforce(X, random_space(5, 6)) ==
        gh_bruteforce(random_space(5, 6), X));
}

TEST_CASE("brute-force oracle: permuted copies are at distance zero") {
  std::mt19937 perm_rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    FiniteMetricSpace X = random_space(5, 40 + static_cast<uint64_t>(trial));
    std::vector<int> perm(5);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), perm_rng);
    std::vector<double> dist(25);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        dist[static_cast<size_t>(i) * 5 + j] =
            X.d(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
    FiniteMetricSpace Y(X.labels(), dist);
    CHECK(gh_bruteforce(X, Y) == 0.0);
  }
}

TEST_CASE("brute-force oracle agrees with subset enumeration") {
  FiniteMetricSpace tri = cycle_space(3, 2 * M_PI / 3);
  FiniteMetricSpace sq = cycle_space(4, M_PI / 2);
  double fast = gh_bruteforce(tri, sq);
  double slow = gh_by_subset_enumeration(tri, sq);
  CHECK(fast == doctest::Approx(slow).epsilon(1e-14));
  CHECK(fast > 0.0);

  FiniteMetricSpace A = random_space(3, 21);
  FiniteMetricSpace B = random_space(4, 22);
  CHECK(gh_bruteforce(A, B) ==
        doctest::Approx(gh_by_subset_enumeration(A, B)).epsilon(1e-14));
}

TEST_CASE("brute-force oracle budget") {
  CHECK_THROWS_AS(gh_bruteforce(random_space(6, 1), random_space(6, 2)),
                  BudgetError);
}

TEST_CASE("codistortion triple never undercuts the oracle") {
  SplitMix64 rng(321);
  FiniteMetricSpace X = random_space(3, 71);
  FiniteMetricSpace Y = random_space(3, 72);
  double oracle = gh_bruteforce(X, Y);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> g(3), h(3);
    for (int& v : g) v = static_cast<int>(rng.next() % 3);
    for (int& v : h) v = static_cast<int>(rng.next() % 3);
    double bound = std::max({function_distortion(g, X, Y),
                             function_distortion(h, Y, X),
                             codistortion(g, h, X, Y)});
    CHECK(bound >= 2 * oracle - 1e-12);
  }
}

TEST_CASE("helmet extension") {
  // Isometric phi extends to an isometry.
  std::vector<SpherePoint> pts;
  for (int i = 0; i < 6; ++i) {
    SpherePoint p(sample_sphere(1, 61, static_cast<uint64_t>(i)));
    pts.push_back(p);
    pts.push_back(p.antipode());
  }
  FiniteMetricSpace X = FiniteMetricSpace::from_sphere_points(pts, true, true);
  std::vector<int> C = {0, 2, 4, 6, 8, 10};
  std::vector<Vec> phi;
  for (int i : C) phi.push_back(pts[static_cast<size_t>(i)].coords);
  HelmetExtension iso = helmet_extend_euclidean(X, C, phi);
  CHECK(iso.dis_phi == 0.0);
  CHECK(iso.dis_extension == 0.0);
  CHECK(iso.bound == 0.0);
  // Values on iota(C) are exact negations.
  for (size_t a = 0; a < C.size(); ++a)
    CHECK(iso.values[C.size() + a] == negated(iso.values[a]));

  CHECK_THROWS_AS(helmet_extend_euclidean(X, {0, 1}, {phi[0], phi[1]}),
                  ValidationError);

  // Random phi: the distortion bound holds.
  for (uint64_t trial = 0; trial < 100; ++trial) {
    std::vector<Vec> rphi;
    for (size_t a = 0; a < C.size(); ++a)
      rphi.push_back(sample_sphere(1, 600 + trial, a));
    HelmetExtension ext = helmet_extend_euclidean(X, C, rphi);
    CHECK(ext.dis_extension <=
          std::sqrt(ext.dis_phi * (4.0 - ext.dis_phi)) + 1e-9);
    CHECK(ext.bound == std::sqrt(ext.dis_phi * (4.0 - ext.dis_phi)));
  }
  CHECK(std::fabs(std::sqrt(2.0 * (4.0 - 2.0)) - 2.0) <= 1e-15);
}

}  // TEST_SUITE
