#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "doctest.h"
#include "ghlab/rng.hpp"
#include "ghlab/vr.hpp"

using namespace ghlab;

namespace {

// Cycle graph metric scaled by `unit`; exact multiples, so clique thresholds
// are never decided by arccos rounding.
FiniteMetricSpace cycle_space(int m, double unit, bool with_involution = false) {
  std::vector<std::string> labels;
  std::vector<double> dist(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i) labels.push_back(std::to_string(i));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int step = std::min(std::abs(i - j), m - std::abs(i - j));
      dist[static_cast<size_t>(i) * m + j] = step * unit;
    }
  std::optional<std::vector<int>> inv;
  if (with_involution) {
    std::vector<int> iota(m);
    for (int i = 0; i < m; ++i) iota[i] = (i + m / 2) % m;
    inv = iota;
  }
  return FiniteMetricSpace(labels, dist, inv);
}

long simplex_count(const VRComplex& c, int d) {
  if (d >= static_cast<int>(c.simplices.by_dim.size())) return 0;
  return static_cast<long>(c.simplices.by_dim[static_cast<size_t>(d)].size());
}

}  // namespace

TEST_SUITE("vr") {

TEST_CASE("hexagon at the edge scale is a circle") {
  VRComplex c = build_vr(cycle_space(6, M_PI / 3), M_PI / 3, 3);
  CHECK(simplex_count(c, 0) == 6);
  CHECK(simplex_count(c, 1) == 6);
  CHECK(simplex_count(c, 2) == 0);
  BettiVector b = f2_homology(c, 2);
  REQUIRE(b.values.size() == 3);
  CHECK(b.values[0] == 1);
  CHECK(b.values[1] == 1);
  CHECK(b.values[2] == 0);
  CHECK(euler_characteristic(c.simplices) == 0);
}

TEST_CASE("11-gon at four steps is a 3-sphere") {
  double unit = 2 * M_PI / 11;
  VRComplex c = build_vr(cycle_space(11, unit), 4 * unit, 5);
  // Each vertex joins its 8 nearest neighbors.
  CHECK(simplex_count(c, 1) == 11 * 8 / 2);
  BettiVector b = f2_homology(c, 4);
  REQUIRE(b.values.size() == 5);
  CHECK(b.values[0] == 1);
  CHECK(b.values[1] == 0);
  CHECK(b.values[2] == 0);
  CHECK(b.values[3] == 1);
  CHECK(b.values[4] == 0);
}

TEST_CASE("full simplex") {
  VRComplex c = build_vr(cycle_space(5, 0.1), 1.0, 4);
  for (int d = 0; d <= 4; ++d) {
    long binom = 1;
    for (int i = 0; i <= d; ++i) binom = binom * (5 - i) / (i + 1);
    CHECK(simplex_count(c, d) == binom);
  }
  BettiVector b = f2_homology(c, 3);
  CHECK(b.values == std::vector<long>{1, 0, 0, 0});
  CHECK(euler_characteristic(c.simplices) == 1);
}

TEST_CASE("simplices are cliques and monotone in r") {
  FiniteMetricSpace base = cycle_space(9, 0.5);
  VRComplex small = build_vr(base, 0.5, 3);
  VRComplex big = build_vr(base, 1.0, 3);
  for (size_t d = 0; d < small.simplices.by_dim.size(); ++d)
    for (const Simplex& s : small.simplices.by_dim[d]) {
      CHECK(std::is_sorted(s.begin(), s.end()));
      for (size_t a = 0; a < s.size(); ++a)
        for (size_t bidx = a + 1; bidx < s.size(); ++bidx)
          CHECK(base.d(s[a], s[bidx]) <= small.r);
      CHECK(big.simplices.find(static_cast<int>(d), s) >= 0);
    }
  CHECK(small.simplices.find(1, Simplex{0, 4}) == -1);
}

TEST_CASE("budget error") {
  CHECK_THROWS_AS(build_vr(cycle_space(20, 0.01), 1.0, 10, 50), BudgetError);
}

TEST_CASE("z2 action on the symmetric hexagon") {
  FiniteMetricSpace base = cycle_space(6, M_PI / 3, true);
  VRComplex c = build_vr(base, M_PI / 3, 2);
  auto act = z2_action(c);
  REQUIRE(act.size() >= 2);
  for (int i = 0; i < 6; ++i) {
    int pos = c.simplices.find(0, Simplex{i});
    int img = act[0][static_cast<size_t>(pos)];
    CHECK(c.simplices.by_dim[0][static_cast<size_t>(img)] ==
          Simplex{(i + 3) % 6});
  }
  int e01 = c.simplices.find(1, Simplex{0, 1});
  REQUIRE(e01 >= 0);
  CHECK(c.simplices.by_dim[1][static_cast<size_t>(act[1][static_cast<size_t>(e01)])] ==
        Simplex{3, 4});
  // Involution of the action: applying twice is the identity.
  for (size_t d = 0; d < act.size(); ++d)
    for (size_t i = 0; i < act[d].size(); ++i)
      CHECK(act[d][static_cast<size_t>(act[d][i])] == static_cast<int>(i));

  // At r = pi the antipodal edge appears and is fixed: the action is not free.
  VRComplex full = build_vr(base, M_PI, 2);
  CHECK_THROWS_AS(z2_action(full), ValidationError);
}

TEST_CASE("euler characteristic matches the betti alternating sum") {
  for (int m : {5, 7, 8}) {
    VRComplex c = build_vr(cycle_space(m, 1.0), 2.0 + 1e-9, m);
    BettiVector b = f2_homology(c.simplices, c.simplices.top_dim());
    long alt = 0;
    for (size_t i = 0; i < b.values.size(); ++i)
      alt += (i % 2 == 0 ? b.values[i] : -b.values[i]);
    CHECK(euler_characteristic(c.simplices) == alt);
  }
}

TEST_CASE("barycentric subdivision") {
  // One edge -> path with 3 vertices.
  VRComplex edge = build_vr(cycle_space(2, 1.0), 1.0, 1);
  SimplexList sd = barycentric_subdivision(edge);
  CHECK(sd.by_dim[0].size() == 3);
  CHECK(sd.by_dim[1].size() == 2);

  // Triangle boundary -> hexagon.
  VRComplex tri = build_vr(cycle_space(3, 1.0), 1.0, 1);
  SimplexList sdt = barycentric_subdivision(tri);
  CHECK(sdt.by_dim[0].size() == 6);
  CHECK(sdt.by_dim[1].size() == 6);
  BettiVector bt = f2_homology(sdt, 1);
  CHECK(bt.values == std::vector<long>{1, 1});

  // Homology is invariant under subdivision, including a 2-dimensional case.
  VRComplex c11 = build_vr(cycle_space(11, 1.0), 2.0, 2);
  BettiVector before = f2_homology(c11.simplices, 1);
  BettiVector after = f2_homology(barycentric_subdivision(c11), 1);
  CHECK(before.values == after.values);

  for (const Simplex& chain : sdt.by_dim[1]) CHECK(chain.size() == 2);
}

TEST_CASE("induced simplicial maps") {
  FiniteMetricSpace hexagon = cycle_space(6, M_PI / 3, true);
  VRComplex c = build_vr(hexagon, M_PI / 3, 2);

  std::vector<int> id(6);
  std::iota(id.begin(), id.end(), 0);
  InducedMap ident = induced_map(id, c, hexagon);
  CHECK(ident.dis_f == 0.0);
  CHECK(ident.target_scale == c.r);
  CHECK(ident.diameters_ok);
  CHECK(ident.odd);

  std::vector<int> rot(6);
  for (int i = 0; i < 6; ++i) rot[static_cast<size_t>(i)] = (i + 1) % 6;
  InducedMap rotated = induced_map(rot, c, hexagon);
  CHECK(rotated.dis_f == 0.0);
  CHECK(rotated.odd);

  std::vector<int> constant(6, 0);
  InducedMap col = induced_map(constant, c, hexagon);
  CHECK(col.dis_f == doctest::Approx(M_PI).epsilon(1e-14));
  CHECK(col.diameters_ok);
  CHECK_FALSE(col.odd);

  CHECK_THROWS_AS(induced_map(std::vector<int>{0, 1, 2}, c, hexagon),
                  ValidationError);
  CHECK_THROWS_AS(induced_map(std::vector<int>(6, 17), c, hexagon),
                  ValidationError);
}

TEST_CASE("partition of unity") {
  SymmetricNet net = symmetric_net(1, 0.9, 13);
  double eps = 1.0;
  for (uint64_t t = 0; t < 300; ++t) {
    SpherePoint y(sample_sphere(1, 41, t));
    BarycentricPoint p = partition_of_unity_map(net, eps, y);
    REQUIRE(!p.support.empty());
    REQUIRE(p.support.size() == p.weights.size());
    CHECK(std::is_sorted(p.support.begin(), p.support.end()));
    double sum = 0.0;
    for (size_t i = 0; i < p.support.size(); ++i) {
      CHECK(p.weights[i] > 0.0);
      CHECK(geodesic_distance(net.points[static_cast<size_t>(p.support[i])], y) <
            eps / 2);
      sum += p.weights[i];
    }
    CHECK(std::fabs(sum - 1.0) <= 1e-12);

    // Exact oddness: support negates, weights match bit for bit.
    BarycentricPoint q = partition_of_unity_map(net, eps, y.antipode());
    REQUIRE(q.support.size() == p.support.size());
    for (size_t i = 0; i < p.support.size(); ++i) {
      int ni = net.neg[static_cast<size_t>(p.support[i])];
      auto it = std::find(q.support.begin(), q.support.end(), ni);
      REQUIRE(it != q.support.end());
      CHECK(q.weights[static_cast<size_t>(it - q.support.begin())] ==
            p.weights[i]);
    }
  }

  // A net point is its own heaviest neighbor.
  BarycentricPoint at0 = partition_of_unity_map(net, eps, net.points[0]);
  auto self = std::find(at0.support.begin(), at0.support.end(), 0);
  REQUIRE(self != at0.support.end());
  double w0 = at0.weights[static_cast<size_t>(self - at0.support.begin())];
  for (double w : at0.weights) CHECK(w <= w0);

  CHECK_THROWS_AS(partition_of_unity_map(net, 0.0, net.points[0]),
                  ValidationError);
  // Coarse net, tiny scale: points far from every center are rejected.
  SymmetricNet coarse = symmetric_net(1, 1.5, 13, 2);
  bool threw = false;
  for (uint64_t t = 0; t < 200 && !threw; ++t) {
    try {
      partition_of_unity_map(coarse, 0.05, SpherePoint(sample_sphere(1, 43, t)));
    } catch (const ValidationError&) {
      threw = true;
    }
  }
  CHECK(threw);
}

}  // TEST_SUITE
