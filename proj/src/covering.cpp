#include "ghlab/covering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ghlab/kernels.hpp"
#include "ghlab/parallel.hpp"
#include "ghlab/rng.hpp"

namespace ghlab {

SymmetricNet index_symmetric(std::vector<SpherePoint> pts) {
  SymmetricNet net;
  net.neg.assign(pts.size(), -1);
  for (size_t i = 0; i < pts.size(); ++i) {
    if (net.neg[i] >= 0) continue;
    Vec want = negated(pts[i].coords);
    bool found = false;
    for (size_t j = 0; j < pts.size(); ++j) {
      if (j == i || net.neg[j] >= 0) continue;
      if (pts[j].coords == want) {
        net.neg[i] = static_cast<int>(j);
        net.neg[j] = static_cast<int>(i);
        found = true;
        break;
      }
    }
    if (!found) throw ValidationError("point set is not closed under negation");
  }
  net.points = std::move(pts);
  return net;
}

SymmetricNet symmetric_net(int n, double epsilon, uint64_t seed,
                           size_t max_points) {
  if (n < 0) throw ValidationError("symmetric_net requires n >= 0");
  if (!(epsilon > 0.0)) throw ValidationError("symmetric_net requires epsilon > 0");

  // Dense pool the greedy insertion covers. The stopping target is strictly
  // finer than epsilon/2 and the pool is sized to the scale, so that fresh
  // points (never seen by the greedy loop) still sit within epsilon/2 of the
  // net despite the pool's own resolution.
  double target = 0.35 * epsilon;
  size_t pool_n = 50000;
  if (n >= 2) {
    double dense = 5000.0 / std::pow(epsilon, n);
    pool_n = std::max<size_t>(pool_n, static_cast<size_t>(
                                          std::min(dense, 1000000.0)));
  }
  std::vector<SpherePoint> pool;
  pool.reserve(pool_n);
  for (size_t i = 0; i < pool_n; ++i)
    pool.emplace_back(sample_sphere(n, seed, i));

  SymmetricNet net;
  Vec e1(static_cast<size_t>(n) + 1, 0.0);
  e1[0] = 1.0;
  net.points.emplace_back(e1);
  net.points.push_back(net.points[0].antipode());
  net.neg = {1, 0};

  std::vector<double> mind(pool_n);
  for (size_t i = 0; i < pool_n; ++i)
    mind[i] = std::min(geodesic_distance(pool[i], net.points[0]),
                       geodesic_distance(pool[i], net.points[1]));

  while (max_points == 0 || net.points.size() + 2 <= max_points) {
    size_t far = 0;
    for (size_t i = 1; i < pool_n; ++i)
      if (mind[i] > mind[far]) far = i;
    if (mind[far] < target) break;
    SpherePoint p = pool[far];
    SpherePoint q = p.antipode();
    int base = static_cast<int>(net.points.size());
    net.points.push_back(p);
    net.points.push_back(q);
    net.neg.push_back(base + 1);
    net.neg.push_back(base);
    for (size_t i = 0; i < pool_n; ++i) {
      double d = std::min(geodesic_distance(pool[i], p),
                          geodesic_distance(pool[i], q));
      if (d < mind[i]) mind[i] = d;
    }
  }
  return net;
}

double covering_radius(const std::vector<SpherePoint>& centers, Space space,
                       size_t validation_samples, uint64_t seed) {
  if (centers.empty()) throw ValidationError("covering_radius: no centers");
  int dim = centers[0].dim();
  for (const auto& c : centers)
    if (c.dim() != dim)
      throw ValidationError("covering_radius: mixed dimensions");
  size_t coords = static_cast<size_t>(dim) + 1;

  std::vector<double> flat(centers.size() * coords);
  for (size_t c = 0; c < centers.size(); ++c)
    std::copy(centers[c].coords.begin(), centers[c].coords.end(),
              flat.begin() + static_cast<long>(c * coords));

  bool absdot = (space == Space::Projective);
  kernels::MaxDotFn kernel = kernels::select_max_dot();

  unsigned workers = worker_count();
  std::vector<double> chunk_max(workers + 1, 0.0);
  parallel_chunks(validation_samples, [&](size_t begin, size_t end, unsigned w) {
    constexpr size_t kBlock = 1024;
    std::vector<double> pts(kBlock * coords);
    std::vector<double> best(kBlock);
    double worst = 0.0;
    for (size_t at = begin; at < end; at += kBlock) {
      size_t m = std::min(kBlock, end - at);
      for (size_t i = 0; i < m; ++i) {
        Vec v = sample_sphere(dim, seed, at + i);
        std::copy(v.begin(), v.end(), pts.begin() + static_cast<long>(i * coords));
      }
      kernel(pts.data(), m, flat.data(), centers.size(), coords, absdot,
             best.data());
      for (size_t i = 0; i < m; ++i) {
        double d = std::acos(std::clamp(best[i], -1.0, 1.0));
        if (d > worst) worst = d;
      }
    }
    chunk_max[w] = worst;
  });
  double radius = 0.0;
  for (double v : chunk_max) radius = std::max(radius, v);
  return radius;
}

CoveringCertificate certify(std::vector<SpherePoint> centers, Space space,
                            const std::string& method, size_t samples,
                            uint64_t seed) {
  if (centers.empty()) throw ValidationError("certify: no centers");
  double radius = covering_radius(centers, space, samples, seed);
  return {space, centers[0].dim(), std::move(centers), radius, method};
}

CoveringCertificate projective_cover_bound(
    const std::vector<SpherePoint>& symmetric_centers, size_t samples,
    uint64_t seed, const std::string& method) {
  SymmetricNet indexed = index_symmetric(symmetric_centers);
  std::vector<SpherePoint> half;
  for (size_t i = 0; i < indexed.points.size(); ++i)
    if (static_cast<int>(i) < indexed.neg[i]) half.push_back(indexed.points[i]);
  // One ball per +- class in the quotient covers exactly when the full
  // symmetric set covers the sphere, at the same radius.
  double radius = covering_radius(symmetric_centers, Space::Sphere, samples, seed);
  return {Space::Projective, symmetric_centers[0].dim(), std::move(half),
          radius, method};
}

}  // namespace ghlab
