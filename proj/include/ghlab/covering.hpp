#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ghlab/sphere.hpp"

namespace ghlab {

enum class Space { Sphere, Projective };

/// Upper bound on the covering radius of a center set, with the construction
/// that produced it. radius_bound is measured by dense sampling, so it is an
/// empirical certificate, not a proof.
struct CoveringCertificate {
  Space space;
  int dim;
  std::vector<SpherePoint> centers;
  double radius_bound;
  std::string method;  // icosahedron | 600cell | simplex | greedy
};

/// Centrally symmetric point set with the exact-antipode pairing precomputed:
/// points[neg[i]] == -points[i] coordinate-wise.
struct SymmetricNet {
  std::vector<SpherePoint> points;
  std::vector<int> neg;
};

// Indexes an existing +-closed set; throws if some exact antipode is missing.
SymmetricNet index_symmetric(std::vector<SpherePoint> pts);

// Greedy farthest-point net on S^n built from +- pairs, grown until it
// covers a dense seeded sample strictly finer than epsilon/2, so that fresh
// points are epsilon/2-covered despite the sample's own resolution. Result is
// exactly closed under negation. max_points > 0 additionally caps the size.
SymmetricNet symmetric_net(int n, double epsilon, uint64_t seed,
                           size_t max_points = 0);

// Empirical covering radius: sup over `validation_samples` seeded uniform
// points of the distance to the nearest center (projective: quotient metric,
// centers read as +- classes). Underestimates the true radius.
double covering_radius(const std::vector<SpherePoint>& centers, Space space,
                       size_t validation_samples, uint64_t seed);

CoveringCertificate certify(std::vector<SpherePoint> centers, Space space,
                            const std::string& method, size_t samples,
                            uint64_t seed);

// Halves a +-closed set on S^n to one representative per class and certifies
// it as a cover of the projective space at the spherical covering radius of
// the full set.
CoveringCertificate projective_cover_bound(
    const std::vector<SpherePoint>& symmetric_centers, size_t samples,
    uint64_t seed, const std::string& method = "quotient");

}  // namespace ghlab
