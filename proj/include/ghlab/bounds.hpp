#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ghlab/covering.hpp"
#include "ghlab/sphere.hpp"

namespace ghlab {

/// Partition of the closed upper hemisphere of S^{n+1} into a thickened
/// equator E (geodesic distance to the pole > pi/3) and the polar cones
/// C_1..C_{n+2} over the projected simplex facets, with the explicit
/// low-distortion relation onto S^n.
struct HemisphereCorrespondence {
  int n;
  SimplexFrame frame;

  // 0 for E, i in 1..n+2 for cone C_i (pole -> C_1). Throws on the open
  // lower hemisphere.
  int classify(const SpherePoint& p) const;
  // E -> equator projection; C_i -> the vertex opposite facet i, negated.
  SpherePoint correspond(const SpherePoint& p) const;
};

HemisphereCorrespondence make_hemisphere_correspondence(int n);

/// Per-case distortion maxima over sampled hemisphere pairs.
struct CaseMaxima {
  double equator_equator = 0.0;  // both points in E
  double equator_cone = 0.0;     // mixed
  double cone_cone = 0.0;        // both in cones
  double overall = 0.0;
};

CaseMaxima verify_distortion(int n, size_t pairs, uint64_t seed);

/// One (n, k) bound entry with the facts that produced each endpoint.
struct BoundsCell {
  int n, k;
  double lower, upper;
  std::string lower_provenance, upper_provenance;
};

// Best certified lower bound on the obstruction constant for (n, k), k >= n:
// exact diagonal/circle/adjacent values, the projective-homotopy fact at
// (2, >=7), covering certificates (a projective certificate with c centers
// applies for k >= c at value pi - 2 * radius), all closed under the
// inclusion monotonicity (nondecreasing in k, nonincreasing in n).
double c_lower(int n, int k, const std::vector<CoveringCertificate>& certs,
               std::string* provenance = nullptr);

BoundsCell gh_cell(int n, int k, const std::vector<CoveringCertificate>& certs);
// Euclidean (chord metric) version: lower = 2 - 2 cos(c/2), upper = 2.
BoundsCell euclidean_cell(int n, int k,
                          const std::vector<CoveringCertificate>& certs);

std::vector<BoundsCell> gh_table(int max_n, int max_k, bool euclidean,
                                 const std::vector<CoveringCertificate>& certs);

}  // namespace ghlab
