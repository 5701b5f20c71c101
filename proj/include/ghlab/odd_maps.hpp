#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ghlab/covering.hpp"
#include "ghlab/sphere.hpp"
#include "ghlab/vr.hpp"

namespace ghlab {

/// Deterministic point-to-point map between spheres, odd by construction:
/// eval(-x) is the exact coordinate negation of eval(x).
struct OddFunction {
  int domain_dim;   // domain S^domain_dim
  int target_dim;   // target S^target_dim
  std::string construction;
  std::function<SpherePoint(const SpherePoint&)> eval;
};

// Nearest-equator projection on each open hemisphere; poles map to a fixed
// +- pair. S^{n+1} -> S^n.
OddFunction equatorial_helmet(int n);

// Thickened equator maps by the equator projection, the polar cones over the
// projected simplex facets map to the opposite simplex vertices; the lower
// hemisphere by oddness. S^{n+1} -> S^n.
OddFunction cone_vertex_function(int n);

// Partition of unity into the net's scale-epsilon complex, then the odd
// vertex selector on the heaviest-weight set. S^n -> S^n (n = net dimension).
OddFunction vr_pipeline_function(SymmetricNet net, double epsilon);

OddFunction identity_function(int n);

// Precompose with the isometric equatorial inclusion S^{k-1} -> S^k.
OddFunction compose_with_equatorial_inclusion(const OddFunction& f);

// Index-max selector: let m be the largest index in sigma u neg(sigma);
// returns m if m is in sigma, else neg(m). Well defined when sigma is
// disjoint from its image, and manifestly odd.
int odd_select(const Simplex& sigma, const std::vector<int>& neg);

// Selected vertex for every simplex of a symmetric complex (per dimension).
// Throws if some simplex meets its involution image.
std::vector<std::vector<int>> vr_vertex_select(const VRComplex& c);

// Vertices of p carrying the (exactly) largest weight, ascending.
Simplex argmax_weight_set(const BarycentricPoint& p);

// f(x) = selected vertex of the heaviest-weight set of h(x).
std::function<SpherePoint(const SpherePoint&)> realization_to_function(
    const std::function<BarycentricPoint(const SpherePoint&)>& h,
    const SymmetricNet& net);

struct DiscontinuityEstimate {
  double eta;
  size_t samples;
  double delta_hat;
  long worst_sample;  // index of a sample witnessing delta_hat, or -1
};

// Lower estimate of the modulus of discontinuity: max over sampled pairs at
// geodesic distance < eta of (image distance - domain distance). Subtracting
// the domain distance removes the O(eta) diameter bias, so the estimate
// converges to the modulus from below and never exceeds a distortion
// estimate taken over the same pairs.
DiscontinuityEstimate estimate_modulus(const OddFunction& f, double eta,
                                       size_t samples, uint64_t seed);

// Max of |d(x,x') - d(f x, f x')| over seeded sampled pairs; lower bound of
// the true distortion. hemisphere_only restricts both points to the closed
// upper hemisphere (negate-to-reflect).
double estimate_distortion(const OddFunction& f, size_t pairs, uint64_t seed,
                           bool hemisphere_only = false);

struct OddMapReport {
  double eta;
  size_t samples;
  double delta_hat;
  double dis_hat;              // over the same close pairs plus global pairs
  long oddness_violations;
};

// Shared-sample report: delta_hat over close pairs, dis_hat over the union of
// those pairs and global pairs (so delta_hat <= dis_hat holds structurally),
// oddness checked bit-exactly on every sample.
OddMapReport odd_map_report(const OddFunction& f, double eta, size_t samples,
                            uint64_t seed);

// (2 sin(c/2), 2 - 2 cos(c/2)): the Euclidean-metric counterparts of a
// geodesic lower bound c on discontinuity and on twice the GH distance.
std::pair<double, double> euclidean_bounds(double c);

}  // namespace ghlab
