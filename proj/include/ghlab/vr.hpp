#pragma once

#include <cstdint>
#include <vector>

#include "ghlab/covering.hpp"
#include "ghlab/metric.hpp"

namespace ghlab {

using Simplex = std::vector<int>;  // sorted vertex indices

/// Abstract simplicial complex: simplices grouped by dimension, each list
/// sorted lexicographically (so positions are stable lookup keys).
struct SimplexList {
  std::vector<std::vector<Simplex>> by_dim;

  size_t count() const;
  int top_dim() const { return static_cast<int>(by_dim.size()) - 1; }
  // Position of s among the d-simplices, or -1.
  int find(int d, const Simplex& s) const;
};

/// Clique complex of the "distance <= r" graph, up to max_dim.
struct VRComplex {
  FiniteMetricSpace base;
  double r;
  int max_dim;  // dimensions above this are truncated
  SimplexList simplices;
};

VRComplex build_vr(const FiniteMetricSpace& base, double r, int max_dim,
                   size_t budget = 5000000);

// Extends the base involution to simplices. Per-dimension permutations:
// result[d][i] is the position of the image of simplices.by_dim[d][i].
// Throws ValidationError if some simplex is fixed (the action is not free,
// i.e. r reaches an antipodal distance).
std::vector<std::vector<int>> z2_action(const VRComplex& c);

struct BettiVector {
  std::vector<long> values;  // beta_0 .. beta_d over F_2
  int max_dim;
};

// Betti numbers via F_2 boundary-matrix rank; needs simplices through
// dimension up_to_dim + 1.
BettiVector f2_homology(const SimplexList& s, int up_to_dim);
BettiVector f2_homology(const VRComplex& c, int up_to_dim);

long euler_characteristic(const SimplexList& s);

// Vertices are the simplices of c (indexed by dimension then position);
// k-simplices are chains of proper inclusions of length k+1.
SimplexList barycentric_subdivision(const VRComplex& c, size_t budget = 5000000);

/// Simplicial map induced by a vertex function f : X -> Y, landing in
/// VR(Y; r + dis f).
struct InducedMap {
  std::vector<int> vertex_map;
  double dis_f;
  double target_scale;     // r + dis_f
  bool diameters_ok;       // every image simplex has diameter <= target_scale
  bool odd;                // commutes with the involutions (when both exist)
};

InducedMap induced_map(const std::vector<int>& f, const VRComplex& cx,
                       const FiniteMetricSpace& Y);

/// Point of the geometric realization: positive weights on the vertices of
/// one simplex, summing to 1.
struct BarycentricPoint {
  Simplex support;
  std::vector<double> weights;
};

// Partition of unity subordinate to the balls B(x, eps/2) around net points,
// evaluated at y: hat weights max(0, eps/2 - d(x, y)), normalized. The net
// must be exactly +-closed; then weights at -y are exactly the weights at y
// on the negated support (summation follows pair-canonical order so the
// normalizer is bit-identical). Throws if no net point is within eps/2 of y.
BarycentricPoint partition_of_unity_map(const SymmetricNet& net, double eps,
                                        const SpherePoint& y);

}  // namespace ghlab
