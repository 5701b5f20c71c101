#pragma once

#include <string>
#include <vector>

#include "ghlab/metric.hpp"
#include "ghlab/sphere.hpp"

namespace ghlab {

/// Point-set file: header `dim=<n> count=<m> symmetric=<0|1>`, then one
/// point per line, whitespace-separated decimal coordinates.
struct PointSet {
  int dim;
  bool symmetric;
  std::vector<SpherePoint> points;
};

PointSet read_point_set(const std::string& path);
void write_point_set(const std::string& path, const PointSet& ps);

/// Distance-matrix file: `labels <l1> <l2> ...` header, then lower-triangular
/// rows (diagonal included), decimal.
FiniteMetricSpace read_distance_matrix(const std::string& path);
void write_distance_matrix(const std::string& path,
                           const FiniteMetricSpace& space);

// Decimal with `digits` significant digits; round-trips deterministically.
std::string format_sig(double v, int digits = 12);
// The double nearest that decimal rendering (stable JSON payloads).
double round_sig(double v, int digits = 12);

}  // namespace ghlab
