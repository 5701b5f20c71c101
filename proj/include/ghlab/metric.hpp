#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ghlab/sphere.hpp"

namespace ghlab {

/// Finite metric space: labels plus a symmetric distance matrix, with an
/// optional index involution i <-> iota(i) that preserves distances exactly.
class FiniteMetricSpace {
 public:
  FiniteMetricSpace(std::vector<std::string> labels, std::vector<double> dist,
                    std::optional<std::vector<int>> involution = std::nullopt);

  // Geodesic (or chordal) metric on a list of sphere points. When
  // `pair_antipodes` is set, points must come in exact +-pairs (2j, 2j+1)
  // and the involution swaps them.
  static FiniteMetricSpace from_sphere_points(
      const std::vector<SpherePoint>& pts, bool euclidean = false,
      bool pair_antipodes = false);

  int size() const { return static_cast<int>(labels_.size()); }
  double d(int i, int j) const { return dist_[index(i, j)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::optional<std::vector<int>>& involution() const {
    return involution_;
  }
  int iota(int i) const;

 private:
  size_t index(int i, int j) const {
    return static_cast<size_t>(i) * labels_.size() + static_cast<size_t>(j);
  }
  std::vector<std::string> labels_;
  std::vector<double> dist_;  // row-major, size n*n
  std::optional<std::vector<int>> involution_;
};

/// Relation between two finite metric spaces as index pairs.
struct Relation {
  std::vector<std::pair<int, int>> pairs;

  bool surjective_left(int nx) const;
  bool surjective_right(int ny) const;
  bool is_correspondence(int nx, int ny) const {
    return surjective_left(nx) && surjective_right(ny);
  }
  static Relation graph_of(const std::vector<int>& g);
};

double subset_diameter(const FiniteMetricSpace& space,
                       const std::vector<int>& subset);

// sup over matched pairs of |d_X(x,x') - d_Y(y,y')|.
double distortion(const Relation& r, const FiniteMetricSpace& X,
                  const FiniteMetricSpace& Y);
// Distortion of the graph of g : X -> Y, computed directly.
double function_distortion(const std::vector<int>& g,
                           const FiniteMetricSpace& X,
                           const FiniteMetricSpace& Y);
// sup over (x, y) of |d_X(x, h(y)) - d_Y(g(x), y)|.
double codistortion(const std::vector<int>& g, const std::vector<int>& h,
                    const FiniteMetricSpace& X, const FiniteMetricSpace& Y);
// Symmetrized Hausdorff distance between index subsets of a common space.
double hausdorff_distance(const FiniteMetricSpace& space,
                          const std::vector<int>& a, const std::vector<int>& b);

// Exact Gromov-Hausdorff distance of tiny spaces:
// (1/2) min over correspondences R of dis(R). Enumerates pairs of functions
// (g : X->Y, h : Y->X); the union graph(g) u graph(h)^T realizes the minimal
// correspondences, and dis of that union is max{dis g, dis h, codis(g, h)}.
// Throws BudgetError when |X| * |Y| exceeds max_cells.
double gh_bruteforce(const FiniteMetricSpace& X, const FiniteMetricSpace& Y,
                     size_t max_cells = 25);

/// Odd extension of a map defined on half of a symmetric point set, with the
/// Euclidean-metric distortion guarantee dis(ext) <= sqrt(dis(4 - dis)).
struct HelmetExtension {
  std::vector<int> domain;       // C followed by iota(C)
  std::vector<Vec> values;       // unit vectors, values[i] for domain[i]
  double dis_phi;                // distortion of the original map on C
  double dis_extension;          // distortion of the odd extension
  double bound;                  // sqrt(dis_phi * (4 - dis_phi))
};

// X must carry an involution and the Euclidean (chord) metric; C and iota(C)
// must be disjoint. phi maps C (by position) to unit vectors.
HelmetExtension helmet_extend_euclidean(const FiniteMetricSpace& X,
                                        const std::vector<int>& C,
                                        const std::vector<Vec>& phi);

}  // namespace ghlab
