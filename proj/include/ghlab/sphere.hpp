#pragma once

#include <vector>

#include "ghlab/errors.hpp"

namespace ghlab {

using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b);
double norm(const Vec& a);
Vec negated(const Vec& a);           // exact coordinate-wise negation
Vec normalized(const Vec& a);        // throws ValidationError on zero vector
double chord_length(const Vec& a, const Vec& b);

/// Unit vector in R^{n+1} representing a point of S^n.
struct SpherePoint {
  Vec coords;

  explicit SpherePoint(Vec c) : coords(normalized(std::move(c))) {}
  int dim() const { return static_cast<int>(coords.size()) - 1; }
  SpherePoint antipode() const;
  bool operator==(const SpherePoint&) const = default;
};

// arccos of the clamped inner product, in [0, pi].
double geodesic_distance(const SpherePoint& x, const SpherePoint& y);
// Chord length ||x - y|| = 2 sin(geodesic/2), in [0, 2].
double euclidean_distance(const SpherePoint& x, const SpherePoint& y);

/// Point of RP^n held as a sign-canonical representative
/// (first nonzero coordinate positive).
struct ProjectivePoint {
  SpherePoint representative;

  explicit ProjectivePoint(const SpherePoint& x);
  int dim() const { return representative.dim(); }
};

// Quotient metric min(d(x, y), d(x, -y)), in [0, pi/2].
double projective_distance(const ProjectivePoint& p, const ProjectivePoint& q);

// Edge length arccos(-1/(n+1)) of the regular (n+1)-simplex inscribed in S^n.
double simplex_edge_length(int n);
// Diameter of a radially projected facet of that simplex:
// arccos(-(n+1)/(n+3)) for odd n, arccos(-sqrt(n/(n+4))) for even n.
double facet_diameter(int n);

/// The n+2 vertices of a regular (n+1)-simplex inscribed in S^n.
/// Pairwise geodesic distances all equal simplex_edge_length(n) and the
/// vertex sum is the zero vector.
struct SimplexFrame {
  int n;
  std::vector<SpherePoint> vertices;
};

SimplexFrame inscribed_simplex(int n);

// Index i (0-based) of the radially projected facet opposite vertex i that
// contains u: argmin over vertices of <u, p_i>, smallest index on ties.
int facet_membership(const SpherePoint& u, const SimplexFrame& frame);

// Golden-ratio coordinates; both sets are closed under negation.
std::vector<SpherePoint> icosahedron_vertices();   // 12 points of S^2
std::vector<SpherePoint> cell600_vertices();       // 120 points of S^3

// Nearest equator point of an upper-hemisphere x in S^{n+1}: zero the last
// coordinate and normalize. Throws on the pole and on the open lower
// hemisphere.
SpherePoint tau(const SpherePoint& x);

void require_same_dim(const SpherePoint& x, const SpherePoint& y);

}  // namespace ghlab
