#include "ghlab/sphere.hpp"

#include <algorithm>
#include <cmath>

namespace ghlab {

double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

Vec negated(const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Vec normalized(const Vec& a) {
  double n = norm(a);
  if (!(n > 1e-300)) throw ValidationError("cannot normalize zero vector");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] / n;
  return r;
}

double chord_length(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

SpherePoint SpherePoint::antipode() const {
  SpherePoint p = *this;
  p.coords = negated(coords);
  return p;
}

void require_same_dim(const SpherePoint& x, const SpherePoint& y) {
  if (x.dim() != y.dim())
    throw ValidationError("sphere points of different dimensions");
}

double geodesic_distance(const SpherePoint& x, const SpherePoint& y) {
  require_same_dim(x, y);
  double c = std::clamp(dot(x.coords, y.coords), -1.0, 1.0);
  return std::acos(c);
}

double euclidean_distance(const SpherePoint& x, const SpherePoint& y) {
  require_same_dim(x, y);
  return chord_length(x.coords, y.coords);
}

ProjectivePoint::ProjectivePoint(const SpherePoint& x) : representative(x) {
  for (double c : representative.coords) {
    if (c > 0.0) break;
    if (c < 0.0) {
      representative.coords = negated(representative.coords);
      break;
    }
  }
}

double projective_distance(const ProjectivePoint& p, const ProjectivePoint& q) {
  double d = geodesic_distance(p.representative, q.representative);
  return std::min(d, M_PI - d);
}

double simplex_edge_length(int n) {
  if (n < 1) throw ValidationError("simplex_edge_length requires n >= 1");
  return std::acos(-1.0 / (n + 1));
}

double facet_diameter(int n) {
  if (n < 1) throw ValidationError("facet_diameter requires n >= 1");
  if (n % 2 == 1) return std::acos(-double(n + 1) / double(n + 3));
  return std::acos(-std::sqrt(double(n) / double(n + 4)));
}

SimplexFrame inscribed_simplex(int n) {
  if (n < 1) throw ValidationError("inscribed_simplex requires n >= 1");
  std::vector<SpherePoint> verts;
  if (n == 1) {
    // Angles 90, 210, 330 degrees.
    for (double deg : {90.0, 210.0, 330.0}) {
      double a = deg * M_PI / 180.0;
      verts.emplace_back(Vec{std::cos(a), std::sin(a)});
    }
    return {n, std::move(verts)};
  }
  // Vertex i reads off the i-th component of the m-1 Helmert vectors, which
  // span the sum-zero hyperplane of R^m; normalized, pairwise inner products
  // are exactly -1/(n+1).
  int m = n + 2;
  for (int i = 0; i < m; ++i) {
    Vec v(static_cast<size_t>(m) - 1);
    for (int j = 1; j < m; ++j) {
      double denom = std::sqrt(double(j) * (j + 1));
      double h;
      if (i < j)
        h = 1.0 / denom;
      else if (i == j)
        h = -double(j) / denom;
      else
        h = 0.0;
      v[static_cast<size_t>(j) - 1] = h;
    }
    verts.emplace_back(std::move(v));
  }
  SimplexFrame frame{n, std::move(verts)};
  // Gram check
  double want = -1.0 / (n + 1);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      double g = dot(frame.vertices[i].coords, frame.vertices[j].coords);
      if (std::fabs(g - want) > 1e-10)
        throw ValidationError("inscribed simplex failed Gram check");
    }
  return frame;
}

int facet_membership(const SpherePoint& u, const SimplexFrame& frame) {
  if (u.dim() != frame.n)
    throw ValidationError("facet_membership: dimension mismatch");
  int best = 0;
  double best_dot = dot(u.coords, frame.vertices[0].coords);
  for (size_t i = 1; i < frame.vertices.size(); ++i) {
    double d = dot(u.coords, frame.vertices[i].coords);
    if (d < best_dot) {
      best_dot = d;
      best = static_cast<int>(i);
    }
  }
  return best;
}

std::vector<SpherePoint> icosahedron_vertices() {
  const double phi = (std::sqrt(5.0) + 1.0) / 2.0;
  const double s = 1.0 / std::sqrt(1.0 + phi * phi);
  std::vector<SpherePoint> pts;
  for (double a : {1.0, -1.0})
    for (double b : {phi, -phi}) {
      pts.emplace_back(Vec{0.0, a * s, b * s});
      pts.emplace_back(Vec{a * s, b * s, 0.0});
      pts.emplace_back(Vec{b * s, 0.0, a * s});
    }
  return pts;
}

std::vector<SpherePoint> cell600_vertices() {
  const double phi = (std::sqrt(5.0) + 1.0) / 2.0;
  std::vector<SpherePoint> pts;
  // 8 permutations of (0,0,0,+-1)
  for (int i = 0; i < 4; ++i)
    for (double s : {1.0, -1.0}) {
      Vec v(4, 0.0);
      v[i] = s;
      pts.emplace_back(std::move(v));
    }
  // 16 of (+-1/2)^4
  for (int mask = 0; mask < 16; ++mask) {
    Vec v(4);
    for (int i = 0; i < 4; ++i) v[i] = (mask >> i & 1) ? -0.5 : 0.5;
    pts.emplace_back(std::move(v));
  }
  // 96 even permutations of (+-phi/2, +-1/2, +-1/(2*phi), 0)
  const double vals[4] = {phi / 2.0, 0.5, 1.0 / (2.0 * phi), 0.0};
  int perm[4] = {0, 1, 2, 3};
  do {
    int inv = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (perm[i] > perm[j]) ++inv;
    if (inv % 2 != 0) continue;
    for (int mask = 0; mask < 8; ++mask) {
      Vec v(4);
      int bit = 0;
      for (int i = 0; i < 4; ++i) {
        double x = vals[perm[i]];
        if (perm[i] != 3) {  // the zero entry carries no sign
          if (mask >> bit & 1) x = -x;
          ++bit;
        }
        v[i] = x;
      }
      pts.emplace_back(std::move(v));
    }
  } while (std::next_permutation(perm, perm + 4));
  return pts;
}

SpherePoint tau(const SpherePoint& x) {
  double last = x.coords.back();
  if (last < 0.0) throw ValidationError("tau: point in open lower hemisphere");
  Vec h(x.coords.begin(), x.coords.end() - 1);
  if (!(norm(h) > 1e-300)) throw ValidationError("tau undefined at the pole");
  return SpherePoint(std::move(h));
}

}  // namespace ghlab
