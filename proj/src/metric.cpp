#include "ghlab/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace ghlab {

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> labels,
                                     std::vector<double> dist,
                                     std::optional<std::vector<int>> involution)
    : labels_(std::move(labels)),
      dist_(std::move(dist)),
      involution_(std::move(involution)) {
  size_t n = labels_.size();
  if (n == 0) throw ValidationError("empty metric space");
  if (dist_.size() != n * n)
    throw ValidationError("distance matrix size mismatch");
  for (size_t i = 0; i < n; ++i) {
    if (dist_[i * n + i] != 0.0)
      throw ValidationError("nonzero diagonal in distance matrix");
    for (size_t j = 0; j < n; ++j) {
      if (dist_[i * n + j] < 0.0)
        throw ValidationError("negative distance");
      if (dist_[i * n + j] != dist_[j * n + i])
        throw ValidationError("asymmetric distance matrix");
    }
  }
  const double tol = 1e-9;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        if (dist_[i * n + j] > dist_[i * n + k] + dist_[k * n + j] + tol)
          throw ValidationError("triangle inequality violated");
  if (involution_) {
    if (involution_->size() != n)
      throw ValidationError("involution size mismatch");
    for (size_t i = 0; i < n; ++i) {
      int ii = (*involution_)[i];
      if (ii < 0 || static_cast<size_t>(ii) >= n ||
          (*involution_)[static_cast<size_t>(ii)] != static_cast<int>(i))
        throw ValidationError("involution is not an involution");
    }
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        size_t ii = static_cast<size_t>((*involution_)[i]);
        size_t jj = static_cast<size_t>((*involution_)[j]);
        if (dist_[i * n + j] != dist_[ii * n + jj])
          throw ValidationError("involution does not preserve distances");
      }
  }
}

int FiniteMetricSpace::iota(int i) const {
  if (!involution_) throw ValidationError("space carries no involution");
  return (*involution_)[static_cast<size_t>(i)];
}

FiniteMetricSpace FiniteMetricSpace::from_sphere_points(
    const std::vector<SpherePoint>& pts, bool euclidean, bool pair_antipodes) {
  size_t n = pts.size();
  std::vector<std::string> labels(n);
  for (size_t i = 0; i < n; ++i) labels[i] = "p" + std::to_string(i);
  std::vector<double> dist(n * n, 0.0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      double d = euclidean ? euclidean_distance(pts[i], pts[j])
                           : geodesic_distance(pts[i], pts[j]);
      dist[i * n + j] = dist[j * n + i] = d;
    }
  std::optional<std::vector<int>> inv;
  if (pair_antipodes) {
    if (n % 2 != 0)
      throw ValidationError("antipode pairing needs an even point count");
    std::vector<int> iota(n);
    for (size_t i = 0; i < n; i += 2) {
      if (pts[i + 1].coords != negated(pts[i].coords))
        throw ValidationError("points are not exact antipodal pairs");
      iota[i] = static_cast<int>(i) + 1;
      iota[i + 1] = static_cast<int>(i);
    }
    inv = std::move(iota);
  }
  return FiniteMetricSpace(std::move(labels), std::move(dist), std::move(inv));
}

bool Relation::surjective_left(int nx) const {
  std::vector<char> seen(static_cast<size_t>(nx), 0);
  for (auto& [i, j] : pairs) seen[static_cast<size_t>(i)] = 1;
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

bool Relation::surjective_right(int ny) const {
  std::vector<char> seen(static_cast<size_t>(ny), 0);
  for (auto& [i, j] : pairs) seen[static_cast<size_t>(j)] = 1;
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

Relation Relation::graph_of(const std::vector<int>& g) {
  Relation r;
  for (size_t i = 0; i < g.size(); ++i)
    r.pairs.emplace_back(static_cast<int>(i), g[i]);
  return r;
}

double subset_diameter(const FiniteMetricSpace& space,
                       const std::vector<int>& subset) {
  if (subset.empty()) throw ValidationError("diameter of empty subset");
  double best = 0.0;
  for (size_t a = 0; a < subset.size(); ++a)
    for (size_t b = a + 1; b < subset.size(); ++b)
      best = std::max(best, space.d(subset[a], subset[b]));
  return best;
}

double distortion(const Relation& r, const FiniteMetricSpace& X,
                  const FiniteMetricSpace& Y) {
  if (r.pairs.empty()) throw ValidationError("empty relation");
  for (auto& [i, j] : r.pairs)
    if (i < 0 || i >= X.size() || j < 0 || j >= Y.size())
      throw ValidationError("relation index out of range");
  double best = 0.0;
  for (size_t a = 0; a < r.pairs.size(); ++a)
    for (size_t b = a; b < r.pairs.size(); ++b) {
      auto [x, y] = r.pairs[a];
      auto [xp, yp] = r.pairs[b];
      best = std::max(best, std::fabs(X.d(x, xp) - Y.d(y, yp)));
    }
  return best;
}

double function_distortion(const std::vector<int>& g,
                           const FiniteMetricSpace& X,
                           const FiniteMetricSpace& Y) {
  double best = 0.0;
  int n = X.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      best = std::max(best, std::fabs(X.d(i, j) - Y.d(g[static_cast<size_t>(i)],
                                                      g[static_cast<size_t>(j)])));
  return best;
}

double codistortion(const std::vector<int>& g, const std::vector<int>& h,
                    const FiniteMetricSpace& X, const FiniteMetricSpace& Y) {
  double best = 0.0;
  for (int x = 0; x < X.size(); ++x)
    for (int y = 0; y < Y.size(); ++y)
      best = std::max(best, std::fabs(X.d(x, h[static_cast<size_t>(y)]) -
                                      Y.d(g[static_cast<size_t>(x)], y)));
  return best;
}

double hausdorff_distance(const FiniteMetricSpace& space,
                          const std::vector<int>& a,
                          const std::vector<int>& b) {
  if (a.empty() || b.empty())
    throw ValidationError("hausdorff_distance: empty subset");
  auto directed = [&](const std::vector<int>& from, const std::vector<int>& to) {
    double worst = 0.0;
    for (int i : from) {
      double nearest = std::numeric_limits<double>::infinity();
      for (int j : to) nearest = std::min(nearest, space.d(i, j));
      worst = std::max(worst, nearest);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

namespace {

// Enumerate all functions [n] -> [m] in lexicographic order.
bool advance(std::vector<int>& f, int m) {
  for (size_t i = f.size(); i-- > 0;) {
    if (++f[i] < m) return true;
    f[i] = 0;
  }
  return false;
}

}  // namespace

double gh_bruteforce(const FiniteMetricSpace& X, const FiniteMetricSpace& Y,
                     size_t max_cells) {
  size_t cells = static_cast<size_t>(X.size()) * static_cast<size_t>(Y.size());
  if (cells > max_cells)
    throw BudgetError("gh_bruteforce: |X|*|Y| exceeds budget");
  int nx = X.size(), ny = Y.size();

  std::vector<std::vector<int>> gs, hs;
  std::vector<double> gdis, hdis;
  std::vector<int> g(static_cast<size_t>(nx), 0);
  do {
    gs.push_back(g);
    gdis.push_back(function_distortion(g, X, Y));
  } while (advance(g, ny));
  std::vector<int> h(static_cast<size_t>(ny), 0);
  do {
    hs.push_back(h);
    hdis.push_back(function_distortion(h, Y, X));
  } while (advance(h, nx));

  double incumbent = std::numeric_limits<double>::infinity();
  for (size_t a = 0; a < gs.size(); ++a) {
    if (gdis[a] >= incumbent) continue;
    for (size_t b = 0; b < hs.size(); ++b) {
      double base = std::max(gdis[a], hdis[b]);
      if (base >= incumbent) continue;
      // codistortion with early abort
      double cd = base;
      bool beaten = false;
      for (int x = 0; x < nx && !beaten; ++x)
        for (int y = 0; y < ny; ++y) {
          double t = std::fabs(X.d(x, hs[b][static_cast<size_t>(y)]) -
                               Y.d(gs[a][static_cast<size_t>(x)], y));
          if (t > cd) cd = t;
          if (cd >= incumbent) {
            beaten = true;
            break;
          }
        }
      if (!beaten) incumbent = cd;
      if (incumbent == 0.0) return 0.0;
    }
  }
  return incumbent / 2.0;
}

HelmetExtension helmet_extend_euclidean(const FiniteMetricSpace& X,
                                        const std::vector<int>& C,
                                        const std::vector<Vec>& phi) {
  if (!X.involution())
    throw ValidationError("helmet extension needs a symmetric space");
  if (C.size() != phi.size())
    throw ValidationError("phi must assign a value to every point of C");
  std::set<int> cset(C.begin(), C.end());
  for (int i : C)
    if (cset.count(X.iota(i)))
      throw ValidationError("C meets its involution image");

  HelmetExtension ext;
  for (size_t a = 0; a < C.size(); ++a) {
    ext.domain.push_back(C[a]);
    ext.values.push_back(phi[a]);
  }
  for (size_t a = 0; a < C.size(); ++a) {
    ext.domain.push_back(X.iota(C[a]));
    ext.values.push_back(negated(phi[a]));
  }

  auto dis_of = [&](size_t count) {
    double best = 0.0;
    for (size_t a = 0; a < count; ++a)
      for (size_t b = a + 1; b < count; ++b) {
        double dx = X.d(ext.domain[a], ext.domain[b]);
        double dy = chord_length(ext.values[a], ext.values[b]);
        best = std::max(best, std::fabs(dx - dy));
      }
    return best;
  };
  ext.dis_phi = dis_of(C.size());
  ext.dis_extension = dis_of(ext.domain.size());
  ext.bound = std::sqrt(ext.dis_phi * (4.0 - ext.dis_phi));
  return ext;
}

}  // namespace ghlab
