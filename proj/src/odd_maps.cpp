#include "ghlab/odd_maps.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>

#include "ghlab/parallel.hpp"
#include "ghlab/rng.hpp"

namespace ghlab {

namespace {

SpherePoint pole_image(int n) {
  Vec e(static_cast<size_t>(n) + 1, 0.0);
  e[0] = 1.0;
  return SpherePoint(std::move(e));
}

bool head_is_zero(const SpherePoint& x) {
  double s = 0.0;
  for (size_t i = 0; i + 1 < x.coords.size(); ++i) s += x.coords[i] * x.coords[i];
  return !(s > 1e-300);
}

void require_dim(const SpherePoint& x, int dim, const char* who) {
  if (x.dim() != dim) throw ValidationError(std::string(who) + ": wrong input dimension");
}

}  // namespace

OddFunction equatorial_helmet(int n) {
  if (n < 1) throw ValidationError("equatorial_helmet requires n >= 1");
  auto upper = [n](const SpherePoint& x) {
    return head_is_zero(x) ? pole_image(n) : tau(x);
  };
  auto eval = [n, upper](const SpherePoint& x) {
    require_dim(x, n + 1, "equatorial_helmet");
    if (x.coords.back() < 0.0) {
      SpherePoint y = upper(x.antipode());
      return y.antipode();
    }
    return upper(x);
  };
  return {n + 1, n, "equatorial_helmet", eval};
}

OddFunction cone_vertex_function(int n) {
  if (n < 1) throw ValidationError("cone_vertex_function requires n >= 1");
  SimplexFrame frame = inscribed_simplex(n);
  auto upper = [frame](const SpherePoint& x) {
    if (x.coords.back() >= 0.5) {  // cone region d(x, N) <= pi/3
      int i = head_is_zero(x) ? 0 : facet_membership(tau(x), frame);
      return frame.vertices[static_cast<size_t>(i)].antipode();
    }
    return tau(x);  // thickened equator
  };
  auto eval = [n, upper](const SpherePoint& x) {
    require_dim(x, n + 1, "cone_vertex_function");
    if (x.coords.back() < 0.0) {
      SpherePoint y = upper(x.antipode());
      return y.antipode();
    }
    return upper(x);
  };
  return {n + 1, n, "cone_vertex", eval};
}

OddFunction vr_pipeline_function(SymmetricNet net, double epsilon) {
  if (net.points.empty()) throw ValidationError("vr_pipeline_function: empty net");
  int n = net.points[0].dim();
  auto shared = std::make_shared<SymmetricNet>(std::move(net));
  auto eval = [n, shared, epsilon](const SpherePoint& x) {
    require_dim(x, n, "vr_pipeline_function");
    BarycentricPoint p = partition_of_unity_map(*shared, epsilon, x);
    int v = odd_select(argmax_weight_set(p), shared->neg);
    return shared->points[static_cast<size_t>(v)];
  };
  return {n, n, "vr_pipeline", eval};
}

OddFunction identity_function(int n) {
  return {n, n, "identity", [n](const SpherePoint& x) {
            require_dim(x, n, "identity");
            return x;
          }};
}

OddFunction compose_with_equatorial_inclusion(const OddFunction& f) {
  auto inner = f.eval;
  int k = f.domain_dim;
  if (k < 1) throw ValidationError("cannot restrict a function on S^0");
  auto eval = [inner, k](const SpherePoint& x) {
    require_dim(x, k - 1, "equatorial_inclusion");
    Vec v = x.coords;
    v.push_back(0.0);
    return inner(SpherePoint(std::move(v)));
  };
  return {k - 1, f.target_dim, f.construction + "+inclusion", eval};
}

int odd_select(const Simplex& sigma, const std::vector<int>& neg) {
  if (sigma.empty()) throw ValidationError("odd_select: empty simplex");
  int m = -1;
  for (int v : sigma) m = std::max({m, v, neg[static_cast<size_t>(v)]});
  if (std::binary_search(sigma.begin(), sigma.end(), m)) return m;
  int w = neg[static_cast<size_t>(m)];
  if (std::binary_search(sigma.begin(), sigma.end(), w)) return w;
  throw ValidationError("odd_select: simplex meets its negation");
}

std::vector<std::vector<int>> vr_vertex_select(const VRComplex& c) {
  if (!c.base.involution())
    throw ValidationError("vr_vertex_select: base has no involution");
  std::vector<int> neg(static_cast<size_t>(c.base.size()));
  for (int i = 0; i < c.base.size(); ++i) neg[static_cast<size_t>(i)] = c.base.iota(i);
  std::vector<std::vector<int>> out;
  for (const auto& list : c.simplices.by_dim) {
    std::vector<int> sel;
    sel.reserve(list.size());
    for (const Simplex& sigma : list) {
      for (int v : sigma)
        if (std::binary_search(sigma.begin(), sigma.end(), neg[static_cast<size_t>(v)]))
          throw ValidationError("vr_vertex_select: fixed-pair simplex");
      sel.push_back(odd_select(sigma, neg));
    }
    out.push_back(std::move(sel));
  }
  return out;
}

Simplex argmax_weight_set(const BarycentricPoint& p) {
  if (p.support.empty()) throw ValidationError("argmax_weight_set: empty point");
  double best = *std::max_element(p.weights.begin(), p.weights.end());
  Simplex s;
  for (size_t i = 0; i < p.support.size(); ++i)
    if (p.weights[i] == best) s.push_back(p.support[i]);
  return s;
}

std::function<SpherePoint(const SpherePoint&)> realization_to_function(
    const std::function<BarycentricPoint(const SpherePoint&)>& h,
    const SymmetricNet& net) {
  auto shared = std::make_shared<SymmetricNet>(net);
  return [h, shared](const SpherePoint& x) {
    BarycentricPoint p = h(x);
    int v = odd_select(argmax_weight_set(p), shared->neg);
    return shared->points[static_cast<size_t>(v)];
  };
}

namespace {

// Neighbor pairs at geodesic distance < eta via a uniform grid on the
// embedding coordinates (cell = chord of eta, 3^(dim+1) neighbor cells).
// visit(i, j, d) is called once per unordered pair with d = d(x_i, x_j).
void for_close_pairs(const std::vector<SpherePoint>& pts, double eta,
                     const std::function<void(size_t, size_t, double)>& visit) {
  double cell = 2.0 * std::sin(std::min(eta, M_PI) / 2.0);
  if (!(cell > 0.0)) return;
  size_t coords = pts[0].coords.size();
  std::map<std::vector<long>, std::vector<size_t>> grid;
  std::vector<long> key(coords);
  for (size_t i = 0; i < pts.size(); ++i) {
    for (size_t c = 0; c < coords; ++c)
      key[c] = static_cast<long>(std::floor(pts[i].coords[c] / cell));
    grid[key].push_back(i);
  }
  std::vector<long> probe(coords);
  for (const auto& [base, members] : grid) {
    // Self-cell pairs.
    for (size_t a = 0; a < members.size(); ++a)
      for (size_t b = a + 1; b < members.size(); ++b) {
        double d = geodesic_distance(pts[members[a]], pts[members[b]]);
        if (d < eta) visit(members[a], members[b], d);
      }
    // Distinct neighbor cells, visited once via lexicographic order.
    size_t combos = 1;
    for (size_t c = 0; c < coords; ++c) combos *= 3;
    for (size_t combo = 0; combo < combos; ++combo) {
      size_t rest = combo;
      bool positive_dir = false, any = false;
      for (size_t c = 0; c < coords; ++c) {
        long off = static_cast<long>(rest % 3) - 1;
        rest /= 3;
        probe[c] = base[c] + off;
        if (off != 0 && !any) {
          any = true;
          positive_dir = off > 0;
        }
      }
      // Take each unordered cell pair from its lexicographically smaller
      // side only (first nonzero offset positive).
      if (!any || !positive_dir) continue;
      auto it = grid.find(probe);
      if (it == grid.end()) continue;
      for (size_t i : members)
        for (size_t j : it->second) {
          double d = geodesic_distance(pts[i], pts[j]);
          if (d < eta) visit(i, j, d);
        }
    }
  }
}

std::vector<SpherePoint> draw_points(int dim, size_t count, uint64_t seed) {
  std::vector<SpherePoint> pts;
  pts.resize(count, SpherePoint(Vec{1.0}));
  parallel_chunks(count, [&](size_t begin, size_t end, unsigned) {
    for (size_t i = begin; i < end; ++i)
      pts[i] = SpherePoint(sample_sphere(dim, seed, i));
  });
  return pts;
}

std::vector<SpherePoint> map_points(const OddFunction& f,
                                    const std::vector<SpherePoint>& pts) {
  std::vector<SpherePoint> img;
  img.resize(pts.size(), SpherePoint(Vec{1.0}));
  parallel_chunks(pts.size(), [&](size_t begin, size_t end, unsigned) {
    for (size_t i = begin; i < end; ++i) img[i] = f.eval(pts[i]);
  });
  return img;
}

}  // namespace

DiscontinuityEstimate estimate_modulus(const OddFunction& f, double eta,
                                       size_t samples, uint64_t seed) {
  if (!(eta > 0.0)) throw ValidationError("estimate_modulus: eta must be > 0");
  std::vector<SpherePoint> pts = draw_points(f.domain_dim, samples, seed);
  std::vector<SpherePoint> img = map_points(f, pts);

  DiscontinuityEstimate est{eta, samples, 0.0, -1};
  for_close_pairs(pts, eta, [&](size_t i, size_t j, double d) {
    double v = geodesic_distance(img[i], img[j]) - d;
    if (v > est.delta_hat) {
      est.delta_hat = v;
      est.worst_sample = static_cast<long>(i);
    }
  });
  return est;
}

double estimate_distortion(const OddFunction& f, size_t pairs, uint64_t seed,
                           bool hemisphere_only) {
  if (pairs < 2) throw ValidationError("estimate_distortion: need >= 2 pairs");
  unsigned workers = worker_count();
  std::vector<double> chunk_max(workers + 1, 0.0);
  parallel_chunks(pairs, [&](size_t begin, size_t end, unsigned w) {
    double worst = 0.0;
    for (size_t t = begin; t < end; ++t) {
      SpherePoint a(sample_sphere(f.domain_dim, seed, 2 * t));
      SpherePoint b(sample_sphere(f.domain_dim, seed, 2 * t + 1));
      if (hemisphere_only) {
        if (a.coords.back() < 0.0) a = a.antipode();
        if (b.coords.back() < 0.0) b = b.antipode();
      }
      double v = std::fabs(geodesic_distance(a, b) -
                           geodesic_distance(f.eval(a), f.eval(b)));
      if (v > worst) worst = v;
    }
    chunk_max[w] = worst;
  });
  double best = 0.0;
  for (double v : chunk_max) best = std::max(best, v);
  return best;
}

OddMapReport odd_map_report(const OddFunction& f, double eta, size_t samples,
                            uint64_t seed) {
  if (!(eta > 0.0)) throw ValidationError("odd_map_report: eta must be > 0");
  std::vector<SpherePoint> pts = draw_points(f.domain_dim, samples, seed);
  std::vector<SpherePoint> img = map_points(f, pts);

  std::vector<long> violations(worker_count() + 1, 0);
  parallel_chunks(pts.size(), [&](size_t begin, size_t end, unsigned w) {
    long bad = 0;
    for (size_t i = begin; i < end; ++i) {
      SpherePoint neg_img = f.eval(pts[i].antipode());
      if (neg_img.coords != negated(img[i].coords)) ++bad;
    }
    violations[w] = bad;
  });

  OddMapReport rep{eta, samples, 0.0, 0.0, 0};
  for (long v : violations) rep.oddness_violations += v;

  for_close_pairs(pts, eta, [&](size_t i, size_t j, double d) {
    double dimg = geodesic_distance(img[i], img[j]);
    rep.delta_hat = std::max(rep.delta_hat, dimg - d);
    rep.dis_hat = std::max(rep.dis_hat, std::fabs(d - dimg));
  });
  for (size_t t = 0; t + 1 < pts.size(); t += 2) {
    double v = std::fabs(geodesic_distance(pts[t], pts[t + 1]) -
                         geodesic_distance(img[t], img[t + 1]));
    if (v > rep.dis_hat) rep.dis_hat = v;
  }
  return rep;
}

std::pair<double, double> euclidean_bounds(double c) {
  if (!(c >= 0.0 && c <= M_PI))
    throw ValidationError("euclidean_bounds: c must lie in [0, pi]");
  return {2.0 * std::sin(c / 2.0), 2.0 - 2.0 * std::cos(c / 2.0)};
}

}  // namespace ghlab
