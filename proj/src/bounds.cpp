#include "ghlab/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "ghlab/parallel.hpp"
#include "ghlab/rng.hpp"

namespace ghlab {

namespace {

bool head_is_zero(const SpherePoint& x) {
  double s = 0.0;
  for (size_t i = 0; i + 1 < x.coords.size(); ++i) s += x.coords[i] * x.coords[i];
  return !(s > 1e-300);
}

}  // namespace

int HemisphereCorrespondence::classify(const SpherePoint& p) const {
  if (p.dim() != n + 1)
    throw ValidationError("classify: wrong dimension");
  double last = p.coords.back();
  if (last < 0.0) throw ValidationError("classify: lower-hemisphere input");
  if (last < 0.5) return 0;  // d(p, N) > pi/3: thickened equator
  if (head_is_zero(p)) return 1;  // the pole: smallest-index cone
  return facet_membership(tau(p), frame) + 1;
}

SpherePoint HemisphereCorrespondence::correspond(const SpherePoint& p) const {
  int c = classify(p);
  if (c == 0) return tau(p);
  return frame.vertices[static_cast<size_t>(c) - 1].antipode();
}

HemisphereCorrespondence make_hemisphere_correspondence(int n) {
  if (n < 1) throw ValidationError("hemisphere correspondence requires n >= 1");
  return {n, inscribed_simplex(n)};
}

CaseMaxima verify_distortion(int n, size_t pairs, uint64_t seed) {
  HemisphereCorrespondence hc = make_hemisphere_correspondence(n);
  unsigned workers = worker_count();
  std::vector<CaseMaxima> chunk(workers + 1);
  parallel_chunks(pairs, [&](size_t begin, size_t end, unsigned w) {
    CaseMaxima m;
    for (size_t t = begin; t < end; ++t) {
      SpherePoint a(sample_sphere(n + 1, seed, 2 * t));
      if (a.coords.back() < 0.0) a = a.antipode();
      // Half the pairs are independent, half are short perturbations of the
      // first point (cubed scale favors small steps), so near-boundary pairs
      // that realize the supremum are actually hit at modest sample counts.
      SplitMix64 mix = substream(seed, 2 * t + 1);
      Vec bc = sample_sphere(n + 1, seed, 2 * t + 1);
      if (mix.next() & 1) {
        double s = 2.0 * std::pow(mix.next_double(), 3);
        for (size_t c = 0; c < bc.size(); ++c)
          bc[c] = a.coords[c] + s * bc[c];
      }
      SpherePoint b(bc);
      if (b.coords.back() < 0.0) b = b.antipode();
      int ca = hc.classify(a), cb = hc.classify(b);
      double v = std::fabs(geodesic_distance(a, b) -
                           geodesic_distance(hc.correspond(a), hc.correspond(b)));
      if (ca == 0 && cb == 0)
        m.equator_equator = std::max(m.equator_equator, v);
      else if (ca != 0 && cb != 0)
        m.cone_cone = std::max(m.cone_cone, v);
      else
        m.equator_cone = std::max(m.equator_cone, v);
      m.overall = std::max(m.overall, v);
    }
    chunk[w] = m;
  });
  CaseMaxima out;
  for (const CaseMaxima& m : chunk) {
    out.equator_equator = std::max(out.equator_equator, m.equator_equator);
    out.equator_cone = std::max(out.equator_cone, m.equator_cone);
    out.cone_cone = std::max(out.cone_cone, m.cone_cone);
    out.overall = std::max(out.overall, m.overall);
  }
  return out;
}

namespace {

struct Fact {
  double value;
  std::string provenance;
};

void take(Fact& best, double value, const std::string& provenance) {
  if (value > best.value) best = {value, provenance};
}

// Full grid of certified lower bounds on 0..N with monotone closure.
std::vector<std::vector<Fact>> c_grid(int N,
                                      const std::vector<CoveringCertificate>& certs) {
  std::vector<std::vector<Fact>> g(
      static_cast<size_t>(N) + 1,
      std::vector<Fact>(static_cast<size_t>(N) + 1, {0.0, "trivial"}));
  for (int n = N; n >= 0; --n)
    for (int k = n; k <= N; ++k) {
      Fact& f = g[static_cast<size_t>(n)][static_cast<size_t>(k)];
      if (k == n) {
        f = {0.0, "diagonal"};
        continue;
      }
      if (n == 0) take(f, M_PI, "zero-sphere value pi");
      if (n == 1) {
        int l = k / 2;
        take(f, 2.0 * M_PI * l / (2 * l + 1), "circle exact values");
      }
      if (n >= 1 && (k == n + 1 || k == n + 2))
        take(f, simplex_edge_length(n), "adjacent simplex edge r_n");
      if (n == 2 && k >= 7)
        take(f, std::acos(-1.0 / std::sqrt(5.0)), "S^2 homotopy-type fact");
      for (const CoveringCertificate& c : certs)
        if (c.space == Space::Projective && c.dim == n &&
            k >= static_cast<int>(c.centers.size()))
          take(f, M_PI - 2.0 * c.radius_bound, "covering certificate (" + c.method + ")");
      // Inclusion monotonicity.
      if (k - 1 > n) {
        const Fact& left = g[static_cast<size_t>(n)][static_cast<size_t>(k) - 1];
        take(f, left.value, "monotone in k from " + left.provenance);
      }
      if (n + 1 <= N && k > n + 1) {
        const Fact& below = g[static_cast<size_t>(n) + 1][static_cast<size_t>(k)];
        take(f, below.value, "monotone in n from " + below.provenance);
      }
    }
  return g;
}

}  // namespace

double c_lower(int n, int k, const std::vector<CoveringCertificate>& certs,
               std::string* provenance) {
  if (n < 0 || k < n) throw ValidationError("c_lower requires k >= n >= 0");
  int N = k;
  for (const CoveringCertificate& c : certs)
    N = std::max(N, static_cast<int>(c.centers.size()));
  auto g = c_grid(N, certs);
  const Fact& f = g[static_cast<size_t>(n)][static_cast<size_t>(k)];
  if (provenance) *provenance = f.provenance;
  return f.value;
}

BoundsCell gh_cell(int n, int k, const std::vector<CoveringCertificate>& certs) {
  if (n < 0 || k < n) throw ValidationError("gh_cell requires k >= n >= 0");
  BoundsCell cell;
  cell.n = n;
  cell.k = k;
  if (k == n) {
    cell.lower = cell.upper = 0.0;
    cell.lower_provenance = cell.upper_provenance = "diagonal";
    return cell;
  }
  cell.lower = c_lower(n, k, certs, &cell.lower_provenance);
  cell.upper = M_PI;
  cell.upper_provenance = "diameter bound pi";
  if (k == n + 1) {
    double super = 2.0 * M_PI / 3.0;
    double tn = facet_diameter(n);
    if (tn < super) {
      cell.upper = tn;
      cell.upper_provenance = "facet diameter t_n";
    } else {
      cell.upper = super;
      cell.upper_provenance = "superdiagonal 2pi/3";
    }
  }
  // Exactly known small cases: values equal the simplex edge length.
  if (n >= 1 && n < k && k <= 3) {
    cell.lower = cell.upper = simplex_edge_length(n);
    cell.lower_provenance = cell.upper_provenance = "exact small case";
  }
  return cell;
}

BoundsCell euclidean_cell(int n, int k,
                          const std::vector<CoveringCertificate>& certs) {
  BoundsCell g = gh_cell(n, k, certs);
  BoundsCell cell = g;
  cell.lower = 2.0 - 2.0 * std::cos(g.lower / 2.0);
  cell.lower_provenance = "chordal conversion of: " + g.lower_provenance;
  if (k == n) {
    cell.upper = 0.0;
    cell.upper_provenance = "diagonal";
  } else {
    cell.upper = 2.0;
    cell.upper_provenance = "unit-sphere embedding bound";
  }
  return cell;
}

std::vector<BoundsCell> gh_table(int max_n, int max_k, bool euclidean,
                                 const std::vector<CoveringCertificate>& certs) {
  if (max_n < 1 || max_k < max_n) throw ValidationError("gh_table: bad extents");
  std::vector<BoundsCell> cells;
  for (int n = 1; n <= max_n; ++n)
    for (int k = n; k <= max_k; ++k)
      cells.push_back(euclidean ? euclidean_cell(n, k, certs)
                                : gh_cell(n, k, certs));
  return cells;
}

}  // namespace ghlab
