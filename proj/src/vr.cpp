#include "ghlab/vr.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ghlab {

size_t SimplexList::count() const {
  size_t n = 0;
  for (const auto& v : by_dim) n += v.size();
  return n;
}

int SimplexList::find(int d, const Simplex& s) const {
  if (d < 0 || d >= static_cast<int>(by_dim.size())) return -1;
  const auto& list = by_dim[static_cast<size_t>(d)];
  auto it = std::lower_bound(list.begin(), list.end(), s);
  if (it == list.end() || *it != s) return -1;
  return static_cast<int>(it - list.begin());
}

VRComplex build_vr(const FiniteMetricSpace& base, double r, int max_dim,
                   size_t budget) {
  if (max_dim < 0) throw ValidationError("build_vr: max_dim must be >= 0");
  int n = base.size();
  std::vector<std::vector<char>> adj(static_cast<size_t>(n),
                                     std::vector<char>(static_cast<size_t>(n), 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (base.d(i, j) <= r) adj[i][j] = adj[j][i] = 1;

  SimplexList s;
  s.by_dim.emplace_back();
  for (int i = 0; i < n; ++i) s.by_dim[0].push_back({i});
  size_t total = s.by_dim[0].size();
  for (int d = 1; d <= max_dim; ++d) {
    std::vector<Simplex> next;
    for (const Simplex& sigma : s.by_dim[static_cast<size_t>(d) - 1]) {
      for (int v = sigma.back() + 1; v < n; ++v) {
        bool ok = true;
        for (int u : sigma)
          if (!adj[u][v]) {
            ok = false;
            break;
          }
        if (!ok) continue;
        Simplex tau = sigma;
        tau.push_back(v);
        next.push_back(std::move(tau));
        if (++total > budget) throw BudgetError("build_vr: simplex budget exceeded");
      }
    }
    if (next.empty()) break;
    s.by_dim.push_back(std::move(next));
  }
  return {base, r, max_dim, std::move(s)};
}

std::vector<std::vector<int>> z2_action(const VRComplex& c) {
  if (!c.base.involution())
    throw ValidationError("z2_action: base has no involution");
  std::vector<std::vector<int>> action;
  for (size_t d = 0; d < c.simplices.by_dim.size(); ++d) {
    const auto& list = c.simplices.by_dim[d];
    std::vector<int> perm(list.size());
    for (size_t i = 0; i < list.size(); ++i) {
      Simplex image;
      for (int v : list[i]) image.push_back(c.base.iota(v));
      std::sort(image.begin(), image.end());
      if (image == list[i])
        throw ValidationError("z2_action: fixed simplex (scale too large)");
      int at = c.simplices.find(static_cast<int>(d), image);
      if (at < 0)
        throw ValidationError("z2_action: image simplex missing");
      perm[i] = at;
    }
    action.push_back(std::move(perm));
  }
  return action;
}

namespace {

// Rank over F_2 of the boundary matrix from k-simplices to (k-1)-simplices,
// by column reduction with bitset columns.
long boundary_rank(const SimplexList& s, int k) {
  if (k <= 0 || k >= static_cast<int>(s.by_dim.size())) return 0;
  const auto& cols_src = s.by_dim[static_cast<size_t>(k)];
  size_t rows = s.by_dim[static_cast<size_t>(k) - 1].size();
  size_t blocks = (rows + 63) / 64;

  std::vector<std::vector<uint64_t>> cols;
  cols.reserve(cols_src.size());
  for (const Simplex& sigma : cols_src) {
    std::vector<uint64_t> col(blocks, 0);
    Simplex face(sigma.begin() + 1, sigma.end());
    for (size_t drop = 0; drop <= sigma.size() - 1; ++drop) {
      int row = s.find(k - 1, face);
      col[static_cast<size_t>(row) / 64] ^= 1ull << (row % 64);
      if (drop + 1 < sigma.size()) face[drop] = sigma[drop];
    }
    cols.push_back(std::move(col));
  }

  auto low = [&](const std::vector<uint64_t>& col) -> long {
    for (size_t b = blocks; b-- > 0;)
      if (col[b]) return static_cast<long>(b) * 64 + (63 - std::countl_zero(col[b]));
    return -1;
  };

  std::vector<long> pivot_of_row(rows, -1);
  long rank = 0;
  for (size_t c = 0; c < cols.size(); ++c) {
    long l = low(cols[c]);
    while (l >= 0 && pivot_of_row[static_cast<size_t>(l)] >= 0) {
      const auto& p = cols[static_cast<size_t>(pivot_of_row[static_cast<size_t>(l)])];
      for (size_t b = 0; b < blocks; ++b) cols[c][b] ^= p[b];
      l = low(cols[c]);
    }
    if (l >= 0) {
      pivot_of_row[static_cast<size_t>(l)] = static_cast<long>(c);
      ++rank;
    }
  }
  return rank;
}

}  // namespace

BettiVector f2_homology(const SimplexList& s, int up_to_dim) {
  if (up_to_dim < 0) throw ValidationError("f2_homology: negative dimension");
  BettiVector b;
  b.max_dim = up_to_dim;
  for (int k = 0; k <= up_to_dim; ++k) {
    long nk = k < static_cast<int>(s.by_dim.size())
                  ? static_cast<long>(s.by_dim[static_cast<size_t>(k)].size())
                  : 0;
    b.values.push_back(nk - boundary_rank(s, k) - boundary_rank(s, k + 1));
  }
  return b;
}

BettiVector f2_homology(const VRComplex& c, int up_to_dim) {
  // Truncation caveat: ranks of the (up_to_dim+1)-boundary need that layer.
  if (up_to_dim > c.max_dim - 1 &&
      c.simplices.top_dim() == c.max_dim)
    throw ValidationError("f2_homology: complex not built deep enough");
  return f2_homology(c.simplices, up_to_dim);
}

long euler_characteristic(const SimplexList& s) {
  long chi = 0;
  long sign = 1;
  for (const auto& list : s.by_dim) {
    chi += sign * static_cast<long>(list.size());
    sign = -sign;
  }
  return chi;
}

SimplexList barycentric_subdivision(const VRComplex& c, size_t budget) {
  // Global vertex ids for the subdivision: simplices ordered dim-major.
  std::vector<const Simplex*> flat;
  for (const auto& list : c.simplices.by_dim)
    for (const auto& s : list) flat.push_back(&s);
  size_t n = flat.size();

  // successors[i]: global ids of simplices strictly containing flat[i];
  // ids ascend with dimension, so chains are automatically sorted.
  std::vector<std::vector<int>> successors(n);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b) {
      if (flat[b]->size() <= flat[a]->size()) continue;
      if (std::includes(flat[b]->begin(), flat[b]->end(), flat[a]->begin(),
                        flat[a]->end()))
        successors[a].push_back(static_cast<int>(b));
    }

  SimplexList sd;
  size_t total = 0;
  Simplex chain;
  auto emit = [&](auto&& self, int last) -> void {
    size_t d = chain.size() - 1;
    if (d >= sd.by_dim.size()) sd.by_dim.emplace_back();
    sd.by_dim[d].push_back(chain);
    if (++total > budget)
      throw BudgetError("barycentric_subdivision: budget exceeded");
    for (int nxt : successors[static_cast<size_t>(last)]) {
      chain.push_back(nxt);
      self(self, nxt);
      chain.pop_back();
    }
  };
  for (size_t i = 0; i < n; ++i) {
    chain = {static_cast<int>(i)};
    emit(emit, static_cast<int>(i));
  }
  for (auto& list : sd.by_dim) std::sort(list.begin(), list.end());
  return sd;
}

InducedMap induced_map(const std::vector<int>& f, const VRComplex& cx,
                       const FiniteMetricSpace& Y) {
  if (static_cast<int>(f.size()) != cx.base.size())
    throw ValidationError("induced_map: vertex map has wrong size");
  for (int v : f)
    if (v < 0 || v >= Y.size())
      throw ValidationError("induced_map: vertex image out of range");

  InducedMap m;
  m.vertex_map = f;
  m.dis_f = function_distortion(f, cx.base, Y);
  m.target_scale = cx.r + m.dis_f;

  bool both_symmetric = cx.base.involution() && Y.involution();
  bool vertex_odd = both_symmetric;
  if (both_symmetric)
    for (int v = 0; v < cx.base.size() && vertex_odd; ++v)
      if (f[static_cast<size_t>(cx.base.iota(v))] != Y.iota(f[static_cast<size_t>(v)]))
        vertex_odd = false;

  m.diameters_ok = true;
  m.odd = vertex_odd;
  const double tol = 1e-12;
  for (const auto& list : cx.simplices.by_dim)
    for (const Simplex& sigma : list) {
      Simplex image;
      for (int v : sigma) image.push_back(f[static_cast<size_t>(v)]);
      std::sort(image.begin(), image.end());
      image.erase(std::unique(image.begin(), image.end()), image.end());
      for (size_t a = 0; a < image.size() && m.diameters_ok; ++a)
        for (size_t b = a + 1; b < image.size(); ++b)
          if (Y.d(image[a], image[b]) > m.target_scale + tol) {
            m.diameters_ok = false;
            break;
          }
      if (m.odd) {
        Simplex sig_img, img_sig;
        for (int v : sigma)
          sig_img.push_back(f[static_cast<size_t>(cx.base.iota(v))]);
        for (int v : sigma)
          img_sig.push_back(Y.iota(f[static_cast<size_t>(v)]));
        std::sort(sig_img.begin(), sig_img.end());
        std::sort(img_sig.begin(), img_sig.end());
        if (sig_img != img_sig) m.odd = false;
      }
    }
  return m;
}

BarycentricPoint partition_of_unity_map(const SymmetricNet& net, double eps,
                                        const SpherePoint& y) {
  if (!(eps > 0.0 && eps < M_PI))
    throw ValidationError("partition_of_unity_map: need 0 < eps < pi");
  size_t m = net.points.size();
  std::vector<double> w(m, 0.0);
  std::vector<int> support;
  for (size_t i = 0; i < m; ++i) {
    double v = eps / 2.0 - geodesic_distance(net.points[i], y);
    if (v > 0.0) {
      w[i] = v;
      support.push_back(static_cast<int>(i));
    }
  }
  if (support.empty())
    throw ValidationError("partition_of_unity_map: point not covered");

  // Sum in +-pair-canonical order so y and -y see the exact same additions
  // and the normalizer is bit-identical.
  std::vector<int> order = support;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::min(a, net.neg[static_cast<size_t>(a)]) <
           std::min(b, net.neg[static_cast<size_t>(b)]);
  });
  double total = 0.0;
  for (int i : order) total += w[static_cast<size_t>(i)];

  BarycentricPoint p;
  p.support = support;  // ascending indices
  for (int i : support) p.weights.push_back(w[static_cast<size_t>(i)] / total);
  return p;
}

}  // namespace ghlab
