#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ghlab/bounds.hpp"
#include "ghlab/covering.hpp"
#include "ghlab/io.hpp"
#include "ghlab/kernels.hpp"
#include "ghlab/metric.hpp"
#include "ghlab/odd_maps.hpp"
#include "ghlab/sphere.hpp"
#include "ghlab/vr.hpp"

using nlohmann::ordered_json;

namespace {

using namespace ghlab;

double sig(double v) { return round_sig(v, 12); }

void emit(const std::string& output, const std::string& text) {
  if (output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output);
  if (!out) throw ValidationError("cannot write " + output);
  out << text;
}

void emit_json(const std::string& output, const ordered_json& j) {
  emit(output, j.dump(2) + "\n");
}

// Closed-form names for table entries that are exact multiples or known
// constants; empty when no symbol applies.
std::string symbol_for(double v) {
  struct Known {
    double value;
    const char* name;
  };
  static const std::vector<Known> known = [] {
    std::vector<Known> k = {{0.0, "0"},
                            {M_PI, "pi"},
                            {2.0 * M_PI / 3.0, "2pi/3"},
                            {4.0 * M_PI / 5.0, "4pi/5"},
                            {6.0 * M_PI / 7.0, "6pi/7"},
                            {std::acos(-1.0 / std::sqrt(5.0)),
                             "arccos(-1/sqrt(5))"}};
    static std::string names[28];
    for (int n = 1; n <= 7; ++n) {
      names[n] = "r_" + std::to_string(n);
      names[n + 10] = "t_" + std::to_string(n);
      k.push_back({simplex_edge_length(n), names[n].c_str()});
      k.push_back({facet_diameter(n), names[n + 10].c_str()});
    }
    return k;
  }();
  for (const Known& k : known)
    if (std::fabs(v - k.value) < 1e-12) return k.name;
  return "";
}

std::string render_value(double v, bool symbolic) {
  if (symbolic) {
    std::string s = symbol_for(v);
    if (!s.empty()) return s;
  }
  return format_sig(v, 12);
}

std::string render_cell(const BoundsCell& c, bool symbolic) {
  if (c.lower == c.upper) return render_value(c.lower, symbolic);
  bool open_upper = std::fabs(c.upper - M_PI) < 1e-12;
  return "[" + render_value(c.lower, symbolic) + ", " +
         render_value(c.upper, symbolic) + (open_upper ? ")" : "]");
}

std::vector<CoveringCertificate> table_certificates(size_t samples,
                                                    uint64_t seed) {
  return {projective_cover_bound(icosahedron_vertices(), samples, seed,
                                 "icosahedron"),
          projective_cover_bound(cell600_vertices(), samples, seed, "600cell")};
}

int run_table(int max_n, int max_k, const std::string& metric,
              const std::string& format, size_t samples, uint64_t seed,
              const std::string& output) {
  bool euclidean = metric == "euclidean";
  auto certs = table_certificates(samples, seed);
  auto cells = gh_table(max_n, max_k, euclidean, certs);

  if (format == "json") {
    ordered_json j;
    j["metric"] = metric;
    j["cells"] = ordered_json::array();
    for (const BoundsCell& c : cells)
      j["cells"].push_back({{"n", c.n},
                            {"k", c.k},
                            {"lower", sig(c.lower)},
                            {"upper", sig(c.upper)},
                            {"lower_provenance", c.lower_provenance},
                            {"upper_provenance", c.upper_provenance}});
    emit_json(output, j);
    return 0;
  }

  auto cell_at = [&](int n, int k) -> const BoundsCell* {
    for (const BoundsCell& c : cells)
      if (c.n == n && c.k == k) return &c;
    return nullptr;
  };
  std::string text;
  if (format == "csv") {
    text = "n,k,lower,upper\n";
    for (const BoundsCell& c : cells)
      text += std::to_string(c.n) + "," + std::to_string(c.k) + "," +
              format_sig(c.lower, 12) + "," + format_sig(c.upper, 12) + "\n";
  } else if (format == "markdown") {
    text = "| n \\ k |";
    for (int k = 1; k <= max_k; ++k) text += " " + std::to_string(k) + " |";
    text += "\n|---|";
    for (int k = 1; k <= max_k; ++k) text += "---|";
    text += "\n";
    for (int n = 1; n <= max_n; ++n) {
      text += "| " + std::to_string(n) + " |";
      for (int k = 1; k <= max_k; ++k) {
        const BoundsCell* c = cell_at(n, k);
        text += c ? " " + render_cell(*c, !euclidean) + " |" : "  |";
      }
      text += "\n";
    }
  } else {
    throw ValidationError("unknown format " + format);
  }
  emit(output, text);
  return 0;
}

int run_verify(int n, size_t samples, uint64_t seed, const std::string& output) {
  CaseMaxima m = verify_distortion(n, samples, seed);
  ordered_json j;
  j["n"] = n;
  j["pairs"] = samples;
  j["seed"] = seed;
  j["max_distortion"] = sig(m.overall);
  j["case_maxima"] = {{"equator_equator", sig(m.equator_equator)},
                      {"equator_cone", sig(m.equator_cone)},
                      {"cone_cone", sig(m.cone_cone)}};
  j["bound"] = sig(2.0 * M_PI / 3.0);
  j["within_bound"] = m.overall <= 2.0 * M_PI / 3.0 + 1e-9;
  emit_json(output, j);
  return 0;
}

int run_covering(const std::string& construction, int n, double epsilon, int k,
                 size_t samples, uint64_t seed, const std::string& output) {
  std::vector<SpherePoint> centers;
  if (construction == "icosahedron") {
    centers = icosahedron_vertices();
  } else if (construction == "600cell") {
    centers = cell600_vertices();
  } else if (construction == "simplex") {
    centers = inscribed_simplex(n).vertices;
  } else if (construction == "greedy") {
    centers = symmetric_net(n, epsilon, seed,
                            k > 0 ? static_cast<size_t>(k) : 0)
                  .points;
  } else {
    throw ValidationError("unknown construction " + construction);
  }
  CoveringCertificate cert =
      certify(centers, Space::Sphere, construction, samples, seed + 1);
  ordered_json j;
  j["space"] = "S^" + std::to_string(cert.dim);
  j["method"] = cert.method;
  j["centers"] = cert.centers.size();
  j["radius_bound"] = sig(cert.radius_bound);
  j["validation_samples"] = samples;
  j["seed"] = seed;
  // Symmetric sets certify the quotient too.
  bool symmetric = true;
  try {
    CoveringCertificate proj =
        projective_cover_bound(centers, samples, seed + 1, construction);
    j["projective"] = {{"space", "RP^" + std::to_string(proj.dim)},
                       {"centers", proj.centers.size()},
                       {"radius_bound", sig(proj.radius_bound)}};
  } catch (const ValidationError&) {
    symmetric = false;
  }
  j["centrally_symmetric"] = symmetric;
  emit_json(output, j);
  return 0;
}

int run_vr_homology(const std::string& points_path, double r, int max_dim,
                    size_t budget, const std::string& output) {
  PointSet ps = read_point_set(points_path);
  FiniteMetricSpace space = FiniteMetricSpace::from_sphere_points(ps.points);
  VRComplex c = build_vr(space, r, max_dim, budget);
  BettiVector b = f2_homology(c, max_dim - 1);
  ordered_json j;
  j["points"] = ps.points.size();
  j["r"] = sig(r);
  j["max_dim"] = max_dim;
  ordered_json counts = ordered_json::array();
  for (const auto& list : c.simplices.by_dim) counts.push_back(list.size());
  j["simplex_counts"] = counts;
  j["betti"] = b.values;
  emit_json(output, j);
  return 0;
}

int run_oracle_gh(const std::string& x_path, const std::string& y_path,
                  size_t max_cells, const std::string& output) {
  FiniteMetricSpace X = read_distance_matrix(x_path);
  FiniteMetricSpace Y = read_distance_matrix(y_path);
  double d = gh_bruteforce(X, Y, max_cells);
  ordered_json j;
  j["x_size"] = X.size();
  j["y_size"] = Y.size();
  j["d_gh"] = sig(d);
  emit_json(output, j);
  return 0;
}

int run_odd_map(const std::string& construction, int n, double epsilon,
                double eta, size_t samples, uint64_t seed,
                const std::string& output) {
  OddFunction f;
  if (construction == "cone_vertex") {
    f = cone_vertex_function(n);
  } else if (construction == "equatorial_helmet") {
    f = equatorial_helmet(n);
  } else if (construction == "vr_pipeline") {
    f = vr_pipeline_function(symmetric_net(n, epsilon, seed + 1), epsilon);
  } else {
    throw ValidationError("unknown construction " + construction);
  }
  OddMapReport rep = odd_map_report(f, eta, samples, seed);
  ordered_json j;
  j["construction"] = f.construction;
  j["domain_dim"] = f.domain_dim;
  j["target_dim"] = f.target_dim;
  j["eta"] = sig(eta);
  j["samples"] = samples;
  j["seed"] = seed;
  j["delta_hat"] = sig(rep.delta_hat);
  j["dis_hat"] = sig(rep.dis_hat);
  j["oddness_violations"] = rep.oddness_violations;
  emit_json(output, j);
  return 0;
}

int run_constants(const std::string& format, const std::string& output) {
  if (format == "markdown") {
    std::string text = "| n | r_n | t_n |\n|---|---|---|\n";
    for (int n = 1; n <= 7; ++n)
      text += "| " + std::to_string(n) + " | " +
              format_sig(simplex_edge_length(n), 12) + " | " +
              format_sig(facet_diameter(n), 12) + " |\n";
    emit(output, text);
    return 0;
  }
  ordered_json j;
  for (int n = 1; n <= 7; ++n) {
    j["r"][std::to_string(n)] = sig(simplex_edge_length(n));
    j["t"][std::to_string(n)] = sig(facet_diameter(n));
  }
  ordered_json c = ordered_json::object();
  c["c_{0,k}, k>=1"] = sig(M_PI);
  for (int l = 1; l <= 3; ++l)
    c["c_{1," + std::to_string(2 * l) + "}=c_{1," + std::to_string(2 * l + 1) +
      "}"] = sig(2.0 * M_PI * l / (2 * l + 1));
  for (int n = 1; n <= 5; ++n)
    c["c_{" + std::to_string(n) + "," + std::to_string(n + 1) + "}=c_{" +
      std::to_string(n) + "," + std::to_string(n + 2) + "}"] =
        sig(simplex_edge_length(n));
  c["c_{2,7} lower"] = sig(std::acos(-1.0 / std::sqrt(5.0)));
  j["c_known"] = c;
  j["kernel"] = kernels::active_kernel_name();
  emit_json(output, j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bound certification and exploration tools for sphere "
               "distances, coverings, and Vietoris-Rips machinery"};
  app.require_subcommand(1);

  std::string output;
  app.add_option("-o,--output", output, "Write output to this file");

  // table
  auto* table = app.add_subcommand("table", "Emit the bounds table");
  int t_max_n = 7, t_max_k = 7;
  std::string t_metric = "geodesic", t_format = "markdown";
  size_t t_samples = 200000;
  uint64_t t_seed = 20240801;
  table->add_option("--max-n", t_max_n);
  table->add_option("--max-k", t_max_k);
  table->add_option("--metric", t_metric)
      ->check(CLI::IsMember({"geodesic", "euclidean"}));
  table->add_option("--format", t_format)
      ->check(CLI::IsMember({"csv", "json", "markdown"}));
  table->add_option("--samples", t_samples);
  table->add_option("--seed", t_seed);

  // verify-theorem1
  auto* verify = app.add_subcommand(
      "verify-theorem1", "Sample the hemisphere relation's distortion");
  int v_n = 1;
  size_t v_samples = 100000;
  uint64_t v_seed = 20240801;
  verify->add_option("--n", v_n)->required();
  verify->add_option("--samples", v_samples);
  verify->add_option("--seed", v_seed);

  // covering
  auto* covering = app.add_subcommand("covering", "Covering-radius certificate");
  std::string c_construction;
  int c_n = 2, c_k = 0;
  double c_eps = 0.5;
  size_t c_samples = 1000000;
  uint64_t c_seed = 20240801;
  covering->add_option("--construction", c_construction)
      ->required()
      ->check(CLI::IsMember({"icosahedron", "600cell", "simplex", "greedy"}));
  covering->add_option("--n", c_n);
  covering->add_option("--k", c_k, "Cap on greedy net size");
  covering->add_option("--epsilon", c_eps, "Greedy target covering scale");
  covering->add_option("--samples", c_samples);
  covering->add_option("--seed", c_seed);

  // vr-homology
  auto* vr = app.add_subcommand("vr-homology", "Betti numbers over F_2");
  std::string vr_points;
  double vr_r = 1.0;
  int vr_max_dim = 3;
  size_t vr_budget = 5000000;
  vr->add_option("--points", vr_points)->required();
  vr->add_option("--r", vr_r)->required();
  vr->add_option("--max-dim", vr_max_dim);
  vr->add_option("--budget", vr_budget);

  // oracle-gh
  auto* oracle = app.add_subcommand("oracle-gh", "Exact tiny-space distance");
  std::string o_x, o_y;
  size_t o_cells = 25;
  oracle->add_option("--x", o_x)->required();
  oracle->add_option("--y", o_y)->required();
  oracle->add_option("--max-cells", o_cells);

  // odd-map
  auto* odd = app.add_subcommand("odd-map", "Odd-map distortion/modulus report");
  std::string m_construction;
  int m_n = 1;
  double m_eps = 0.3, m_eta = 0.05;
  size_t m_samples = 100000;
  uint64_t m_seed = 20240801;
  odd->add_option("--construction", m_construction)
      ->required()
      ->check(CLI::IsMember(
          {"cone_vertex", "equatorial_helmet", "vr_pipeline"}));
  odd->add_option("--n", m_n)->required();
  odd->add_option("--epsilon", m_eps, "Pipeline net scale");
  odd->add_option("--eta", m_eta);
  odd->add_option("--samples", m_samples);
  odd->add_option("--seed", m_seed);

  // constants
  auto* consts = app.add_subcommand("constants", "Known closed-form values");
  std::string k_format = "json";
  consts->add_option("--format", k_format)
      ->check(CLI::IsMember({"json", "markdown"}));

  // Let -o/--output appear after the subcommand as well.
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (table->parsed())
      return run_table(t_max_n, t_max_k, t_metric, t_format, t_samples, t_seed,
                       output);
    if (verify->parsed()) return run_verify(v_n, v_samples, v_seed, output);
    if (covering->parsed())
      return run_covering(c_construction, c_n, c_eps, c_k, c_samples, c_seed,
                          output);
    if (vr->parsed())
      return run_vr_homology(vr_points, vr_r, vr_max_dim, vr_budget, output);
    if (oracle->parsed()) return run_oracle_gh(o_x, o_y, o_cells, output);
    if (odd->parsed())
      return run_odd_map(m_construction, m_n, m_eps, m_eta, m_samples, m_seed,
                         output);
    if (consts->parsed()) return run_constants(k_format, output);
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
