#include "ghlab/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace ghlab {

namespace {

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  return in;
}

}  // namespace

PointSet read_point_set(const std::string& path) {
  std::ifstream in = open_in(path);
  std::string header;
  if (!std::getline(in, header))
    throw ValidationError(path + ": missing header");
  int dim = -1, count = -1, symmetric = -1;
  if (std::sscanf(header.c_str(), "dim=%d count=%d symmetric=%d", &dim, &count,
                  &symmetric) != 3 ||
      dim < 0 || count < 0 || (symmetric != 0 && symmetric != 1))
    throw ValidationError(path + ": malformed header");
  PointSet ps{dim, symmetric == 1, {}};
  for (int i = 0; i < count; ++i) {
    std::string line;
    if (!std::getline(in, line))
      throw ValidationError(path + ": fewer points than header promises");
    std::istringstream row(line);
    Vec v(static_cast<size_t>(dim) + 1);
    for (double& c : v)
      if (!(row >> c)) throw ValidationError(path + ": malformed point line");
    double extra;
    if (row >> extra) throw ValidationError(path + ": too many coordinates");
    ps.points.emplace_back(std::move(v));
  }
  return ps;
}

void write_point_set(const std::string& path, const PointSet& ps) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path);
  out << "dim=" << ps.dim << " count=" << ps.points.size() << " symmetric="
      << (ps.symmetric ? 1 : 0) << "\n";
  for (const SpherePoint& p : ps.points) {
    for (size_t c = 0; c < p.coords.size(); ++c)
      out << (c ? " " : "") << format_sig(p.coords[c], 17);
    out << "\n";
  }
}

FiniteMetricSpace read_distance_matrix(const std::string& path) {
  std::ifstream in = open_in(path);
  std::string header;
  if (!std::getline(in, header))
    throw ValidationError(path + ": missing header");
  std::istringstream head(header);
  std::string tag;
  head >> tag;
  if (tag != "labels") throw ValidationError(path + ": expected labels header");
  std::vector<std::string> labels;
  std::string label;
  while (head >> label) labels.push_back(label);
  if (labels.empty()) throw ValidationError(path + ": no labels");
  size_t n = labels.size();
  std::vector<double> dist(n * n, 0.0);
  for (size_t i = 0; i < n; ++i) {
    std::string line;
    if (!std::getline(in, line))
      throw ValidationError(path + ": missing matrix row");
    std::istringstream row(line);
    for (size_t j = 0; j <= i; ++j) {
      double d;
      if (!(row >> d)) throw ValidationError(path + ": malformed matrix row");
      dist[i * n + j] = dist[j * n + i] = d;
    }
    std::string extra;
    if (row >> extra)
      throw ValidationError(path + ": trailing entries in matrix row");
  }
  return FiniteMetricSpace(std::move(labels), std::move(dist));
}

void write_distance_matrix(const std::string& path,
                           const FiniteMetricSpace& space) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path);
  out << "labels";
  for (const std::string& l : space.labels()) out << " " << l;
  out << "\n";
  for (int i = 0; i < space.size(); ++i) {
    for (int j = 0; j <= i; ++j)
      out << (j ? " " : "") << format_sig(space.d(i, j), 17);
    out << "\n";
  }
}

std::string format_sig(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

double round_sig(double v, int digits) {
  return std::strtod(format_sig(v, digits).c_str(), nullptr);
}

}  // namespace ghlab
