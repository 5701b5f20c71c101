#include "ghlab/rng.hpp"

#include <cmath>

namespace ghlab {

double SplitMix64::next_gaussian() {
  // Box-Muller; regenerate the pair each call to keep the stream
  // a pure function of the number of calls made so far.
  double u1 = 1.0 - next_double();  // (0, 1]
  double u2 = next_double();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

std::vector<double> sample_sphere(int dim, uint64_t seed, uint64_t index) {
  SplitMix64 rng = substream(seed, index);
  std::vector<double> v(static_cast<size_t>(dim) + 1);
  while (true) {
    double norm2 = 0.0;
    for (auto& c : v) {
      c = rng.next_gaussian();
      norm2 += c * c;
    }
    if (norm2 > 1e-300) {
      double inv = 1.0 / std::sqrt(norm2);
      for (auto& c : v) c *= inv;
      return v;
    }
  }
}

}  // namespace ghlab
