#pragma once

#include <cstdint>
#include <vector>

namespace ghlab {

// Counter-based 64-bit generator (splitmix64). Streams derived from
// (seed, counter) are independent of threading and evaluation order,
// so every sampled quantity is reproducible from the seed alone.
struct SplitMix64 {
  uint64_t state;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller (one value; pairs share a draw internally).
  double next_gaussian();
};

// Per-item substream: same (seed, counter) -> same stream, on any thread.
inline SplitMix64 substream(uint64_t seed, uint64_t counter) {
  SplitMix64 mix(seed ^ (0x9e3779b97f4a7c15ull * (counter + 1)));
  mix.next();
  return mix;
}

// Uniform point on S^dim (dim+1 coordinates), Gaussian-normalize method.
std::vector<double> sample_sphere(int dim, uint64_t seed, uint64_t index);

}  // namespace ghlab
