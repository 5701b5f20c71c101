#include "ghlab/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>

namespace ghlab::kernels {

void max_dot_scalar(const double* pts, size_t npts, const double* ctrs,
                    size_t nctrs, size_t dim, bool absdot, double* out) {
  for (size_t i = 0; i < npts; ++i) {
    const double* p = pts + i * dim;
    double best = -std::numeric_limits<double>::infinity();
    for (size_t c = 0; c < nctrs; ++c) {
      const double* q = ctrs + c * dim;
      double acc = 0.0;
      for (size_t d = 0; d < dim; ++d) acc = acc + p[d] * q[d];
      if (absdot) acc = std::fabs(acc);
      if (acc > best) best = acc;
    }
    out[i] = best;
  }
}

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

MaxDotFn pick() {
  const char* env = std::getenv("GH_LAB_KERNEL");
#if defined(__x86_64__)
  if (env && std::strcmp(env, "scalar") == 0) return max_dot_scalar;
  if (env && std::strcmp(env, "avx2") == 0) return max_dot_avx2;
  if (cpu_has_avx2()) return max_dot_avx2;
#else
  (void)env;
#endif
  return max_dot_scalar;
}

}  // namespace

MaxDotFn select_max_dot() {
  static MaxDotFn fn = pick();
  return fn;
}

const char* active_kernel_name() {
#if defined(__x86_64__)
  return select_max_dot() == max_dot_avx2 ? "avx2" : "scalar";
#else
  return "scalar";
#endif
}

}  // namespace ghlab::kernels
