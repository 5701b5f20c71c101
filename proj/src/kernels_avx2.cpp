#include "ghlab/kernels.hpp"

#if defined(__x86_64__)

#include <immintrin.h>

#include <limits>

namespace ghlab::kernels {

namespace {
constexpr size_t kMaxDim = 32;
}

// Processes points four at a time: transpose the block to one lane per
// coordinate, then sweep all centers with the block resident in registers.
// Same multiply/add order as the scalar kernel, so results match bit-for-bit.
void max_dot_avx2(const double* pts, size_t npts, const double* ctrs,
                  size_t nctrs, size_t dim, bool absdot, double* out) {
  if (dim > kMaxDim) {
    max_dot_scalar(pts, npts, ctrs, nctrs, dim, absdot, out);
    return;
  }
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  size_t i = 0;
  alignas(32) double lanes[kMaxDim][4];
  for (; i + 4 <= npts; i += 4) {
    for (size_t d = 0; d < dim; ++d)
      for (size_t l = 0; l < 4; ++l) lanes[d][l] = pts[(i + l) * dim + d];
    __m256d best = _mm256_set1_pd(-std::numeric_limits<double>::infinity());
    for (size_t c = 0; c < nctrs; ++c) {
      const double* q = ctrs + c * dim;
      __m256d acc = _mm256_setzero_pd();
      for (size_t d = 0; d < dim; ++d) {
        __m256d p = _mm256_load_pd(lanes[d]);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(p, _mm256_set1_pd(q[d])));
      }
      if (absdot) acc = _mm256_andnot_pd(sign_mask, acc);
      best = _mm256_max_pd(best, acc);
    }
    _mm256_storeu_pd(out + i, best);
  }
  if (i < npts)
    max_dot_scalar(pts + i * dim, npts - i, ctrs, nctrs, dim, absdot, out + i);
}

}  // namespace ghlab::kernels

#endif  // __x86_64__
