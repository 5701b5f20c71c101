#pragma once

#include <cstddef>

namespace ghlab::kernels {

// For each point pts[i] (row-major, npts x dim doubles, unit vectors),
// writes out[i] = max over centers of <pts[i], ctr> (absdot: max |<.,.>|).
// The nearest-center geodesic distance is arccos(out[i]); covering-radius
// and partition-coverage scans reduce over these values.
using MaxDotFn = void (*)(const double* pts, size_t npts, const double* ctrs,
                          size_t nctrs, size_t dim, bool absdot, double* out);

void max_dot_scalar(const double* pts, size_t npts, const double* ctrs,
                    size_t nctrs, size_t dim, bool absdot, double* out);

#if defined(__x86_64__)
void max_dot_avx2(const double* pts, size_t npts, const double* ctrs,
                  size_t nctrs, size_t dim, bool absdot, double* out);
#endif

// Runtime selection: AVX2 when the CPU supports it, scalar otherwise.
// GH_LAB_KERNEL=scalar|avx2 overrides. Both variants use the same
// multiply-then-add order (no FMA contraction) so results are bit-identical.
MaxDotFn select_max_dot();
const char* active_kernel_name();

}  // namespace ghlab::kernels
