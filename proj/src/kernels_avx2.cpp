//
// Copyright 2026 The Privut Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

// Compiled with -mavx2 -mfma (see src/CMakeLists.txt); callers dispatch here
// only after __builtin_cpu_supports confirms both features.

#include "privut_kernel_impls.hpp"

#if PRIVUT_HAVE_AVX2

#include <immintrin.h>

namespace privut::kernels::detail {

double dot_avx2(const double* a, const double* b, std::size_t len) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
  }
  __m128d lo = _mm256_castpd256_pd128(acc);
  __m128d hi = _mm256_extractf128_pd(acc, 1);
  lo = _mm_add_pd(lo, hi);
  double result = _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
  for (; i < len; ++i) result = std::fma(a[i], b[i], result);
  return result;
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t len) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    __m256d vy = _mm256_loadu_pd(y + i);
    vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy);
    _mm256_storeu_pd(y + i, vy);
  }
  for (; i < len; ++i) y[i] = std::fma(alpha, x[i], y[i]);
}

void syr_upper_avx2(const double* x, std::size_t d, double* acc) {
  for (std::size_t i = 0; i < d; ++i) {
    axpy_avx2(x[i], x + i, acc + i * d + i, d - i);
  }
}

}  // namespace privut::kernels::detail

#endif  // PRIVUT_HAVE_AVX2
