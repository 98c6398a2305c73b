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

// NEON is baseline on aarch64, so no special compile flags are needed.

#include "privut_kernel_impls.hpp"

#if PRIVUT_HAVE_NEON

#include <arm_neon.h>

namespace privut::kernels::detail {

double dot_neon(const double* a, const double* b, std::size_t len) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    acc = vfmaq_f64(acc, vld1q_f64(a + i), vld1q_f64(b + i));
  }
  double result = vaddvq_f64(acc);
  for (; i < len; ++i) result = std::fma(a[i], b[i], result);
  return result;
}

void axpy_neon(double alpha, const double* x, double* y, std::size_t len) {
  const float64x2_t va = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    float64x2_t vy = vld1q_f64(y + i);
    vy = vfmaq_f64(vy, va, vld1q_f64(x + i));
    vst1q_f64(y + i, vy);
  }
  for (; i < len; ++i) y[i] = std::fma(alpha, x[i], y[i]);
}

void syr_upper_neon(const double* x, std::size_t d, double* acc) {
  for (std::size_t i = 0; i < d; ++i) {
    axpy_neon(x[i], x + i, acc + i * d + i, d - i);
  }
}

}  // namespace privut::kernels::detail

#endif  // PRIVUT_HAVE_NEON
