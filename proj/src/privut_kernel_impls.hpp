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

// Internal: per-backend kernel implementations. The AVX2 variants live in
// their own translation unit compiled with -mavx2 -mfma; they are only
// invoked after a runtime cpuid check, so the rest of the library can be
// built for the baseline arch.

#ifndef PRIVUT_SRC_KERNEL_IMPLS_HPP
#define PRIVUT_SRC_KERNEL_IMPLS_HPP

#include <cmath>
#include <cstddef>

#if defined(__x86_64__) || defined(_M_X64)
#define PRIVUT_HAVE_AVX2 1
#else
#define PRIVUT_HAVE_AVX2 0
#endif

#if defined(__aarch64__) || defined(_M_ARM64)
#define PRIVUT_HAVE_NEON 1
#else
#define PRIVUT_HAVE_NEON 0
#endif

namespace privut::kernels::detail {

inline double dot_scalar(const double* a, const double* b, std::size_t len) {
  double acc = 0.0;
  for (std::size_t i = 0; i < len; ++i) acc = std::fma(a[i], b[i], acc);
  return acc;
}

inline void axpy_scalar(double alpha, const double* x, double* y,
                        std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) y[i] = std::fma(alpha, x[i], y[i]);
}

inline void syr_upper_scalar(const double* x, std::size_t d, double* acc) {
  for (std::size_t i = 0; i < d; ++i) {
    axpy_scalar(x[i], x + i, acc + i * d + i, d - i);
  }
}

#if PRIVUT_HAVE_AVX2
double dot_avx2(const double* a, const double* b, std::size_t len);
void axpy_avx2(double alpha, const double* x, double* y, std::size_t len);
void syr_upper_avx2(const double* x, std::size_t d, double* acc);
#endif

#if PRIVUT_HAVE_NEON
double dot_neon(const double* a, const double* b, std::size_t len);
void axpy_neon(double alpha, const double* x, double* y, std::size_t len);
void syr_upper_neon(const double* x, std::size_t d, double* acc);
#endif

}  // namespace privut::kernels::detail

#endif  // PRIVUT_SRC_KERNEL_IMPLS_HPP
