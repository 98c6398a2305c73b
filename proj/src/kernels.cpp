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

#include "privut/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#include "privut/errors.hpp"
#include "privut_kernel_impls.hpp"

namespace privut::kernels {
namespace {

bool backend_supported(Backend backend) {
  switch (backend) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
#if PRIVUT_HAVE_AVX2
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Backend::neon:
#if PRIVUT_HAVE_NEON
      return true;
#else
      return false;
#endif
  }
  return false;
}

Backend detect() {
  if (const char* env = std::getenv("PRIVUT_KERNELS")) {
    const std::string name(env);
    for (Backend b : {Backend::scalar, Backend::avx2, Backend::neon}) {
      if (name == backend_name(b) && backend_supported(b)) return b;
    }
    // Unknown or unsupported override: fall through to autodetection.
  }
  if (backend_supported(Backend::avx2)) return Backend::avx2;
  if (backend_supported(Backend::neon)) return Backend::neon;
  return Backend::scalar;
}

std::atomic<Backend> g_backend{detect()};

}  // namespace

Backend active_backend() { return g_backend.load(std::memory_order_relaxed); }

Backend detected_backend() { return detect(); }

std::string_view backend_name(Backend backend) {
  switch (backend) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
    case Backend::neon:
      return "neon";
  }
  return "unknown";
}

void force_backend(Backend backend) {
  if (!backend_supported(backend)) {
    throw UsageError("kernel backend '" + std::string(backend_name(backend)) +
                     "' is not supported on this CPU");
  }
  g_backend.store(backend, std::memory_order_relaxed);
}

double dot(const double* a, const double* b, std::size_t len) {
  switch (active_backend()) {
#if PRIVUT_HAVE_AVX2
    case Backend::avx2:
      return detail::dot_avx2(a, b, len);
#endif
#if PRIVUT_HAVE_NEON
    case Backend::neon:
      return detail::dot_neon(a, b, len);
#endif
    default:
      return detail::dot_scalar(a, b, len);
  }
}

void axpy(double alpha, const double* x, double* y, std::size_t len) {
  switch (active_backend()) {
#if PRIVUT_HAVE_AVX2
    case Backend::avx2:
      return detail::axpy_avx2(alpha, x, y, len);
#endif
#if PRIVUT_HAVE_NEON
    case Backend::neon:
      return detail::axpy_neon(alpha, x, y, len);
#endif
    default:
      return detail::axpy_scalar(alpha, x, y, len);
  }
}

void syr_upper(const double* x, std::size_t d, double* acc) {
  switch (active_backend()) {
#if PRIVUT_HAVE_AVX2
    case Backend::avx2:
      return detail::syr_upper_avx2(x, d, acc);
#endif
#if PRIVUT_HAVE_NEON
    case Backend::neon:
      return detail::syr_upper_neon(x, d, acc);
#endif
    default:
      return detail::syr_upper_scalar(x, d, acc);
  }
}

}  // namespace privut::kernels
