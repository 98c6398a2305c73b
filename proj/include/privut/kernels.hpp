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

#ifndef PRIVUT_KERNELS_HPP
#define PRIVUT_KERNELS_HPP

#include <cstddef>
#include <string_view>

// Dense inner loops used by the factorization, solve, sampling and
// covariance-accumulation paths. Every kernel has a scalar reference
// implementation and, where the hardware supports it, an AVX2/FMA or NEON
// variant. The variant is picked once at startup from CPU capabilities;
// tests pin the backend explicitly to check that all variants agree.
namespace privut::kernels {

enum class Backend { scalar, avx2, neon };

// The backend currently routing dot/axpy/syr_upper.
Backend active_backend();

// Best backend the running CPU supports.
Backend detected_backend();

std::string_view backend_name(Backend backend);

// Routes subsequent kernel calls through `backend`. Throws UsageError if
// the running CPU does not support it. Intended for equivalence tests and
// the PRIVUT_KERNELS=scalar|avx2|neon environment override.
void force_backend(Backend backend);

// sum_i a[i]*b[i]
double dot(const double* a, const double* b, std::size_t len);

// y[i] += alpha * x[i]
void axpy(double alpha, const double* x, double* y, std::size_t len);

// Accumulates the upper triangle of the rank-1 update x x^T into the
// row-major d-by-d matrix `acc`: acc(i,j) += x[i]*x[j] for j >= i.
void syr_upper(const double* x, std::size_t d, double* acc);

}  // namespace privut::kernels

#endif  // PRIVUT_KERNELS_HPP
