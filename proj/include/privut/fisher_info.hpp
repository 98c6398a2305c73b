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

#ifndef PRIVUT_FISHER_INFO_HPP
#define PRIVUT_FISHER_INFO_HPP

#include "privut/covmodel.hpp"

namespace privut {

// Fisher information of the utility features given the released data:
// the negated expected Hessian of the log-likelihood of Y given Xu.
// With a = inv(S_Xu) and b = inv(S_{Y u Xu}), and the Xu block occupying
// trailing positions n..n+n_u-1 (0-based), the entries are
//   diag:     h(i,i) = b(n+i, n+i) - a(i, i)
//   off-diag: h(i,j) = 0.5*(b(n+i,n+j) + b(n+j,n+i) - a(i,j) - a(j,i))
// which is symmetric by construction.
struct FisherMatrix {
  Matrix h;  // n_u x n_u
};

FisherMatrix fisher_matrix(const CovarianceModel& model,
                           const NoiseAllocation& theta);

// The n_u = 1 special case: (trailing diagonal entry of inv(S_{Y u Xu}))
// minus 1/var(Xu). Throws UsageError when n_u != 1.
double fisher_scalar(const CovarianceModel& model,
                     const NoiseAllocation& theta);

// Diagnostic for the cofactor identity: the trailing diagonal entry of
// inv(S_{Y u Xu}) (lhs) against |S_Y| / |S_{Y u Xu}| computed through
// log-determinants (rhs). Requires n_u = 1.
struct CofactorIdentity {
  double lhs;
  double rhs;
};
CofactorIdentity cofactor_identity_check(const CovarianceModel& model,
                                         const NoiseAllocation& theta);

// The channel-capacity-shaped bridge between the two utility metrics:
// I(Xu;Y) = 0.5*ln(var(Xu)*fisher + 1). Fisher round-off in [-1e-9, 0) is
// treated as 0; anything more negative raises NumericalError.
double mi_from_fisher(double sigma2_xu, double fisher);

// Smallest Fisher value whose implied I(Xu;Y) still meets an MI utility-loss
// budget of `delta` nats: (e^{2*(I(Xu;X) - delta)} - 1) / var(Xu).
// Requires n_u = 1 and 0 <= delta <= I(Xu;X).
double fisher_threshold_from_delta(const CovarianceModel& model, double delta);

}  // namespace privut

#endif  // PRIVUT_FISHER_INFO_HPP
