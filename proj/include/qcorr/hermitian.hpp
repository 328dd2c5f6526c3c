// Copyright 2026 The qcorr authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <functional>
#include <vector>

#include "qcorr/complex_matrix.hpp"

namespace qcorr {

// Tolerance applied when validating a matrix as Hermitian.
inline constexpr double kHermitianTol = 1e-10;

// Eigendecomposition of a Hermitian matrix. eigenvalues are sorted
// ascending (ties keep their sweep order); column k of eigenvectors is the
// eigenvector of eigenvalues[k]. Eigenvector phase is not pinned: callers
// must not depend on it.
struct Spectrum {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
};

// Cyclic complex Jacobi diagonalization. Sweeps until the largest
// off-diagonal magnitude drops below 1e-13, capped at 100 sweeps. Inputs
// are symmetrized first; throws NonHermitianError beyond kHermitianTol.
Spectrum eig_hermitian(const ComplexMatrix& h);

// V f(Lambda) V^dagger. Throws DomainError if f is non-finite at any
// eigenvalue; callers handle 0*ln(0)-style conventions themselves.
ComplexMatrix matrix_func(const ComplexMatrix& h,
                          const std::function<double(double)>& f);

// Sum of |eigenvalue| over the spectrum of a Hermitian matrix.
double trace_norm(const ComplexMatrix& h);

// Contract away one subsystem of a (d1 x d2)-partitioned operator.
// keep selects the surviving subsystem (1 or 2); the trace is preserved.
ComplexMatrix partial_trace(const ComplexMatrix& rho, std::size_t d1,
                            std::size_t d2, int keep);

// Transpose the second subsystem of a (d1 x d2)-partitioned operator.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, std::size_t d1,
                                std::size_t d2);

}  // namespace qcorr
