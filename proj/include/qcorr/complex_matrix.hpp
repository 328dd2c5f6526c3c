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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace qcorr {

using Complex = std::complex<double>;

// Dense square complex matrix, row-major. The Hilbert spaces handled here
// have dimension 2 or 4, so there is no blocking, no sparsity, and no
// expression templates -- plain value semantics throughout.
class ComplexMatrix {
public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(const std::vector<double>& values);
  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t dim() const { return dim_; }
  bool empty() const { return dim_ == 0; }

  Complex& operator()(std::size_t i, std::size_t j) {
    return data_[i * dim_ + j];
  }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return data_[i * dim_ + j];
  }
  const std::vector<Complex>& data() const { return data_; }

  Complex trace() const;
  ComplexMatrix adjoint() const;

  // max_ij |a(i,j) - conj(a(j,i))|
  double hermiticity_defect() const;
  bool is_hermitian(double tol) const { return hermiticity_defect() <= tol; }

  // (a + a^dagger)/2, used to scrub round-off drift before decompositions.
  ComplexMatrix symmetrized() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex scalar);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend ComplexMatrix operator*(ComplexMatrix lhs, Complex scalar) {
    lhs *= scalar;
    return lhs;
  }
  friend ComplexMatrix operator*(Complex scalar, ComplexMatrix rhs) {
    rhs *= scalar;
    return rhs;
  }

private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

// Matrix product.
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

// Tensor (Kronecker) product: entry ((i*db+k),(j*db+l)) = a(i,j) * b(k,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// max_ij |a(i,j) - b(i,j)|
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qcorr
