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

#include <cstdint>
#include <utility>

#include "qcorr/complex_matrix.hpp"
#include "qcorr/rng.hpp"

namespace qcorr {

//============================================================================
// Pauli operators
//============================================================================

enum class Pauli { I, X, Y, Z };

// The standard 2x2 Pauli matrix (or the identity).
ComplexMatrix pauli(Pauli p);

//============================================================================
// State parameterizations
//============================================================================

// Probabilities of the four basis labels of a diagonal two-qubit state,
// basis ordered |00>, |01>, |10>, |11> (first label = subsystem 1).
struct ClassicalProbs {
  double p00 = 0.0;
  double p01 = 0.0;
  double p10 = 0.0;
  double p11 = 0.0;

  // Throws InvalidProbabilitiesError unless each entry is in [0,1] and the
  // sum is 1 within 1e-12.
  void validate() const;
};

// Mixing parameter of the Werner family, f in [0, 1].
struct WernerParam {
  double f = 0.0;

  // Throws OutOfRangeError outside [0, 1].
  void validate() const;
};

//============================================================================
// DensityMatrix
//============================================================================

// A validated bipartite state: Hermitian within 1e-10, unit trace within
// 1e-10, eigenvalues >= -1e-10, with declared subsystem dimensions (d1, d2).
// Immutable after construction.
class DensityMatrix {
public:
  DensityMatrix(ComplexMatrix m, std::size_t d1, std::size_t d2);

  const ComplexMatrix& matrix() const { return m_; }
  std::size_t d1() const { return d1_; }
  std::size_t d2() const { return d2_; }
  std::size_t dim() const { return m_.dim(); }
  bool is_two_qubit() const { return d1_ == 2 && d2_ == 2; }

private:
  ComplexMatrix m_;
  std::size_t d1_;
  std::size_t d2_;
};

//============================================================================
// Constructors
//============================================================================

// diag(p00, p01, p10, p11) with subsystem dims (2, 2).
DensityMatrix classical_state(const ClassicalProbs& p);

// (1-f)/3 * I + (4f-1)/3 * |psi-><psi-|, the U(x)U-invariant family mixing
// the maximally mixed state with the singlet.
DensityMatrix werner(const WernerParam& w);

// Projector onto the singlet (|01> - |10>)/sqrt(2).
ComplexMatrix singlet_projector();

// Tensor product of the two reduced states of rho.
DensityMatrix marginal_product(const DensityMatrix& rho);

// Normalized Ginibre state G G^dagger / Tr(G G^dagger); full rank with
// probability one, deterministic per seed. dim must be 2 or 4; dim 4 is
// declared (2,2), dim 2 is declared (1,2) and serves as a product factor.
DensityMatrix random_density(std::size_t dim, std::uint64_t seed);

// Two independent Haar-ish 2x2 unitaries (Gram-Schmidt of Gaussian
// columns), deterministic per seed.
std::pair<ComplexMatrix, ComplexMatrix> random_local_unitary(
    std::uint64_t seed);

// (u1 (x) u2) rho (u1 (x) u2)^dagger.
DensityMatrix conjugate_local(const DensityMatrix& rho,
                              const ComplexMatrix& u1,
                              const ComplexMatrix& u2);

//============================================================================
// Local channels
//============================================================================

enum class ChannelKind { Depolarizing, Dephasing };

// Kraus-sum application of a single-qubit channel on one subsystem.
// strength in [0, 1]; strength 1 is the completely depolarizing / fully
// dephasing point. The chosen subsystem must have dimension 2.
DensityMatrix local_channel(const DensityMatrix& rho, ChannelKind kind,
                            double strength, int subsystem);

//============================================================================
// Random parameter helpers (shared by property tests and audit pools)
//============================================================================

// Flat sample from the probability simplex (normalized exponentials).
ClassicalProbs random_probs(Rng& rng);

}  // namespace qcorr
