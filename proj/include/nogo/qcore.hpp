// Copyright 2026 The nogo authors
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

#ifndef NOGO_QCORE_HPP
#define NOGO_QCORE_HPP

#include <cstddef>
#include <vector>

#include "nogo/cmat.hpp"

namespace nogo {

/// Result of diagonalizing a Hermitian matrix: h = V diag(values) V^dag,
/// eigenvalues sorted descending, eigenvectors as orthonormal columns of V.
struct EigenSystem {
  std::vector<double> values;
  CMat vectors;
};

/// Cyclic Jacobi diagonalization for Hermitian matrices. Stops when the
/// off-diagonal Frobenius norm drops below 1e-13 or after 100 sweeps.
/// Throws std::invalid_argument if h is not Hermitian within 1e-10.
EigenSystem hermitian_eig(const CMat& h);

/// Sum of absolute eigenvalues (Hermitian input only).
double trace_norm(const CMat& m);

/// Normalized state vector. The constructor rejects vectors whose Euclidean
/// norm deviates from 1 by more than 1e-12.
class PureState {
 public:
  explicit PureState(std::vector<cplx> amplitudes);

  /// Rescales the vector to unit norm first (throws on the zero vector).
  static PureState normalized(std::vector<cplx> amplitudes);

  std::size_t dim() const { return amps_.size(); }
  const std::vector<cplx>& amplitudes() const { return amps_; }

  CMat projector() const;

 private:
  std::vector<cplx> amps_;
};

cplx inner(const PureState& a, const PureState& b);
PureState tensor_product(const PureState& a, const PureState& b);

/// Hermitian, unit-trace, positive-semidefinite matrix. The constructor
/// enforces Hermiticity within 1e-12 elementwise, |trace - 1| <= 1e-10 and
/// eigenvalues >= -1e-10.
class DensityMatrix {
 public:
  explicit DensityMatrix(CMat m);
  static DensityMatrix pure(const PureState& psi);

  std::size_t dim() const { return mat_.rows(); }
  const CMat& mat() const { return mat_; }

 private:
  CMat mat_;
};

enum class Subsystem { A, B };

/// Reduced state on the kept factor of a bipartite system of shape
/// (dim_a, dim_b). Throws on dimension mismatch.
DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t dim_a,
                            std::size_t dim_b, Subsystem keep);

/// Von Neumann entropy in bits; eigenvalues in [-1e-10, 0) are clipped to 0,
/// anything below -1e-10 is an error.
double vn_entropy(const DensityMatrix& rho);

/// <psi| rho |psi>.
double fidelity(const PureState& psi, const DensityMatrix& rho);

/// Binary Shannon entropy in bits, H2(p) = -p log2 p - (1-p) log2(1-p).
double binary_entropy(double p);

}  // namespace nogo

#endif  // NOGO_QCORE_HPP
