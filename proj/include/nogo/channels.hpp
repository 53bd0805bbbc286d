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

#ifndef NOGO_CHANNELS_HPP
#define NOGO_CHANNELS_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "nogo/cmat.hpp"
#include "nogo/qcore.hpp"

namespace nogo {

/// Operator-sum representation of a quantum operation. Construction checks
/// only the structural part (non-empty, consistent shapes); whether the map
/// is trace-preserving or trace-nonincreasing is reported by check_channel
/// and enforced where it matters (apply_channel rejects super-normalized
/// outcome probabilities).
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<CMat> kraus_ops);

  std::size_t dim_in() const { return dim_in_; }
  std::size_t dim_out() const { return dim_out_; }
  const std::vector<CMat>& kraus_ops() const { return ops_; }

 private:
  std::size_t dim_in_ = 0;
  std::size_t dim_out_ = 0;
  std::vector<CMat> ops_;
};

struct ChannelVerdict {
  bool is_cp = false;
  bool is_tp = false;
  bool is_trace_nonincreasing = false;
  std::vector<double> choi_eigenvalues;  // descending
};

struct ChannelOutput {
  DensityMatrix state;
  double probability;
};

/// Applies the operation and renormalizes: out = T(rho)/Tr T(rho) with
/// probability Tr T(rho). Throws if the outcome probability falls below
/// 1e-14 (the branch never occurs) or exceeds 1 + 1e-10 (the operator sum
/// is super-normalized).
ChannelOutput apply_channel(const KrausChannel& ch, const DensityMatrix& rho);

/// Choi matrix, convention: the channel acts on the second factor of the
/// maximally entangled state, C = (1/d) sum_ij E_ij (x) T(E_ij). For a
/// trace-preserving channel Tr C = 1; in general Tr C is the outcome
/// probability of the channel on the maximally mixed state.
CMat choi_matrix(const KrausChannel& ch);

ChannelVerdict check_channel(const KrausChannel& ch);

struct InferredChannel {
  CMat superoperator;  // d^2 x d^2, matrix-unit basis, column-major vec
  ChannelVerdict verdict;
};

/// Reconstructs the unique linear map matching all (input, output) pairs.
/// Inputs must be Hermitian and span the d^2-dimensional operator space
/// (checked through the rank of their Gram matrix); pairs that no linear
/// map reproduces within 1e-8 are rejected.
InferredChannel infer_from_data(const std::vector<std::pair<CMat, CMat>>& pairs);

/// vec/unvec are column-major; the superoperator acts as vec(out) = S vec(in).
std::vector<cplx> vec_column_major(const CMat& m);
CMat unvec_column_major(const std::vector<cplx>& v, std::size_t rows, std::size_t cols);
CMat apply_superoperator(const CMat& s, const CMat& x);
CMat choi_from_superoperator(const CMat& s, std::size_t dim);
ChannelVerdict verdict_from_superoperator(const CMat& s, std::size_t dim);

/// The d^2 standard Hermitian matrices spanning the operator space:
/// E_ii, (E_ij + E_ji), i(E_ij - E_ji).
std::vector<CMat> hermitian_basis(std::size_t dim);

/// Two-copy realization of the elementwise-squaring map on a qubit:
/// builds rho (x) rho, applies a CNOT controlled on the first qubit and
/// post-selects the second qubit on |0>. The output satisfies
/// out_ij = rho_ij^2 / (rho_00^2 + rho_11^2) with success probability
/// rho_00^2 + rho_11^2 (always >= 1/2).
ChannelOutput squaring_circuit(const DensityMatrix& rho);

}  // namespace nogo

#endif  // NOGO_CHANNELS_HPP
