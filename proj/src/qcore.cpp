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

#include "nogo/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace nogo {

namespace {

constexpr double kHermTol = 1e-10;
constexpr double kOffDiagTarget = 1e-13;
constexpr int kMaxSweeps = 100;

double off_diagonal_frobenius(const CMat& a) {
  double sum = 0.0;
  for (std::size_t p = 0; p < a.rows(); ++p) {
    for (std::size_t q = 0; q < a.cols(); ++q) {
      if (p != q) sum += std::norm(a(p, q));
    }
  }
  return std::sqrt(sum);
}

// One complex Jacobi rotation zeroing a(p,q). The rotation is
//   J_pp = c, J_pq = s*phase, J_qp = -s*conj(phase), J_qq = c
// with phase = a(p,q)/|a(p,q)| and the usual smaller-angle tangent choice.
void rotate(CMat& a, CMat& v, std::size_t p, std::size_t q) {
  const cplx apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const cplx phase = apq / mag;
  const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const cplx sigma = s * phase;

  const std::size_t n = a.rows();
  // A <- A J (columns p, q)
  for (std::size_t k = 0; k < n; ++k) {
    const cplx akp = a(k, p);
    const cplx akq = a(k, q);
    a(k, p) = c * akp - std::conj(sigma) * akq;
    a(k, q) = sigma * akp + c * akq;
  }
  // A <- J^dag A (rows p, q)
  for (std::size_t k = 0; k < n; ++k) {
    const cplx apk = a(p, k);
    const cplx aqk = a(q, k);
    a(p, k) = c * apk - sigma * aqk;
    a(q, k) = std::conj(sigma) * apk + c * aqk;
  }
  // V <- V J
  for (std::size_t k = 0; k < n; ++k) {
    const cplx vkp = v(k, p);
    const cplx vkq = v(k, q);
    v(k, p) = c * vkp - std::conj(sigma) * vkq;
    v(k, q) = sigma * vkp + c * vkq;
  }
}

}  // namespace

EigenSystem hermitian_eig(const CMat& h) {
  if (!h.is_square()) throw std::invalid_argument("hermitian_eig: matrix not square");
  if (!is_hermitian(h, kHermTol)) {
    throw std::invalid_argument("hermitian_eig: matrix not Hermitian within 1e-10");
  }
  const std::size_t n = h.rows();

  // Work on the exactly Hermitian average so rounding in the input does not
  // leak into the rotations.
  CMat a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));
    }
  }
  CMat v = CMat::identity(n);

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_frobenius(a) < kOffDiagTarget) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        rotate(a, v, p, q);
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() > a(j, j).real();
  });

  EigenSystem out;
  out.values.resize(n);
  out.vectors = CMat(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

double trace_norm(const CMat& m) {
  const EigenSystem es = hermitian_eig(m);
  double sum = 0.0;
  for (double lam : es.values) sum += std::abs(lam);
  return sum;
}

PureState::PureState(std::vector<cplx> amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.empty()) throw std::invalid_argument("PureState: empty amplitude vector");
  double norm2 = 0.0;
  for (const auto& a : amps_) norm2 += std::norm(a);
  if (std::abs(std::sqrt(norm2) - 1.0) > 1e-12) {
    throw std::invalid_argument("PureState: vector is not normalized within 1e-12");
  }
}

PureState PureState::normalized(std::vector<cplx> amplitudes) {
  double norm2 = 0.0;
  for (const auto& a : amplitudes) norm2 += std::norm(a);
  if (norm2 <= 0.0) throw std::invalid_argument("PureState::normalized: zero vector");
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& a : amplitudes) a *= inv;
  return PureState(std::move(amplitudes));
}

CMat PureState::projector() const {
  const std::size_t n = dim();
  CMat out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = amps_[i] * std::conj(amps_[j]);
    }
  }
  return out;
}

cplx inner(const PureState& a, const PureState& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("inner: dimension mismatch");
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    s += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
  }
  return s;
}

PureState tensor_product(const PureState& a, const PureState& b) {
  std::vector<cplx> amps(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) {
      amps[i * b.dim() + j] = a.amplitudes()[i] * b.amplitudes()[j];
    }
  }
  return PureState(std::move(amps));
}

DensityMatrix::DensityMatrix(CMat m) : mat_(std::move(m)) {
  if (!mat_.is_square()) throw std::invalid_argument("DensityMatrix: matrix not square");
  if (!is_hermitian(mat_, 1e-12)) {
    throw std::invalid_argument("DensityMatrix: not Hermitian within 1e-12");
  }
  if (std::abs(mat_.trace().real() - 1.0) > 1e-10 || std::abs(mat_.trace().imag()) > 1e-10) {
    throw std::invalid_argument("DensityMatrix: trace differs from 1 by more than 1e-10");
  }
  const EigenSystem es = hermitian_eig(mat_);
  if (es.values.back() < -1e-10) {
    throw std::invalid_argument("DensityMatrix: eigenvalue below -1e-10");
  }
}

DensityMatrix DensityMatrix::pure(const PureState& psi) {
  return DensityMatrix(psi.projector());
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t dim_a,
                            std::size_t dim_b, Subsystem keep) {
  if (dim_a * dim_b != rho.dim()) {
    throw std::invalid_argument("partial_trace: dim_a * dim_b != dim(rho)");
  }
  const CMat& m = rho.mat();
  if (keep == Subsystem::A) {
    CMat out(dim_a, dim_a);
    for (std::size_t i = 0; i < dim_a; ++i) {
      for (std::size_t k = 0; k < dim_a; ++k) {
        cplx s = 0.0;
        for (std::size_t j = 0; j < dim_b; ++j) {
          s += m(i * dim_b + j, k * dim_b + j);
        }
        out(i, k) = s;
      }
    }
    return DensityMatrix(out);
  }
  CMat out(dim_b, dim_b);
  for (std::size_t j = 0; j < dim_b; ++j) {
    for (std::size_t l = 0; l < dim_b; ++l) {
      cplx s = 0.0;
      for (std::size_t i = 0; i < dim_a; ++i) {
        s += m(i * dim_b + j, i * dim_b + l);
      }
      out(j, l) = s;
    }
  }
  return DensityMatrix(out);
}

double vn_entropy(const DensityMatrix& rho) {
  const EigenSystem es = hermitian_eig(rho.mat());
  double s = 0.0;
  for (double lam : es.values) {
    if (lam < -1e-10) throw std::invalid_argument("vn_entropy: eigenvalue below -1e-10");
    if (lam > 0.0) s -= lam * std::log2(lam);
  }
  return s;
}

double fidelity(const PureState& psi, const DensityMatrix& rho) {
  if (psi.dim() != rho.dim()) throw std::invalid_argument("fidelity: dimension mismatch");
  cplx val = 0.0;
  for (std::size_t i = 0; i < psi.dim(); ++i) {
    for (std::size_t j = 0; j < psi.dim(); ++j) {
      val += std::conj(psi.amplitudes()[i]) * rho.mat()(i, j) * psi.amplitudes()[j];
    }
  }
  return val.real();
}

double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

}  // namespace nogo
