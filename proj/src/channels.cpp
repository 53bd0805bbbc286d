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

#include "nogo/channels.hpp"

#include <cmath>
#include <stdexcept>

namespace nogo {

namespace {

CMat kraus_sum(const KrausChannel& ch) {
  CMat sum(ch.dim_in(), ch.dim_in());
  for (const CMat& a : ch.kraus_ops()) {
    sum += a.adjoint() * a;
  }
  return sum;
}

CMat hermitize(const CMat& m) {
  CMat out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    }
  }
  return out;
}

}  // namespace

KrausChannel::KrausChannel(std::vector<CMat> kraus_ops) : ops_(std::move(kraus_ops)) {
  if (ops_.empty()) throw std::invalid_argument("KrausChannel: needs at least one operator");
  dim_out_ = ops_.front().rows();
  dim_in_ = ops_.front().cols();
  for (const CMat& a : ops_) {
    if (a.rows() != dim_out_ || a.cols() != dim_in_) {
      throw std::invalid_argument("KrausChannel: inconsistent operator shapes");
    }
  }
}

ChannelOutput apply_channel(const KrausChannel& ch, const DensityMatrix& rho) {
  if (ch.dim_in() != rho.dim()) {
    throw std::invalid_argument("apply_channel: dimension mismatch");
  }
  CMat mapped(ch.dim_out(), ch.dim_out());
  for (const CMat& a : ch.kraus_ops()) {
    mapped += a * rho.mat() * a.adjoint();
  }
  const double p = mapped.trace().real();
  if (p < 1e-14) {
    throw std::runtime_error("apply_channel: outcome probability below 1e-14");
  }
  if (p > 1.0 + 1e-10) {
    throw std::domain_error("apply_channel: probability exceeds 1 (channel not trace-nonincreasing)");
  }
  mapped *= cplx(1.0 / p, 0.0);
  return ChannelOutput{DensityMatrix(hermitize(mapped)), p};
}

CMat choi_matrix(const KrausChannel& ch) {
  const std::size_t d = ch.dim_in();
  const std::size_t dout = ch.dim_out();
  CMat choi(d * dout, d * dout);
  // Block (i,j) of size dout holds (1/d) T(E_ij) = (1/d) sum_k (A_k e_i)(A_k e_j)^dag.
  for (const CMat& a : ch.kraus_ops()) {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t r = 0; r < dout; ++r) {
          for (std::size_t s = 0; s < dout; ++s) {
            choi(i * dout + r, j * dout + s) += a(r, i) * std::conj(a(s, j));
          }
        }
      }
    }
  }
  choi *= cplx(1.0 / static_cast<double>(d), 0.0);
  return hermitize(choi);
}

ChannelVerdict check_channel(const KrausChannel& ch) {
  ChannelVerdict v;
  const CMat sum = kraus_sum(ch);
  v.is_tp = max_abs_diff(sum, CMat::identity(ch.dim_in())) <= 1e-10;
  const EigenSystem sum_eig = hermitian_eig(sum);
  v.is_trace_nonincreasing = sum_eig.values.front() <= 1.0 + 1e-10;
  const EigenSystem choi_eig = hermitian_eig(choi_matrix(ch));
  v.choi_eigenvalues = choi_eig.values;
  v.is_cp = choi_eig.values.back() >= -1e-9;
  return v;
}

std::vector<cplx> vec_column_major(const CMat& m) {
  std::vector<cplx> v(m.rows() * m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      v[j * m.rows() + i] = m(i, j);
    }
  }
  return v;
}

CMat unvec_column_major(const std::vector<cplx>& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw std::invalid_argument("unvec: size mismatch");
  CMat m(rows, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < rows; ++i) {
      m(i, j) = v[j * rows + i];
    }
  }
  return m;
}

CMat apply_superoperator(const CMat& s, const CMat& x) {
  const std::vector<cplx> vx = vec_column_major(x);
  std::vector<cplx> vy(s.rows(), cplx(0.0, 0.0));
  for (std::size_t i = 0; i < s.rows(); ++i) {
    cplx acc = 0.0;
    for (std::size_t j = 0; j < s.cols(); ++j) acc += s(i, j) * vx[j];
    vy[i] = acc;
  }
  const auto dim = x.rows();
  return unvec_column_major(vy, dim, dim);
}

CMat choi_from_superoperator(const CMat& s, std::size_t dim) {
  CMat choi(dim * dim, dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      // vec(E_ij) is the standard basis vector at column-major index j*dim+i,
      // so T(E_ij) is that column of the superoperator.
      const std::size_t col = j * dim + i;
      for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
          choi(i * dim + r, j * dim + c) = s(c * dim + r, col) / static_cast<double>(dim);
        }
      }
    }
  }
  return hermitize(choi);
}

ChannelVerdict verdict_from_superoperator(const CMat& s, std::size_t dim) {
  ChannelVerdict v;
  const CMat choi = choi_from_superoperator(s, dim);
  const EigenSystem choi_eig = hermitian_eig(choi);
  v.choi_eigenvalues = choi_eig.values;
  v.is_cp = choi_eig.values.back() >= -1e-9;

  // Tracing the Choi matrix over the output factor gives (sum_k A_k^dag A_k)^T / d.
  CMat m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t k = 0; k < dim; ++k) {
      cplx acc = 0.0;
      for (std::size_t r = 0; r < dim; ++r) acc += choi(i * dim + r, k * dim + r);
      m(k, i) = acc * static_cast<double>(dim);
    }
  }
  v.is_tp = max_abs_diff(m, CMat::identity(dim)) <= 1e-10;
  const CMat mh = hermitize(m);
  if (is_hermitian(m, 1e-9)) {
    const EigenSystem es = hermitian_eig(mh);
    v.is_trace_nonincreasing = es.values.front() <= 1.0 + 1e-10;
  } else {
    v.is_trace_nonincreasing = false;
  }
  return v;
}

std::vector<CMat> hermitian_basis(std::size_t dim) {
  std::vector<CMat> basis;
  basis.reserve(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    CMat e(dim, dim);
    e(i, i) = 1.0;
    basis.push_back(e);
  }
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      CMat x(dim, dim);
      x(i, j) = 1.0;
      x(j, i) = 1.0;
      basis.push_back(x);
      CMat y(dim, dim);
      y(i, j) = cplx(0.0, 1.0);
      y(j, i) = cplx(0.0, -1.0);
      basis.push_back(y);
    }
  }
  return basis;
}

InferredChannel infer_from_data(const std::vector<std::pair<CMat, CMat>>& pairs) {
  if (pairs.empty()) throw std::invalid_argument("infer_from_data: no data");
  const std::size_t d = pairs.front().first.rows();
  const std::size_t d2 = d * d;
  const std::size_t n = pairs.size();
  for (const auto& [in, out] : pairs) {
    if (!in.is_square() || in.rows() != d || !out.is_square() || out.rows() != d) {
      throw std::invalid_argument("infer_from_data: inconsistent matrix dimensions");
    }
    if (!is_hermitian(in, 1e-10) || !is_hermitian(out, 1e-10)) {
      throw std::invalid_argument("infer_from_data: matrices must be Hermitian");
    }
  }

  CMat x(d2, n), y(d2, n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto vin = vec_column_major(pairs[k].first);
    const auto vout = vec_column_major(pairs[k].second);
    for (std::size_t i = 0; i < d2; ++i) {
      x(i, k) = vin[i];
      y(i, k) = vout[i];
    }
  }

  // Rank of the input set through its Gram matrix.
  const CMat gram = x.adjoint() * x;
  const EigenSystem gram_eig = hermitian_eig(gram);
  const double lam_max = std::max(gram_eig.values.front(), 0.0);
  const double rank_tol = static_cast<double>(n) * 1e-12 * std::max(lam_max, 1e-300);
  std::size_t rank = 0;
  for (double lam : gram_eig.values) {
    if (lam > rank_tol) ++rank;
  }
  if (rank < d2) {
    throw std::invalid_argument(
        "infer_from_data: inputs do not span the operator space (rank-deficient)");
  }

  // Least-squares solve S * X = Y through the normal equations:
  // S = Y X^dag (X X^dag)^{-1}, with the inverse from the eigensystem.
  const CMat k = hermitize(x * x.adjoint());
  const EigenSystem k_eig = hermitian_eig(k);
  CMat k_inv(d2, d2);
  for (std::size_t i = 0; i < d2; ++i) {
    for (std::size_t j = 0; j < d2; ++j) {
      cplx acc = 0.0;
      for (std::size_t m = 0; m < d2; ++m) {
        acc += k_eig.vectors(i, m) * std::conj(k_eig.vectors(j, m)) / k_eig.values[m];
      }
      k_inv(i, j) = acc;
    }
  }
  const CMat s = (y * x.adjoint()) * k_inv;

  double residual = 0.0;
  for (const auto& [in, out] : pairs) {
    residual = std::max(residual, max_abs_diff(apply_superoperator(s, in), out));
  }
  if (residual > 1e-8) {
    throw std::runtime_error("infer_from_data: no linear map fits the pairs within 1e-8");
  }

  return InferredChannel{s, verdict_from_superoperator(s, d)};
}

ChannelOutput squaring_circuit(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw std::invalid_argument("squaring_circuit: qubit input required");
  static const CMat cnot = CMat::from_rows({{1, 0, 0, 0},
                                            {0, 1, 0, 0},
                                            {0, 0, 0, 1},
                                            {0, 0, 1, 0}});
  const CMat big = cnot * tensor_product(rho.mat(), rho.mat()) * cnot.adjoint();
  // Post-select the second qubit on |0>.
  CMat out(2, 2);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t k = 0; k < 2; ++k) {
      out(i, k) = big(i * 2, k * 2);
    }
  }
  const double p = out.trace().real();
  out *= cplx(1.0 / p, 0.0);
  return ChannelOutput{DensityMatrix(hermitize(out)), p};
}

}  // namespace nogo
