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

#ifndef NOGO_CMAT_HPP
#define NOGO_CMAT_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace nogo {

using cplx = std::complex<double>;

/// Dense row-major complex matrix. Everything in this library lives in
/// dimension <= 16, so no effort is spent on blocking or sparsity.
class CMat {
 public:
  CMat() = default;
  CMat(std::size_t rows, std::size_t cols);  // zero-filled

  static CMat identity(std::size_t n);
  static CMat from_rows(std::initializer_list<std::initializer_list<cplx>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<cplx>& data() const { return data_; }
  std::vector<cplx>& data() { return data_; }

  CMat adjoint() const;
  cplx trace() const;
  double max_abs() const;

  CMat& operator+=(const CMat& other);
  CMat& operator-=(const CMat& other);
  CMat& operator*=(cplx factor);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

CMat operator+(CMat a, const CMat& b);
CMat operator-(CMat a, const CMat& b);
CMat operator*(const CMat& a, const CMat& b);
CMat operator*(cplx factor, CMat m);
CMat operator*(CMat m, cplx factor);

/// Largest elementwise |a - b|; matrices must have equal shapes.
double max_abs_diff(const CMat& a, const CMat& b);

bool is_hermitian(const CMat& m, double tol);

/// Kronecker product with block ordering a(i,j)*b.
CMat tensor_product(const CMat& a, const CMat& b);

}  // namespace nogo

#endif  // NOGO_CMAT_HPP
