// Copyright 2026 The qcert authors
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

#include <doctest.h>

#include "qcert/matrix.hpp"

namespace qcert::test {

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  REQUIRE(a.rows() == b.rows());
  REQUIRE(a.cols() == b.cols());
  return (a - b).cwiseAbs().maxCoeff();
}

#define CHECK_MATRIX_NEAR(a, b, tol) \
  CHECK(qcert::test::max_abs_diff((a), (b)) <= (tol))

// Independent Kronecker oracle: literal index expansion, no shared code
// with qcert::tensor.
inline Matrix naive_kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

// Normalized maximally entangled projector on C^d (x) C^d.
inline Matrix max_entangled_state(int d) {
  Vector omega = Vector::Zero(d * d);
  for (int i = 0; i < d; ++i) omega(i * d + i) = 1.0 / std::sqrt(double(d));
  return omega * omega.adjoint();
}

}  // namespace qcert::test
