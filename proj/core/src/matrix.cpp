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

#include "qcert/matrix.hpp"

#include <numeric>

namespace qcert {

namespace {

// Flat index of a multi-index under the row-major convention.
int flatten(const std::vector<int>& digits, const std::vector<int>& dims) {
  int idx = 0;
  for (std::size_t f = 0; f < dims.size(); ++f) idx = idx * dims[f] + digits[f];
  return idx;
}

void unflatten(int idx, const std::vector<int>& dims, std::vector<int>& digits) {
  for (std::size_t f = dims.size(); f-- > 0;) {
    digits[f] = idx % dims[f];
    idx /= dims[f];
  }
}

int product(const std::vector<int>& dims) {
  return std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<int>());
}

}  // namespace

Matrix tensor(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix partial_trace(const Matrix& m, const std::vector<int>& dims,
                     const std::vector<int>& traced) {
  if (m.rows() != m.cols()) throw DimensionError("partial_trace: matrix not square");
  const int side = product(dims);
  if (side != m.rows())
    throw DimensionError("partial_trace: factor dims do not multiply to matrix side");

  std::vector<bool> is_traced(dims.size(), false);
  for (int t : traced) {
    if (t < 0 || t >= static_cast<int>(dims.size()))
      throw DimensionError("partial_trace: traced factor index out of range");
    if (is_traced[t]) throw DimensionError("partial_trace: duplicate traced factor");
    is_traced[t] = true;
  }

  std::vector<int> kept_dims, traced_dims;
  for (std::size_t f = 0; f < dims.size(); ++f)
    (is_traced[f] ? traced_dims : kept_dims).push_back(dims[f]);

  const int kept_side = product(kept_dims);
  const int traced_side = product(traced_dims);

  Matrix out = Matrix::Zero(kept_side, kept_side);
  std::vector<int> kr(kept_dims.size()), kc(kept_dims.size()), td(traced_dims.size());
  std::vector<int> full_r(dims.size()), full_c(dims.size());

  for (int r = 0; r < kept_side; ++r) {
    unflatten(r, kept_dims, kr);
    for (int c = 0; c < kept_side; ++c) {
      unflatten(c, kept_dims, kc);
      Complex acc = 0.0;
      for (int t = 0; t < traced_side; ++t) {
        unflatten(t, traced_dims, td);
        std::size_t ik = 0, it = 0;
        for (std::size_t f = 0; f < dims.size(); ++f) {
          if (is_traced[f]) {
            full_r[f] = td[it];
            full_c[f] = td[it];
            ++it;
          } else {
            full_r[f] = kr[ik];
            full_c[f] = kc[ik];
            ++ik;
          }
        }
        acc += m(flatten(full_r, dims), flatten(full_c, dims));
      }
      out(r, c) = acc;
    }
  }
  return out;
}

Matrix permute_factors(const Matrix& m, const std::vector<int>& dims,
                       const std::vector<int>& perm) {
  if (m.rows() != m.cols()) throw DimensionError("permute_factors: matrix not square");
  if (perm.size() != dims.size())
    throw DimensionError("permute_factors: perm size mismatch");
  const int side = product(dims);
  if (side != m.rows())
    throw DimensionError("permute_factors: factor dims do not multiply to matrix side");

  std::vector<int> new_dims(dims.size());
  for (std::size_t i = 0; i < perm.size(); ++i) new_dims[i] = dims[perm[i]];

  // new multi-index digit i is the old digit perm[i]
  std::vector<int> old_r(dims.size()), old_c(dims.size());
  std::vector<int> new_r(dims.size()), new_c(dims.size());
  Matrix out(side, side);
  for (int r = 0; r < side; ++r) {
    unflatten(r, dims, old_r);
    for (std::size_t i = 0; i < perm.size(); ++i) new_r[i] = old_r[perm[i]];
    const int nr = flatten(new_r, new_dims);
    for (int c = 0; c < side; ++c) {
      unflatten(c, dims, old_c);
      for (std::size_t i = 0; i < perm.size(); ++i) new_c[i] = old_c[perm[i]];
      out(nr, flatten(new_c, new_dims)) = m(r, c);
    }
  }
  return out;
}

double trace_norm(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("trace_norm: matrix not square");
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues().sum();
}

double operator_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

Matrix hermitian_part(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

Matrix identity(int d) { return Matrix::Identity(d, d); }

Matrix basis_matrix(int d, int i, int j) {
  Matrix m = Matrix::Zero(d, d);
  m(i, j) = 1.0;
  return m;
}

Vector basis_vector(int d, int i) {
  Vector v = Vector::Zero(d);
  v(i) = 1.0;
  return v;
}

Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix pauli_y() {
  Matrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Matrix random_gaussian(int rows, int cols, Rng& rng) {
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = rng.complex_gaussian();
  return m;
}

Matrix random_isometry(int rows, int cols, Rng& rng) {
  if (rows < cols) throw DimensionError("random_isometry: rows < cols");
  Matrix g = random_gaussian(rows, cols, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(rows, cols);
  // Fix the phase of each column so the map seed -> isometry is unambiguous.
  Matrix r = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
  for (int j = 0; j < cols; ++j) {
    Complex d = r(j, j);
    if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

Matrix random_unitary(int d, Rng& rng) { return random_isometry(d, d, rng); }

Matrix random_hermitian(int d, Rng& rng) {
  return hermitian_part(random_gaussian(d, d, rng));
}

Matrix random_density(int d, Rng& rng) {
  Matrix g = random_gaussian(d, d, rng);
  Matrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

}  // namespace qcert
