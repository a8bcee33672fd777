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

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace qcert {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Hermiticity tolerance used throughout when no explicit tolerance is given.
inline constexpr double kHermTol = 1e-10;

// Thrown on shape/index mismatches (maps to CLI exit code 3).
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

//=========================================================================
// Composite-index convention
//
// A composite system with factors (d0, d1, ..., dk) is indexed row-major:
// the flat index of (i0, i1, ..., ik) is i0*d1*...*dk + i1*d2*...*dk + ... + ik.
// tensor(), partial_trace() and permute_factors() all follow it.
//=========================================================================

// Kronecker product with composite index (i_a, i_b) -> i_a * b.rows() + i_b.
Matrix tensor(const Matrix& a, const Matrix& b);

// Partial trace of a square matrix over the factors listed in `traced`
// (indices into `dims`). The result keeps the remaining factors in order.
Matrix partial_trace(const Matrix& m, const std::vector<int>& dims,
                     const std::vector<int>& traced);

// Reorders tensor factors: factor perm[i] of the input becomes factor i of
// the result. `perm` must be a permutation of 0..dims.size()-1.
Matrix permute_factors(const Matrix& m, const std::vector<int>& dims,
                       const std::vector<int>& perm);

// Sum of singular values.
double trace_norm(const Matrix& m);

// Largest singular value.
double operator_norm(const Matrix& m);

bool is_hermitian(const Matrix& m, double tol = kHermTol);

// (m + m^dagger) / 2
Matrix hermitian_part(const Matrix& m);

Matrix identity(int d);

// |i><j| on a d-dimensional space.
Matrix basis_matrix(int d, int i, int j);

Vector basis_vector(int d, int i);

Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();

//=========================================================================
// Seeded randomness. No global state: every caller owns its engine.
//=========================================================================

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double gaussian() { return normal_(engine_); }
  Complex complex_gaussian() { return {gaussian(), gaussian()}; }
  double uniform() { return uniform_(engine_); }
  std::uint64_t integer() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

Matrix random_gaussian(int rows, int cols, Rng& rng);

// Haar-like unitary via QR of a Gaussian matrix with phase-fixed R diagonal.
Matrix random_unitary(int d, Rng& rng);

// Column-orthonormal rows x cols matrix, rows >= cols.
Matrix random_isometry(int rows, int cols, Rng& rng);

Matrix random_hermitian(int d, Rng& rng);

// Unit-trace positive semidefinite matrix.
Matrix random_density(int d, Rng& rng);

}  // namespace qcert
