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

#include <vector>

#include "qcert/matrix.hpp"

namespace qcert {

inline constexpr double kCptpTol = 1e-9;
inline constexpr double kIsoTol = 1e-9;

// A completely positive trace-preserving map as a finite Kraus family.
// Every operator is dim_out x dim_in.
struct KrausChannel {
  int dim_in = 0;
  int dim_out = 0;
  std::vector<Matrix> kraus;

  // sum_i K_i sigma K_i^dagger
  Matrix apply(const Matrix& sigma) const;
};

// Choi representation with the output factor first:
//   J(E) = sum_ij E(|i><j|) (x) |i><j|,   J in L(out (x) in).
struct ChoiMatrix {
  int dim_in = 0;
  int dim_out = 0;
  Matrix m;
};

// Isometric embedding of A (x) B into S. The subspace case is dim_A == 1.
struct SubsystemDecomposition {
  int dim_A = 1;
  int dim_B = 1;
  Matrix embed;  // dim_S x (dim_A * dim_B), embed^dagger embed = I

  int dim_S() const { return static_cast<int>(embed.rows()); }
  int dim_AB() const { return dim_A * dim_B; }
  Matrix projector() const { return embed * embed.adjoint(); }
};

// sigma -> tr(sigma) * omega for a fixed state omega.
struct DeletionChannel {
  int dim_in = 0;
  Matrix omega;

  bool is_pure(double tol = 1e-9) const;
  KrausChannel to_kraus(double tol = 1e-12) const;
};

struct CptpReport {
  double tp_deviation = 0.0;   // ||sum K^dagger K - I||_inf
  double psd_deviation = 0.0;  // max(0, -lambda_min(Choi))
  bool valid(double tol) const {
    return tp_deviation <= tol && psd_deviation <= tol;
  }
};

CptpReport validate_cptp(const KrausChannel& c, double tol = kCptpTol);

// Throws DimensionError / invalid_argument when the channel is malformed
// or fails CPTP validation at `tol`.
void require_valid_channel(const KrausChannel& c, double tol = 1e-6);

ChoiMatrix kraus_to_choi(const KrausChannel& c);

// Kraus family from the Choi eigendecomposition; eigenvalues below `tol`
// are dropped, eigenvalues below -tol are an error (non-CP input).
KrausChannel choi_to_kraus(const ChoiMatrix& j, double tol = 1e-10);

// outer after inner; Kraus set {K_i L_j}.
KrausChannel compose(const KrausChannel& outer, const KrausChannel& inner);

// Channel on A (x) B given by sigma -> c(embed sigma embed^dagger).
KrausChannel restrict_channel(const KrausChannel& c,
                              const SubsystemDecomposition& d);

// Kraus set {K_i (x) L_j}; acts as the product channel on the joint input.
KrausChannel tensor_channels(const KrausChannel& a, const KrausChannel& b);

KrausChannel identity_channel(int d);

// dim_in -> 1, sigma -> tr(sigma).
KrausChannel trace_channel(int d);

KrausChannel unitary_channel(const Matrix& u);

// E(rho) = sum_x p(x) U_x rho U_x^dagger, Kraus set {sqrt(p(x)) U_x}.
KrausChannel random_unitary_channel(const std::vector<Matrix>& unitaries,
                                    const std::vector<double>& probs);

// Channel drawn by orthonormalizing a seeded Gaussian
// (dim_out*env_dim) x dim_in matrix into an isometry and slicing it into
// env_dim Kraus blocks. Deterministic in the seed.
KrausChannel random_channel(int dim_in, int dim_out, int env_dim,
                            std::uint64_t seed);

// Mixture sum_i w_i c_i of channels with identical dims; weights form a
// distribution. Kraus set is the weighted union.
KrausChannel mix_channels(const std::vector<KrausChannel>& channels,
                          const std::vector<double>& weights);

// Action equality on the full operator basis, i.e. entrywise Choi
// agreement within tol.
bool channels_equal(const KrausChannel& a, const KrausChannel& b, double tol);

// Largest entrywise Choi deviation between two channels.
double channel_action_distance(const KrausChannel& a, const KrausChannel& b);

SubsystemDecomposition trivial_decomposition(int dim_A, int dim_B);

// Subspace decomposition (dim_A = 1) spanned by the given orthonormal
// columns.
SubsystemDecomposition subspace_decomposition(const std::vector<Vector>& basis);

void require_valid_decomposition(const SubsystemDecomposition& d,
                                 double tol = kIsoTol);

}  // namespace qcert
