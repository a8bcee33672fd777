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

#include "qcert/stinespring.hpp"

namespace qcert {

namespace {

StinespringIsometry from_kraus_list(int dim_in, int dim_out,
                                    const std::vector<Matrix>& kraus) {
  const int env = static_cast<int>(kraus.size());
  Matrix v(dim_out * env, dim_in);
  for (int e = 0; e < env; ++e)
    for (int y = 0; y < dim_out; ++y) v.row(y * env + e) = kraus[e].row(y);
  return StinespringIsometry{dim_in, dim_out, env, std::move(v)};
}

// Rank of the Gram matrix tr(K_e^dagger K_f); full rank means the Kraus
// family is linearly independent and the dilation already minimal.
bool is_linearly_independent(const std::vector<Matrix>& kraus, double tol) {
  const int n = static_cast<int>(kraus.size());
  Matrix gram(n, n);
  for (int e = 0; e < n; ++e)
    for (int f = 0; f < n; ++f)
      gram(e, f) = (kraus[e].adjoint() * kraus[f]).trace();
  Eigen::SelfAdjointEigenSolver<Matrix> es(gram);
  const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  return es.eigenvalues().minCoeff() > tol * scale;
}

}  // namespace

StinespringIsometry dilate(const KrausChannel& c) {
  require_valid_channel(c);
  return from_kraus_list(c.dim_in, c.dim_out, c.kraus);
}

StinespringIsometry minimal_dilation(const KrausChannel& c, double tol) {
  require_valid_channel(c);
  const KrausChannel minimal = choi_to_kraus(kraus_to_choi(c), tol);
  return from_kraus_list(c.dim_in, c.dim_out, minimal.kraus);
}

KrausChannel channel_of(const StinespringIsometry& v) {
  KrausChannel c{v.dim_in, v.dim_out, {}};
  for (int e = 0; e < v.dim_env; ++e) {
    Matrix k(v.dim_out, v.dim_in);
    for (int y = 0; y < v.dim_out; ++y) k.row(y) = v.v.row(y * v.dim_env + e);
    c.kraus.push_back(std::move(k));
  }
  return c;
}

KrausChannel complement_of(const StinespringIsometry& v) {
  // Row slices over the output index: (K#_y)[e, s] = V[(y, e), s].
  KrausChannel c{v.dim_in, v.dim_env, {}};
  for (int y = 0; y < v.dim_out; ++y) {
    Matrix k(v.dim_env, v.dim_in);
    for (int e = 0; e < v.dim_env; ++e) k.row(e) = v.v.row(y * v.dim_env + e);
    c.kraus.push_back(std::move(k));
  }
  return c;
}

KrausChannel complement(const KrausChannel& c) {
  require_valid_channel(c);
  if (is_linearly_independent(c.kraus, 1e-10)) return complement_of(dilate(c));
  return complement_of(minimal_dilation(c));
}

StinespringIsometry pad_dilation(const StinespringIsometry& v, int target_env) {
  if (target_env < v.dim_env)
    throw DimensionError("pad_dilation: target smaller than current env");
  if (target_env == v.dim_env) return v;
  Matrix padded = Matrix::Zero(v.dim_out * target_env, v.dim_in);
  for (int y = 0; y < v.dim_out; ++y)
    padded.middleRows(y * target_env, v.dim_env) =
        v.v.middleRows(y * v.dim_env, v.dim_env);
  return StinespringIsometry{v.dim_in, v.dim_out, target_env, std::move(padded)};
}

void require_isometry(const StinespringIsometry& v, double tol) {
  if (v.v.rows() != v.dim_out * v.dim_env || v.v.cols() != v.dim_in)
    throw DimensionError("isometry: shape mismatch");
  const Matrix gram = v.v.adjoint() * v.v;
  if ((gram - identity(v.dim_in)).cwiseAbs().maxCoeff() > tol)
    throw std::invalid_argument("isometry: V^dagger V != I");
}

}  // namespace qcert
