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

#include "qcert/channel.hpp"

#include <cmath>

namespace qcert {

namespace {

void check_shape(const KrausChannel& c) {
  if (c.kraus.empty()) throw std::invalid_argument("channel: empty Kraus list");
  if (c.dim_in <= 0 || c.dim_out <= 0)
    throw DimensionError("channel: nonpositive dimension");
  for (const Matrix& k : c.kraus)
    if (k.rows() != c.dim_out || k.cols() != c.dim_in)
      throw DimensionError("channel: Kraus operator shape mismatch");
}

// Row-major vectorization matching the composite index (out, in).
Vector vectorize(const Matrix& k) {
  Vector v(k.rows() * k.cols());
  for (Eigen::Index r = 0; r < k.rows(); ++r)
    for (Eigen::Index c = 0; c < k.cols(); ++c) v(r * k.cols() + c) = k(r, c);
  return v;
}

Matrix unvectorize(const Vector& v, int rows, int cols) {
  Matrix k(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) k(r, c) = v(r * cols + c);
  return k;
}

}  // namespace

bool DeletionChannel::is_pure(double tol) const {
  Eigen::SelfAdjointEigenSolver<Matrix> es(omega);
  int rank = 0;
  for (int i = 0; i < es.eigenvalues().size(); ++i)
    if (es.eigenvalues()(i) > tol) ++rank;
  return rank == 1;
}

KrausChannel DeletionChannel::to_kraus(double tol) const {
  if (!is_hermitian(omega, 1e-8) || std::abs(omega.trace().real() - 1.0) > 1e-8)
    throw std::invalid_argument("deletion channel: omega must be a unit-trace state");
  Eigen::SelfAdjointEigenSolver<Matrix> es(omega);
  KrausChannel c;
  c.dim_in = dim_in;
  c.dim_out = static_cast<int>(omega.rows());
  for (int k = 0; k < es.eigenvalues().size(); ++k) {
    const double lambda = es.eigenvalues()(k);
    if (lambda <= tol) continue;
    const Vector v = std::sqrt(lambda) * es.eigenvectors().col(k);
    for (int s = 0; s < dim_in; ++s)
      c.kraus.push_back(v * basis_vector(dim_in, s).adjoint());
  }
  return c;
}

CptpReport validate_cptp(const KrausChannel& c, double) {
  check_shape(c);
  Matrix sum = Matrix::Zero(c.dim_in, c.dim_in);
  for (const Matrix& k : c.kraus) sum += k.adjoint() * k;
  CptpReport report;
  report.tp_deviation = operator_norm(sum - identity(c.dim_in));
  Eigen::SelfAdjointEigenSolver<Matrix> es(kraus_to_choi(c).m);
  report.psd_deviation = std::max(0.0, -es.eigenvalues().minCoeff());
  return report;
}

void require_valid_channel(const KrausChannel& c, double tol) {
  check_shape(c);
  if (!validate_cptp(c).valid(tol))
    throw std::invalid_argument("channel: CPTP validation failed");
}

ChoiMatrix kraus_to_choi(const KrausChannel& c) {
  check_shape(c);
  const int side = c.dim_in * c.dim_out;
  Matrix j = Matrix::Zero(side, side);
  for (const Matrix& k : c.kraus) {
    const Vector v = vectorize(k);
    j.noalias() += v * v.adjoint();
  }
  return ChoiMatrix{c.dim_in, c.dim_out, std::move(j)};
}

KrausChannel choi_to_kraus(const ChoiMatrix& j, double tol) {
  const int side = j.dim_in * j.dim_out;
  if (j.m.rows() != side || j.m.cols() != side)
    throw DimensionError("choi_to_kraus: Choi side mismatch");
  if (!is_hermitian(j.m, 1e-8))
    throw std::invalid_argument("choi_to_kraus: Choi not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(j.m);
  const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  if (es.eigenvalues().minCoeff() < -tol * scale)
    throw std::invalid_argument("choi_to_kraus: Choi not PSD within tolerance");
  KrausChannel c;
  c.dim_in = j.dim_in;
  c.dim_out = j.dim_out;
  for (int k = side - 1; k >= 0; --k) {
    const double lambda = es.eigenvalues()(k);
    if (lambda <= tol) continue;
    c.kraus.push_back(
        unvectorize(std::sqrt(lambda) * es.eigenvectors().col(k), j.dim_out, j.dim_in));
  }
  if (c.kraus.empty()) c.kraus.push_back(Matrix::Zero(j.dim_out, j.dim_in));
  return c;
}

Matrix KrausChannel::apply(const Matrix& sigma) const {
  check_shape(*this);
  if (sigma.rows() != dim_in || sigma.cols() != dim_in)
    throw DimensionError("apply: input dimension mismatch");
  Matrix out = Matrix::Zero(dim_out, dim_out);
  for (const Matrix& k : kraus) out.noalias() += k * sigma * k.adjoint();
  return out;
}

KrausChannel compose(const KrausChannel& outer, const KrausChannel& inner) {
  check_shape(outer);
  check_shape(inner);
  if (inner.dim_out != outer.dim_in)
    throw DimensionError("compose: inner output != outer input");
  KrausChannel c;
  c.dim_in = inner.dim_in;
  c.dim_out = outer.dim_out;
  c.kraus.reserve(outer.kraus.size() * inner.kraus.size());
  for (const Matrix& k : outer.kraus)
    for (const Matrix& l : inner.kraus) c.kraus.push_back(k * l);
  return c;
}

KrausChannel restrict_channel(const KrausChannel& c,
                              const SubsystemDecomposition& d) {
  check_shape(c);
  if (d.dim_S() != c.dim_in)
    throw DimensionError("restrict: decomposition does not embed into channel input");
  KrausChannel r;
  r.dim_in = d.dim_AB();
  r.dim_out = c.dim_out;
  r.kraus.reserve(c.kraus.size());
  for (const Matrix& k : c.kraus) r.kraus.push_back(k * d.embed);
  return r;
}

KrausChannel tensor_channels(const KrausChannel& a, const KrausChannel& b) {
  check_shape(a);
  check_shape(b);
  KrausChannel c;
  c.dim_in = a.dim_in * b.dim_in;
  c.dim_out = a.dim_out * b.dim_out;
  for (const Matrix& k : a.kraus)
    for (const Matrix& l : b.kraus) c.kraus.push_back(tensor(k, l));
  return c;
}

KrausChannel identity_channel(int d) {
  return KrausChannel{d, d, {identity(d)}};
}

KrausChannel trace_channel(int d) {
  KrausChannel c;
  c.dim_in = d;
  c.dim_out = 1;
  for (int s = 0; s < d; ++s) c.kraus.push_back(basis_vector(d, s).adjoint());
  return c;
}

KrausChannel unitary_channel(const Matrix& u) {
  if (u.rows() != u.cols()) throw DimensionError("unitary_channel: not square");
  return KrausChannel{static_cast<int>(u.cols()), static_cast<int>(u.rows()), {u}};
}

KrausChannel random_unitary_channel(const std::vector<Matrix>& unitaries,
                                    const std::vector<double>& probs) {
  if (unitaries.empty() || unitaries.size() != probs.size())
    throw std::invalid_argument("random_unitary_channel: size mismatch");
  double sum = 0.0;
  for (double p : probs) {
    if (p < 0.0) throw std::invalid_argument("random_unitary_channel: negative probability");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("random_unitary_channel: probabilities do not sum to 1");
  const int d = static_cast<int>(unitaries.front().rows());
  KrausChannel c{d, d, {}};
  for (std::size_t i = 0; i < unitaries.size(); ++i) {
    if (unitaries[i].rows() != d || unitaries[i].cols() != d)
      throw DimensionError("random_unitary_channel: unitary dims differ");
    if (probs[i] == 0.0) continue;
    c.kraus.push_back(std::sqrt(probs[i]) * unitaries[i]);
  }
  return c;
}

KrausChannel random_channel(int dim_in, int dim_out, int env_dim,
                            std::uint64_t seed) {
  if (env_dim < 1) throw std::invalid_argument("random_channel: env_dim < 1");
  if (dim_out * env_dim < dim_in)
    throw DimensionError("random_channel: dim_out*env_dim < dim_in");
  Rng rng(seed);
  Matrix v = random_isometry(dim_out * env_dim, dim_in, rng);
  KrausChannel c{dim_in, dim_out, {}};
  // Composite row index (y, e): Kraus block e takes rows y*env_dim + e.
  for (int e = 0; e < env_dim; ++e) {
    Matrix k(dim_out, dim_in);
    for (int y = 0; y < dim_out; ++y) k.row(y) = v.row(y * env_dim + e);
    c.kraus.push_back(std::move(k));
  }
  return c;
}

KrausChannel mix_channels(const std::vector<KrausChannel>& channels,
                          const std::vector<double>& weights) {
  if (channels.empty() || channels.size() != weights.size())
    throw std::invalid_argument("mix_channels: size mismatch");
  double sum = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw std::invalid_argument("mix_channels: negative weight");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("mix_channels: weights do not sum to 1");
  KrausChannel out{channels.front().dim_in, channels.front().dim_out, {}};
  for (std::size_t i = 0; i < channels.size(); ++i) {
    if (channels[i].dim_in != out.dim_in || channels[i].dim_out != out.dim_out)
      throw DimensionError("mix_channels: dimension mismatch");
    if (weights[i] == 0.0) continue;
    for (const Matrix& k : channels[i].kraus)
      out.kraus.push_back(std::sqrt(weights[i]) * k);
  }
  return out;
}

double channel_action_distance(const KrausChannel& a, const KrausChannel& b) {
  if (a.dim_in != b.dim_in || a.dim_out != b.dim_out)
    throw DimensionError("channel_action_distance: dimension mismatch");
  return (kraus_to_choi(a).m - kraus_to_choi(b).m).cwiseAbs().maxCoeff();
}

bool channels_equal(const KrausChannel& a, const KrausChannel& b, double tol) {
  if (a.dim_in != b.dim_in || a.dim_out != b.dim_out) return false;
  return channel_action_distance(a, b) <= tol;
}

SubsystemDecomposition trivial_decomposition(int dim_A, int dim_B) {
  return SubsystemDecomposition{dim_A, dim_B, identity(dim_A * dim_B)};
}

SubsystemDecomposition subspace_decomposition(const std::vector<Vector>& basis) {
  if (basis.empty()) throw std::invalid_argument("subspace_decomposition: empty basis");
  const int dim_S = static_cast<int>(basis.front().size());
  Matrix embed(dim_S, basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].size() != dim_S)
      throw DimensionError("subspace_decomposition: vector length mismatch");
    embed.col(i) = basis[i];
  }
  SubsystemDecomposition d{1, static_cast<int>(basis.size()), std::move(embed)};
  require_valid_decomposition(d);
  return d;
}

void require_valid_decomposition(const SubsystemDecomposition& d, double tol) {
  if (d.dim_A < 1 || d.dim_B < 1)
    throw DimensionError("decomposition: nonpositive subsystem dims");
  if (d.embed.cols() != d.dim_AB() || d.embed.rows() < d.embed.cols())
    throw DimensionError("decomposition: embed shape mismatch");
  const Matrix gram = d.embed.adjoint() * d.embed;
  if ((gram - identity(d.dim_AB())).cwiseAbs().maxCoeff() > tol)
    throw std::invalid_argument("decomposition: embed is not an isometry");
}

}  // namespace qcert
