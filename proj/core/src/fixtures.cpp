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

#include "qcert/fixtures.hpp"

#include <cmath>

namespace qcert {
namespace fixtures {

Matrix z_first_qubit() { return tensor(pauli_z(), identity(2)); }

KrausChannel phase_flip_two_qubit() {
  return random_unitary_channel({identity(4), z_first_qubit()}, {0.5, 0.5});
}

SubsystemDecomposition phase_flip_code() {
  return subspace_decomposition({basis_vector(4, 0), basis_vector(4, 1)});
}

Matrix phase_flip_rho1() { return 0.5 * identity(2); }

Matrix phase_flip_rho2() { return 0.5 * pauli_x(); }

KrausChannel completely_depolarizing(int d) {
  return DeletionChannel{d, identity(d) / double(d)}.to_kraus();
}

ThresholdScheme cgl23_scheme() {
  ThresholdScheme s;
  s.k = 2;
  s.n = 3;
  s.secret_dim = 3;
  s.share_dims = {3, 3, 3};
  s.encoder = Matrix::Zero(27, 3);
  const double w = 1.0 / std::sqrt(3.0);
  auto idx = [](int a, int b, int c) { return a * 9 + b * 3 + c; };
  // |0> -> (|000> + |111> + |222>) / sqrt(3)
  s.encoder(idx(0, 0, 0), 0) = w;
  s.encoder(idx(1, 1, 1), 0) = w;
  s.encoder(idx(2, 2, 2), 0) = w;
  // |1> -> (|012> + |120> + |201>) / sqrt(3)
  s.encoder(idx(0, 1, 2), 1) = w;
  s.encoder(idx(1, 2, 0), 1) = w;
  s.encoder(idx(2, 0, 1), 1) = w;
  // |2> -> (|021> + |102> + |210>) / sqrt(3)
  s.encoder(idx(0, 2, 1), 2) = w;
  s.encoder(idx(1, 0, 2), 2) = w;
  s.encoder(idx(2, 1, 0), 2) = w;
  return s;
}

}  // namespace fixtures
}  // namespace qcert
