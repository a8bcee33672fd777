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

#include "helpers.hpp"
#include "qcert/fixtures.hpp"
#include "qcert/stinespring.hpp"

using namespace qcert;
using test::max_abs_diff;

TEST_SUITE_BEGIN("stinespring");

TEST_CASE("dilate the identity channel") {
  StinespringIsometry v = dilate(identity_channel(2));
  CHECK(v.dim_env == 1);
  CHECK_MATRIX_NEAR(v.v, identity(2), 0.0);
  require_isometry(v);
}

TEST_CASE("dilate a pure deletion channel") {
  // omega = |0><0| on a qubit: Kraus {|0><0|, |0><1|}, so dim_env = 2 and
  // V copies the input into the environment.
  DeletionChannel del{2, basis_matrix(2, 0, 0)};
  KrausChannel c = del.to_kraus();
  REQUIRE(c.kraus.size() == 2);
  StinespringIsometry v = dilate(c);
  CHECK(v.dim_env == 2);
  require_isometry(v);
  for (int s = 0; s < 2; ++s) {
    Vector in = basis_vector(2, s);
    Vector out = v.v * in;
    // output (y, e) = (0, s)
    for (int y = 0; y < 2; ++y)
      for (int e = 0; e < 2; ++e)
        CHECK(std::abs(out(y * 2 + e) - (y == 0 && e == s ? 1.0 : 0.0)) <= 1e-12);
  }
}

TEST_CASE("dilation reproduces the channel") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const KrausChannel c = random_channel(2, 3, 2 + seed % 3, seed + 40);
    StinespringIsometry v = dilate(c);
    require_isometry(v);
    CHECK(channels_equal(channel_of(v), c, 1e-12));

    // complementarity round trip through the same dilation
    const KrausChannel comp = complement_of(v);
    CHECK(validate_cptp(comp).valid(1e-9));
    CHECK(channels_equal(complement(c), comp, 1e-9));
  }
}

TEST_CASE("complement of the identity is the trace channel") {
  const KrausChannel comp = complement(identity_channel(2));
  CHECK(comp.dim_in == 2);
  CHECK(comp.dim_out == 1);
  CHECK(channels_equal(comp, trace_channel(2), 1e-12));

  const KrausChannel comp3 = complement(identity_channel(3));
  CHECK(channels_equal(comp3, trace_channel(3), 1e-12));
}

TEST_CASE("complement of a unitary channel is the trace channel") {
  Rng rng(6);
  const KrausChannel u = unitary_channel(random_unitary(3, rng));
  const KrausChannel comp = complement(u);
  CHECK(comp.dim_out == 1);
  CHECK(channels_equal(comp, trace_channel(3), 1e-12));
}

TEST_CASE("complement of the phase flip matches the worked action") {
  const KrausChannel comp = complement(fixtures::phase_flip_two_qubit());
  CHECK(comp.dim_out == 2);
  const Matrix z1 = fixtures::z_first_qubit();
  const Matrix rho1 = fixtures::phase_flip_rho1();
  const Matrix rho2 = fixtures::phase_flip_rho2();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const Matrix sigma = basis_matrix(4, i, j);
      const Matrix expected =
          sigma.trace() * rho1 + (sigma * z1).trace() * rho2;
      CHECK(max_abs_diff(apply(comp, sigma), expected) <= 1e-9);
    }
}

TEST_CASE("minimal dilation collapses redundant Kraus sets") {
  const double s = 1.0 / std::sqrt(2.0);
  KrausChannel redundant{2, 2, {s * identity(2), s * identity(2)}};
  CHECK(minimal_dilation(redundant).dim_env == 1);
  CHECK(complement(redundant).dim_out == 1);

  CHECK(minimal_dilation(fixtures::phase_flip_two_qubit()).dim_env == 2);

  const KrausChannel c = random_channel(2, 2, 4, 3);
  Eigen::SelfAdjointEigenSolver<Matrix> es(kraus_to_choi(c).m);
  int rank = 0;
  for (int i = 0; i < es.eigenvalues().size(); ++i)
    if (es.eigenvalues()(i) > 1e-10) ++rank;
  CHECK(minimal_dilation(c).dim_env == rank);
}

TEST_CASE("pad_dilation") {
  StinespringIsometry v = dilate(identity_channel(2));
  StinespringIsometry padded = pad_dilation(v, 8);
  CHECK(padded.dim_env == 8);
  require_isometry(padded);
  CHECK(channels_equal(channel_of(padded), identity_channel(2), 1e-15));

  // psi -> psi (x) |0>_env
  Vector in = basis_vector(2, 1);
  Vector out = padded.v * in;
  for (int y = 0; y < 2; ++y)
    for (int e = 0; e < 8; ++e)
      CHECK(std::abs(out(y * 8 + e) - (y == 1 && e == 0 ? 1.0 : 0.0)) <= 1e-15);

  CHECK_THROWS_AS(pad_dilation(padded, 4), DimensionError);
}

TEST_CASE("padding keeps the channel and embeds the complement") {
  const KrausChannel c = fixtures::phase_flip_two_qubit();
  StinespringIsometry v = minimal_dilation(c);
  // 2 * dim_in * dim_out with both spaces equal to the two-qubit space
  StinespringIsometry padded = pad_dilation(v, 32);
  require_isometry(padded);
  CHECK(channels_equal(channel_of(padded), c, 1e-12));

  const KrausChannel comp = complement_of(v);
  const KrausChannel comp_padded = complement_of(padded);
  CHECK(comp_padded.dim_out == 32);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const Matrix out = apply(comp_padded, basis_matrix(4, i, j));
      const Matrix small = apply(comp, basis_matrix(4, i, j));
      CHECK(max_abs_diff(out.topLeftCorner(2, 2), small) <= 1e-12);
      CHECK(out.cwiseAbs().maxCoeff() -
                out.topLeftCorner(2, 2).cwiseAbs().maxCoeff() <=
            1e-12);
    }
}

TEST_SUITE_END();
