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

#include <json.hpp>

#include "helpers.hpp"
#include "qcert/fixtures.hpp"
#include "qcert/serialize.hpp"

using namespace qcert;
using test::max_abs_diff;

namespace {

const std::string kFixtureDir = QCERT_FIXTURE_DIR;

Matrix matrix_from_entries(const nlohmann::json& rows) {
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      m(r, c) = Complex(rows[r][c][0].get<double>(), rows[r][c][1].get<double>());
  return m;
}

}  // namespace

TEST_SUITE_BEGIN("serialize");

TEST_CASE("channel JSON round trip is exact") {
  const KrausChannel c = random_channel(2, 3, 2, 2718);
  const KrausChannel back = channel_from_json(channel_to_json(c));
  CHECK(back.dim_in == c.dim_in);
  CHECK(back.dim_out == c.dim_out);
  REQUIRE(back.kraus.size() == c.kraus.size());
  for (std::size_t i = 0; i < c.kraus.size(); ++i)
    CHECK(max_abs_diff(back.kraus[i], c.kraus[i]) == 0.0);
  // identical serialization both times
  CHECK(channel_to_json(c) == channel_to_json(back));
}

TEST_CASE("decomposition and scheme round trips") {
  const SubsystemDecomposition d = fixtures::phase_flip_code();
  const SubsystemDecomposition d2 =
      decomposition_from_json(decomposition_to_json(d));
  CHECK(d2.dim_A == 1);
  CHECK(d2.dim_B == 2);
  CHECK(max_abs_diff(d2.embed, d.embed) == 0.0);

  const ThresholdScheme s = fixtures::cgl23_scheme();
  const ThresholdScheme s2 = scheme_from_json(scheme_to_json(s));
  CHECK(s2.k == 2);
  CHECK(s2.n == 3);
  CHECK(s2.share_dims == std::vector<int>{3, 3, 3});
  CHECK(max_abs_diff(s2.encoder, s.encoder) == 0.0);
}

TEST_CASE("isometry round trip") {
  const StinespringIsometry v = dilate(fixtures::phase_flip_two_qubit());
  const StinespringIsometry v2 = isometry_from_json(isometry_to_json(v));
  CHECK(v2.dim_env == v.dim_env);
  CHECK(max_abs_diff(v2.v, v.v) == 0.0);
}

TEST_CASE("parse errors carry ParseError") {
  CHECK_THROWS_AS(channel_from_json("not json"), ParseError);
  CHECK_THROWS_AS(channel_from_json("{\"dim_in\": 2}"), ParseError);
  CHECK_THROWS_AS(channel_from_json(
                      R"({"dim_in":2,"dim_out":2,"kraus":[[[1,0],[0,0]]]})"),
                  ParseError);  // ragged/short rows
  CHECK_THROWS_AS(
      channel_from_json(
          R"({"dim_in":1,"dim_out":1,"kraus":[[["x",0]]]})"),
      ParseError);
  CHECK_THROWS_AS(load_channel(kFixtureDir + "/does_not_exist.json"), ParseError);
}

TEST_CASE("shipped fixtures match the built-in constructions") {
  const KrausChannel flip = load_channel(kFixtureDir + "/phase_flip.json");
  CHECK(channels_equal(flip, fixtures::phase_flip_two_qubit(), 0.0));

  const ThresholdScheme s = load_scheme(kFixtureDir + "/cgl23.json");
  CHECK(max_abs_diff(s.encoder, fixtures::cgl23_scheme().encoder) == 0.0);
  CHECK(s.k == 2);
  CHECK(s.n == 3);
}

TEST_CASE("phase flip complement action fixture") {
  // the fixture pins the coefficient pair (rho1, rho2) of the complement
  // action E#(sigma) = tr(sigma) rho1 + tr(sigma Z1) rho2
  const nlohmann::json j = nlohmann::json::parse(
      read_file(kFixtureDir + "/phase_flip_complement_action.json"));
  const Matrix rho1 = matrix_from_entries(j.at("rho1"));
  const Matrix rho2 = matrix_from_entries(j.at("rho2"));
  CHECK(max_abs_diff(rho1, fixtures::phase_flip_rho1()) == 0.0);
  CHECK(max_abs_diff(rho2, fixtures::phase_flip_rho2()) == 0.0);

  const KrausChannel comp = complement(fixtures::phase_flip_two_qubit());
  const Matrix z1 = fixtures::z_first_qubit();
  for (int i = 0; i < 4; ++i)
    for (int jj = 0; jj < 4; ++jj) {
      const Matrix sigma = basis_matrix(4, i, jj);
      const Matrix expected = sigma.trace() * rho1 + (sigma * z1).trace() * rho2;
      CHECK(max_abs_diff(apply(comp, sigma), expected) <= 1e-9);
    }
}

TEST_CASE("subspace basis loader builds a dim_A = 1 decomposition") {
  const std::string path = kFixtureDir + "/phase_flip_code_basis.json";
  const SubsystemDecomposition d = load_subspace_basis(path);
  CHECK(d.dim_A == 1);
  CHECK(d.dim_B == 2);
  CHECK(max_abs_diff(d.embed, fixtures::phase_flip_code().embed) == 0.0);
}

TEST_SUITE_END();
