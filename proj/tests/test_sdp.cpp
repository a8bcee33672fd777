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
#include "qcert/sdp.hpp"

using namespace qcert;

namespace {

// <A, X_block> = rhs for a dense Hermitian A, expanded over all entries so
// the imaginary part cancels identically.
void add_dense_constraint(SdpProblem& p, int block, const Matrix& a, double rhs) {
  std::vector<SdpTerm> terms;
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c)
      terms.push_back({block, r, c, std::conj(a(r, c))});
  p.add_constraint(terms, rhs);
}

// maximize tr(X) s.t. X + S = I (X, S >= 0)
SdpProblem box_problem(int d) {
  SdpProblem p;
  const int x = p.add_block(d);
  const int s = p.add_block(d);
  p.set_sense(SdpProblem::Sense::Maximize);
  for (int i = 0; i < d; ++i) p.add_objective_term(x, i, i, 1.0);
  for (int r = 0; r < d; ++r)
    for (int c = r; c < d; ++c)
      p.add_constraint({{x, r, c, 1.0}, {s, r, c, 1.0}}, r == c ? 1.0 : 0.0);
  return p;
}

// minimize t s.t. t*I - H >= 0
SdpProblem lambda_max_problem(const Matrix& h) {
  const int d = static_cast<int>(h.rows());
  SdpProblem p;
  const int s = p.add_block(d);
  const int t = p.add_block(1);
  p.add_objective_term(t, 0, 0, 1.0);
  for (int r = 0; r < d; ++r)
    for (int c = r; c < d; ++c) {
      std::vector<SdpTerm> terms{{s, r, c, 1.0}};
      if (r == c) terms.push_back({t, 0, 0, -1.0});
      p.add_constraint(terms, -h(r, c));
    }
  return p;
}

}  // namespace

TEST_SUITE_BEGIN("sdp");

TEST_CASE("box problem reaches the dimension") {
  for (int d : {1, 3, 6}) {
    SdpProblem p = box_problem(d);
    SdpSolution sol = solve_sdp(p);
    REQUIRE(sol.ok());
    CHECK(sol.primal_value == doctest::Approx(double(d)).epsilon(1e-6));
    CHECK(sol.gap <= 1e-7);
    CHECK(sol.primal_residual <= 1e-8);
    CHECK(sol.dual_residual <= 1e-8);
    CHECK_MATRIX_NEAR(sol.x[0], identity(d), 1e-5);
  }
}

TEST_CASE("lambda_max agrees with the eigensolver") {
  Rng rng(2024);
  for (int trial = 0; trial < 6; ++trial) {
    const int d = 2 + trial % 4;
    const Matrix h = random_hermitian(d, rng);
    SdpProblem p = lambda_max_problem(h);
    SdpSolution sol = solve_sdp(p);
    REQUIRE(sol.ok());
    Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
    CHECK(std::abs(sol.primal_value - es.eigenvalues().maxCoeff()) <= 1e-6);
    CHECK(sol.gap <= 1e-7);
  }
}

TEST_CASE("solution value invariant under unitary reparameterization") {
  Rng rng(4);
  const int d = 4;
  // bounded random problem: tr(X) = 1 plus two random hyperplanes through
  // a strictly feasible interior point
  const Matrix x0 = random_density(d, rng);
  const Matrix a1 = random_hermitian(d, rng);
  const Matrix a2 = random_hermitian(d, rng);
  const Matrix c = random_hermitian(d, rng);
  const double b1 = (a1.conjugate().cwiseProduct(x0)).sum().real();
  const double b2 = (a2.conjugate().cwiseProduct(x0)).sum().real();

  auto build = [&](const Matrix& u) {
    SdpProblem p;
    const int x = p.add_block(d);
    const Matrix cu = u * c * u.adjoint();
    for (int r = 0; r < d; ++r)
      for (int cc = 0; cc < d; ++cc)
        p.add_objective_term(x, r, cc, std::conj(cu(r, cc)));
    add_dense_constraint(p, x, u * a1 * u.adjoint(), b1);
    add_dense_constraint(p, x, u * a2 * u.adjoint(), b2);
    add_dense_constraint(p, x, identity(d), 1.0);
    return p;
  };

  SdpProblem plain = build(identity(d));
  SdpSolution s0 = solve_sdp(plain);
  REQUIRE(s0.ok());
  for (int trial = 0; trial < 3; ++trial) {
    SdpProblem rotated = build(random_unitary(d, rng));
    SdpSolution s1 = solve_sdp(rotated);
    REQUIRE(s1.ok());
    CHECK(std::abs(s1.primal_value - s0.primal_value) <= 2e-7);
  }
}

TEST_CASE("objective expansion matches <C, X>") {
  // minimize Re((1+2i) X[0,1]) over density-like X: X PSD with tr X = 1
  SdpProblem p;
  const int x = p.add_block(2);
  p.add_objective_term(x, 0, 1, Complex(1.0, 2.0));
  p.add_constraint({{x, 0, 0, 1.0}, {x, 1, 1, 1.0}}, 1.0);
  SdpSolution sol = solve_sdp(p);
  REQUIRE(sol.ok());
  // optimum -|1+2i|/2 at X = (I - (cos,sin) Bloch vector)/2
  CHECK(sol.primal_value ==
        doctest::Approx(-std::sqrt(5.0) / 2.0).epsilon(1e-6));
}

TEST_CASE("infeasible problem is flagged") {
  SdpProblem p;
  const int x = p.add_block(1);
  p.add_constraint({{x, 0, 0, 1.0}}, -1.0);
  SdpSolution sol = solve_sdp(p);
  CHECK_FALSE(sol.ok());
  CHECK(sol.status == SdpStatus::PrimalInfeasible);
}

TEST_CASE("determinism") {
  SdpProblem p = box_problem(3);
  SdpSolution a = solve_sdp(p);
  SdpSolution b = solve_sdp(p);
  REQUIRE(a.ok());
  REQUIRE(b.ok());
  CHECK(a.primal_value == b.primal_value);
  CHECK(a.iterations == b.iterations);
  CHECK(qcert::test::max_abs_diff(a.x[0], b.x[0]) == 0.0);
}

TEST_SUITE_END();
