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

// One linear term coeff * X_block[row, col] of a functional on the
// block-diagonal Hermitian variable.
struct SdpTerm {
  int block = 0;
  int row = 0;
  int col = 0;
  Complex coeff{1.0, 0.0};
};

// Dense semidefinite program over complex Hermitian PSD blocks:
//
//   optimize   sum_b <C_b, X_b>
//   subject to <A_i, X> = b_i  (real, i = 1..m),   X_b >= 0.
//
// Constraints and the objective are entered as complex-linear equations
// sum_k coeff_k * X[r_k, c_k] = rhs; each expands into the one or two
// real Hermitian functionals that pin its real and imaginary parts.
class SdpProblem {
 public:
  enum class Sense { Minimize, Maximize };

  struct RealConstraint {
    std::vector<SdpTerm> entries;  // Hermitian-closed matrix triplets A[r,c]
    double rhs = 0.0;
  };

  int add_block(int side);

  // objective += Re(coeff * X_block[row, col])
  void add_objective_term(int block, int row, int col, Complex coeff);

  // Adds sum_k coeff_k X[r_k, c_k] = rhs. Returns how many real
  // constraints were appended (identically-zero parts are dropped).
  int add_constraint(const std::vector<SdpTerm>& terms, Complex rhs);

  void set_sense(Sense s) { sense_ = s; }
  Sense sense() const { return sense_; }

  const std::vector<int>& block_sides() const { return block_sides_; }
  const std::vector<RealConstraint>& constraints() const { return constraints_; }
  const std::vector<SdpTerm>& objective_entries() const { return objective_; }
  int num_constraints() const { return static_cast<int>(constraints_.size()); }

 private:
  std::vector<int> block_sides_;
  std::vector<SdpTerm> objective_;  // Hermitian-closed triplets of C
  std::vector<RealConstraint> constraints_;
  Sense sense_ = Sense::Minimize;
};

enum class SdpStatus {
  Optimal,
  MaxIterations,
  PrimalInfeasible,
  DualInfeasible,
  NumericalFailure,
};

const char* to_string(SdpStatus s);

struct SdpOptions {
  double gap_tol = 1e-7;   // absolute |primal - dual| target
  double feas_tol = 1e-8;  // relative residual target
  int max_iter = 500;
  bool verbose = false;
};

struct SdpSolution {
  SdpStatus status = SdpStatus::NumericalFailure;
  std::vector<Matrix> x;  // primal blocks
  std::vector<Matrix> z;  // dual slack blocks
  Eigen::VectorXd y;      // dual multipliers
  double primal_value = 0.0;
  double dual_value = 0.0;
  double gap = 0.0;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  int iterations = 0;

  bool ok() const { return status == SdpStatus::Optimal; }
};

// Primal-dual interior-point solve (HKM direction, Mehrotra
// predictor-corrector), infeasible start. Deterministic.
SdpSolution solve_sdp(const SdpProblem& p, const SdpOptions& opts = {});

}  // namespace qcert
