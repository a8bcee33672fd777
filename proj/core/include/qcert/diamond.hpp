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

#include "qcert/channel.hpp"
#include "qcert/sdp.hpp"
#include "qcert/stinespring.hpp"

namespace qcert {

// Thrown when an SDP solve does not reach an optimal certificate
// (maps to CLI exit code 4).
struct SolverError : std::runtime_error {
  SdpStatus status;
  SolverError(SdpStatus s, const std::string& what)
      : std::runtime_error(what), status(s) {}
};

// A linear map with Hermitian Choi matrix, e.g. the difference of two
// channels. Choi convention matches ChoiMatrix (output factor first).
struct HermitianPreservingMap {
  int dim_in = 0;
  int dim_out = 0;
  Matrix choi;
};

HermitianPreservingMap difference_map(const KrausChannel& e,
                                      const KrausChannel& f);

struct DiamondResult {
  double value = 0.0;
  SdpSolution solution;
};

// Diamond norm via the two-block semidefinite characterization
//   minimize (||tr_out Y0||_inf + ||tr_out Y1||_inf) / 2
//   s.t.     [[Y0, -J], [-J^dagger, Y1]] >= 0.
// Throws SolverError when the solver fails to certify optimality.
DiamondResult diamond_norm(const HermitianPreservingMap& m,
                           const SdpOptions& opts = {});

double diamond_distance(const KrausChannel& e, const KrausChannel& f,
                        const SdpOptions& opts = {});

// ||(id (x) (E-F))(phi)||_1 for the normalized maximally entangled input
// phi; a lower bound on diamond_distance, computed by direct application
// of the Kraus families (independent of the SDP path).
double entangled_lower_bound(const KrausChannel& e, const KrausChannel& f);

//=========================================================================
// SDP layout shared with the certifiers
//=========================================================================

// Installs the diamond-norm objective for a map dim_in -> dim_out into
// `p`: the 2N-side PSD block (N = dim_in*dim_out), the two slack blocks
// tying ||tr_out Y_i||_inf to scalar bounds, and the (t0+t1)/2 objective.
// The caller must pin big[k, N+l] for every (k, l) to minus the map's
// Choi matrix (possibly with affine couplings to further blocks).
struct DiamondStructure {
  int big = -1;
  int n = 0;
};
DiamondStructure add_diamond_norm_structure(SdpProblem& p, int dim_in,
                                            int dim_out);

//=========================================================================
// Dilation alignment (continuity theorem utilities)
//=========================================================================

struct AlignmentResult {
  Matrix u;             // unitary on the common environment
  double value = 0.0;   // ||(I (x) U)V - W||_inf at u
  int restarts_used = 0;
};

struct AlignOptions {
  int restarts = 32;
  int max_iterations = 200;
  double improve_tol = 1e-10;
  std::uint64_t seed = 1;
};

// Best-found minimizer of ||(I (x) U)V - W||_inf over unitaries on the
// environment, via iterated polar-decomposition updates from a Frobenius
// (Procrustes) start plus seeded random restarts. The value is an upper
// bound on the true minimum.
AlignmentResult align_dilations(const StinespringIsometry& v,
                                const StinespringIsometry& w,
                                const AlignOptions& opts = {});

enum class Eq6Status { Pass, Inconclusive };

struct ContinuityReport {
  double dd = 0.0;           // ||E - F||_diamond
  double align_value = 0.0;  // best found alignment value
  bool eq5_ok = false;       // dd <= 2 * align_value + tol
  Eq6Status eq6 = Eq6Status::Inconclusive;  // align_value^2 <= dd + tol
};

// Pads both minimal dilations to a common environment of dimension at
// least 2*dim_in*dim_out, aligns them, and evaluates both continuity
// inequalities. The first must hold for any feasible unitary; the second
// only certifies with the true minimizer, so a miss is inconclusive.
ContinuityReport check_continuity(const KrausChannel& e, const KrausChannel& f,
                                  const AlignOptions& align_opts = {},
                                  const SdpOptions& sdp_opts = {},
                                  double tol = 1e-6);

}  // namespace qcert
