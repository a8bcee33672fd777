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

#include <optional>
#include <string>
#include <utility>

#include "qcert/diamond.hpp"

namespace qcert {

struct CertificationResult {
  double epsilon = 0.0;
  bool degenerate = false;  // dim_B == 1: trivially 0-private / 0-correctable
  // Optimal auxiliary channels: "M" for privacy, "R" and "N" for
  // correctability.
  std::vector<std::pair<std::string, ChoiMatrix>> witnesses;
  SdpSolution diagnostics;

  const ChoiMatrix& witness(const std::string& name) const;
};

struct ExactTestResult {
  bool passed = false;
  std::optional<KrausChannel> factor;  // channel M on A when passed
};

// True iff the restricted channel factors as M (x) tr_B on the operator
// basis within tol; returns the factor channel when it does.
ExactTestResult exact_private_test(const KrausChannel& e,
                                   const SubsystemDecomposition& d,
                                   double tol = 1e-8);

// Complementarity used as an algorithm: B is correctable for e exactly
// when B is private for the complement of the restricted channel.
bool exact_correctable_test(const KrausChannel& e,
                            const SubsystemDecomposition& d,
                            double tol = 1e-8);

// Global minimum of || e.P - M (x) tr_B ||_diamond over channels M from A
// to the output space, as one convex SDP in (Choi(M), diamond blocks).
CertificationResult certify_private(const KrausChannel& e,
                                    const SubsystemDecomposition& d,
                                    const SdpOptions& opts = {});

// Global minimum of || R.e.P - N (x) id_B ||_diamond jointly over the
// recovery R (output -> A(x)B) and N on A, as one convex SDP.
CertificationResult certify_correctable(const KrausChannel& e,
                                        const SubsystemDecomposition& d,
                                        const SdpOptions& opts = {});

struct DualityReport {
  double eps_correctable = 0.0;        // for e
  double eps_private = 0.0;            // for e
  double eps_private_complement = 0.0;     // for complement(restrict(e,d))
  double eps_correctable_complement = 0.0; // for complement(restrict(e,d))
  bool correctable_to_private_ok = false;  // eps_p# <= 2 sqrt(eps_c) + tol
  bool private_to_correctable_ok = false;  // eps_c# <= 2 sqrt(eps_p) + tol
  double tol = 1e-5;

  bool ok() const { return correctable_to_private_ok && private_to_correctable_ok; }
};

// Certifies all four epsilons and checks both directions of the
// 2*sqrt(eps) duality bound.
DualityReport duality_check(const KrausChannel& e,
                            const SubsystemDecomposition& d,
                            const SdpOptions& opts = {}, double tol = 1e-5);

//=========================================================================
// Witness verification
//=========================================================================

// Rebuilds || restrict(e,d) - M (x) tr_B ||_diamond from a privacy
// witness; should reproduce the certified epsilon.
double private_distance_from_witness(const KrausChannel& e,
                                     const SubsystemDecomposition& d,
                                     const ChoiMatrix& m_choi,
                                     const SdpOptions& opts = {});

// Rebuilds || R . restrict(e,d) - N (x) id_B ||_diamond from
// correctability witnesses.
double correctable_distance_from_witness(const KrausChannel& e,
                                         const SubsystemDecomposition& d,
                                         const ChoiMatrix& r_choi,
                                         const ChoiMatrix& n_choi,
                                         const SdpOptions& opts = {});

}  // namespace qcert
