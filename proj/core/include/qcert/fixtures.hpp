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

#include "qcert/secret_sharing.hpp"

namespace qcert {
namespace fixtures {

// Two-qubit phase flip on the first qubit with probability one half:
// E(sigma) = (sigma + Z1 sigma Z1) / 2.
KrausChannel phase_flip_two_qubit();

// Z on the first qubit of two.
Matrix z_first_qubit();

// Code subspace span{|00>, |01>} of the phase-flip channel (dim_A = 1).
SubsystemDecomposition phase_flip_code();

// Coefficients of the phase-flip complement action
// E#(sigma) = tr(sigma) rho1 + tr(sigma Z1) rho2.
Matrix phase_flip_rho1();  // (|0><0| + |1><1|) / 2
Matrix phase_flip_rho2();  // (|0><1| + |1><0|) / 2

// Deletion to the maximally mixed state, E(sigma) = tr(sigma) I/d.
KrausChannel completely_depolarizing(int d);

// ((2,3)) qutrit threshold scheme with the standard cyclic encoding.
ThresholdScheme cgl23_scheme();

}  // namespace fixtures
}  // namespace qcert
