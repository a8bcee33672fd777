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

namespace qcert {

// Isometry V : in -> out (x) env with explicit environment dimension.
// Rows use the composite index (y, e) -> y * dim_env + e.
struct StinespringIsometry {
  int dim_in = 0;
  int dim_out = 0;
  int dim_env = 0;
  Matrix v;  // (dim_out * dim_env) x dim_in
};

// V |psi> = sum_e (K_e |psi>) (x) |e>_env ; dim_env = number of Kraus
// operators of the given representation.
StinespringIsometry dilate(const KrausChannel& c);

// Dilation with dim_env = rank of the Choi matrix (eigenvalue cutoff
// `tol`); dim_env <= dim_in * dim_out.
StinespringIsometry minimal_dilation(const KrausChannel& c, double tol = 1e-10);

// tr_env . V, recovering the represented channel.
KrausChannel channel_of(const StinespringIsometry& v);

// tr_out . V, the channel into the environment.
KrausChannel complement_of(const StinespringIsometry& v);

// Complementary channel of c. The environment basis is the Kraus index
// basis of the given representation when that representation is linearly
// independent (hence minimal); otherwise the representation is first
// reduced via the Choi eigenbasis. Either choice differs only by an
// isometry on the output.
KrausChannel complement(const KrausChannel& c);

// Zero-pads the environment to target_env; the represented channel is
// unchanged and new env coordinates are appended after existing ones.
StinespringIsometry pad_dilation(const StinespringIsometry& v, int target_env);

void require_isometry(const StinespringIsometry& v, double tol = kIsoTol);

}  // namespace qcert
