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

#include "qcert/certify.hpp"

namespace qcert {

// ((k, n)) threshold scheme: an isometric encoding of the secret into n
// shares. Party indices are 0-based throughout.
struct ThresholdScheme {
  int k = 0;
  int n = 0;
  int secret_dim = 0;
  std::vector<int> share_dims;
  Matrix encoder;  // prod(share_dims) x secret_dim isometry
};

void require_valid_scheme(const ThresholdScheme& s, double tol = kIsoTol);

// Channel secret -> kept shares: encode, then trace out every party not
// in `subset`. Kept factors stay in increasing party order.
KrausChannel reduction(const ThresholdScheme& s, const std::vector<int>& subset);

struct SubsetCheck {
  std::vector<int> subset;
  bool correctable = false;  // correctability (|T| >= k) vs privacy check
  double epsilon = 0.0;
  double bound = 0.0;
  bool pass = false;
};

struct ThresholdReport {
  std::vector<SubsetCheck> checks;
  bool all_pass = true;
  double max_epsilon = 0.0;
};

// Certifies every nonempty subset: correctable within eps_corr for
// |T| >= k, private within eps_priv for |T| <= k-1. The decomposition is
// the whole secret space (dim_A = 1).
ThresholdReport verify_threshold(const ThresholdScheme& s, double eps_corr,
                                 double eps_priv, const SdpOptions& opts = {});

struct AuditReport {
  std::vector<int> subset;
  double spectrum_deviation = 0.0;  // Choi spectra of the two reductions
  double gram_deviation = 0.0;      // HS Gram of channel outputs
  bool complementary_ok = false;
  double eps_correctable = 0.0;        // reduction to subset
  double eps_private_complement = 0.0; // reduction to the complement parties
  bool bound_ok = false;  // eps_p <= 2 sqrt(eps_c) + tol

  bool ok() const { return complementary_ok && bound_ok; }
};

// Checks that reduction(s, T) and reduction(s, ~T) are complementary --
// via isometry-invariant functionals (Choi spectra, output Gram) and
// certification equivalence -- then checks the 2 sqrt(eps) relation
// between their certified epsilons. Requires an isometric encoder.
AuditReport complement_duality_audit(const ThresholdScheme& s,
                                     const std::vector<int>& subset,
                                     const SdpOptions& opts = {},
                                     double tol = 1e-5);

struct ProbeReport {
  int n = 0;
  int k = 0;
  std::vector<double> violations;  // max failing epsilon per encoder
  double min_violation = 0.0;
  double threshold = 0.1;
  bool separated = false;  // every trial stayed above the threshold
};

// Falsifiable probe of the n >= 2k no-go: draws seeded random isometric
// encoders (qubit secret, qubit shares) and reports the worst threshold
// condition per encoder. Not a proof; a single small violation would
// refute the no-go.
ProbeReport infeasibility_probe(int n, int k, int trials, std::uint64_t seed,
                                const SdpOptions& opts = {});

// All nonempty subsets of {0..n-1}, ordered by size then lexicographically.
std::vector<std::vector<int>> enumerate_subsets(int n);

}  // namespace qcert
