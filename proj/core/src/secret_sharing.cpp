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

#include "qcert/secret_sharing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qcert {

namespace {

int product(const std::vector<int>& dims) {
  return std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<int>());
}

std::vector<int> complement_subset(int n, const std::vector<int>& subset) {
  std::vector<bool> in(n, false);
  for (int i : subset) in[i] = true;
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (!in[i]) out.push_back(i);
  return out;
}

// Sorted nonzero Choi spectrum, descending.
std::vector<double> choi_spectrum(const KrausChannel& c, double cutoff = 1e-10) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(kraus_to_choi(c).m);
  std::vector<double> out;
  for (int i = 0; i < es.eigenvalues().size(); ++i)
    if (es.eigenvalues()(i) > cutoff) out.push_back(es.eigenvalues()(i));
  std::sort(out.rbegin(), out.rend());
  return out;
}

// Hilbert-Schmidt Gram of the channel outputs on the operator basis;
// invariant under isometries on the output space.
Matrix output_gram(const KrausChannel& c) {
  const int d = c.dim_in;
  std::vector<Matrix> outs;
  outs.reserve(d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) outs.push_back(apply(c, basis_matrix(d, i, j)));
  Matrix gram(d * d, d * d);
  for (int p = 0; p < d * d; ++p)
    for (int q = 0; q < d * d; ++q)
      gram(p, q) = (outs[p].adjoint() * outs[q]).trace();
  return gram;
}

}  // namespace

void require_valid_scheme(const ThresholdScheme& s, double tol) {
  if (s.n < 1 || s.k < 1 || s.k > s.n)
    throw std::invalid_argument("scheme: need 1 <= k <= n");
  if (s.secret_dim < 1) throw DimensionError("scheme: secret_dim < 1");
  if (static_cast<int>(s.share_dims.size()) != s.n)
    throw DimensionError("scheme: share_dims size != n");
  const int total = product(s.share_dims);
  if (s.encoder.rows() != total || s.encoder.cols() != s.secret_dim)
    throw DimensionError("scheme: encoder shape mismatch");
  const Matrix gram = s.encoder.adjoint() * s.encoder;
  if ((gram - identity(s.secret_dim)).cwiseAbs().maxCoeff() > tol)
    throw std::invalid_argument("scheme: encoder is not an isometry");
}

KrausChannel reduction(const ThresholdScheme& s, const std::vector<int>& subset) {
  require_valid_scheme(s);
  if (subset.empty()) throw std::invalid_argument("reduction: empty subset");
  std::vector<bool> in(s.n, false);
  for (int i : subset) {
    if (i < 0 || i >= s.n) throw std::invalid_argument("reduction: party out of range");
    if (in[i]) throw std::invalid_argument("reduction: duplicate party");
    in[i] = true;
  }

  std::vector<int> kept, discarded;
  for (int i = 0; i < s.n; ++i) (in[i] ? kept : discarded).push_back(i);

  // Reorder encoder rows so kept factors come first; the discarded
  // factors then form the (fast) environment index of the dilation.
  std::vector<int> order = kept;
  order.insert(order.end(), discarded.begin(), discarded.end());
  std::vector<int> perm_dims(s.n);
  for (int i = 0; i < s.n; ++i) perm_dims[i] = s.share_dims[order[i]];

  const int total = product(s.share_dims);
  Matrix v(total, s.secret_dim);
  std::vector<int> digits(s.n), new_digits(s.n);
  for (int r = 0; r < total; ++r) {
    int idx = r;
    for (int f = s.n; f-- > 0;) {
      digits[f] = idx % s.share_dims[f];
      idx /= s.share_dims[f];
    }
    for (int i = 0; i < s.n; ++i) new_digits[i] = digits[order[i]];
    int nr = 0;
    for (int i = 0; i < s.n; ++i) nr = nr * perm_dims[i] + new_digits[i];
    v.row(nr) = s.encoder.row(r);
  }

  int kept_dim = 1, disc_dim = 1;
  for (int i : kept) kept_dim *= s.share_dims[i];
  for (int i : discarded) disc_dim *= s.share_dims[i];

  StinespringIsometry iso{s.secret_dim, kept_dim, disc_dim, std::move(v)};
  require_isometry(iso);
  return channel_of(iso);
}

std::vector<std::vector<int>> enumerate_subsets(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> subset;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) subset.push_back(i);
    out.push_back(std::move(subset));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

ThresholdReport verify_threshold(const ThresholdScheme& s, double eps_corr,
                                 double eps_priv, const SdpOptions& opts) {
  require_valid_scheme(s);
  const SubsystemDecomposition whole = trivial_decomposition(1, s.secret_dim);
  ThresholdReport rep;
  for (const auto& subset : enumerate_subsets(s.n)) {
    SubsetCheck check;
    check.subset = subset;
    const KrausChannel red = reduction(s, subset);
    if (static_cast<int>(subset.size()) >= s.k) {
      check.correctable = true;
      check.bound = eps_corr;
      check.epsilon = certify_correctable(red, whole, opts).epsilon;
    } else {
      check.correctable = false;
      check.bound = eps_priv;
      check.epsilon = certify_private(red, whole, opts).epsilon;
    }
    check.pass = check.epsilon <= check.bound;
    rep.all_pass = rep.all_pass && check.pass;
    rep.max_epsilon = std::max(rep.max_epsilon, check.epsilon);
    rep.checks.push_back(std::move(check));
  }
  return rep;
}

AuditReport complement_duality_audit(const ThresholdScheme& s,
                                     const std::vector<int>& subset,
                                     const SdpOptions& opts, double tol) {
  require_valid_scheme(s);
  AuditReport rep;
  rep.subset = subset;

  const KrausChannel kept = reduction(s, subset);
  const KrausChannel comp_of_kept = complement(kept);
  const std::vector<int> rest = complement_subset(s.n, subset);
  const KrausChannel other =
      rest.empty() ? trace_channel(s.secret_dim) : reduction(s, rest);

  // Complementarity up to an output isometry: compare isometry-invariant
  // functionals of the two channels.
  {
    std::vector<double> sp1 = choi_spectrum(comp_of_kept);
    std::vector<double> sp2 = choi_spectrum(other);
    const std::size_t len = std::max(sp1.size(), sp2.size());
    sp1.resize(len, 0.0);
    sp2.resize(len, 0.0);
    for (std::size_t i = 0; i < len; ++i)
      rep.spectrum_deviation =
          std::max(rep.spectrum_deviation, std::abs(sp1[i] - sp2[i]));
    rep.gram_deviation =
        (output_gram(comp_of_kept) - output_gram(other)).cwiseAbs().maxCoeff();
    rep.complementary_ok =
        rep.spectrum_deviation <= 1e-8 && rep.gram_deviation <= 1e-8;
  }

  const SubsystemDecomposition whole = trivial_decomposition(1, s.secret_dim);
  rep.eps_correctable = certify_correctable(kept, whole, opts).epsilon;
  rep.eps_private_complement = certify_private(other, whole, opts).epsilon;
  rep.bound_ok = rep.eps_private_complement <=
                 2.0 * std::sqrt(rep.eps_correctable) + tol;
  return rep;
}

ProbeReport infeasibility_probe(int n, int k, int trials, std::uint64_t seed,
                                const SdpOptions& opts) {
  if (n < 2 * k)
    throw std::invalid_argument("infeasibility_probe: requires n >= 2k");
  if (trials < 1) throw std::invalid_argument("infeasibility_probe: trials < 1");

  ProbeReport rep;
  rep.n = n;
  rep.k = k;
  Rng rng(seed);
  const SubsystemDecomposition whole = trivial_decomposition(1, 2);
  for (int t = 0; t < trials; ++t) {
    ThresholdScheme s;
    s.k = k;
    s.n = n;
    s.secret_dim = 2;
    s.share_dims.assign(n, 2);
    s.encoder = random_isometry(1 << n, 2, rng);

    double violation = 0.0;
    for (const auto& subset : enumerate_subsets(n)) {
      const KrausChannel red = reduction(s, subset);
      const double eps =
          static_cast<int>(subset.size()) >= k
              ? certify_correctable(red, whole, opts).epsilon
              : certify_private(red, whole, opts).epsilon;
      violation = std::max(violation, eps);
    }
    rep.violations.push_back(violation);
  }
  rep.min_violation =
      *std::min_element(rep.violations.begin(), rep.violations.end());
  rep.separated = rep.min_violation > rep.threshold;
  return rep;
}

}  // namespace qcert
