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

#include "qcert/certify.hpp"

#include <cmath>

namespace qcert {

namespace {

constexpr double kCoeffCutoff = 1e-14;

void check_inputs(const KrausChannel& e, const SubsystemDecomposition& d) {
  require_valid_channel(e);
  require_valid_decomposition(d);
  if (d.dim_S() != e.dim_in)
    throw DimensionError("certify: decomposition does not match channel input");
}

// Kraus family of a channel reconstructed from a (possibly slightly
// infeasible) witness Choi matrix.
KrausChannel channel_from_witness(const ChoiMatrix& j) {
  return choi_to_kraus(j, 1e-7);
}

// Trace-preservation constraints tr_out(J) = I on a Choi block.
void add_tp_constraints(SdpProblem& p, int block, int dim_in, int dim_out) {
  for (int a = 0; a < dim_in; ++a)
    for (int b = a; b < dim_in; ++b) {
      std::vector<SdpTerm> terms;
      for (int y = 0; y < dim_out; ++y)
        terms.push_back({block, y * dim_in + a, y * dim_in + b, 1.0});
      p.add_constraint(terms, a == b ? 1.0 : 0.0);
    }
}

SdpSolution run(SdpProblem& p, const SdpOptions& opts, const char* who) {
  SdpSolution sol = solve_sdp(p, opts);
  if (!sol.ok())
    throw SolverError(sol.status,
                      std::string(who) + ": solver status " + to_string(sol.status));
  return sol;
}

}  // namespace

const ChoiMatrix& CertificationResult::witness(const std::string& name) const {
  for (const auto& [n, w] : witnesses)
    if (n == name) return w;
  throw std::invalid_argument("certification result: no witness named " + name);
}

ExactTestResult exact_private_test(const KrausChannel& e,
                                   const SubsystemDecomposition& d,
                                   double tol) {
  check_inputs(e, d);
  const KrausChannel f = restrict_channel(e, d);
  const int da = d.dim_A, db = d.dim_B, dout = f.dim_out;

  // C_{aa'} = f(|a><a'| (x) I_B / d_B)
  std::vector<Matrix> c(da * da);
  for (int a = 0; a < da; ++a)
    for (int a2 = 0; a2 < da; ++a2)
      c[a * da + a2] =
          apply(f, tensor(basis_matrix(da, a, a2), identity(db) / double(db)));

  double worst = 0.0;
  for (int a = 0; a < da; ++a)
    for (int a2 = 0; a2 < da; ++a2)
      for (int b = 0; b < db; ++b)
        for (int b2 = 0; b2 < db; ++b2) {
          const Matrix o =
              apply(f, tensor(basis_matrix(da, a, a2), basis_matrix(db, b, b2)));
          const Matrix expected = b == b2 ? c[a * da + a2] : Matrix::Zero(dout, dout);
          worst = std::max(worst, (o - expected).cwiseAbs().maxCoeff());
        }

  ExactTestResult res;
  res.passed = worst <= tol;
  if (res.passed) {
    Matrix jm = Matrix::Zero(dout * da, dout * da);
    for (int a = 0; a < da; ++a)
      for (int a2 = 0; a2 < da; ++a2)
        jm += tensor(c[a * da + a2], basis_matrix(da, a, a2));
    res.factor = channel_from_witness(ChoiMatrix{da, dout, std::move(jm)});
  }
  return res;
}

bool exact_correctable_test(const KrausChannel& e,
                            const SubsystemDecomposition& d, double tol) {
  check_inputs(e, d);
  const KrausChannel comp = complement(restrict_channel(e, d));
  return exact_private_test(comp, trivial_decomposition(d.dim_A, d.dim_B), tol)
      .passed;
}

CertificationResult certify_private(const KrausChannel& e,
                                    const SubsystemDecomposition& d,
                                    const SdpOptions& opts) {
  check_inputs(e, d);
  const KrausChannel f = restrict_channel(e, d);
  const int da = d.dim_A, db = d.dim_B, dab = d.dim_AB(), dout = f.dim_out;

  if (db == 1) {
    CertificationResult res;
    res.degenerate = true;
    res.witnesses.emplace_back("M", kraus_to_choi(f));
    return res;
  }

  const Matrix jf = kraus_to_choi(f).m;

  SdpProblem p;
  const DiamondStructure st = add_diamond_norm_structure(p, dab, dout);
  const int jm = p.add_block(dout * da);
  add_tp_constraints(p, jm, da, dout);

  // big[k, N+l] - J(M (x) tr_B)[k,l] = -J_F[k,l]
  // with J(M (x) tr_B)[(y,ab),(y',a'b')] = delta_{bb'} J_M[(y,a),(y',a')].
  for (int y = 0; y < dout; ++y)
    for (int a = 0; a < da; ++a)
      for (int b = 0; b < db; ++b)
        for (int y2 = 0; y2 < dout; ++y2)
          for (int a2 = 0; a2 < da; ++a2)
            for (int b2 = 0; b2 < db; ++b2) {
              const int k = y * dab + a * db + b;
              const int l = y2 * dab + a2 * db + b2;
              std::vector<SdpTerm> terms;
              terms.push_back({st.big, k, st.n + l, 1.0});
              if (b == b2)
                terms.push_back({jm, y * da + a, y2 * da + a2, -1.0});
              p.add_constraint(terms, -jf(k, l));
            }

  CertificationResult res;
  res.diagnostics = run(p, opts, "certify_private");
  res.epsilon = std::max(0.0, res.diagnostics.primal_value);
  res.witnesses.emplace_back("M", ChoiMatrix{da, dout, res.diagnostics.x[jm]});
  return res;
}

CertificationResult certify_correctable(const KrausChannel& e,
                                        const SubsystemDecomposition& d,
                                        const SdpOptions& opts) {
  check_inputs(e, d);
  const KrausChannel f = restrict_channel(e, d);
  const int da = d.dim_A, db = d.dim_B, dab = d.dim_AB(), w = f.dim_out;

  if (db == 1) {
    // N := R.f for the deletion recovery R; the difference vanishes.
    CertificationResult res;
    res.degenerate = true;
    DeletionChannel del{w, identity(dab) / double(dab)};
    const KrausChannel r = del.to_kraus();
    res.witnesses.emplace_back("R", kraus_to_choi(r));
    res.witnesses.emplace_back("N", kraus_to_choi(compose(r, f)));
    return res;
  }

  const Matrix jf = kraus_to_choi(f).m;

  SdpProblem p;
  const DiamondStructure st = add_diamond_norm_structure(p, dab, dab);
  const int jr = p.add_block(dab * w);
  const int jn = p.add_block(da * da);
  add_tp_constraints(p, jr, w, dab);
  add_tp_constraints(p, jn, da, da);

  // big[k, N+l] + J(R.F)[k,l] - J(N (x) id_B)[k,l] = 0 with
  //   J(R.F)[(y,i),(y',j)]       = sum_{w w'} J_F[(w,i),(w',j)] J_R[(y,w),(y',w')]
  //   J(N (x) id_B)[(ab,i),(a'b',j)] = delta_{b,i_B} delta_{b',j_B} J_N[(a,i_A),(a',j_A)]
  for (int k = 0; k < st.n; ++k) {
    const int ybar = k / dab, i = k % dab;
    for (int l = 0; l < st.n; ++l) {
      const int y2bar = l / dab, j = l % dab;
      std::vector<SdpTerm> terms;
      terms.push_back({st.big, k, st.n + l, 1.0});
      for (int wi = 0; wi < w; ++wi)
        for (int wj = 0; wj < w; ++wj) {
          const Complex coeff = jf(wi * dab + i, wj * dab + j);
          if (std::abs(coeff) <= kCoeffCutoff) continue;
          terms.push_back({jr, ybar * w + wi, y2bar * w + wj, coeff});
        }
      const int a_out = ybar / db, b_out = ybar % db;
      const int a2_out = y2bar / db, b2_out = y2bar % db;
      const int a_in = i / db, b_in = i % db;
      const int a2_in = j / db, b2_in = j % db;
      if (b_out == b_in && b2_out == b2_in)
        terms.push_back({jn, a_out * da + a_in, a2_out * da + a2_in, -1.0});
      p.add_constraint(terms, 0.0);
    }
  }

  CertificationResult res;
  res.diagnostics = run(p, opts, "certify_correctable");
  res.epsilon = std::max(0.0, res.diagnostics.primal_value);
  res.witnesses.emplace_back("R", ChoiMatrix{w, dab, res.diagnostics.x[jr]});
  res.witnesses.emplace_back("N", ChoiMatrix{da, da, res.diagnostics.x[jn]});
  return res;
}

DualityReport duality_check(const KrausChannel& e,
                            const SubsystemDecomposition& d,
                            const SdpOptions& opts, double tol) {
  check_inputs(e, d);
  DualityReport rep;
  rep.tol = tol;
  rep.eps_correctable = certify_correctable(e, d, opts).epsilon;
  rep.eps_private = certify_private(e, d, opts).epsilon;

  const KrausChannel comp = complement(restrict_channel(e, d));
  const SubsystemDecomposition triv = trivial_decomposition(d.dim_A, d.dim_B);
  rep.eps_private_complement = certify_private(comp, triv, opts).epsilon;
  rep.eps_correctable_complement = certify_correctable(comp, triv, opts).epsilon;

  rep.correctable_to_private_ok =
      rep.eps_private_complement <= 2.0 * std::sqrt(rep.eps_correctable) + tol;
  rep.private_to_correctable_ok =
      rep.eps_correctable_complement <= 2.0 * std::sqrt(rep.eps_private) + tol;
  return rep;
}

double private_distance_from_witness(const KrausChannel& e,
                                     const SubsystemDecomposition& d,
                                     const ChoiMatrix& m_choi,
                                     const SdpOptions& opts) {
  const KrausChannel f = restrict_channel(e, d);
  const KrausChannel m = channel_from_witness(m_choi);
  const KrausChannel target = tensor_channels(m, trace_channel(d.dim_B));
  return diamond_distance(f, target, opts);
}

double correctable_distance_from_witness(const KrausChannel& e,
                                         const SubsystemDecomposition& d,
                                         const ChoiMatrix& r_choi,
                                         const ChoiMatrix& n_choi,
                                         const SdpOptions& opts) {
  const KrausChannel f = restrict_channel(e, d);
  const KrausChannel r = channel_from_witness(r_choi);
  const KrausChannel n = channel_from_witness(n_choi);
  const KrausChannel target = tensor_channels(n, identity_channel(d.dim_B));
  return diamond_distance(compose(r, f), target, opts);
}

}  // namespace qcert
