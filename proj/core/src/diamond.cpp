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

#include "qcert/diamond.hpp"

#include <cmath>

namespace qcert {

HermitianPreservingMap difference_map(const KrausChannel& e,
                                      const KrausChannel& f) {
  if (e.dim_in != f.dim_in || e.dim_out != f.dim_out)
    throw DimensionError("difference_map: dimension mismatch");
  return HermitianPreservingMap{e.dim_in, e.dim_out,
                                kraus_to_choi(e).m - kraus_to_choi(f).m};
}

DiamondStructure add_diamond_norm_structure(SdpProblem& p, int dim_in,
                                            int dim_out) {
  const int n = dim_in * dim_out;
  DiamondStructure st;
  st.n = n;
  st.big = p.add_block(2 * n);
  const int s0 = p.add_block(dim_in);
  const int s1 = p.add_block(dim_in);
  const int t0 = p.add_block(1);
  const int t1 = p.add_block(1);

  p.add_objective_term(t0, 0, 0, 0.5);
  p.add_objective_term(t1, 0, 0, 0.5);

  // slack = t*I - tr_out(Y): S[a,b] + sum_y Y[(y,a),(y,b)] - t*delta_ab = 0
  for (int half = 0; half < 2; ++half) {
    const int off = half * n;
    const int sblk = half == 0 ? s0 : s1;
    const int tblk = half == 0 ? t0 : t1;
    for (int a = 0; a < dim_in; ++a) {
      for (int b = a; b < dim_in; ++b) {
        std::vector<SdpTerm> terms;
        terms.push_back({sblk, a, b, 1.0});
        for (int y = 0; y < dim_out; ++y)
          terms.push_back(
              {st.big, off + y * dim_in + a, off + y * dim_in + b, 1.0});
        if (a == b) terms.push_back({tblk, 0, 0, -1.0});
        p.add_constraint(terms, 0.0);
      }
    }
  }
  return st;
}

DiamondResult diamond_norm(const HermitianPreservingMap& m,
                           const SdpOptions& opts) {
  const int n = m.dim_in * m.dim_out;
  if (m.choi.rows() != n || m.choi.cols() != n)
    throw DimensionError("diamond_norm: Choi side mismatch");
  if (!is_hermitian(m.choi, 1e-8))
    throw std::invalid_argument("diamond_norm: Choi not Hermitian");

  SdpProblem p;
  DiamondStructure st = add_diamond_norm_structure(p, m.dim_in, m.dim_out);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l)
      p.add_constraint({{st.big, k, st.n + l, 1.0}}, -m.choi(k, l));

  SdpSolution sol = solve_sdp(p, opts);
  if (!sol.ok())
    throw SolverError(sol.status, std::string("diamond_norm: solver status ") +
                                      to_string(sol.status));
  DiamondResult res;
  res.value = std::max(0.0, sol.primal_value);
  res.solution = std::move(sol);
  return res;
}

double diamond_distance(const KrausChannel& e, const KrausChannel& f,
                        const SdpOptions& opts) {
  return diamond_norm(difference_map(e, f), opts).value;
}

double entangled_lower_bound(const KrausChannel& e, const KrausChannel& f) {
  if (e.dim_in != f.dim_in || e.dim_out != f.dim_out)
    throw DimensionError("entangled_lower_bound: dimension mismatch");
  const int d = e.dim_in;
  Vector omega = Vector::Zero(d * d);
  for (int i = 0; i < d; ++i) omega(i * d + i) = 1.0 / std::sqrt(double(d));
  const Matrix phi = omega * omega.adjoint();
  const KrausChannel ide = tensor_channels(identity_channel(d), e);
  const KrausChannel idf = tensor_channels(identity_channel(d), f);
  return trace_norm(apply(ide, phi) - apply(idf, phi));
}

//=========================================================================
// Dilation alignment
//=========================================================================

namespace {

// (I_out (x) U) V, with U acting on the environment (fast) index.
Matrix apply_env_unitary(const Matrix& u, const StinespringIsometry& v) {
  Matrix out(v.v.rows(), v.v.cols());
  for (int y = 0; y < v.dim_out; ++y)
    out.middleRows(y * v.dim_env, v.dim_env) =
        u * v.v.middleRows(y * v.dim_env, v.dim_env);
  return out;
}

Matrix polar_unitary(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

// tr over the output factor of the outer product a b^dagger for vectors
// indexed (y, e): G[e, e'] = sum_y a[(y,e)] conj(b[(y,e')]).
Matrix env_contraction(const Vector& a, const Vector& b, int dim_out, int env) {
  Matrix g = Matrix::Zero(env, env);
  for (int y = 0; y < dim_out; ++y)
    for (int e = 0; e < env; ++e)
      for (int f = 0; f < env; ++f)
        g(e, f) += a(y * env + e) * std::conj(b(y * env + f));
  return g;
}

struct LocalSearchResult {
  Matrix u;
  double value;
};

// Iterated polar-decomposition descent on sigma_max((I (x) U)V - W).
LocalSearchResult refine(const StinespringIsometry& v,
                         const StinespringIsometry& w, Matrix u,
                         const AlignOptions& opts) {
  const int env = v.dim_env;
  auto objective = [&](const Matrix& uu) {
    return operator_norm(apply_env_unitary(uu, v).eval() - w.v);
  };
  double value = objective(u);
  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    const Matrix a = apply_env_unitary(u, v) - w.v;
    Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& s = svd.singularValues();
    const double top = s(0);
    if (top < 1e-14) break;
    // Average the subgradient over the near-degenerate top cluster.
    const double cluster = top - std::max(1e-9, 1e-6 * top);
    Matrix grad = Matrix::Zero(env, env);
    int count = 0;
    for (int k = 0; k < s.size() && s(k) >= cluster; ++k, ++count) {
      const Vector x = v.v * svd.matrixV().col(k);
      grad += env_contraction(x, svd.matrixU().col(k), v.dim_out, env);
    }
    grad /= count;
    const double gnorm = grad.norm();
    if (gnorm < 1e-14) break;

    double eta = 0.5 * top / gnorm;
    bool improved = false;
    for (int bt = 0; bt < 25; ++bt) {
      const Matrix trial = polar_unitary(u - eta * grad.adjoint());
      const double tv = objective(trial);
      if (tv < value - 1e-14) {
        improved = tv < value - opts.improve_tol;
        u = trial;
        value = tv;
        break;
      }
      eta *= 0.5;
    }
    if (!improved) break;
  }
  return {std::move(u), value};
}

}  // namespace

AlignmentResult align_dilations(const StinespringIsometry& v,
                                const StinespringIsometry& w,
                                const AlignOptions& opts) {
  if (v.dim_in != w.dim_in || v.dim_out != w.dim_out || v.dim_env != w.dim_env)
    throw DimensionError("align_dilations: dilation dims mismatch (pad first)");
  const int env = v.dim_env;

  AlignmentResult best;
  best.value = std::numeric_limits<double>::infinity();
  auto consider = [&](const LocalSearchResult& r) {
    if (r.value < best.value) {
      best.value = r.value;
      best.u = r.u;
    }
  };

  // Frobenius-optimal start: maximize Re tr(U G), G = tr_out(V W^dagger).
  Matrix g = Matrix::Zero(env, env);
  {
    const Matrix vw = v.v * w.v.adjoint();
    for (int y = 0; y < v.dim_out; ++y)
      g += vw.block(y * env, y * env, env, env);
  }
  {
    Eigen::JacobiSVD<Matrix> svd(g, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Matrix u0 = svd.matrixV() * svd.matrixU().adjoint();
    consider(refine(v, w, u0, opts));
  }

  Rng rng(opts.seed);
  int restarts = 0;
  for (; restarts < opts.restarts; ++restarts) {
    if (best.value < 1e-12) break;
    consider(refine(v, w, random_unitary(env, rng), opts));
  }
  best.restarts_used = restarts;
  return best;
}

ContinuityReport check_continuity(const KrausChannel& e, const KrausChannel& f,
                                  const AlignOptions& align_opts,
                                  const SdpOptions& sdp_opts, double tol) {
  if (e.dim_in != f.dim_in || e.dim_out != f.dim_out)
    throw DimensionError("check_continuity: dimension mismatch");
  ContinuityReport rep;
  rep.dd = diamond_distance(e, f, sdp_opts);

  StinespringIsometry ve = minimal_dilation(e);
  StinespringIsometry vf = minimal_dilation(f);
  const int env = std::max({2 * e.dim_in * e.dim_out, ve.dim_env, vf.dim_env});
  ve = pad_dilation(ve, env);
  vf = pad_dilation(vf, env);

  const AlignmentResult align = align_dilations(ve, vf, align_opts);
  rep.align_value = align.value;
  rep.eq5_ok = rep.dd <= 2.0 * align.value + tol;
  rep.eq6 = align.value * align.value <= rep.dd + tol ? Eq6Status::Pass
                                                      : Eq6Status::Inconclusive;
  return rep;
}

}  // namespace qcert
