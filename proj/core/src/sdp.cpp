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

#include "qcert/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>

namespace qcert {

namespace {

// Merges duplicate (block,row,col) triplets; drops negligible ones.
std::vector<SdpTerm> merge_triplets(const std::vector<SdpTerm>& in) {
  std::map<std::tuple<int, int, int>, Complex> acc;
  for (const SdpTerm& t : in) acc[{t.block, t.row, t.col}] += t.coeff;
  std::vector<SdpTerm> out;
  out.reserve(acc.size());
  for (const auto& [key, v] : acc) {
    if (std::abs(v) <= 1e-15) continue;
    out.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), v});
  }
  return out;
}

// Hermitian closure of "functional += Re(coeff * X[r,c])":
// A[r,c] += conj(coeff)/2, A[c,r] += coeff/2.
void append_herm_entry(std::vector<SdpTerm>& a, int block, int r, int c,
                       Complex coeff) {
  a.push_back({block, r, c, std::conj(coeff) * 0.5});
  a.push_back({block, c, r, coeff * 0.5});
}

}  // namespace

const char* to_string(SdpStatus s) {
  switch (s) {
    case SdpStatus::Optimal: return "optimal";
    case SdpStatus::MaxIterations: return "max-iterations";
    case SdpStatus::PrimalInfeasible: return "primal-infeasible";
    case SdpStatus::DualInfeasible: return "dual-infeasible";
    case SdpStatus::NumericalFailure: return "numerical-failure";
  }
  return "unknown";
}

int SdpProblem::add_block(int side) {
  if (side < 1) throw std::invalid_argument("sdp: block side < 1");
  block_sides_.push_back(side);
  return static_cast<int>(block_sides_.size()) - 1;
}

void SdpProblem::add_objective_term(int block, int row, int col, Complex coeff) {
  append_herm_entry(objective_, block, row, col, coeff);
}

int SdpProblem::add_constraint(const std::vector<SdpTerm>& terms, Complex rhs) {
  int appended = 0;
  // Real part, then imaginary part (coefficients rotated by -i).
  for (int part = 0; part < 2; ++part) {
    std::vector<SdpTerm> a;
    a.reserve(2 * terms.size());
    for (const SdpTerm& t : terms) {
      const Complex c = part == 0 ? t.coeff : Complex(0, -1) * t.coeff;
      append_herm_entry(a, t.block, t.row, t.col, c);
    }
    a = merge_triplets(a);
    const double r = part == 0 ? rhs.real() : rhs.imag();
    if (a.empty()) {
      if (std::abs(r) > 1e-12)
        throw std::invalid_argument("sdp: inconsistent constraint 0 = rhs");
      continue;
    }
    constraints_.push_back({std::move(a), r});
    ++appended;
  }
  return appended;
}

namespace {

// Per-(constraint, block) slice of A_i, dense when the sparse quadratic
// Schur formula would be slower than two small matrix products.
struct ConstraintSlice {
  int constraint = 0;
  std::vector<SdpTerm> entries;
  bool dense = false;
  Matrix a;  // populated when dense
};

constexpr int kDenseNnzThreshold = 12;

struct Workspace {
  int m = 0;
  int nu = 0;  // total side
  std::vector<int> sides;
  std::vector<Matrix> c;                             // objective blocks
  std::vector<std::vector<ConstraintSlice>> slices;  // per block
  Eigen::VectorXd b;
  double bnorm = 1.0;
  double cnorm = 1.0;
};

double real_dot_tr(const std::vector<SdpTerm>& a, const Matrix& g) {
  // Re tr(A g) with A given by matrix triplets.
  Complex acc = 0.0;
  for (const SdpTerm& t : a) acc += t.coeff * g(t.col, t.row);
  return acc.real();
}

Workspace build_workspace(const SdpProblem& p) {
  Workspace w;
  w.sides = p.block_sides();
  const int nb = static_cast<int>(w.sides.size());
  w.m = p.num_constraints();
  w.nu = 0;
  for (int s : w.sides) w.nu += s;

  const double sign = p.sense() == SdpProblem::Sense::Maximize ? -1.0 : 1.0;
  w.c.resize(nb);
  for (int b = 0; b < nb; ++b) w.c[b] = Matrix::Zero(w.sides[b], w.sides[b]);
  for (const SdpTerm& t : p.objective_entries())
    w.c[t.block](t.row, t.col) += sign * t.coeff;
  for (int b = 0; b < nb; ++b) {
    w.cnorm = std::max(w.cnorm, w.c[b].cwiseAbs().maxCoeff());
  }

  w.b.resize(w.m);
  w.slices.resize(nb);
  for (int i = 0; i < w.m; ++i) {
    const auto& cons = p.constraints()[i];
    w.b(i) = cons.rhs;
    w.bnorm = std::max(w.bnorm, std::abs(cons.rhs));
    // split triplets by block
    std::map<int, std::vector<SdpTerm>> by_block;
    for (const SdpTerm& t : cons.entries) {
      if (t.block < 0 || t.block >= nb) throw DimensionError("sdp: bad block id");
      if (t.row < 0 || t.row >= w.sides[t.block] || t.col < 0 ||
          t.col >= w.sides[t.block])
        throw DimensionError("sdp: constraint index out of block range");
      by_block[t.block].push_back(t);
    }
    for (auto& [blk, entries] : by_block) {
      ConstraintSlice s;
      s.constraint = i;
      s.dense = static_cast<int>(entries.size()) > kDenseNnzThreshold;
      if (s.dense) {
        s.a = Matrix::Zero(w.sides[blk], w.sides[blk]);
        for (const SdpTerm& t : entries) s.a(t.row, t.col) += t.coeff;
      }
      s.entries = std::move(entries);
      w.slices[blk].push_back(std::move(s));
    }
  }
  return w;
}

void apply_adjoint(const Workspace& w, const Eigen::VectorXd& y,
                   std::vector<Matrix>& out) {
  for (std::size_t b = 0; b < w.sides.size(); ++b) {
    out[b].setZero(w.sides[b], w.sides[b]);
    for (const ConstraintSlice& s : w.slices[b])
      for (const SdpTerm& t : s.entries) out[b](t.row, t.col) += y(s.constraint) * t.coeff;
  }
}

void apply_forward(const Workspace& w, const std::vector<Matrix>& x,
                   Eigen::VectorXd& out) {
  out.setZero(w.m);
  for (std::size_t b = 0; b < w.sides.size(); ++b)
    for (const ConstraintSlice& s : w.slices[b]) {
      // <A, X> = tr(A X) for Hermitian A, X
      out(s.constraint) += real_dot_tr(s.entries, x[b]);
    }
}

// Largest step alpha with X + alpha*D >= 0, given X = L L^dagger.
double max_psd_step(const Eigen::LLT<Matrix>& llt, const Matrix& d) {
  const Matrix li_d = llt.matrixL().solve(d);
  const Matrix s = llt.matrixL().solve(li_d.adjoint()).adjoint();
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (s + s.adjoint()),
                                           Eigen::EigenvaluesOnly);
  const double lmin = es.eigenvalues().minCoeff();
  if (lmin >= -1e-14) return std::numeric_limits<double>::infinity();
  return -1.0 / lmin;
}

struct Iterate {
  std::vector<Matrix> x, z;
  Eigen::VectorXd y;
};

}  // namespace

SdpSolution solve_sdp(const SdpProblem& p, const SdpOptions& opts) {
  Workspace w = build_workspace(p);
  const int nb = static_cast<int>(w.sides.size());
  const double obj_sign = p.sense() == SdpProblem::Sense::Maximize ? -1.0 : 1.0;

  SdpSolution sol;
  if (w.m == 0) throw std::invalid_argument("sdp: problem has no constraints");

  // Infeasible interior start.
  const double xi = std::max({10.0, std::sqrt(static_cast<double>(w.nu)),
                              2.0 * w.bnorm});
  const double eta = std::max({10.0, std::sqrt(static_cast<double>(w.nu)),
                               2.0 * w.cnorm});
  Iterate it;
  it.x.resize(nb);
  it.z.resize(nb);
  for (int b = 0; b < nb; ++b) {
    it.x[b] = xi * identity(w.sides[b]);
    it.z[b] = eta * identity(w.sides[b]);
  }
  it.y = Eigen::VectorXd::Zero(w.m);

  std::vector<Matrix> rd(nb), zinv(nb), g(nb), ady(nb), dxp(nb), dzp(nb), dx(nb),
      dz(nb), t_rdzi(nb);
  Eigen::VectorXd rp(w.m), rhs(w.m), dy(w.m), ax(w.m);
  Eigen::MatrixXd schur(w.m, w.m);

  double tau = 0.9;
  double best_merit = std::numeric_limits<double>::infinity();
  int stall = 0;

  auto finish = [&](SdpStatus status, int iters) {
    sol.status = status;
    sol.x = it.x;
    sol.z = it.z;
    sol.y.resize(w.m);
    for (int i = 0; i < w.m; ++i) sol.y(i) = it.y(i);
    double pobj = 0.0;
    for (int b = 0; b < nb; ++b)
      pobj += (w.c[b].conjugate().cwiseProduct(it.x[b])).sum().real();
    const double dobj = w.b.dot(it.y);
    sol.primal_value = obj_sign * pobj;
    sol.dual_value = obj_sign * dobj;
    sol.gap = std::abs(pobj - dobj);
    apply_forward(w, it.x, ax);
    sol.primal_residual = (w.b - ax).cwiseAbs().maxCoeff() / (1.0 + w.bnorm);
    apply_adjoint(w, it.y, ady);
    double dres = 0.0;
    for (int b = 0; b < nb; ++b)
      dres = std::max(dres,
                      (w.c[b] - it.z[b] - ady[b]).cwiseAbs().maxCoeff());
    sol.dual_residual = dres / (1.0 + w.cnorm);
    sol.iterations = iters;
    return sol;
  };

  for (int iter = 0; iter < opts.max_iter; ++iter) {
    for (int b = 0; b < nb; ++b) {
      it.x[b] = hermitian_part(it.x[b]);
      it.z[b] = hermitian_part(it.z[b]);
    }

    // Residuals and convergence test.
    apply_forward(w, it.x, ax);
    rp = w.b - ax;
    apply_adjoint(w, it.y, ady);
    double mu = 0.0;
    for (int b = 0; b < nb; ++b) {
      rd[b] = w.c[b] - it.z[b] - ady[b];
      mu += (it.x[b].conjugate().cwiseProduct(it.z[b])).sum().real();
    }
    mu /= w.nu;

    double pobj = 0.0;
    for (int b = 0; b < nb; ++b)
      pobj += (w.c[b].conjugate().cwiseProduct(it.x[b])).sum().real();
    const double dobj = w.b.dot(it.y);
    const double gap = std::abs(pobj - dobj);
    const double pres = rp.cwiseAbs().maxCoeff() / (1.0 + w.bnorm);
    double dres = 0.0;
    for (int b = 0; b < nb; ++b)
      dres = std::max(dres, rd[b].cwiseAbs().maxCoeff());
    dres /= 1.0 + w.cnorm;

    if (opts.verbose)
      std::fprintf(stderr, "sdp it %3d mu %.3e gap %.3e pres %.3e dres %.3e\n",
                   iter, mu, gap, pres, dres);

    if (!std::isfinite(mu) || !std::isfinite(gap))
      return finish(SdpStatus::NumericalFailure, iter);

    if (pres <= opts.feas_tol && dres <= opts.feas_tol && gap <= opts.gap_tol)
      return finish(SdpStatus::Optimal, iter);

    // Infeasibility rays: the dual objective diverges while the dual
    // equality A*(y) + Z stays tiny (primal infeasible), and dually.
    {
      const double ynorm = std::max(1.0, it.y.cwiseAbs().maxCoeff());
      if (w.b.dot(it.y) > 1e5) {
        double eqres = 0.0;
        for (int b = 0; b < nb; ++b)
          eqres = std::max(eqres, (it.z[b] + ady[b]).cwiseAbs().maxCoeff());
        if (w.b.dot(it.y) > 1e8 * std::max(1.0, eqres / ynorm) && eqres / ynorm < 1e-4)
          return finish(SdpStatus::PrimalInfeasible, iter);
      }
      double xnorm = 1.0;
      for (int b = 0; b < nb; ++b)
        xnorm = std::max(xnorm, it.x[b].cwiseAbs().maxCoeff());
      if (-pobj > 1e8 && ax.cwiseAbs().maxCoeff() / xnorm < 1e-6)
        return finish(SdpStatus::DualInfeasible, iter);
    }

    const double merit = gap / (1.0 + std::abs(pobj) + std::abs(dobj)) + pres + dres;
    if (merit < 0.9 * best_merit) {
      best_merit = merit;
      stall = 0;
    } else if (++stall > 40) {
      return finish(SdpStatus::MaxIterations, iter);
    }

    // Factorizations of the current iterate.
    std::vector<Eigen::LLT<Matrix>> lx(nb), lz(nb);
    bool fact_ok = true;
    for (int b = 0; b < nb; ++b) {
      lx[b].compute(it.x[b]);
      lz[b].compute(it.z[b]);
      if (lx[b].info() != Eigen::Success || lz[b].info() != Eigen::Success)
        fact_ok = false;
    }
    if (!fact_ok) return finish(SdpStatus::NumericalFailure, iter);
    for (int b = 0; b < nb; ++b) zinv[b] = lz[b].solve(identity(w.sides[b]));

    // Schur complement M_ij = Re tr(A_i X A_j Z^{-1}).
    schur.setZero();
    for (int b = 0; b < nb; ++b) {
      const Matrix& x = it.x[b];
      const Matrix& zi = zinv[b];
      const auto& slices = w.slices[b];
      const int ns = static_cast<int>(slices.size());
      for (int jj = 0; jj < ns; ++jj) {
        const ConstraintSlice& sj = slices[jj];
        if (!sj.dense) continue;
        const Matrix t = x * sj.a * zi;
        for (int ii = 0; ii < ns; ++ii) {
          const ConstraintSlice& si = slices[ii];
          if (si.dense && si.constraint > sj.constraint) continue;
          const double v = real_dot_tr(si.entries, t);
          const int lo = std::min(si.constraint, sj.constraint);
          const int hi = std::max(si.constraint, sj.constraint);
          schur(lo, hi) += v;
        }
      }
      for (int ii = 0; ii < ns; ++ii) {
        const ConstraintSlice& si = slices[ii];
        if (si.dense) continue;
        for (int jj = ii; jj < ns; ++jj) {
          const ConstraintSlice& sj = slices[jj];
          if (sj.dense) continue;
          Complex acc = 0.0;
          for (const SdpTerm& t1 : si.entries)
            for (const SdpTerm& t2 : sj.entries)
              acc += t1.coeff * t2.coeff * x(t1.col, t2.row) * zi(t2.col, t1.row);
          schur(si.constraint, sj.constraint) += acc.real();
        }
      }
    }
    schur.triangularView<Eigen::StrictlyLower>() =
        schur.triangularView<Eigen::StrictlyUpper>().transpose();

    Eigen::LLT<Eigen::MatrixXd> mllt(schur);
    if (mllt.info() != Eigen::Success) {
      const double ridge =
          1e-12 * std::max(1.0, schur.diagonal().maxCoeff());
      schur.diagonal().array() += ridge;
      mllt.compute(schur);
      if (mllt.info() != Eigen::Success)
        return finish(SdpStatus::NumericalFailure, iter);
    }

    // Predictor (affine scaling).
    for (int b = 0; b < nb; ++b) {
      t_rdzi[b] = rd[b] * zinv[b];
      g[b] = -it.x[b] - it.x[b] * t_rdzi[b];
    }
    for (int i = 0; i < w.m; ++i) rhs(i) = rp(i);
    for (int b = 0; b < nb; ++b)
      for (const ConstraintSlice& s : w.slices[b])
        rhs(s.constraint) -= real_dot_tr(s.entries, g[b]);
    dy = mllt.solve(rhs);

    apply_adjoint(w, dy, ady);
    for (int b = 0; b < nb; ++b) {
      dzp[b] = rd[b] - ady[b];
      dxp[b] = -it.x[b] - hermitian_part(it.x[b] * dzp[b] * zinv[b]);
    }

    double ap = 1.0, ad = 1.0;
    for (int b = 0; b < nb; ++b) {
      ap = std::min(ap, tau * max_psd_step(lx[b], dxp[b]));
      ad = std::min(ad, tau * max_psd_step(lz[b], dzp[b]));
    }

    double mu_aff = 0.0;
    for (int b = 0; b < nb; ++b)
      mu_aff += ((it.x[b] + ap * dxp[b]).conjugate()
                     .cwiseProduct(it.z[b] + ad * dzp[b]))
                    .sum()
                    .real();
    mu_aff = std::max(0.0, mu_aff / w.nu);
    double sigma = std::pow(mu_aff / mu, 3);
    sigma = std::clamp(sigma, 1e-6, 1.0);
    if (std::min(ap, ad) < 0.2) sigma = std::max(sigma, 0.5);

    // Corrector.
    const double smu = sigma * mu;
    for (int b = 0; b < nb; ++b)
      g[b] += smu * zinv[b] - dxp[b] * (dzp[b] * zinv[b]);
    for (int i = 0; i < w.m; ++i) rhs(i) = rp(i);
    for (int b = 0; b < nb; ++b)
      for (const ConstraintSlice& s : w.slices[b])
        rhs(s.constraint) -= real_dot_tr(s.entries, g[b]);
    dy = mllt.solve(rhs);

    apply_adjoint(w, dy, ady);
    for (int b = 0; b < nb; ++b) {
      dz[b] = rd[b] - ady[b];
      dx[b] = smu * zinv[b] - it.x[b] -
              hermitian_part((dxp[b] * dzp[b] + it.x[b] * dz[b]) * zinv[b]);
    }

    ap = 1.0;
    ad = 1.0;
    for (int b = 0; b < nb; ++b) {
      ap = std::min(ap, tau * max_psd_step(lx[b], dx[b]));
      ad = std::min(ad, tau * max_psd_step(lz[b], dz[b]));
    }
    ap = std::min(ap, 1.0);
    ad = std::min(ad, 1.0);

    for (int b = 0; b < nb; ++b) {
      it.x[b] += ap * dx[b];
      it.z[b] += ad * dz[b];
    }
    it.y += ad * dy;

    tau = std::min(ap, ad) > 0.9 ? std::min(0.98, tau + 0.02) : 0.9;
  }

  return finish(SdpStatus::MaxIterations, opts.max_iter);
}

}  // namespace qcert
