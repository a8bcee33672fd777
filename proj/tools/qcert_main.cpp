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

#include <chrono>
#include <cstdint>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcert/certify.hpp"
#include "qcert/diamond.hpp"
#include "qcert/fixtures.hpp"
#include "qcert/secret_sharing.hpp"
#include "qcert/serialize.hpp"

namespace {

using nlohmann::json;
using namespace qcert;

enum ExitCode {
  kOk = 0,
  kUsage = 1,
  kParseError = 2,
  kDimensionError = 3,
  kSolverError = 4,
  kBoundViolation = 5,
};

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

struct Options {
  double tol = 1e-6;
  std::uint64_t seed = 1;
  int max_iter = 500;
  std::string json_path;
};

// Machine-readable report. Wall-clock goes to stdout only, so identical
// invocations produce byte-identical JSON.
struct RunReport {
  json body;

  RunReport(const std::string& command, const Options& opt) {
    body["command"] = command;
    body["inputs"] = json::array();
    body["tolerances"] = {{"tol", opt.tol}, {"max_iter", opt.max_iter}};
    body["seed"] = opt.seed;
    body["results"] = json::object();
  }

  void add_input(const std::string& path, const std::string& content) {
    body["inputs"].push_back({{"path", path}, {"digest", hex64(fnv1a(content))}});
  }

  json& results() { return body["results"]; }

  void write(const Options& opt) const {
    if (!opt.json_path.empty()) write_file(opt.json_path, body.dump(2) + "\n");
  }
};

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(row);
  }
  return rows;
}

void print_matrix(const Matrix& m, const std::string& name) {
  std::cout << name << " =\n";
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    std::cout << "  ";
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      std::printf("(%+.6f%+.6fi) ", m(r, c).real(), m(r, c).imag());
    }
    std::cout << "\n";
  }
}

std::string subset_string(const std::vector<int>& subset) {
  std::string s = "{";
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(subset[i]);
  }
  return s + "}";
}

SdpOptions sdp_options(const Options& opt) {
  SdpOptions s;
  s.max_iter = opt.max_iter;
  return s;
}

//-------------------------------------------------------------------------
// subcommands
//-------------------------------------------------------------------------

int cmd_validate(const std::string& path, const Options& opt) {
  RunReport rep("validate", opt);
  const std::string text = read_file(path);
  rep.add_input(path, text);
  const KrausChannel c = channel_from_json(text);
  const CptpReport r = validate_cptp(c);
  const double tol = opt.tol < 1e-6 ? opt.tol : kCptpTol;
  const bool valid = r.valid(tol);

  std::cout << "channel " << path << ": dim " << c.dim_in << " -> " << c.dim_out
            << ", " << c.kraus.size() << " Kraus operators\n"
            << "  trace-preservation deviation: " << r.tp_deviation << "\n"
            << "  Choi PSD deviation:           " << r.psd_deviation << "\n"
            << "  valid (tol " << tol << "): " << (valid ? "yes" : "NO") << "\n";

  rep.results()["tp_deviation"] = r.tp_deviation;
  rep.results()["psd_deviation"] = r.psd_deviation;
  rep.results()["valid"] = valid;
  rep.write(opt);
  return valid ? kOk : kBoundViolation;
}

int cmd_complement(const std::string& path, const std::string& out,
                   const Options& opt) {
  RunReport rep("complement", opt);
  const std::string text = read_file(path);
  rep.add_input(path, text);
  const KrausChannel c = channel_from_json(text);
  const KrausChannel comp = complement(c);

  std::cout << "complement: dim " << comp.dim_in << " -> " << comp.dim_out
            << ", " << comp.kraus.size() << " Kraus operators\n";
  const CptpReport r = validate_cptp(comp);
  std::cout << "  CPTP deviations: tp " << r.tp_deviation << ", psd "
            << r.psd_deviation << "\n";
  if (!out.empty()) {
    save_channel(out, comp);
    std::cout << "  written to " << out << "\n";
  }

  rep.results()["dim_in"] = comp.dim_in;
  rep.results()["dim_out"] = comp.dim_out;
  rep.results()["kraus_count"] = comp.kraus.size();
  rep.results()["tp_deviation"] = r.tp_deviation;
  rep.write(opt);
  return kOk;
}

int cmd_diamond(const std::string& path_a, const std::string& path_b,
                const Options& opt) {
  RunReport rep("diamond", opt);
  const std::string ta = read_file(path_a), tb = read_file(path_b);
  rep.add_input(path_a, ta);
  rep.add_input(path_b, tb);
  const KrausChannel a = channel_from_json(ta);
  const KrausChannel b = channel_from_json(tb);

  const DiamondResult res = diamond_norm(difference_map(a, b), sdp_options(opt));
  const double lower = entangled_lower_bound(a, b);

  std::cout << "diamond distance:        " << res.value << "\n"
            << "entangled lower bound:   " << lower << "\n"
            << "SDP duality gap:         " << res.solution.gap << "\n"
            << "SDP iterations:          " << res.solution.iterations << "\n";

  rep.results()["diamond_distance"] = res.value;
  rep.results()["entangled_lower_bound"] = lower;
  rep.results()["sdp_gap"] = res.solution.gap;
  rep.results()["sdp_iterations"] = res.solution.iterations;
  rep.write(opt);
  return kOk;
}

SubsystemDecomposition load_any_decomposition(const std::string& decomp_path,
                                              const std::string& subspace_path,
                                              RunReport& rep) {
  if (!decomp_path.empty()) {
    const std::string text = read_file(decomp_path);
    rep.add_input(decomp_path, text);
    SubsystemDecomposition d = decomposition_from_json(text);
    require_valid_decomposition(d);
    return d;
  }
  const std::string text = read_file(subspace_path);
  rep.add_input(subspace_path, text);
  return load_subspace_basis(subspace_path);
}

int cmd_certify(const std::string& path, const std::string& decomp_path,
                const std::string& subspace_path, const std::string& mode,
                const Options& opt) {
  RunReport rep("certify " + mode, opt);
  const std::string text = read_file(path);
  rep.add_input(path, text);
  const KrausChannel c = channel_from_json(text);
  const SubsystemDecomposition d =
      load_any_decomposition(decomp_path, subspace_path, rep);

  int code = kOk;
  if (mode == "private" || mode == "correctable") {
    const CertificationResult res = mode == "private"
                                        ? certify_private(c, d, sdp_options(opt))
                                        : certify_correctable(c, d, sdp_options(opt));
    std::cout << mode << " certification: epsilon = " << res.epsilon << "\n";
    if (res.degenerate) std::cout << "  (degenerate case dim_B = 1)\n";
    if (!res.degenerate)
      std::cout << "  SDP gap " << res.diagnostics.gap << ", iterations "
                << res.diagnostics.iterations << "\n";
    rep.results()["epsilon"] = res.epsilon;
    rep.results()["degenerate"] = res.degenerate;
    for (const auto& [name, w] : res.witnesses)
      rep.results()["witness_" + name] = matrix_json(w.m);
  } else {  // duality
    const DualityReport res = duality_check(c, d, sdp_options(opt), opt.tol);
    std::cout << "duality check (tol " << res.tol << ")\n"
              << "  eps_correctable            = " << res.eps_correctable << "\n"
              << "  eps_private                = " << res.eps_private << "\n"
              << "  eps_private(complement)    = " << res.eps_private_complement
              << "\n"
              << "  eps_correctable(complement)= "
              << res.eps_correctable_complement << "\n"
              << "  correctable -> private bound: "
              << (res.correctable_to_private_ok ? "ok" : "VIOLATED") << "\n"
              << "  private -> correctable bound: "
              << (res.private_to_correctable_ok ? "ok" : "VIOLATED") << "\n";
    rep.results()["eps_correctable"] = res.eps_correctable;
    rep.results()["eps_private"] = res.eps_private;
    rep.results()["eps_private_complement"] = res.eps_private_complement;
    rep.results()["eps_correctable_complement"] = res.eps_correctable_complement;
    rep.results()["bounds_ok"] = res.ok();
    if (!res.ok()) code = kBoundViolation;
  }
  rep.write(opt);
  return code;
}

int cmd_secretshare(const std::string& path, const std::string& mode, int n,
                    int k, int trials, double eps_corr, double eps_priv,
                    const Options& opt) {
  RunReport rep("secretshare " + mode, opt);

  if (mode == "probe") {
    if (!path.empty()) {
      const std::string text = read_file(path);
      rep.add_input(path, text);
      const ThresholdScheme s = scheme_from_json(text);
      n = s.n;
      k = s.k;
    }
    if (n <= 0 || k <= 0) {
      std::cerr << "probe requires --n and --k (or a scheme file)\n";
      return kUsage;
    }
    const ProbeReport res =
        infeasibility_probe(n, k, trials, opt.seed, sdp_options(opt));
    std::cout << "infeasibility probe (n=" << n << ", k=" << k << ", " << trials
              << " trials, seed " << opt.seed << ")\n";
    for (std::size_t t = 0; t < res.violations.size(); ++t)
      std::cout << "  trial " << t << ": violation " << res.violations[t] << "\n";
    std::cout << "  min violation: " << res.min_violation << " (threshold "
              << res.threshold << ") -> "
              << (res.separated ? "bounded away from 0" : "VIOLATION NOT SEPARATED")
              << "\n";
    rep.results()["violations"] = res.violations;
    rep.results()["min_violation"] = res.min_violation;
    rep.results()["separated"] = res.separated;
    rep.write(opt);
    return res.separated ? kOk : kBoundViolation;
  }

  const std::string text = read_file(path);
  rep.add_input(path, text);
  const ThresholdScheme s = scheme_from_json(text);

  if (mode == "verify") {
    const ThresholdReport res =
        verify_threshold(s, eps_corr, eps_priv, sdp_options(opt));
    std::cout << "threshold verification ((" << s.k << "," << s.n << "))\n";
    json rows = json::array();
    for (const SubsetCheck& c : res.checks) {
      std::cout << "  " << subset_string(c.subset) << " "
                << (c.correctable ? "correctable" : "private    ")
                << " epsilon " << c.epsilon << " (bound " << c.bound << ") "
                << (c.pass ? "ok" : "FAIL") << "\n";
      rows.push_back({{"subset", c.subset},
                      {"kind", c.correctable ? "correctable" : "private"},
                      {"epsilon", c.epsilon},
                      {"pass", c.pass}});
    }
    std::cout << "  all pass: " << (res.all_pass ? "yes" : "NO") << "\n";
    rep.results()["checks"] = rows;
    rep.results()["all_pass"] = res.all_pass;
    rep.write(opt);
    return res.all_pass ? kOk : kBoundViolation;
  }

  // audit: every subset split
  bool all_ok = true;
  json rows = json::array();
  std::cout << "complement duality audit ((" << s.k << "," << s.n << "))\n";
  for (const auto& subset : enumerate_subsets(s.n)) {
    const AuditReport res =
        complement_duality_audit(s, subset, sdp_options(opt), opt.tol);
    std::cout << "  " << subset_string(subset)
              << " complementary: " << (res.complementary_ok ? "ok" : "FAIL")
              << " (spectrum dev " << res.spectrum_deviation << ", gram dev "
              << res.gram_deviation << "), eps_corr " << res.eps_correctable
              << ", eps_priv(rest) " << res.eps_private_complement << ", bound "
              << (res.bound_ok ? "ok" : "FAIL") << "\n";
    rows.push_back({{"subset", subset},
                    {"complementary_ok", res.complementary_ok},
                    {"eps_correctable", res.eps_correctable},
                    {"eps_private_complement", res.eps_private_complement},
                    {"bound_ok", res.bound_ok}});
    all_ok = all_ok && res.ok();
  }
  std::cout << "  all ok: " << (all_ok ? "yes" : "NO") << "\n";
  rep.results()["audits"] = rows;
  rep.results()["all_ok"] = all_ok;
  rep.write(opt);
  return all_ok ? kOk : kBoundViolation;
}

int demo_phase_flip(const Options& opt) {
  RunReport rep("demo phase-flip", opt);
  const KrausChannel e = fixtures::phase_flip_two_qubit();
  const KrausChannel comp = complement(e);

  // E#(sigma) = tr(sigma) rho1 + tr(sigma Z1) rho2; extract the
  // coefficients from the action on I and Z1.
  const Matrix z1 = fixtures::z_first_qubit();
  const Matrix rho1 = apply(comp, identity(4)) / 4.0;
  const Matrix rho2 = apply(comp, z1) / 4.0;
  print_matrix(rho1, "rho1");
  print_matrix(rho2, "rho2");

  double action_dev = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const Matrix sigma = basis_matrix(4, i, j);
      const Matrix expected = sigma.trace() * rho1 + (sigma * z1).trace() * rho2;
      action_dev = std::max(
          action_dev, (apply(comp, sigma) - expected).cwiseAbs().maxCoeff());
    }
  const double rho_dev =
      std::max((rho1 - fixtures::phase_flip_rho1()).cwiseAbs().maxCoeff(),
               (rho2 - fixtures::phase_flip_rho2()).cwiseAbs().maxCoeff());
  std::cout << "coefficient form deviation:  " << action_dev << "\n"
            << "expected coefficient dev:    " << rho_dev << "\n";

  const CertificationResult priv =
      certify_private(comp, fixtures::phase_flip_code(), sdp_options(opt));
  std::cout << "privacy of the code space for the complement: epsilon = "
            << priv.epsilon << "\n";

  rep.results()["rho1"] = matrix_json(rho1);
  rep.results()["rho2"] = matrix_json(rho2);
  rep.results()["action_deviation"] = action_dev;
  rep.results()["privacy_epsilon"] = priv.epsilon;
  rep.write(opt);

  const bool ok = action_dev <= 1e-9 && rho_dev <= 1e-9 && priv.epsilon <= 1e-6;
  std::cout << (ok ? "demo checks passed\n" : "DEMO CHECKS FAILED\n");
  return ok ? kOk : kBoundViolation;
}

int demo_lemma1(const Options& opt) {
  RunReport rep("demo lemma1", opt);
  bool ok = true;
  for (int d : {2, 3}) {
    const KrausChannel comp = complement(identity_channel(d));
    const double dev = channel_action_distance(comp, trace_channel(d));
    const bool this_ok = comp.dim_out == 1 && dev <= 1e-12;
    std::cout << "complement(id_" << d << "): output dim " << comp.dim_out
              << ", distance to trace channel " << dev
              << (this_ok ? " (ok)" : " (FAIL)") << "\n";
    rep.results()["deviation_dim" + std::to_string(d)] = dev;
    ok = ok && this_ok;
  }
  rep.write(opt);
  return ok ? kOk : kBoundViolation;
}

int demo_cgl23(const Options& opt) {
  RunReport rep("demo cgl23", opt);
  const ThresholdScheme s = fixtures::cgl23_scheme();
  const ThresholdReport res = verify_threshold(s, 1e-6, 1e-6, sdp_options(opt));
  std::cout << "((2,3)) qutrit threshold scheme\n";
  json rows = json::array();
  for (const SubsetCheck& c : res.checks) {
    std::cout << "  " << subset_string(c.subset) << " "
              << (c.correctable ? "correctable" : "private    ") << " epsilon "
              << c.epsilon << " " << (c.pass ? "ok" : "FAIL") << "\n";
    rows.push_back({{"subset", c.subset},
                    {"kind", c.correctable ? "correctable" : "private"},
                    {"epsilon", c.epsilon},
                    {"pass", c.pass}});
  }
  std::cout << "  all pass: " << (res.all_pass ? "yes" : "NO") << "\n";
  rep.results()["checks"] = rows;
  rep.results()["all_pass"] = res.all_pass;
  rep.write(opt);
  return res.all_pass ? kOk : kBoundViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum channel certification toolkit"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--tol", opt.tol, "tolerance for asserted bounds");
  app.add_option("--seed", opt.seed, "seed for randomized procedures");
  app.add_option("--max-iter", opt.max_iter, "SDP iteration cap");
  app.add_option("--json", opt.json_path, "write a machine-readable report");

  std::string path, path_b, out, decomp_path, subspace_path, mode, demo_name;
  int n = 0, k = 0, trials = 20;
  double eps_corr = 1e-6, eps_priv = 1e-6;

  CLI::App* validate = app.add_subcommand("validate", "CPTP validation report");
  validate->add_option("channel", path)->required();

  CLI::App* comp = app.add_subcommand("complement", "complementary channel");
  comp->add_option("channel", path)->required();
  comp->add_option("--out", out, "write the complement channel JSON");

  CLI::App* diamond = app.add_subcommand("diamond", "diamond-norm distance");
  diamond->add_option("channel_a", path)->required();
  diamond->add_option("channel_b", path_b)->required();

  CLI::App* certify =
      app.add_subcommand("certify", "private/correctable certification");
  certify->add_option("channel", path)->required();
  certify->add_option("--decomp", decomp_path, "decomposition JSON");
  certify->add_option("--subspace", subspace_path, "subspace basis JSON");
  certify->add_option("--mode", mode, "private|correctable|duality")->required();

  CLI::App* ss = app.add_subcommand("secretshare", "threshold scheme audits");
  ss->add_option("scheme", path, "scheme JSON (optional for probe)");
  ss->add_option("--mode", mode, "verify|audit|probe")->required();
  ss->add_option("--n", n);
  ss->add_option("--k", k);
  ss->add_option("--trials", trials);
  ss->add_option("--eps-corr", eps_corr);
  ss->add_option("--eps-priv", eps_priv);

  CLI::App* demo = app.add_subcommand("demo", "built-in worked examples");
  demo->add_option("name", demo_name, "phase-flip|lemma1|cgl23")->required();

  CLI11_PARSE(app, argc, argv);

  const auto start = std::chrono::steady_clock::now();
  int code = kOk;
  try {
    if (*validate) {
      code = cmd_validate(path, opt);
    } else if (*comp) {
      code = cmd_complement(path, out, opt);
    } else if (*diamond) {
      code = cmd_diamond(path, path_b, opt);
    } else if (*certify) {
      if (mode != "private" && mode != "correctable" && mode != "duality") {
        std::cerr << "unknown certify mode: " << mode << "\n";
        return kUsage;
      }
      if (decomp_path.empty() && subspace_path.empty()) {
        std::cerr << "certify needs --decomp or --subspace\n";
        return kUsage;
      }
      code = cmd_certify(path, decomp_path, subspace_path, mode, opt);
    } else if (*ss) {
      if (mode != "verify" && mode != "audit" && mode != "probe") {
        std::cerr << "unknown secretshare mode: " << mode << "\n";
        return kUsage;
      }
      if (mode != "probe" && path.empty()) {
        std::cerr << "secretshare " << mode << " needs a scheme file\n";
        return kUsage;
      }
      code = cmd_secretshare(path, mode, n, k, trials, eps_corr, eps_priv, opt);
    } else if (*demo) {
      if (demo_name == "phase-flip")
        code = demo_phase_flip(opt);
      else if (demo_name == "lemma1")
        code = demo_lemma1(opt);
      else if (demo_name == "cgl23")
        code = demo_cgl23(opt);
      else {
        std::cerr << "unknown demo: " << demo_name << "\n";
        return kUsage;
      }
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const DimensionError& e) {
    std::cerr << "dimension error: " << e.what() << "\n";
    return kDimensionError;
  } catch (const SolverError& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return kSolverError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kParseError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  const auto elapsed = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  std::printf("wall time: %.3f s\n", elapsed);
  return code;
}
