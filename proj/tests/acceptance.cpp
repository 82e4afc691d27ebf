// Copyright 2026 The Fockrail Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fockrail/circuit.hpp"
#include "fockrail/dsl.hpp"
#include "fockrail/functor.hpp"
#include "fockrail/json_out.hpp"
#include "fockrail/klm.hpp"
#include "fockrail/program.hpp"
#include "fockrail/qudit.hpp"
#include "fockrail/rail.hpp"
#include "fockrail/random_unitary.hpp"
#include "fockrail/single_loop.hpp"

using namespace fockrail;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

struct Tally {
  bool ok = true;
  std::string detail;

  void below(const std::string& name, double value, double tol) {
    const bool pass = value < tol;
    ok = ok && pass;
    add(name + "=" + fmt("%.3g", value) + (pass ? " < " : " !< ") + fmt("%.0e", tol));
  }
  void require(const std::string& name, bool pass) {
    ok = ok && pass;
    add(name + (pass ? " ok" : " FAILED"));
  }
  void add(const std::string& s) { detail += (detail.empty() ? "" : "; ") + s; }
  Outcome done() const { return {ok, detail}; }
};

struct CommandResult {
  int status = -1;
  std::string output;
};

CommandResult run(const std::string& cmd) {
  CommandResult r;
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string quoted(const fs::path& p) { return "'" + p.string() + "'"; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<fs::path> corpus(const std::string& sub) {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(fs::path(FOCKRAIL_CORPUS_DIR) / sub)) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  return files;
}

double max_abs(const Eigen::MatrixXcd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

Outcome nonlinear_sign_gate() {
  Tally t;
  const NonlinearSign ns = nonlinear_sign();
  const double p2 = (3.0 - std::sqrt(2.0)) / 7.0;
  const double p = std::sqrt(p2);
  t.below("|p^2-(3-sqrt2)/7|", std::abs(ns.report.success_probability - p2), 1e-12);
  const double want[3] = {p, p, -p};
  double coeff = 0.0;
  for (int m = 0; m < 3; ++m) coeff = std::max(coeff, std::abs(ns.report.coefficients.at(static_cast<std::size_t>(m)) - want[m]));
  t.below("coefficients", coeff, 1e-10);
  const auto res = ns_condition_residuals(ns.spec.stages.at(0).config, ns.spec.stages.at(1).config);
  t.below("conditions", *std::max_element(res.begin(), res.end()), 1e-12);
  return t.done();
}

Outcome controlled_z_gate() {
  Tally t;
  const double p2 = (3.0 - std::sqrt(2.0)) / 7.0;
  const ControlledZ cz = controlled_z();
  t.below("|P-(11-6sqrt2)/49|", std::abs(cz.report.success_probability - (11.0 - 6.0 * std::sqrt(2.0)) / 49.0), 1e-12);
  Eigen::Matrix4cd target = Eigen::Matrix4cd::Zero();
  target.diagonal() << p2, p2, p2, -p2;
  const DualRailCzCheck dual = dual_rail_cz_check();
  t.below("dual-rail action", max_abs(dual.action - target), 1e-9);
  return t.done();
}

Outcome hong_ou_mandel() {
  Tally t;
  const UnitaryMatrix h = beam_splitter(BeamSplitterConfig::hadamard());
  t.below("|<11|B[H]|11>|^2", std::norm(matrix_element(h, {1, 1}, {1, 1})), 1e-24);
  t.below("||<11|B[H]|20>|^2-1/2|", std::abs(std::norm(matrix_element(h, {1, 1}, {2, 0})) - 0.5), 1e-12);
  return t.done();
}

Outcome functor_laws() {
  Tally t;
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> dim(1, 4);
  double product = 0.0;
  double sum = 0.0;
  for (int k = 0; k < 20; ++k) {
    const int d = dim(rng);
    const UnitaryMatrix u1 = random_unitary(d, rng);
    const UnitaryMatrix u2 = random_unitary(d, rng);
    for (int p = 0; p <= 3; ++p) {
      product = std::max(product, max_abs(sector_matrix(u1 * u2, p) - sector_matrix(u1, p) * sector_matrix(u2, p)));
    }
    const int da = std::uniform_int_distribution<int>(1, 3)(rng);
    const int db = std::uniform_int_distribution<int>(1, 4 - da)(rng);
    const UnitaryMatrix a = random_unitary(da, rng);
    const UnitaryMatrix b = random_unitary(db, rng);
    const UnitaryMatrix ab = direct_sum(a, b);
    for (int p = 0; p <= 3; ++p) {
      const FockSector s(da + db, p);
      for (const OccupationVector& n : s.basis()) {
        for (const OccupationVector& m : s.basis()) {
          const Complex lhs = matrix_element(ab, n, m);
          const Complex rhs = matrix_element(a, n.slice(0, da), m.slice(0, da)) *
                              matrix_element(b, n.slice(da, db), m.slice(da, db));
          sum = std::max(sum, std::abs(lhs - rhs));
        }
      }
    }
  }
  t.below("product law", product, 1e-9);
  t.below("direct-sum law", sum, 1e-9);
  return t.done();
}

Outcome sector_unitarity() {
  Tally t;
  std::mt19937_64 rng(4343);
  double defect = 0.0;
  double leak = 0.0;
  for (int k = 0; k < 20; ++k) {
    const int d = 1 + k % 4;
    const UnitaryMatrix u = random_unitary(d, rng);
    for (int p = 0; p <= 3; ++p) {
      const Eigen::MatrixXcd s = sector_matrix(u, p);
      defect = std::max(defect, max_abs(s * s.adjoint() - Eigen::MatrixXcd::Identity(s.rows(), s.rows())));
      const FockSector sector(d, p);
      for (const OccupationVector& n : sector.basis()) {
        for (int q = 0; q <= 3; ++q) {
          if (q == p) continue;
          const FockSector other(d, q);
          for (const OccupationVector& m : other.basis()) leak = std::max(leak, std::abs(matrix_element(u, n, m)));
        }
        const FockVector out = apply(u, FockVector::basis_state(n, 3));
        for (const auto& [o, a] : out.amplitudes()) {
          if (o.total() != p) leak = std::max(leak, std::abs(a));
        }
      }
    }
  }
  t.below("sector defect", defect, 1e-9);
  t.require("cross-sector <= 1e-12", leak <= 1e-12);
  return t.done();
}

Outcome single_loop_closed_form() {
  Tally t;
  std::mt19937_64 rng(4444);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  double grid = 0.0;
  for (int k = 0; k < 25; ++k) {
    const BeamSplitterConfig c{angle(rng), angle(rng), angle(rng), angle(rng)};
    const UnitaryMatrix u = beam_splitter(c);
    for (int mm = 0; mm <= 4; ++mm)
      for (int nm = 0; nm <= 4; ++nm)
        for (int np = 0; np <= 4; ++np) {
          const LoopAmplitudeQuery q{c, mm, nm, np};
          const Complex ref = q.m_plus() < 0 ? Complex{} : matrix_element(u, {mm, nm}, {np, q.m_plus()});
          grid = std::max(grid, std::abs(loop_amplitude(q) - ref));
        }
  }
  t.below("grid", grid, 1e-10);
  // Diagonal elements in closed form:
  //   <m 0|B|0 m> = e^{im(g - tau)} cos^m
  //   <m 1|B|1 m> = -e^{i((m+1)g - (m-1)tau)} cos^{m-1} (m - (m+1) cos^2)
  double diag = 0.0;
  std::uniform_int_distribution<int> photons(0, 8);
  for (int k = 0; k < 10; ++k) {
    const int m = photons(rng);
    const BeamSplitterConfig c{angle(rng), angle(rng), 0.0, angle(rng)};
    const double cs = std::cos(c.theta);
    const Complex zero = std::polar(std::pow(cs, m), m * (c.gamma - c.tau));
    const double mag = m == 0 ? -cs : std::pow(cs, m - 1) * (m - (m + 1) * cs * cs);
    const Complex one = -std::polar(1.0, (m + 1) * c.gamma - (m - 1) * c.tau) * mag;
    diag = std::max(diag, std::abs(loop_amplitude({c, m, 0, 0}) - zero));
    diag = std::max(diag, std::abs(loop_amplitude({c, m, 1, 1}) - one));
  }
  t.below("diagonal formulas", diag, 1e-10);
  return t.done();
}

Outcome interchange_law() {
  Tally t;
  std::mt19937_64 rng(4545);
  std::uniform_int_distribution<int> size(1, 3);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const int m1 = size(rng);
    const int m2 = size(rng);
    const int na = size(rng);
    const int nb = size(rng);
    auto op = [&](int m, int n) { return CircuitOp(random_unitary(m + n, rng), m, n, "q"); };
    const CircuitOp c11 = op(m1, na);
    const CircuitOp c21 = op(m2, na);
    const CircuitOp c12 = op(m1, nb);
    const CircuitOp c22 = op(m2, nb);
    worst = std::max(worst, verify_interchange(c11, c21, c12, c22));
  }
  t.below("generator deviation", worst, 1e-12);
  return t.done();
}

Outcome parity_model() {
  Tally t;
  double series = 0.0;
  double binary = 0.0;
  for (int d = 2; d <= 5; ++d) {
    for (int b = 0; b < d; ++b) {
      for (double r = 0.0; r <= 8.0; r += 0.5) {
        for (int k = 0; k < 8; ++k) {
          const Complex z = std::polar(r, k * std::numbers::pi / 4.0);
          series = std::max(series, std::abs(exph(b, d, z) - exph_series(b, d, z)));
          if (d == 2) {
            const Complex ref = b == 0 ? std::cosh(z) : std::sinh(z);
            binary = std::max(binary, std::abs(exph(b, d, z) - ref) / std::max(1.0, std::abs(ref)));
          }
        }
      }
    }
  }
  t.below("closed form vs series", series, 1e-12);
  t.below("cosh/sinh", binary, 1e-12);
  double mixture = 0.0;
  for (int d = 2; d <= 5; ++d) {
    for (Complex alpha : {Complex(0.25, 0.0), Complex(1.0, 1.0), Complex(-1.2, 0.5), Complex(0.0, 2.0), Complex(2.0, 0.0)}) {
      const ParityQuditEncoding enc = ParityQuditEncoding::coherent(d, alpha);
      const auto w = enc.mixing_weights();
      FockVector mix(1, enc.truncation());
      for (int b = 0; b < d; ++b) mix = mix + enc.represent(b).scaled(w[static_cast<std::size_t>(b)]);
      mixture = std::max(mixture, max_abs_difference(mix, coherent_state(alpha, enc.truncation())));
    }
  }
  t.below("mixture identity", mixture, 1e-8);
  std::mt19937_64 rng(4646);
  bool ordered = true;
  for (int k = 0; k < 50; ++k) {
    const int d = 2 + k % 4;
    const ParityQuditEncoding enc = ParityQuditEncoding::coherent(d, Complex(0.4 + 0.02 * k, -0.3), 30);
    const Eigen::MatrixXcd r = enc.isometry();
    const Eigen::MatrixXcd phys = random_unitary(static_cast<int>(r.cols()), rng).matrix();
    const Eigen::MatrixXcd impl = implemented_operator(r, phys);
    for (int bm = 0; bm < d; ++bm) {
      for (int bp = 0; bp < d; ++bp) {
        const ImplementationBounds bounds = implement_bounds(r, phys, bm, bp);
        ordered = ordered && bounds.epsilon >= 0.0 && bounds.mu - bounds.epsilon <= bounds.mu &&
                  bounds.mu <= bounds.mu + bounds.epsilon &&
                  std::norm(impl(bm, bp)) <= bounds.mu + bounds.epsilon + 1e-12;
      }
    }
  }
  t.require("mu-eps <= mu <= mu+eps on 50 maps", ordered);
  return t.done();
}

Outcome rail_routing() {
  Tally t;
  bool dims = true;
  for (int loops = 1; loops <= 4; ++loops) {
    for (int bins = 1; bins <= 8; ++bins) {
      const CircuitOp c = build_rail(RailLayout(loops, bins, BeamSplitterConfig::hadamard()));
      dims = dims && c.matrix().dim() == 2 * loops - 1 + bins;
    }
  }
  t.require("dimension 2N_L-1+N_H", dims);
  std::mt19937_64 rng(4747);
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<int> photons(0, 2);
  int matched = 0;
  const int trials = 60;
  for (int k = 0; k < trials; ++k) {
    RailLayout layout(1 + k % 3, 1 + k % 5);
    for (int s = 0; s < layout.timebins(); ++s)
      for (int l = 0; l < layout.loops(); ++l)
        layout.set(s, l, coin(rng) ? BeamSplitterConfig::window() : BeamSplitterConfig::mirror());
    SamplingRun run{layout, {}, {}, 0, 0, std::nullopt, -1};
    std::vector<int> internal(static_cast<std::size_t>(layout.internal()));
    for (int& v : internal) v = photons(rng);
    run.internal = OccupationVector(internal);
    std::vector<int> ext;
    for (int s = 0; s < layout.timebins(); ++s) {
      ext.push_back(photons(rng));
      run.preps.push_back({ext.back(), std::nullopt});
    }
    const SamplingResult r = run_sampling(run);
    const OccupationVector want =
        route_occupation(deterministic_trace(layout), concat(run.internal, OccupationVector(ext))).slice(0, layout.timebins());
    if (r.exact.entries.size() == 1 && r.exact.entries.begin()->first == want &&
        r.exact.entries.begin()->second == 1.0) {
      ++matched;
    }
  }
  t.require("routing " + std::to_string(matched) + "/" + std::to_string(trials), matched == trials);
  return t.done();
}

Outcome sampling_fidelity() {
  Tally t;
  const fs::path valid = fs::path(FOCKRAIL_CORPUS_DIR) / "valid";
  const char* circuits[3] = {"03_hom_in_loop.fr", "21_hadamard_pair_two_loops.fr", "22_coherent_two_loops.fr"};
  for (const char* name : circuits) {
    const CircuitProgram p = parse_program(slurp(valid / name));
    const SimulationResult exact = simulate(p);
    const SampleResult s = sample_program(p, 100000, 2026);
    t.below(std::string(name).substr(0, 2) + " TV", total_variation(s.histogram, exact.distribution), 0.01);
  }
  const std::string cmd = std::string(FOCKRAIL_CLI) + " sample " + quoted(valid / circuits[2]) + " --shots 100000 --seed 77";
  const CommandResult a = run(cmd);
  const CommandResult b = run(cmd);
  t.require("byte-identical JSON", a.status == 0 && !a.output.empty() && a.output == b.output);
  return t.done();
}

Outcome dsl_cli() {
  Tally t;
  int fixpoints = 0;
  const auto valid = corpus("valid");
  for (const fs::path& p : valid) {
    try {
      const CircuitProgram prog = parse_program(slurp(p));
      const std::string printed = print_program(prog);
      const CircuitProgram again = parse_program(printed);
      if (again == prog && print_program(again) == printed) ++fixpoints;
    } catch (const std::exception&) {
    }
  }
  t.require("round-trip " + std::to_string(fixpoints) + "/" + std::to_string(valid.size()),
            valid.size() == 30 && fixpoints == 30);
  const auto malformed = corpus("malformed");
  int classified = 0;
  for (const fs::path& p : malformed) {
    std::string expected = p.filename().string();
    const CommandResult r = run(std::string(FOCKRAIL_CLI) + " --error-json simulate " + quoted(p));
    try {
      parse_program(slurp(p));
    } catch (const ParseError& e) {
      std::string cls(error_class_name(e.error_class()));
      std::transform(cls.begin(), cls.end(), cls.begin(), [](unsigned char c) { return std::tolower(c); });
      const bool named = expected.rfind(cls + "_", 0) == 0;
      const bool exit_ok = r.status == 10 + static_cast<int>(e.error_class());
      const bool json_ok = r.output.find("\"class\":\"" + std::string(error_class_name(e.error_class())) + "\"") !=
                           std::string::npos;
      if (named && exit_ok && json_ok) ++classified;
    }
  }
  t.require("malformed " + std::to_string(classified) + "/" + std::to_string(malformed.size()),
            !malformed.empty() && classified == static_cast<int>(malformed.size()));
  const CommandResult v = run(std::string(FOCKRAIL_CLI) + " verify all");
  t.require("verify exit 0", v.status == 0);
  return t.done();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"nonlinear sign gate", nonlinear_sign_gate},
      {"controlled-Z gate", controlled_z_gate},
      {"Hong-Ou-Mandel", hong_ou_mandel},
      {"functor laws", functor_laws},
      {"sector unitarity and photon conservation", sector_unitarity},
      {"single-loop closed form", single_loop_closed_form},
      {"interchange law", interchange_law},
      {"parity model", parity_model},
      {"rail dimension and routing", rail_routing},
      {"sampling fidelity", sampling_fidelity},
      {"DSL and CLI", dsl_cli}};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.passed) ++failures;
    std::printf("%s %2zu %s: %s\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failures), criteria.size());
  return failures == 0 ? 0 : 1;
}
