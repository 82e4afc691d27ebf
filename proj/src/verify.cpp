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

#include "fockrail/verify.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>

#include "fockrail/circuit.hpp"
#include "fockrail/functor.hpp"
#include "fockrail/klm.hpp"
#include "fockrail/qudit.hpp"
#include "fockrail/random_unitary.hpp"
#include "fockrail/single_loop.hpp"

namespace fockrail {

bool SuiteResult::passed() const {
  for (const CheckResult& c : checks) {
    if (!c.passed) return false;
  }
  return !checks.empty();
}

namespace {

// value must not exceed tolerance.
CheckResult below(std::string name, double value, double tolerance) {
  return {std::move(name), value, tolerance, value <= tolerance};
}

// value must match target within tolerance.
CheckResult near(std::string name, double value, double target, double tolerance) {
  return {std::move(name), value, tolerance, std::abs(value - target) <= tolerance};
}

BeamSplitterConfig random_config(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  return {angle(rng), angle(rng), angle(rng), angle(rng)};
}

CircuitOp random_op(int internal, int external, std::mt19937_64& rng) {
  return CircuitOp(random_unitary(internal + external, rng), internal, external, "random");
}

SuiteResult interchange_suite() {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> size(1, 2);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const int m1 = size(rng);
    const int m2 = size(rng);
    const int na = size(rng);
    const int nb = size(rng);
    const CircuitOp c11 = random_op(m1, na, rng);
    const CircuitOp c21 = random_op(m2, na, rng);
    const CircuitOp c12 = random_op(m1, nb, rng);
    const CircuitOp c22 = random_op(m2, nb, rng);
    worst = std::max(worst, verify_interchange(c11, c21, c12, c22));
  }
  return {"interchange", {below("interchange_max_deviation", worst, 1e-12)}};
}

SuiteResult functor_suite() {
  std::mt19937_64 rng(1234567);
  std::uniform_int_distribution<int> dim(1, 4);
  double product = 0.0;
  double sum = 0.0;
  double unitarity = 0.0;
  double leakage = 0.0;
  for (int k = 0; k < 20; ++k) {
    const int d1 = dim(rng);
    const UnitaryMatrix u1 = random_unitary(d1, rng);
    const UnitaryMatrix u2 = random_unitary(d1, rng);
    product = std::max(product, product_check(u1, u2, 3));
    const int da = std::uniform_int_distribution<int>(1, 3)(rng);
    const int db = std::uniform_int_distribution<int>(1, 4 - da)(rng);
    sum = std::max(sum, direct_sum_check(random_unitary(da, rng), random_unitary(db, rng), 3));
    for (int p = 0; p <= 3; ++p) {
      unitarity = std::max(unitarity, unitarity_defect(sector_matrix(u1, p)));
      const FockSector sector(d1, p);
      for (const OccupationVector& n : sector.basis()) {
        const FockVector out = apply(u1, FockVector::basis_state(n, 3));
        for (const auto& [occ, a] : out.amplitudes()) {
          if (occ.total() != p) leakage = std::max(leakage, std::abs(a));
        }
      }
    }
  }
  return {"functor",
          {below("product_law_max_deviation", product, 1e-9), below("direct_sum_law_max_deviation", sum, 1e-9),
           below("sector_unitarity_defect", unitarity, 1e-9), below("cross_sector_max_element", leakage, 1e-12)}};
}

SuiteResult hom_suite() {
  const UnitaryMatrix h = hadamard_bs();
  const double a11 = std::norm(matrix_element(h, {1, 1}, {1, 1}));
  const double a20 = std::norm(matrix_element(h, {1, 1}, {2, 0}));
  return {"hom", {below("amplitude_11_to_11_squared", a11, 1e-24), near("probability_11_to_20", a20, 0.5, 1e-12)}};
}

SuiteResult ns_suite() {
  const NonlinearSign ns = nonlinear_sign();
  const double p = std::sqrt(ns_success_probability());
  const auto& c = ns.report.coefficients;
  const std::array<double, 5> res = ns_condition_residuals(ns.spec.stages[0].config, ns.spec.stages[1].config);
  SuiteResult s{"ns", {near("success_probability", ns.report.success_probability, ns_success_probability(), 1e-12)}};
  const double expected[3] = {p, p, -p};
  for (int m = 0; m < 3; ++m) {
    s.checks.push_back(below("coefficient_" + std::to_string(m) + "_deviation",
                             std::abs(c[static_cast<std::size_t>(m)] - expected[m]), 1e-10));
  }
  const char* names[5] = {"phase_condition_1", "phase_condition_2", "phase_condition_3", "angle_condition_1",
                          "angle_condition_2"};
  for (int k = 0; k < 5; ++k) s.checks.push_back(below(names[k], res[static_cast<std::size_t>(k)], 1e-12));
  return s;
}

SuiteResult cz_suite() {
  const ControlledZ cz = controlled_z();
  const DualRailCzCheck dual = dual_rail_cz_check();
  return {"cz",
          {near("success_probability", cz.report.success_probability, cz_success_probability(), 1e-12),
           below("action_deviation", cz.report.deviations.at("action"), 1e-9),
           below("dual_rail_action_deviation", dual.deviation, 1e-9),
           below("dual_rail_superposition_deviation", dual.superposition_deviation, 1e-9)}};
}

SuiteResult exph_suite() {
  double series = 0.0;
  double binary = 0.0;
  for (int d = 2; d <= 5; ++d) {
    for (int b = 0; b < d; ++b) {
      for (int i = -16; i <= 16; ++i) {
        const double r = 0.5 * i;
        for (Complex z : {Complex(r, 0.0), Complex(0.0, r), Complex(0.6 * r, 0.8 * r)}) {
          series = std::max(series, std::abs(exph(b, d, z) - exph_series(b, d, z)));
          if (d == 2) {
            const Complex ref = b == 0 ? std::cosh(z) : std::sinh(z);
            binary = std::max(binary, std::abs(exph(b, d, z) - ref) / std::max(1.0, std::abs(ref)));
          }
        }
      }
    }
  }
  double mixture = 0.0;
  for (int d = 2; d <= 5; ++d) {
    for (Complex alpha : {Complex(0.3, 0.0), Complex(1.0, 0.0), Complex(1.2, -0.9), Complex(0.0, 2.0)}) {
      const ParityQuditEncoding enc = ParityQuditEncoding::coherent(d, alpha);
      const std::vector<double> w = enc.mixing_weights();
      FockVector mix(1, enc.truncation());
      for (int b = 0; b < d; ++b) mix = mix + enc.represent(b).scaled(w[static_cast<std::size_t>(b)]);
      mixture = std::max(mixture, max_abs_difference(mix, coherent_state(alpha, enc.truncation())));
    }
  }
  std::mt19937_64 rng(99);
  double ordering = 0.0;
  for (int k = 0; k < 50; ++k) {
    const int d = 2 + k % 4;
    const ParityQuditEncoding enc = ParityQuditEncoding::coherent(d, Complex(0.5 + 0.03 * k, 0.2), 40);
    const Eigen::MatrixXcd phys = random_unitary(enc.truncation() + 1, rng).matrix();
    for (int bm = 0; bm < d; ++bm) {
      for (int bp = 0; bp < d; ++bp) {
        const ImplementationBounds bounds = implement_bounds(enc.isometry(), phys, bm, bp);
        ordering = std::max(ordering, -bounds.epsilon);
      }
    }
  }
  return {"exph",
          {below("closed_form_vs_series", series, 1e-12), below("binary_cosh_sinh_relative", binary, 1e-12),
           below("coherent_mixture_identity", mixture, 1e-8), below("negative_epsilon", ordering, 0.0)}};
}

Complex diagonal_zero(int m, const BeamSplitterConfig& c) {
  return std::polar(std::pow(std::cos(c.theta), m), m * (c.gamma - c.tau));
}

Complex diagonal_one(int m, const BeamSplitterConfig& c) {
  const double cs = std::cos(c.theta);
  const double mag = m == 0 ? -cs : std::pow(cs, m - 1) * (m - (1 + m) * cs * cs);
  return -std::polar(mag, (m + 1) * c.gamma - (m - 1) * c.tau);
}

SuiteResult singleloop_suite() {
  std::mt19937_64 rng(777);
  double grid = 0.0;
  for (int k = 0; k < 25; ++k) {
    const BeamSplitterConfig config = random_config(rng);
    const UnitaryMatrix u = beam_splitter(config);
    for (int mm = 0; mm <= 4; ++mm) {
      for (int nm = 0; nm <= 4; ++nm) {
        for (int np = 0; np <= 4; ++np) {
          const LoopAmplitudeQuery q{config, mm, nm, np};
          const int mp = q.m_plus();
          const Complex reference = mp < 0 ? Complex{} : matrix_element(u, {mm, nm}, {np, mp});
          grid = std::max(grid, std::abs(loop_amplitude(q) - reference));
        }
      }
    }
  }
  double diagonal = 0.0;
  std::uniform_int_distribution<int> photons(0, 6);
  for (int k = 0; k < 10; ++k) {
    BeamSplitterConfig config = random_config(rng);
    config.rho = 0.0;
    const int m = photons(rng);
    diagonal = std::max(diagonal, std::abs(loop_amplitude({config, m, 0, 0}) - diagonal_zero(m, config)));
    diagonal = std::max(diagonal, std::abs(loop_amplitude({config, m, 1, 1}) - diagonal_one(m, config)));
  }
  return {"singleloop",
          {below("closed_form_vs_permanent", grid, 1e-10), below("diagonal_formulas", diagonal, 1e-10)}};
}

const std::map<std::string, std::function<SuiteResult()>, std::less<>>& suites() {
  static const std::map<std::string, std::function<SuiteResult()>, std::less<>> kSuites{
      {"interchange", interchange_suite}, {"functor", functor_suite}, {"hom", hom_suite},
      {"ns", ns_suite},                   {"cz", cz_suite},           {"exph", exph_suite},
      {"singleloop", singleloop_suite}};
  return kSuites;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> kNames{"interchange", "functor", "hom", "ns", "cz", "exph", "singleloop"};
  return kNames;
}

SuiteResult run_verify_suite(std::string_view name) {
  auto it = suites().find(name);
  if (it == suites().end()) throw std::invalid_argument("unknown verify suite '" + std::string(name) + "'");
  return it->second();
}

std::string format_suite(const SuiteResult& r) {
  std::string out;
  char buf[256];
  for (const CheckResult& c : r.checks) {
    std::snprintf(buf, sizeof buf, "%s %s %s = %.12g (tol %.1e)\n", c.passed ? "PASS" : "FAIL", r.suite.c_str(),
                  c.name.c_str(), c.value, c.tolerance);
    out += buf;
  }
  std::snprintf(buf, sizeof buf, "%s %s\n", r.passed() ? "PASS" : "FAIL", r.suite.c_str());
  out += buf;
  return out;
}

}  // namespace fockrail
