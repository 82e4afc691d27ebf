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

#include "fockrail/rail.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fockrail/qudit.hpp"

namespace fockrail {

RailLayout::RailLayout(int loops, int timebins, BeamSplitterConfig fill)
    : loops_(loops), timebins_(timebins) {
  if (loops < 1) throw std::invalid_argument("a rail needs at least one loop");
  if (timebins < 1) throw std::invalid_argument("a rail needs at least one time-bin");
  configs_.assign(static_cast<std::size_t>(loops) * static_cast<std::size_t>(timebins), fill);
}

std::size_t RailLayout::slot(int timebin, int loop) const {
  if (timebin < 0 || timebin >= timebins_) throw std::out_of_range("time-bin " + std::to_string(timebin) + " out of range");
  if (loop < 0 || loop >= loops_) throw std::out_of_range("loop " + std::to_string(loop) + " out of range");
  return static_cast<std::size_t>(timebin) * static_cast<std::size_t>(loops_) + static_cast<std::size_t>(loop);
}

const BeamSplitterConfig& RailLayout::config(int timebin, int loop) const { return configs_[slot(timebin, loop)]; }

void RailLayout::set(int timebin, int loop, const BeamSplitterConfig& config) { configs_[slot(timebin, loop)] = config; }

namespace {

// Generator rows and columns touched by beam splitter k within a time-bin.
struct Ports {
  int loop_in;
  int rail_in;
  int rail_out;
  int loop_out;
};

Ports ports(int loops, int k) {
  const int m = 2 * loops - 1;
  return {k, k == 0 ? m : loops + k - 1, k == loops - 1 ? 0 : 1 + loops + k, 1 + k};
}

}  // namespace

UnitaryMatrix rail_timebin(const RailLayout& layout, int timebin) {
  const int size = layout.internal() + 1;
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(size, size);
  for (int k = 0; k < layout.loops(); ++k) {
    const UnitaryMatrix bs = beam_splitter(layout.config(timebin, k));
    const Ports p = ports(layout.loops(), k);
    g(p.loop_in, p.rail_out) = bs(0, 0);
    g(p.loop_in, p.loop_out) = bs(0, 1);
    g(p.rail_in, p.rail_out) = bs(1, 0);
    g(p.rail_in, p.loop_out) = bs(1, 1);
  }
  return UnitaryMatrix(std::move(g), UnitaryMatrix::Check::kSkip);
}

CircuitOp build_rail(const RailLayout& layout) {
  const int m = layout.internal();
  const int h = layout.timebins();
  Eigen::MatrixXcd total = Eigen::MatrixXcd::Identity(m + h, m + h);
  for (int t = 0; t < h; ++t) {
    Eigen::MatrixXcd padded = Eigen::MatrixXcd::Identity(m + h, m + h);
    padded.block(t, t, m + 1, m + 1) = rail_timebin(layout, t).matrix();
    total = total * padded;
  }
  return CircuitOp(UnitaryMatrix(std::move(total), UnitaryMatrix::Check::kSkip), m, h,
                   "rail " + std::to_string(layout.loops()) + "x" + std::to_string(h));
}

CircuitOp build_rail_composed(const RailLayout& layout) {
  const int m = layout.internal();
  CircuitOp c(rail_timebin(layout, 0), m, 1, "t0");
  for (int t = 1; t < layout.timebins(); ++t) {
    c = temporal_compose(c, CircuitOp(rail_timebin(layout, t), m, 1, "t" + std::to_string(t)));
  }
  return c;
}

std::vector<int> deterministic_trace(const RailLayout& layout) {
  const int loops = layout.loops();
  const int m = layout.internal();
  const int h = layout.timebins();
  constexpr double kExact = 1e-12;

  // holder[i]: which input mode currently occupies internal mode i.
  std::vector<int> holder(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) holder[static_cast<std::size_t>(i)] = i;
  std::vector<int> trace(static_cast<std::size_t>(m + h), -1);

  for (int t = 0; t < h; ++t) {
    std::vector<int> next = holder;
    const int entering = m + t;
    for (int k = 0; k < loops; ++k) {
      const UnitaryMatrix bs = beam_splitter(layout.config(t, k));
      bool mirror = std::abs(std::abs(bs(0, 0)) - 1.0) < kExact;
      bool window = std::abs(std::abs(bs(0, 1)) - 1.0) < kExact;
      if (mirror == window) {
        throw TraceError("config at t=" + std::to_string(t) + " loop=" + std::to_string(k) +
                         " is neither a mirror nor a window");
      }
      const int loop_photon = holder[static_cast<std::size_t>(k)];
      const int rail_photon = k == 0 ? entering : holder[static_cast<std::size_t>(loops + k - 1)];
      const int out = mirror ? loop_photon : rail_photon;
      next[static_cast<std::size_t>(k)] = mirror ? rail_photon : loop_photon;
      if (k == loops - 1) {
        trace[static_cast<std::size_t>(out)] = t;
      } else {
        next[static_cast<std::size_t>(loops + k)] = out;
      }
    }
    holder = std::move(next);
  }
  for (int i = 0; i < m; ++i) trace[static_cast<std::size_t>(holder[static_cast<std::size_t>(i)])] = h + i;
  return trace;
}

OccupationVector route_occupation(const std::vector<int>& trace, const OccupationVector& input) {
  if (static_cast<std::size_t>(input.modes()) != trace.size()) throw DimensionError("occupation does not match trace");
  std::vector<int> out(trace.size(), 0);
  for (std::size_t i = 0; i < trace.size(); ++i) out[static_cast<std::size_t>(trace[i])] += input[static_cast<int>(i)];
  return OccupationVector(out);
}

int default_truncation(const std::vector<TimebinPrep>& preps, const OccupationVector& internal) {
  int total = internal.total() + 4;
  for (const TimebinPrep& p : preps) total += p.coherent ? coherent_truncation(*p.coherent) : p.photons;
  return total;
}

FockVector prepare_inputs(const std::vector<TimebinPrep>& preps, int truncation) {
  if (preps.empty()) throw std::invalid_argument("no time-bins to prepare");
  auto bin = [truncation](const TimebinPrep& p) {
    return p.coherent ? coherent_state(*p.coherent, std::min(truncation, coherent_truncation(*p.coherent)))
                      : FockVector::basis_state(OccupationVector{p.photons});
  };
  FockVector joint = bin(preps.front());
  for (std::size_t t = 1; t < preps.size(); ++t) joint = tensor(joint, bin(preps[t]), truncation);
  return joint;
}

std::map<std::vector<int>, std::uint64_t> ditstream(const Histogram& h, int arity) {
  if (arity < 2) throw std::invalid_argument("arity must be at least 2");
  std::map<std::vector<int>, std::uint64_t> dits;
  for (const auto& [o, c] : h.counts) {
    std::vector<int> d = o.counts();
    for (int& v : d) v %= arity;
    dits[d] += c;
  }
  return dits;
}

SamplingResult run_sampling(const SamplingRun& run) {
  const RailLayout& layout = run.layout;
  if (static_cast<int>(run.preps.size()) != layout.timebins()) {
    throw std::invalid_argument("need one preparation per time-bin");
  }
  const OccupationVector internal =
      run.internal.modes() == 0 ? OccupationVector::vacuum(layout.internal()) : run.internal;
  if (internal.modes() != layout.internal()) throw DimensionError("internal preparation has the wrong mode count");

  SamplingResult r;
  r.truncation = run.truncation >= 0 ? run.truncation : default_truncation(run.preps, internal);
  const CircuitOp c = build_rail(layout);
  const FockVector prep = prepare_inputs(run.preps, r.truncation);
  r.exact = outcome_distribution(c, FockVector::basis_state(internal), prep);
  if (run.shots > 0) r.histogram = sample_distribution(r.exact, run.shots, run.seed);
  if (run.arity) r.ditstream = ditstream(r.histogram, *run.arity);
  return r;
}

}  // namespace fockrail
