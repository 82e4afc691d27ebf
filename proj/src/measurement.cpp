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

#include "fockrail/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "fockrail/rng.hpp"

namespace fockrail {

ProjectedBlock::ProjectedBlock(CircuitOp op, OccupationVector prep, OccupationVector meas)
    : op_(std::move(op)), prep_(std::move(prep)), meas_(std::move(meas)) {
  if (prep_.modes() != op_.external() || meas_.modes() != op_.external()) {
    throw DimensionError("preparation and measurement must cover the " + std::to_string(op_.external()) +
                         " external modes");
  }
  if (op_.internal() < 1) throw DimensionError("projected blocks need an internal system");
}

FockVector ProjectedBlock::apply(const FockVector& internal) const {
  if (internal.modes() != op_.internal()) throw DimensionError("internal state has the wrong mode count");
  const int shift = prep_.total() - meas_.total();
  FockVector out(op_.internal(), std::max(0, internal.truncation() + std::max(0, shift)));
  out.record_loss(internal.truncation_loss());
  for (const auto& [m, a] : internal.amplitudes()) {
    const int p_out = m.total() + shift;
    if (p_out < 0) continue;
    const OccupationVector in = concat(m, prep_);
    const FockSector sector(op_.internal(), p_out);
    for (const auto& m_out : sector.basis()) {
      out.add(m_out, a * matrix_element(op_.matrix(), in, concat(meas_, m_out)));
    }
  }
  return out;
}

Eigen::MatrixXcd ProjectedBlock::sector_matrix(int internal_photons) const {
  const FockSector rows(op_.internal(), internal_photons);
  const int p_out = output_photons(internal_photons);
  if (p_out < 0) return Eigen::MatrixXcd(static_cast<Eigen::Index>(rows.size()), 0);
  const FockSector cols(op_.internal(), p_out);
  Eigen::MatrixXcd s(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const OccupationVector in = concat(rows[i], prep_);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      s(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          matrix_element(op_.matrix(), in, concat(meas_, cols[j]));
    }
  }
  return s;
}

double ProjectedBlock::operator_norm(int max_photons) const {
  double worst = 0.0;
  for (int p = 0; p <= max_photons; ++p) {
    const Eigen::MatrixXcd s = sector_matrix(p);
    if (s.size() == 0) continue;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(s);
    worst = std::max(worst, svd.singularValues().maxCoeff());
  }
  return worst;
}

ProjectedBlock project_block(const CircuitOp& c, const OccupationVector& prep, const OccupationVector& meas) {
  return ProjectedBlock(c, prep, meas);
}

double OutcomeDistribution::total() const {
  double s = 0.0;
  for (const auto& [o, p] : entries) s += p;
  return s;
}

double OutcomeDistribution::probability(const OccupationVector& outcome) const {
  auto it = entries.find(outcome);
  return it == entries.end() ? 0.0 : it->second;
}

BranchSet branch_states(const CircuitOp& c, const FockVector& internal, const FockVector& prep, int truncation) {
  const int m = c.internal();
  const int n = c.external();
  if (internal.modes() != m) throw DimensionError("internal state has the wrong mode count");
  if (prep.modes() != n) throw DimensionError("preparation has the wrong mode count");
  const FockVector joint = tensor(internal, prep, truncation);
  const FockVector out = apply(c.matrix(), joint);

  BranchSet result;
  double kept = 0.0;
  for (const auto& [occ, a] : out.amplitudes()) {
    const OccupationVector meas = occ.slice(0, n);
    auto it = result.branches.find(meas);
    if (it == result.branches.end()) it = result.branches.emplace(meas, FockVector(m, out.truncation())).first;
    it->second.add(occ.slice(n, m), a);
    kept += std::norm(a);
  }
  const double before = joint.norm2() + joint.truncation_loss();
  result.residual = std::max(0.0, before - kept);
  return result;
}

OutcomeDistribution outcome_distribution(const CircuitOp& c, const FockVector& internal_in,
                                         const OccupationVector& prep) {
  return outcome_distribution(c, internal_in, FockVector::basis_state(prep));
}

OutcomeDistribution outcome_distribution(const CircuitOp& c, const FockVector& internal_in,
                                         const FockVector& prep) {
  if (!internal_in.is_normalized()) throw std::invalid_argument("internal input state is not normalized");
  if (!prep.is_normalized()) throw std::invalid_argument("preparation state is not normalized");
  const BranchSet bs = branch_states(c, internal_in, prep);
  OutcomeDistribution dist;
  for (const auto& [meas, state] : bs.branches) {
    const double p = state.norm2();
    if (p > kNegligibleProbability) dist.entries.emplace(meas, p);
  }
  dist.residual = std::max(0.0, 1.0 - dist.total());
  if (dist.residual < 1e-15) dist.residual = 0.0;
  return dist;
}

std::uint64_t Histogram::count(const OccupationVector& outcome) const {
  auto it = counts.find(outcome);
  return it == counts.end() ? 0 : it->second;
}

double total_variation(const Histogram& h, const OutcomeDistribution& dist) {
  if (h.shots == 0) return 0.0;
  const double shots = static_cast<double>(h.shots);
  double tv = 0.0;
  for (const auto& [o, p] : dist.entries) tv += std::abs(static_cast<double>(h.count(o)) / shots - p);
  for (const auto& [o, c] : h.counts) {
    if (!dist.entries.contains(o)) tv += static_cast<double>(c) / shots;
  }
  tv += std::abs(static_cast<double>(h.overflow) / shots - dist.residual);
  return 0.5 * tv;
}

namespace {

// Inverse-CDF table over a distribution's entries in key order.
struct Sampler {
  std::vector<OccupationVector> outcomes;
  std::vector<double> cumulative;
  double mass = 0.0;
  bool has_residual = false;

  explicit Sampler(const OutcomeDistribution& dist) {
    outcomes.reserve(dist.entries.size());
    cumulative.reserve(dist.entries.size());
    for (const auto& [o, p] : dist.entries) {
      mass += p;
      outcomes.push_back(o);
      cumulative.push_back(mass);
    }
    has_residual = dist.residual > 0.0;
    mass += dist.residual;
    if (!(mass > 0.0)) throw std::invalid_argument("cannot sample from an empty distribution");
  }

  // Index into outcomes, or outcomes.size() for the overflow bucket.
  std::size_t draw(CounterRng& rng) const {
    const double u = rng.uniform() * mass;
    const auto idx = static_cast<std::size_t>(std::upper_bound(cumulative.begin(), cumulative.end(), u) -
                                              cumulative.begin());
    if (idx < outcomes.size()) return idx;
    if (has_residual || outcomes.empty()) return outcomes.size();
    return outcomes.size() - 1;
  }
};

Histogram tally_to_histogram(const Sampler& s, const std::vector<std::uint64_t>& tally, std::uint64_t shots,
                             std::uint64_t seed) {
  Histogram h;
  h.shots = shots;
  h.seed = seed;
  for (std::size_t i = 0; i < s.outcomes.size(); ++i) {
    if (tally[i]) h.counts.emplace(s.outcomes[i], tally[i]);
  }
  h.overflow = tally[s.outcomes.size()];
  return h;
}

}  // namespace

Histogram sample_distribution(const OutcomeDistribution& dist, std::uint64_t shots, std::uint64_t seed) {
  const Sampler sampler(dist);
  const std::size_t buckets = sampler.outcomes.size() + 1;
  std::vector<std::uint64_t> tally(buckets, 0);
  const auto n = static_cast<std::int64_t>(shots);
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(buckets, 0);
#pragma omp for schedule(static)
    for (std::int64_t k = 0; k < n; ++k) {
      CounterRng rng(seed, static_cast<std::uint64_t>(k));
      ++local[sampler.draw(rng)];
    }
#pragma omp critical
    for (std::size_t i = 0; i < buckets; ++i) tally[i] += local[i];
  }
  return tally_to_histogram(sampler, tally, shots, seed);
}

Histogram sample_distribution_serial(const OutcomeDistribution& dist, std::uint64_t shots, std::uint64_t seed) {
  const Sampler sampler(dist);
  std::vector<std::uint64_t> tally(sampler.outcomes.size() + 1, 0);
  for (std::uint64_t k = 0; k < shots; ++k) {
    CounterRng rng(seed, k);
    ++tally[sampler.draw(rng)];
  }
  return tally_to_histogram(sampler, tally, shots, seed);
}

Histogram sample(const CircuitOp& c, const FockVector& internal_in, const OccupationVector& prep,
                 std::uint64_t shots, std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("shots must be at least 1");
  return sample_distribution(outcome_distribution(c, internal_in, prep), shots, seed);
}

namespace {

void enumerate_outcomes(int modes, int max_photons, std::vector<OccupationVector>& out) {
  for (int p = 0; p <= max_photons; ++p) {
    const FockSector s(modes, p);
    out.insert(out.end(), s.basis().begin(), s.basis().end());
  }
}

}  // namespace

FeedForward::FeedForward(CircuitOp first, const Chooser& chooser, int max_photons)
    : first_(std::move(first)), max_photons_(max_photons) {
  if (first_.external() < 1) throw CompositionError("feed-forward needs a measured external system");
  std::vector<OccupationVector> outcomes;
  enumerate_outcomes(first_.external(), max_photons, outcomes);
  for (const auto& o : outcomes) {
    CircuitOp next = chooser(o);
    if (next.internal() != first_.internal()) {
      throw CompositionError("chooser output for outcome " + o.str() + " is not temporally compatible");
    }
    choices_.emplace(o, std::move(next));
  }
}

const CircuitOp& FeedForward::second(const OccupationVector& meas1) const {
  auto it = choices_.find(meas1);
  if (it == choices_.end()) {
    throw std::out_of_range("outcome " + meas1.str() + " exceeds the validated photon bound " +
                            std::to_string(max_photons_));
  }
  return it->second;
}

FockVector FeedForward::branch(const FockVector& internal, const OccupationVector& prep1,
                               const OccupationVector& meas1, const OccupationVector& prep2,
                               const OccupationVector& meas2) const {
  const FockVector mid = ProjectedBlock(first_, prep1, meas1).apply(internal);
  return ProjectedBlock(second(meas1), prep2, meas2).apply(mid);
}

OutcomeDistribution FeedForward::first_stage(const FockVector& internal, const OccupationVector& prep1) const {
  return outcome_distribution(first_, internal, prep1);
}

OutcomeDistribution FeedForward::distribution(const FockVector& internal, const OccupationVector& prep1,
                                              const OccupationVector& prep2) const {
  if (!internal.is_normalized()) throw std::invalid_argument("internal input state is not normalized");
  const BranchSet stage1 = branch_states(first_, internal, FockVector::basis_state(prep1));
  OutcomeDistribution dist;
  for (const auto& [meas1, state1] : stage1.branches) {
    if (state1.norm2() == 0.0) continue;
    const BranchSet stage2 = branch_states(second(meas1), state1, FockVector::basis_state(prep2));
    for (const auto& [meas2, state2] : stage2.branches) {
      const double p = state2.norm2();
      if (p > kNegligibleProbability) dist.entries.emplace(concat(meas1, meas2), p);
    }
  }
  dist.residual = std::max(0.0, 1.0 - dist.total());
  if (dist.residual < 1e-15) dist.residual = 0.0;
  return dist;
}

Histogram FeedForward::sample(const FockVector& internal, const OccupationVector& prep1,
                              const OccupationVector& prep2, std::uint64_t shots, std::uint64_t seed) const {
  if (shots < 1) throw std::invalid_argument("shots must be at least 1");
  const BranchSet stage1 = branch_states(first_, internal, FockVector::basis_state(prep1));
  OutcomeDistribution first_dist;
  std::map<OccupationVector, FockVector> collapsed;
  for (const auto& [meas1, state1] : stage1.branches) {
    const double p = state1.norm2();
    if (p <= 0.0) continue;
    first_dist.entries.emplace(meas1, p);
    collapsed.emplace(meas1, state1.normalized());
  }
  first_dist.residual = std::max(0.0, 1.0 - first_dist.total());
  if (first_dist.residual < 1e-15) first_dist.residual = 0.0;
  const Sampler s1(first_dist);

  std::vector<Sampler> s2;
  s2.reserve(s1.outcomes.size());
  for (const auto& meas1 : s1.outcomes) {
    s2.emplace_back(outcome_distribution(second(meas1), collapsed.at(meas1), prep2));
  }

  Histogram h;
  h.shots = shots;
  h.seed = seed;
  for (std::uint64_t k = 0; k < shots; ++k) {
    CounterRng rng(seed, k);
    const std::size_t i = s1.draw(rng);
    if (i == s1.outcomes.size()) {
      ++h.overflow;
      continue;
    }
    const std::size_t j = s2[i].draw(rng);
    if (j == s2[i].outcomes.size()) {
      ++h.overflow;
      continue;
    }
    ++h.counts[concat(s1.outcomes[i], s2[i].outcomes[j])];
  }
  return h;
}

}  // namespace fockrail
