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

#include "fockrail/fock.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace fockrail {

OccupationVector::OccupationVector(std::vector<int> counts) : counts_(std::move(counts)) {
  for (int c : counts_) {
    if (c < 0) throw std::invalid_argument("occupation counts must be nonnegative");
  }
}

OccupationVector::OccupationVector(std::initializer_list<int> counts)
    : OccupationVector(std::vector<int>(counts)) {}

OccupationVector OccupationVector::vacuum(int modes) {
  if (modes < 0) throw std::invalid_argument("negative mode count");
  return OccupationVector(std::vector<int>(static_cast<std::size_t>(modes), 0));
}

int OccupationVector::total() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

OccupationVector OccupationVector::raised(int mode) const {
  OccupationVector out = *this;
  ++out.counts_.at(static_cast<std::size_t>(mode));
  return out;
}

OccupationVector OccupationVector::lowered(int mode) const {
  OccupationVector out = *this;
  int& c = out.counts_.at(static_cast<std::size_t>(mode));
  if (c == 0) throw std::invalid_argument("cannot lower an empty mode");
  --c;
  return out;
}

OccupationVector OccupationVector::slice(int first, int count) const {
  if (first < 0 || count < 0 || first + count > modes()) {
    throw std::out_of_range("occupation slice out of range");
  }
  return OccupationVector(std::vector<int>(counts_.begin() + first, counts_.begin() + first + count));
}

std::string OccupationVector::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i) os << ',';
    os << counts_[i];
  }
  os << ')';
  return os.str();
}

OccupationVector concat(const OccupationVector& a, const OccupationVector& b) {
  std::vector<int> c = a.counts();
  c.insert(c.end(), b.counts().begin(), b.counts().end());
  return OccupationVector(std::move(c));
}

namespace {

void fill_sector(int mode, int remaining, std::vector<int>& scratch,
                 std::vector<OccupationVector>& out) {
  const int last = static_cast<int>(scratch.size()) - 1;
  if (mode == last) {
    scratch[static_cast<std::size_t>(mode)] = remaining;
    out.emplace_back(scratch);
    return;
  }
  for (int n = remaining; n >= 0; --n) {
    scratch[static_cast<std::size_t>(mode)] = n;
    fill_sector(mode + 1, remaining - n, scratch, out);
  }
}

}  // namespace

FockSector::FockSector(int modes, int photons) : modes_(modes), photons_(photons) {
  if (modes < 1) throw std::invalid_argument("a sector needs at least one mode");
  if (photons < 0) throw std::invalid_argument("negative photon number");
  basis_.reserve(sector_size(modes, photons));
  std::vector<int> scratch(static_cast<std::size_t>(modes), 0);
  fill_sector(0, photons, scratch, basis_);
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
}

std::size_t FockSector::index_of(const OccupationVector& n) const {
  auto it = index_.find(n);
  if (it == index_.end()) throw std::out_of_range("occupation " + n.str() + " not in sector");
  return it->second;
}

FockSector enumerate_sector(int modes, int photons) { return FockSector(modes, photons); }

std::size_t sector_size(int modes, int photons) {
  // C(photons + modes - 1, photons), built incrementally to stay exact.
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  std::size_t result = 1;
  for (int k = 1; k <= photons; ++k) {
    const std::size_t num = static_cast<std::size_t>(modes - 1 + k);
    if (result > kMax / num) return kMax;
    result = result * num / static_cast<std::size_t>(k);
  }
  return result;
}

FockVector::FockVector(int modes, int truncation) : modes_(modes), truncation_(truncation) {
  if (modes < 1) throw std::invalid_argument("a Fock vector needs at least one mode");
  if (truncation < 0) throw std::invalid_argument("negative truncation");
}

FockVector FockVector::basis_state(const OccupationVector& n, int truncation) {
  FockVector v(n.modes(), truncation < 0 ? n.total() : truncation);
  if (n.total() > v.truncation()) throw std::invalid_argument("basis state exceeds truncation");
  v.add(n, 1.0);
  return v;
}

FockVector FockVector::vacuum(int modes, int truncation) {
  return basis_state(OccupationVector::vacuum(modes), truncation);
}

Complex FockVector::amplitude(const OccupationVector& n) const {
  auto it = amplitudes_.find(n);
  return it == amplitudes_.end() ? Complex{} : it->second;
}

void FockVector::add(const OccupationVector& n, Complex amplitude) {
  if (n.modes() != modes_) throw std::invalid_argument("occupation mode count mismatch");
  if (n.total() > truncation_) {
    truncation_loss_ += std::norm(amplitude);
    return;
  }
  if (amplitude == Complex{}) return;
  amplitudes_[n] += amplitude;
}

double FockVector::norm2() const {
  double s = 0.0;
  for (const auto& [n, a] : amplitudes_) s += std::norm(a);
  return s;
}

bool FockVector::is_normalized(double tol) const {
  const double n2 = norm2();
  return std::abs(n2 - 1.0) <= tol || std::abs(n2 + truncation_loss_ - 1.0) <= tol;
}

FockVector FockVector::scaled(Complex factor) const {
  FockVector out(modes_, truncation_);
  out.truncation_loss_ = truncation_loss_ * std::norm(factor);
  for (const auto& [n, a] : amplitudes_) out.add(n, a * factor);
  return out;
}

FockVector FockVector::normalized() const {
  const double n2 = norm2();
  if (n2 <= 0.0) throw std::invalid_argument("cannot normalize the zero vector");
  FockVector out = scaled(1.0 / std::sqrt(n2));
  out.truncation_loss_ = 0.0;
  return out;
}

std::map<int, double> FockVector::sector_weights() const {
  std::map<int, double> w;
  for (const auto& [n, a] : amplitudes_) w[n.total()] += std::norm(a);
  return w;
}

std::vector<Complex> FockVector::sector_view(const FockSector& sector) const {
  if (sector.modes() != modes_) throw std::invalid_argument("sector mode count mismatch");
  std::vector<Complex> dense(sector.size());
  for (const auto& [n, a] : amplitudes_) {
    if (n.total() == sector.photons()) dense[sector.index_of(n)] = a;
  }
  return dense;
}

Complex inner(const FockVector& u, const FockVector& v) {
  if (u.modes() != v.modes()) throw std::invalid_argument("inner product mode mismatch");
  Complex s{};
  for (const auto& [n, a] : u.amplitudes()) s += std::conj(a) * v.amplitude(n);
  return s;
}

FockVector operator+(const FockVector& u, const FockVector& v) {
  if (u.modes() != v.modes()) throw std::invalid_argument("sum mode mismatch");
  FockVector out(u.modes(), std::max(u.truncation(), v.truncation()));
  for (const auto& [n, a] : u.amplitudes()) out.add(n, a);
  for (const auto& [n, a] : v.amplitudes()) out.add(n, a);
  out.record_loss(u.truncation_loss() + v.truncation_loss());
  return out;
}

FockVector tensor(const FockVector& a, const FockVector& b, int truncation) {
  FockVector out(a.modes() + b.modes(), truncation < 0 ? a.truncation() + b.truncation() : truncation);
  for (const auto& [na, xa] : a.amplitudes()) {
    for (const auto& [nb, xb] : b.amplitudes()) out.add(concat(na, nb), xa * xb);
  }
  // Loss of either factor propagates: 1 - (1 - la)(1 - lb) of the product
  // weight, expressed against the retained norms.
  const double la = a.truncation_loss();
  const double lb = b.truncation_loss();
  out.record_loss(la * b.norm2() + lb * a.norm2() + la * lb);
  return out;
}

double max_abs_difference(const FockVector& u, const FockVector& v) {
  double m = 0.0;
  for (const auto& [n, a] : u.amplitudes()) m = std::max(m, std::abs(a - v.amplitude(n)));
  for (const auto& [n, b] : v.amplitudes()) m = std::max(m, std::abs(u.amplitude(n) - b));
  return m;
}

FockVector create(const FockVector& state, int mode) {
  if (mode < 0 || mode >= state.modes()) throw std::out_of_range("mode out of range");
  FockVector out(state.modes(), state.truncation());
  out.record_loss(state.truncation_loss());
  for (const auto& [n, a] : state.amplitudes()) {
    out.add(n.raised(mode), a * std::sqrt(static_cast<double>(n[mode] + 1)));
  }
  return out;
}

FockVector annihilate(const FockVector& state, int mode) {
  if (mode < 0 || mode >= state.modes()) throw std::out_of_range("mode out of range");
  FockVector out(state.modes(), state.truncation());
  out.record_loss(state.truncation_loss());
  for (const auto& [n, a] : state.amplitudes()) {
    if (n[mode] == 0) continue;
    out.add(n.lowered(mode), a * std::sqrt(static_cast<double>(n[mode])));
  }
  return out;
}

double number_expectation(const FockVector& state, int mode) {
  if (mode < 0 || mode >= state.modes()) throw std::out_of_range("mode out of range");
  if (!state.is_normalized()) throw std::invalid_argument("number_expectation needs a normalized state");
  double s = 0.0;
  for (const auto& [n, a] : state.amplitudes()) s += n[mode] * std::norm(a);
  return s;
}

}  // namespace fockrail
