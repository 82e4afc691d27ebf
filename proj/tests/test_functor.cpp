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

#include <gtest/gtest.h>

#include <random>

#include "fockrail/circuit.hpp"
#include "fockrail/functor.hpp"
#include "fockrail/random_unitary.hpp"
#include "oracles.hpp"

using namespace fockrail;

namespace {

std::vector<OccupationVector> sector_states(int modes, int photons) {
  std::vector<OccupationVector> out;
  for (const auto& c : oracle::compositions(modes, photons)) out.emplace_back(c);
  return out;
}

}  // namespace

TEST(Functor, ElementMatchesBracketExpansion) {
  std::mt19937_64 rng(11);
  for (int dim = 1; dim <= 3; ++dim) {
    const UnitaryMatrix u = random_unitary(dim, rng);
    for (int photons = 0; photons <= 4; ++photons) {
      for (const auto& in : sector_states(dim, photons)) {
        for (const auto& out : sector_states(dim, photons)) {
          const Complex want = oracle::element(u.matrix(), in.counts(), out.counts());
          EXPECT_LT(std::abs(matrix_element(u, in, out) - want), 1e-12) << in.str() << " -> " << out.str();
        }
      }
    }
  }
}

TEST(Functor, DifferentTotalsGiveZero) {
  std::mt19937_64 rng(12);
  const UnitaryMatrix u = random_unitary(2, rng);
  EXPECT_EQ(matrix_element(u, OccupationVector{1, 1}, OccupationVector{1, 0}), Complex{});
}

TEST(Functor, BeamSplitterHongOuMandel) {
  const UnitaryMatrix h = beam_splitter(BeamSplitterConfig::hadamard());
  EXPECT_LT(std::abs(matrix_element(h, OccupationVector{1, 1}, OccupationVector{1, 1})), 1e-15);
  EXPECT_NEAR(std::norm(matrix_element(h, OccupationVector{1, 1}, OccupationVector{2, 0})), 0.5, 1e-15);
}

TEST(Functor, Adjointness) {
  std::mt19937_64 rng(13);
  const UnitaryMatrix u = random_unitary(3, rng);
  for (const auto& in : sector_states(3, 3)) {
    for (const auto& out : sector_states(3, 3)) {
      EXPECT_LT(std::abs(matrix_element(u.adjoint(), in, out) - std::conj(matrix_element(u, out, in))), 1e-12);
    }
  }
}

TEST(Functor, ProductAndDirectSumLaws) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 4; ++trial) {
    const UnitaryMatrix a = random_unitary(3, rng);
    const UnitaryMatrix b = random_unitary(3, rng);
    EXPECT_LT(product_check(a, b, 4), 1e-12);
    const UnitaryMatrix c = random_unitary(2, rng);
    EXPECT_LT(direct_sum_check(a, c, 3), 1e-12);
  }
}

TEST(Functor, SectorMatrixIsUnitaryAndMatchesSerial) {
  std::mt19937_64 rng(15);
  const UnitaryMatrix u = random_unitary(4, rng);
  for (int photons = 0; photons <= 4; ++photons) {
    const Eigen::MatrixXcd s = sector_matrix(u, photons);
    EXPECT_LT(unitarity_defect(s), 1e-12);
    EXPECT_LT((s - sector_matrix_serial(u, photons)).cwiseAbs().maxCoeff(), 1e-15);
  }
}

TEST(Functor, ApplyMatchesOracleSum) {
  std::mt19937_64 rng(16);
  const UnitaryMatrix u = random_unitary(3, rng);
  FockVector state(3, 4);
  state.add(OccupationVector{1, 0, 1}, Complex(0.6, 0.0));
  state.add(OccupationVector{0, 2, 1}, Complex(0.0, 0.48));
  state.add(OccupationVector{0, 0, 0}, Complex(0.48, 0.0));
  state.add(OccupationVector{2, 1, 1}, Complex(-0.2, 0.2 * std::sqrt(3.0)));
  const FockVector out = apply(u, state);
  for (int photons = 0; photons <= 4; ++photons) {
    for (const auto& o : sector_states(3, photons)) {
      Complex want = 0.0;
      for (const auto& [in, a] : state.amplitudes()) want += a * oracle::element(u.matrix(), in.counts(), o.counts());
      EXPECT_LT(std::abs(out.amplitude(o) - want), 1e-12);
    }
  }
  EXPECT_LT(max_abs_difference(out, apply_serial(u, state)), 1e-15);
  EXPECT_NEAR(out.norm2(), state.norm2(), 1e-12);
}

TEST(Functor, ExpansionPathAgreesWithSectorMatrix) {
  std::mt19937_64 rng(17);
  const UnitaryMatrix u = random_unitary(2, rng);
  const int photons = 14;
  const FockSector sector(2, photons);
  FockVector state(2, photons);
  state.add(OccupationVector{9, 5}, Complex(0.8, 0.0));
  state.add(OccupationVector{2, 12}, Complex(0.0, 0.6));
  const FockVector out = apply(u, state);
  const Eigen::MatrixXcd s = sector_matrix(u, photons);
  for (std::size_t j = 0; j < sector.size(); ++j) {
    Complex want = 0.8 * s(static_cast<Eigen::Index>(sector.index_of(OccupationVector{9, 5})), static_cast<Eigen::Index>(j)) +
                   Complex(0.0, 0.6) * s(static_cast<Eigen::Index>(sector.index_of(OccupationVector{2, 12})), static_cast<Eigen::Index>(j));
    // Ryser sums 2^14 large terms here, so the permanent side carries most of the rounding.
    EXPECT_LT(std::abs(out.amplitude(sector[j]) - want), 1e-9);
  }
  EXPECT_NEAR(out.norm2(), 1.0, 1e-12);
  EXPECT_LT(max_abs_difference(out, apply_serial(u, state)), 1e-12);
}

TEST(Functor, RejectsNonUnitaryAndMismatchedState) {
  Eigen::MatrixXcd m(2, 2);
  m << 1.0, 1.0, 0.0, 1.0;
  EXPECT_THROW(UnitaryMatrix{m}, NotUnitaryError);
  const UnitaryMatrix id = UnitaryMatrix::identity(2);
  EXPECT_THROW(apply(id, FockVector::vacuum(3)), DimensionError);
}
