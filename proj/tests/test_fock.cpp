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

#include <cmath>

#include "fockrail/fock.hpp"

using namespace fockrail;

TEST(OccupationVector, BasicAccessors) {
  const OccupationVector n{2, 0, 1};
  EXPECT_EQ(n.modes(), 3);
  EXPECT_EQ(n.total(), 3);
  EXPECT_EQ(n[0], 2);
  EXPECT_EQ(n.str(), "(2,0,1)");
  EXPECT_EQ(n.raised(1), (OccupationVector{2, 1, 1}));
  EXPECT_EQ(n.lowered(0), (OccupationVector{1, 0, 1}));
  EXPECT_EQ(n.slice(1, 2), (OccupationVector{0, 1}));
  EXPECT_EQ(concat(n, OccupationVector{4}), (OccupationVector{2, 0, 1, 4}));
  EXPECT_THROW(OccupationVector({1, -1}), std::invalid_argument);
}

TEST(FockSector, LexicographicallyDecreasing) {
  const FockSector s(2, 2);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0], (OccupationVector{2, 0}));
  EXPECT_EQ(s[1], (OccupationVector{1, 1}));
  EXPECT_EQ(s[2], (OccupationVector{0, 2}));
  EXPECT_EQ(s.index_of(OccupationVector{1, 1}), 1u);
  EXPECT_THROW(s.index_of(OccupationVector{3, 0}), std::out_of_range);
}

TEST(FockSector, SizeIsStarsAndBars) {
  for (int modes = 1; modes <= 5; ++modes) {
    for (int photons = 0; photons <= 5; ++photons) {
      // C(photons + modes - 1, modes - 1) by brute-force counting.
      std::size_t count = 0;
      std::vector<int> cur(static_cast<std::size_t>(modes), 0);
      std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == modes - 1) {
          ++count;
          return;
        }
        for (int v = 0; v <= left; ++v) rec(i + 1, left - v);
      };
      rec(0, photons);
      EXPECT_EQ(sector_size(modes, photons), count);
      EXPECT_EQ(FockSector(modes, photons).size(), count);
    }
  }
}

TEST(FockVector, TruncationDropsIntoLoss) {
  FockVector v(1, 2);
  v.add(OccupationVector{1}, 0.6);
  v.add(OccupationVector{3}, 0.8);
  EXPECT_NEAR(v.norm2(), 0.36, 1e-15);
  EXPECT_NEAR(v.truncation_loss(), 0.64, 1e-15);
  EXPECT_TRUE(v.is_normalized());
  EXPECT_TRUE(v.overflowed());
}

TEST(FockVector, LadderAmplitudes) {
  const FockVector s = FockVector::basis_state(OccupationVector{2, 1}, 6);
  const FockVector up = create(s, 0);
  EXPECT_NEAR(std::abs(up.amplitude(OccupationVector{3, 1})), std::sqrt(3.0), 1e-15);
  const FockVector down = annihilate(s, 1);
  EXPECT_NEAR(std::abs(down.amplitude(OccupationVector{2, 0})), 1.0, 1e-15);
  EXPECT_TRUE(annihilate(FockVector::vacuum(2, 2), 0).empty());
}

TEST(FockVector, CanonicalCommutator) {
  // [a, a^dagger] = 1 on a superposition.
  FockVector s(2, 8);
  s.add(OccupationVector{0, 1}, Complex(0.5, 0.1));
  s.add(OccupationVector{3, 2}, Complex(-0.2, 0.7));
  s.add(OccupationVector{1, 0}, Complex(0.3, 0.0));
  for (int mode = 0; mode < 2; ++mode) {
    const FockVector lhs = annihilate(create(s, mode), mode) + create(annihilate(s, mode), mode).scaled(-1.0);
    EXPECT_LT(max_abs_difference(lhs, s), 1e-14);
  }
  // Different modes commute.
  const FockVector ab = annihilate(create(s, 1), 0);
  const FockVector ba = create(annihilate(s, 0), 1);
  EXPECT_LT(max_abs_difference(ab, ba), 1e-14);
}

TEST(FockVector, NumberExpectationAndInner) {
  FockVector s(1, 4);
  s.add(OccupationVector{1}, 1.0 / std::sqrt(2.0));
  s.add(OccupationVector{3}, Complex(0.0, 1.0 / std::sqrt(2.0)));
  EXPECT_NEAR(number_expectation(s, 0), 2.0, 1e-14);
  EXPECT_NEAR(std::abs(inner(s, s)), 1.0, 1e-14);
  EXPECT_THROW(number_expectation(s.scaled(2.0), 0), std::invalid_argument);
}

TEST(FockVector, TensorConcatenatesModes) {
  const FockVector a = FockVector::basis_state(OccupationVector{1}, 2);
  FockVector b(1, 2);
  b.add(OccupationVector{0}, 0.6);
  b.add(OccupationVector{2}, 0.8);
  const FockVector t = tensor(a, b, 2);
  EXPECT_NEAR(std::abs(t.amplitude(OccupationVector{1, 0})), 0.6, 1e-15);
  EXPECT_EQ(t.amplitude(OccupationVector{1, 2}), Complex{});
  EXPECT_NEAR(t.truncation_loss(), 0.64, 1e-15);
}

TEST(FockVector, SectorWeights) {
  FockVector s(2, 3);
  s.add(OccupationVector{1, 0}, 0.6);
  s.add(OccupationVector{1, 2}, 0.8);
  const auto w = s.sector_weights();
  EXPECT_NEAR(w.at(1), 0.36, 1e-15);
  EXPECT_NEAR(w.at(3), 0.64, 1e-15);
  const auto dense = s.sector_view(FockSector(2, 1));
  EXPECT_NEAR(dense[0].real(), 0.6, 1e-15);
}
