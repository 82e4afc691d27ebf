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

#ifndef FOCKRAIL_RANDOM_UNITARY_HPP_
#define FOCKRAIL_RANDOM_UNITARY_HPP_

#include <cstdint>
#include <random>

#include "fockrail/functor.hpp"

namespace fockrail {

/// Haar-random unitary: QR of a complex Gaussian matrix with the phases of
/// R's diagonal folded back into Q.
UnitaryMatrix random_unitary(int dim, std::mt19937_64& rng);

/// Haar-random unit vector in C^dim.
Eigen::VectorXcd random_state(int dim, std::mt19937_64& rng);

}  // namespace fockrail

#endif  // FOCKRAIL_RANDOM_UNITARY_HPP_
