// Copyright 2026 The Teleamp Authors
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

#ifndef TELEAMP_ORACLES_H_
#define TELEAMP_ORACLES_H_

// Brute-force reference computations and random generators shared by the
// test suites and `teleamp verify`. Nothing on the simulation path uses
// these.

#include <random>

#include "teleamp/fock.h"
#include "teleamp/interferometer.h"

namespace teleamp::oracles {

/// sum over all permutations sigma of prod_i m(i, sigma(i)). m! terms.
Complex naive_permanent(const ComplexMatrix& m);

/// Entries with real and imaginary parts uniform in [-1, 1].
ComplexMatrix random_matrix(std::mt19937_64& rng, std::size_t dim);

/// Haar-ish random normalized qubit c0|0> + c1|1> with both amplitudes
/// nonzero.
PureState random_qubit(std::mt19937_64& rng);

/// Random normalized state on `modes` modes with `terms` kets drawn from
/// occupations of at most `max_photons` photons per mode.
PureState random_state(std::mt19937_64& rng, std::size_t modes, int max_photons,
                       int terms);

/// Random unitary from the QR decomposition of a complex Gaussian matrix.
ScatteringMatrix random_unitary(std::mt19937_64& rng, std::size_t dim);

}  // namespace teleamp::oracles

#endif  // TELEAMP_ORACLES_H_
