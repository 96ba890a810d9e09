// Copyright 2026 The Photonmesh Authors
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

#ifndef PHOTONMESH_ANALYSIS_H
#define PHOTONMESH_ANALYSIS_H

#include <cstdint>
#include <utility>
#include <vector>

#include "photonmesh/linalg.h"

namespace photonmesh {

/// Best result of the 4-mode search.
///
/// Process fidelity of a post-selected 4x4 map M against the target G is
/// |Tr(M^dagger G)|^2 / (4 ||M||_F^2), which is 1 exactly when M is
/// proportional to G. Success probability is ||M||_F^2 / 4, the mean over
/// basis inputs of the probability of finding the qubit structure.
struct FeasibilityReport {
    int restarts = 0;
    double best_process_fidelity = 0;
    double best_success_probability = 0;
    /// Six (theta, phi) pairs in mesh order, then four output phases.
    std::vector<double> best_parameters;
    /// Smallest unitarity residual of the constrained family found by a
    /// seeded local search over its parameters.
    double constraint_residual = 0;
    int best_restart = -1;
};

enum class SearchTarget { kCz, kIdentity };

/// Number of phases in the 4-mode parameterization.
inline constexpr int kMesh4Parameters = 16;

/// Device matrix of the 4-mode rectangular mesh for the given phases.
ComplexMatrix mesh4_unitary(const std::vector<double> &params);

/// Post-selected map on qubit A = modes (0,1), qubit B = modes (2,3):
/// M(out, in) = <out| network |in>, basis index 2 a + b.
ComplexMatrix postselected_map_4x4(const ComplexMatrix &device);

/// Fidelity and success probability of M against `target` (see FeasibilityReport).
std::pair<double, double> process_fidelity(const ComplexMatrix &m, const ComplexMatrix &target);

/// Multi-start coordinate descent with shrinking steps, maximizing fidelity
/// subject to success probability > 1e-6. Restarts run on up to
/// `threads` workers (0 = PHOTONMESH_THREADS, or hardware concurrency if
/// unset/0); the merge picks the best fidelity, ties going to the lowest
/// restart index, so the report does not depend on the thread count.
FeasibilityReport search_cz_in_4x4(int restarts, std::uint64_t seed, SearchTarget target = SearchTarget::kCz,
                                   int threads = 0);

/// Max entry-wise deviation of V^dagger V from identity for
/// V = [[g11, 0, 0, 0], [0, -g11, g23, 0], [0, 2c/g23, c/g11, 0], [0, 0, 0, c/g11]],
/// the inverse transformation forced by a post-selected CZ on 4 modes.
/// V is unitary iff its inverse is. Throws std::invalid_argument if any
/// parameter is zero (c = 0 means zero success probability).
double check_four_mode_constraints(Complex gamma11, Complex gamma23, Complex c);

/// Compiles and simulates the GHZ chain for n = 2..n_max (n_max <= 5).
std::vector<std::pair<int, double>> ghz_probability_scan(int n_max);

/// Worker count from PHOTONMESH_THREADS (unset or 0 = hardware concurrency).
int configured_threads();

}  // namespace photonmesh

#endif
