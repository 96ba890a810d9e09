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

#ifndef PHOTONMESH_GATES_H
#define PHOTONMESH_GATES_H

#include <string>
#include <string_view>
#include <vector>

#include "photonmesh/fock.h"
#include "photonmesh/linalg.h"

namespace photonmesh {

enum class Labeling { kNonRegular, kRegular };

/// How the regular CZ is realized: the compressed five-block form or the
/// explicit ancilla-shift sandwich around the non-regular CZ.
enum class CzForm { kCompressed, kSwapSandwich };

enum class SingleQubitGate { kI, kX, kY, kZ, kH, kT, kRz, kRx, kRy };

struct SingleQubitOp {
    SingleQubitGate gate = SingleQubitGate::kI;
    /// Rotation angle in radians; ignored for fixed gates.
    double angle = 0;
};

enum class RotationAxis { kX, kY, kZ };

std::string_view labeling_name(Labeling labeling);
std::string single_qubit_name(SingleQubitGate gate);

/// Qubit-amplitude matrix of the gate. Rotations are exp(-i angle sigma / 2).
ComplexMatrix textbook_gate(const SingleQubitOp &op);

/// Phase recipe as published: Rz (pi, pi - d), Rx (pi - d, pi/2, pi/2),
/// Ry (pi - d, 0, pi) for (theta diff, phi diff[, output diff]).
MziSetting rotation_recipe(RotationAxis axis, double angle);

/// +1 or -1 such that the device matrix of rotation_recipe(axis, d) equals
/// exp(sign * i d sigma / 2) up to a global phase. Determined by evaluating
/// the recipe at d = pi/2 against both signs.
int rotation_sign(RotationAxis axis);

/// Canonical MZI setting (theta2 = phi2 = 0, phi4 = 0) whose device matrix
/// equals textbook_gate(op) up to a global phase.
///
/// Fixed gates use the tabulated relative phases: I (pi, pi), X (0, 0),
/// Y (0, pi), Z (pi, 0), H (pi/2, 0). T is the z-rotation recipe at pi/4,
/// i.e. (pi, 3pi/4); the value (pi, -pi/4) that circulates for T evaluates to
/// Z.T instead. Rotations use rotation_recipe with the angle sign adjusted by
/// rotation_sign so that the result is the textbook rotation.
MziSetting single_qubit_setting(const SingleQubitOp &op);

/// A gate or optical network with its closed-form matrix and an MZI-block
/// realization. `matrix` is the creation-operator transformation on the
/// gate's native modes; `blocks` are device settings in time order.
struct GateDescriptor {
    std::string name;
    int arity = 1;
    ComplexMatrix matrix;
    Labeling labeling = Labeling::kRegular;
    std::vector<MziBlock> blocks;
    bool truncate_after = false;

    int mode_count() const {
        return static_cast<int>(matrix.rows());
    }
    /// Transformation realized by the blocks.
    ComplexMatrix block_transformation() const;
    /// Block list shifted by `offset` modes.
    std::vector<MziBlock> blocks_at(int offset) const;
};

/// Builds a descriptor and checks that its blocks reproduce `matrix` up to a
/// global phase at kPhysicsTol. Throws std::logic_error on mismatch.
GateDescriptor make_descriptor(std::string name, int arity, ComplexMatrix matrix, Labeling labeling,
                               std::vector<MziBlock> blocks, bool truncate_after);

struct R13Matrices {
    ComplexMatrix r13;
    ComplexMatrix r13_prime;
    /// X . R13 . X
    ComplexMatrix r13_dagger;
    MziSetting r13_setting;
    MziSetting r13_prime_setting;
    MziSetting r13_dagger_setting;
};

/// The 1/3 beam splitters, entries (+-1, +-sqrt 2)/sqrt 3, with phase settings
/// theta diff = +-2 asin(1/sqrt 3) and phi diff in {0, pi}. Settings carry
/// absolute phases chosen so that the device matrix equals the printed
/// matrix exactly.
const R13Matrices &r13_matrices();

/// Device block realizing `device` exactly on modes (top_mode, top_mode + 1).
MziBlock exact_block(int top_mode, const ComplexMatrix &device, std::string role);

/// Single-qubit gate acting on a two-mode rail pair.
GateDescriptor single_qubit_descriptor(const SingleQubitOp &op);

/// Post-selected CZ on (aux0, q0 rail 0, q0 rail 1, q1 rail 0, q1 rail 1, aux1).
GateDescriptor cz_ps_nonregular();

/// Post-selected CZ on the regular order (aux0, q0 rails, aux1, q1 rails).
GateDescriptor cz_ps_regular(CzForm form = CzForm::kCompressed);

/// (1 x H) CZ (1 x H). With target_is_second = false the Hadamards sit on the first qubit.
GateDescriptor cnot_ps(Labeling labeling, bool target_is_second = true, CzForm form = CzForm::kCompressed);

/// Relabeling between the non-regular and regular two-qubit mode orders:
/// regular vector = D . non-regular vector.
ComplexMatrix ancilla_shift_matrix();

GateDescriptor x_swap();
GateDescriptor swap2_prime();
GateDescriptor swap1_a();
GateDescriptor swap2_a();
GateDescriptor swap2();
/// SWAP2 followed by X on both rail pairs: an exact exchange of the two
/// qubits' rails with the aux modes left in place. Used for routing.
GateDescriptor qubit_swap();

/// Every descriptor exposed by `gates list`.
std::vector<GateDescriptor> gate_library();

}  // namespace photonmesh

#endif
