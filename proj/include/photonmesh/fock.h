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

#ifndef PHOTONMESH_FOCK_H
#define PHOTONMESH_FOCK_H

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "photonmesh/linalg.h"

namespace photonmesh {

/// Per-mode photon counts, modes indexed top to bottom.
using OccupationVector = std::vector<std::uint8_t>;

int total_photons(const OccupationVector &occupation);

/// Terms whose |amplitude| falls below this are dropped after every step.
inline constexpr double kPruneThreshold = 1e-14;

/// Sparse superposition of Fock basis states |n> = prod_j (a_j^dagger)^{n_j} / sqrt(n_j!) |vacuum>.
///
/// States are not renormalized after truncation or projection; the squared
/// norm carries the accumulated success probability.
class PhotonicState {
   public:
    explicit PhotonicState(int mode_count);

    int mode_count() const {
        return mode_count_;
    }
    const std::map<OccupationVector, Complex> &terms() const {
        return terms_;
    }
    std::size_t size() const {
        return terms_.size();
    }
    bool empty() const {
        return terms_.empty();
    }

    /// Adds `amplitude` to the coefficient of `occupation`.
    void add(const OccupationVector &occupation, Complex amplitude);
    Complex amplitude(const OccupationVector &occupation) const;
    double norm_squared() const;
    void prune(double threshold = kPruneThreshold);

    /// One line per term: "n0,n1,...,n{m-1} re im", sorted by occupation.
    std::string dump() const;

   private:
    int mode_count_;
    std::map<OccupationVector, Complex> terms_;
};

/// Waveguide triplet owned by one path-encoded qubit.
struct QubitModes {
    int aux;
    int zero;
    int one;
};

class QubitLayout {
   public:
    /// Qubit j owns modes (3j, 3j+1, 3j+2) as (aux, rail 0, rail 1).
    static QubitLayout regular(int qubit_count);
    /// Two qubits on (aux0, q0 rail 0, q0 rail 1, q1 rail 0, q1 rail 1, aux1).
    static QubitLayout nonregular_pair();
    /// Validates that the triplets partition 0..3n-1.
    static QubitLayout from_triplets(std::vector<QubitModes> triplets);

    int qubit_count() const {
        return static_cast<int>(qubits_.size());
    }
    int mode_count() const {
        return 3 * qubit_count();
    }
    const QubitModes &qubit(int j) const {
        return qubits_.at(j);
    }
    std::vector<int> aux_modes() const;

   private:
    explicit QubitLayout(std::vector<QubitModes> qubits) : qubits_(std::move(qubits)) {
    }
    std::vector<QubitModes> qubits_;
};

/// One MZI in a program: a device setting on modes (top_mode, top_mode + 1).
struct MziBlock {
    int top_mode = 0;
    MziSetting setting;
    /// H, X, Y, Z, T, R13, R13p, R13d, ROT or ID.
    std::string role;

    ComplexMatrix device() const {
        return device_matrix(setting);
    }
};

struct LinearLayer {
    /// Creation-operator transformation, m x m.
    ComplexMatrix transformation;
    /// Blocks in time order; empty when the layer was given as a bare matrix.
    std::vector<MziBlock> blocks;
    std::string label;

    /// Builds the layer from blocks; transformation = (U_last ... U_first)^{-1}.
    static LinearLayer from_blocks(std::vector<MziBlock> blocks, int mode_count, std::string label = "");
};

struct TruncateAux {
    std::vector<int> modes;
};

using ProgramStep = std::variant<LinearLayer, TruncateAux>;

class NetworkProgram {
   public:
    explicit NetworkProgram(int mode_count);

    int mode_count() const {
        return mode_count_;
    }
    const std::vector<ProgramStep> &steps() const {
        return steps_;
    }

    void add_layer(LinearLayer layer);
    void add_truncation(std::vector<int> modes);
    /// Appends all steps of `other` (same mode count).
    void append(const NetworkProgram &other);

    std::size_t block_count() const;
    std::size_t truncation_count() const;

   private:
    int mode_count_;
    std::vector<ProgramStep> steps_;
};

struct PostSelectionResult {
    PhotonicState projected_state;
    double success_probability = 0;
};

struct QubitAmplitudes {
    /// Conditional state, normalized, indexed by bitstring with qubit 0 as the most significant bit.
    std::vector<Complex> amplitudes;
    double success_probability = 0;
};

/// One photon per qubit in rail 0 or rail 1 according to `bits` ('0'/'1').
PhotonicState prepare_computational_basis(std::string_view bits, const QubitLayout &layout);

/// prod_j (alpha_j a_{rail0}^dagger + beta_j a_{rail1}^dagger) |vacuum>.
PhotonicState prepare_product_state(const std::vector<std::pair<Complex, Complex>> &qubits,
                                    const QubitLayout &layout);

/// Substitutes a_j^dagger -> sum_k t_jk a_k^dagger in every term.
PhotonicState apply_linear(const PhotonicState &state, const ComplexMatrix &transformation);

/// <output| T |input> = Per(t[input rows, output cols]) / sqrt(prod s_i! prod t_j!).
Complex amplitude_via_permanent(const ComplexMatrix &transformation, const OccupationVector &input,
                                const OccupationVector &output);

/// Drops every term with a photon on any listed mode. No renormalization.
PhotonicState truncate_aux(const PhotonicState &state, const std::vector<int> &aux_modes);

/// Keeps terms with exactly one photon per rail pair and none on aux modes.
PostSelectionResult project_qubit_structure(const PhotonicState &state, const QubitLayout &layout);

/// Throws std::domain_error when nothing survived the projection.
QubitAmplitudes decode_qubits(const PostSelectionResult &result, const QubitLayout &layout);

PhotonicState run_program(const NetworkProgram &program, const PhotonicState &input);

}  // namespace photonmesh

#endif
