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

#ifndef PHOTONMESH_COMPILER_H
#define PHOTONMESH_COMPILER_H

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "photonmesh/fock.h"
#include "photonmesh/gates.h"

namespace photonmesh {

enum class MeshScheme { kClements, kReck };

std::string_view scheme_name(MeshScheme scheme);
/// Accepts "clements" or "reck".
std::optional<MeshScheme> parse_scheme(std::string_view text);

struct CircuitGate {
    enum class Kind { kSingle, kCz, kCnot, kSwap };
    Kind kind = Kind::kSingle;
    SingleQubitOp op;
    /// Single-qubit target, or control / first operand.
    int a = 0;
    /// Target / second operand; unused for single-qubit gates.
    int b = 0;

    static CircuitGate single(SingleQubitOp op, int q);
    static CircuitGate cz(int a, int b);
    static CircuitGate cnot(int control, int target);
    static CircuitGate swap(int a, int b);
};

struct CircuitIR {
    int qubit_count = 0;
    std::vector<CircuitGate> gates;

    /// Throws std::invalid_argument on out-of-range or repeated operands.
    void validate() const;
};

/// (H_0; CNOT_01; CNOT_12; ...) on n qubits.
CircuitIR ghz_chain(int n);

struct CompileOptions {
    MeshScheme scheme = MeshScheme::kClements;
    bool allow_illegal_cascade = false;
    CzForm cz_form = CzForm::kCompressed;
    /// Swap routed qubits back after each non-adjacent gate.
    bool restore_permutation = true;
    /// Emit aux truncation after post-selected gates. Disabling it is a test
    /// hook that demonstrates why the markers are needed.
    bool truncate_aux = true;
    /// Run place_in_mesh as part of compile.
    bool place = true;
};

class IllegalCascade : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class PlacementOverflow : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Unordered logical pairs that already received a post-selected gate.
class CascadeLedger {
   public:
    bool contains(int a, int b) const;
    void record(int a, int b);
    const std::set<std::pair<int, int>> &pairs() const {
        return pairs_;
    }

   private:
    std::set<std::pair<int, int>> pairs_;
};

// Mesh geometry. Columns are indexed from the input side. A rectangular mesh
// on m modes has m columns with slots at top modes k = c (mod 2). The
// triangular mesh has 2m - 3 columns and slot (c, k) iff k = c (mod 2) and
// |c - (m - 2)| <= k, i.e. the lowest pair is used most often.
int mesh_column_count(MeshScheme scheme, int mode_count);
bool mesh_slot_exists(MeshScheme scheme, int mode_count, int column, int top_mode);
std::vector<std::pair<int, int>> mesh_slots(MeshScheme scheme, int mode_count);

struct SlotAssignment {
    int layer = 0;
    int top_mode = 0;
    MziSetting setting;
    std::string role;
    /// Index of the program block placed here, or -1 for an identity slot.
    int block_index = -1;
};

struct TruncationRecord {
    /// Truncation happens after this column; -1 means before the first.
    int after_layer = -1;
    std::vector<int> modes;
};

struct MeshAssignment {
    MeshScheme scheme = MeshScheme::kClements;
    int mode_count = 0;
    int layer_count = 0;
    /// Every slot of the grid, ordered by (layer, top_mode).
    std::vector<SlotAssignment> slots;
    std::vector<TruncationRecord> truncations;

    int used_slots() const;
    /// Columns that host at least one program block.
    int used_layers() const;
};

/// Greedy earliest-column placement. Blocks sharing a mode keep program
/// order; truncation markers act as barriers on their modes. Throws
/// PlacementOverflow when a block has no slot left, and std::invalid_argument
/// when a layer has no block decomposition.
MeshAssignment place_in_mesh(const NetworkProgram &program, MeshScheme scheme, int mode_count);

/// Rebuilds a program from the phase table: one full-column transformation
/// per mesh column (identity slots included), with truncations interleaved.
NetworkProgram reconstruct_from_mesh(const MeshAssignment &mesh);

/// Blocks grouped into simultaneous layers; entries are top modes.
struct LayeredTemplate {
    std::vector<std::vector<int>> layers;
};

/// ASAP layering of a block list.
LayeredTemplate template_from_blocks(const std::vector<MziBlock> &blocks);

/// Column layout of a post-selected gate as drawn: blocks before the 1/3
/// splitters (ASAP), the splitters as one column, then the blocks after.
/// Gates without splitters fall back to template_from_blocks.
LayeredTemplate gate_template(const GateDescriptor &gate);

/// Number of (column offset, mode offset) pairs at which every template layer
/// lands on consecutive mesh columns with all required slots present.
int enumerate_placements(const LayeredTemplate &pattern, MeshScheme scheme, int mode_count);

struct CompiledCircuit {
    NetworkProgram program{1};
    std::optional<MeshAssignment> mesh;
    CascadeLedger ledger;
    QubitLayout layout = QubitLayout::regular(1);
    /// logical qubit -> physical triplet at circuit end.
    std::vector<int> final_permutation;
    int post_selected_gates = 0;
};

/// Lowers the circuit onto 3n regularly labeled modes and, when requested,
/// places it in the mesh. Throws IllegalCascade / PlacementOverflow.
CompiledCircuit compile(const CircuitIR &circuit, const CompileOptions &options);

/// H on q0, CNOT on triplets (0,1), qubit swap of triplets (1,2), CNOT on
/// (0,1). The swap is not undone; final_permutation records it.
CompiledCircuit compile_ghz_swap_variant(const CompileOptions &options = {});

struct SimulationResult {
    /// Conditional qubit amplitudes, qubit 0 is the most significant bit.
    std::vector<Complex> amplitudes;
    double success_probability = 0;
    /// Unprojected output of the network.
    PhotonicState output_state{1};
};

/// Runs a compiled program on a logical basis input. With unmap = false the
/// amplitudes are indexed by physical triplet instead of logical qubit.
SimulationResult simulate_compiled(const CompiledCircuit &compiled, std::string_view input_bits, bool unmap = true);

/// Same, with the network replaced by `program` (e.g. a mesh reconstruction).
SimulationResult simulate_program(const CompiledCircuit &compiled, const NetworkProgram &program,
                                  std::string_view input_bits, bool unmap = true);

SimulationResult simulate_circuit(const CircuitIR &circuit, std::string_view input_bits,
                                  const CompileOptions &options);

}  // namespace photonmesh

#endif
