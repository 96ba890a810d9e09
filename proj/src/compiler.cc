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

#include "photonmesh/compiler.h"

#include <algorithm>
#include <cmath>

namespace photonmesh {

std::string_view scheme_name(MeshScheme scheme) {
    return scheme == MeshScheme::kClements ? "clements" : "reck";
}

std::optional<MeshScheme> parse_scheme(std::string_view text) {
    if (text == "clements") {
        return MeshScheme::kClements;
    }
    if (text == "reck") {
        return MeshScheme::kReck;
    }
    return std::nullopt;
}

CircuitGate CircuitGate::single(SingleQubitOp op, int q) {
    return CircuitGate{Kind::kSingle, op, q, 0};
}
CircuitGate CircuitGate::cz(int a, int b) {
    return CircuitGate{Kind::kCz, {}, a, b};
}
CircuitGate CircuitGate::cnot(int control, int target) {
    return CircuitGate{Kind::kCnot, {}, control, target};
}
CircuitGate CircuitGate::swap(int a, int b) {
    return CircuitGate{Kind::kSwap, {}, a, b};
}

void CircuitIR::validate() const {
    if (qubit_count < 1) {
        throw std::invalid_argument("circuit needs at least one qubit");
    }
    auto check = [&](int q) {
        if (q < 0 || q >= qubit_count) {
            throw std::invalid_argument("qubit index " + std::to_string(q) + " out of range for " +
                                        std::to_string(qubit_count) + " qubits");
        }
    };
    for (const auto &g : gates) {
        check(g.a);
        if (g.kind != CircuitGate::Kind::kSingle) {
            check(g.b);
            if (g.a == g.b) {
                throw std::invalid_argument("two-qubit gate with identical operands");
            }
        }
    }
}

CircuitIR ghz_chain(int n) {
    if (n < 2) {
        throw std::invalid_argument("ghz_chain: need at least 2 qubits");
    }
    CircuitIR c{n, {}};
    c.gates.push_back(CircuitGate::single({SingleQubitGate::kH, 0}, 0));
    for (int q = 0; q + 1 < n; q++) {
        c.gates.push_back(CircuitGate::cnot(q, q + 1));
    }
    return c;
}

bool CascadeLedger::contains(int a, int b) const {
    return pairs_.count({std::min(a, b), std::max(a, b)}) > 0;
}

void CascadeLedger::record(int a, int b) {
    pairs_.insert({std::min(a, b), std::max(a, b)});
}

int mesh_column_count(MeshScheme scheme, int mode_count) {
    if (mode_count < 2) {
        return 0;
    }
    return scheme == MeshScheme::kClements ? mode_count : 2 * mode_count - 3;
}

bool mesh_slot_exists(MeshScheme scheme, int mode_count, int column, int top_mode) {
    if (column < 0 || column >= mesh_column_count(scheme, mode_count)) {
        return false;
    }
    if (top_mode < 0 || top_mode > mode_count - 2) {
        return false;
    }
    if (scheme == MeshScheme::kClements) {
        return (column - top_mode) % 2 == 0;
    }
    // The triangle is anchored on the lowest pair, which fires in every even column.
    int depth = mode_count - 2 - top_mode;
    return (column - depth) % 2 == 0 && std::abs(column - (mode_count - 2)) <= top_mode;
}

std::vector<std::pair<int, int>> mesh_slots(MeshScheme scheme, int mode_count) {
    std::vector<std::pair<int, int>> out;
    for (int c = 0; c < mesh_column_count(scheme, mode_count); c++) {
        for (int k = 0; k + 1 < mode_count; k++) {
            if (mesh_slot_exists(scheme, mode_count, c, k)) {
                out.emplace_back(c, k);
            }
        }
    }
    return out;
}

int MeshAssignment::used_slots() const {
    return static_cast<int>(std::count_if(slots.begin(), slots.end(), [](const auto &s) {
        return s.block_index >= 0;
    }));
}

int MeshAssignment::used_layers() const {
    std::set<int> layers;
    for (const auto &s : slots) {
        if (s.block_index >= 0) {
            layers.insert(s.layer);
        }
    }
    return static_cast<int>(layers.size());
}

MeshAssignment place_in_mesh(const NetworkProgram &program, MeshScheme scheme, int mode_count) {
    if (program.mode_count() != mode_count) {
        throw std::invalid_argument("place_in_mesh: program has " + std::to_string(program.mode_count()) +
                                    " modes, mesh has " + std::to_string(mode_count));
    }
    const int columns = mesh_column_count(scheme, mode_count);
    std::vector<int> ready(mode_count, 0);
    std::map<std::pair<int, int>, SlotAssignment> used;
    MeshAssignment out;
    out.scheme = scheme;
    out.mode_count = mode_count;
    out.layer_count = columns;

    int block_index = 0;
    for (const auto &step : program.steps()) {
        if (const auto *trunc = std::get_if<TruncateAux>(&step)) {
            int after = -1;
            for (int k : trunc->modes) {
                after = std::max(after, ready[k] - 1);
            }
            for (int k : trunc->modes) {
                ready[k] = after + 1;
            }
            out.truncations.push_back({after, trunc->modes});
            continue;
        }
        const auto &layer = std::get<LinearLayer>(step);
        if (layer.blocks.empty() &&
            max_abs_diff(layer.transformation, ComplexMatrix::Identity(mode_count, mode_count)) > kConstructionTol) {
            throw std::invalid_argument("place_in_mesh: layer '" + layer.label + "' has no block decomposition");
        }
        for (const auto &block : layer.blocks) {
            int k = block.top_mode;
            int c = std::max(ready[k], ready[k + 1]);
            while (c < columns && !mesh_slot_exists(scheme, mode_count, c, k)) {
                c++;
            }
            if (c >= columns) {
                throw PlacementOverflow("block " + std::to_string(block_index) + " (" + block.role + " on modes " +
                                        std::to_string(k) + "," + std::to_string(k + 1) + ") does not fit the " +
                                        std::to_string(mode_count) + "-mode " + std::string(scheme_name(scheme)) +
                                        " mesh");
            }
            used[{c, k}] = SlotAssignment{c, k, block.setting, block.role, block_index};
            ready[k] = ready[k + 1] = c + 1;
            block_index++;
        }
    }

    const MziSetting identity = single_qubit_setting({SingleQubitGate::kI, 0});
    for (auto [c, k] : mesh_slots(scheme, mode_count)) {
        auto it = used.find({c, k});
        out.slots.push_back(it != used.end() ? it->second : SlotAssignment{c, k, identity, "ID", -1});
    }
    return out;
}

NetworkProgram reconstruct_from_mesh(const MeshAssignment &mesh) {
    const int m = mesh.mode_count;
    NetworkProgram program(m);
    auto add_truncations = [&](int after) {
        for (const auto &t : mesh.truncations) {
            if (t.after_layer == after) {
                program.add_truncation(t.modes);
            }
        }
    };
    add_truncations(-1);
    for (int c = 0; c < mesh.layer_count; c++) {
        std::vector<MziBlock> column;
        for (const auto &s : mesh.slots) {
            if (s.layer == c) {
                column.push_back(MziBlock{s.top_mode, s.setting, s.role});
            }
        }
        program.add_layer(LinearLayer::from_blocks(std::move(column), m, "column " + std::to_string(c)));
        add_truncations(c);
    }
    return program;
}

LayeredTemplate template_from_blocks(const std::vector<MziBlock> &blocks) {
    std::map<int, int> ready;
    LayeredTemplate out;
    for (const auto &b : blocks) {
        int layer = std::max(ready[b.top_mode], ready[b.top_mode + 1]);
        if (layer >= static_cast<int>(out.layers.size())) {
            out.layers.resize(layer + 1);
        }
        out.layers[layer].push_back(b.top_mode);
        ready[b.top_mode] = ready[b.top_mode + 1] = layer + 1;
    }
    return out;
}

LayeredTemplate gate_template(const GateDescriptor &gate) {
    auto is_splitter = [](const MziBlock &b) {
        return b.role.rfind("R13", 0) == 0;
    };
    auto first = std::find_if(gate.blocks.begin(), gate.blocks.end(), is_splitter);
    if (first == gate.blocks.end()) {
        return template_from_blocks(gate.blocks);
    }
    auto last = std::find_if(gate.blocks.rbegin(), gate.blocks.rend(), is_splitter).base();
    LayeredTemplate out = template_from_blocks({gate.blocks.begin(), first});
    std::vector<int> core;
    for (auto it = first; it != last; ++it) {
        core.push_back(it->top_mode);
    }
    out.layers.push_back(core);
    for (auto &layer : template_from_blocks({last, gate.blocks.end()}).layers) {
        out.layers.push_back(layer);
    }
    return out;
}

int enumerate_placements(const LayeredTemplate &pattern, MeshScheme scheme, int mode_count) {
    if (pattern.layers.empty()) {
        return 0;
    }
    int lowest = mode_count;
    int highest = -1;
    for (const auto &layer : pattern.layers) {
        for (int k : layer) {
            lowest = std::min(lowest, k);
            highest = std::max(highest, k + 1);
        }
    }
    int count = 0;
    const int columns = mesh_column_count(scheme, mode_count);
    for (int shift = -lowest; highest + shift < mode_count; shift++) {
        for (int c0 = 0; c0 + static_cast<int>(pattern.layers.size()) <= columns; c0++) {
            bool fits = true;
            for (std::size_t l = 0; l < pattern.layers.size() && fits; l++) {
                for (int k : pattern.layers[l]) {
                    if (!mesh_slot_exists(scheme, mode_count, c0 + static_cast<int>(l), k + shift)) {
                        fits = false;
                        break;
                    }
                }
            }
            count += fits;
        }
    }
    return count;
}

namespace {

// Emits gates on physical triplets while tracking where each logical qubit lives.
class Lowerer {
   public:
    Lowerer(int n, const CompileOptions &options) : options_(options), program_(3 * n), physical_(n), logical_(n) {
        for (int q = 0; q < n; q++) {
            physical_[q] = logical_[q] = q;
        }
    }

    void single(const SingleQubitOp &op, int p) {
        GateDescriptor d = single_qubit_descriptor(op);
        add(d, 3 * p + 1);
    }

    // Post-selected CZ or CNOT on adjacent physical triplets.
    void entangle(CircuitGate::Kind kind, int pa, int pb) {
        int la = logical_[pa];
        int lb = logical_[pb];
        if (ledger_.contains(la, lb) && !options_.allow_illegal_cascade) {
            throw IllegalCascade("post-selected gate repeated on qubits " + std::to_string(std::min(la, lb)) +
                                 " and " + std::to_string(std::max(la, lb)));
        }
        ledger_.record(la, lb);
        int low = std::min(pa, pb);
        GateDescriptor d = kind == CircuitGate::Kind::kCz
                               ? cz_ps_regular(options_.cz_form)
                               : cnot_ps(Labeling::kRegular, pb > pa, options_.cz_form);
        add(d, 3 * low);
        post_selected_++;
        if (options_.truncate_aux) {
            program_.add_truncation({3 * low, 3 * low + 3});
        }
    }

    // Exchanges the contents of physical triplets p and p + 1.
    void swap_adjacent(int p) {
        add(qubit_swap(), 3 * p);
        std::swap(logical_[p], logical_[p + 1]);
        physical_[logical_[p]] = p;
        physical_[logical_[p + 1]] = p + 1;
    }

    // Moves logical qubit `mover` next to `anchor`; returns the swaps done.
    std::vector<int> route(int anchor, int mover) {
        std::vector<int> done;
        while (std::abs(physical_[anchor] - physical_[mover]) > 1) {
            int p = physical_[mover];
            int next = physical_[anchor] > p ? p + 1 : p - 1;
            swap_adjacent(std::min(p, next));
            done.push_back(std::min(p, next));
        }
        return done;
    }

    void unroute(const std::vector<int> &done) {
        for (auto it = done.rbegin(); it != done.rend(); ++it) {
            swap_adjacent(*it);
        }
    }

    void gate(const CircuitGate &g) {
        if (g.kind == CircuitGate::Kind::kSingle) {
            single(g.op, physical_[g.a]);
            return;
        }
        std::vector<int> done = route(g.a, g.b);
        int pa = physical_[g.a];
        int pb = physical_[g.b];
        if (g.kind == CircuitGate::Kind::kSwap) {
            // Exchanging the states is the same as exchanging the labels back.
            swap_adjacent(std::min(pa, pb));
            std::swap(logical_[pa], logical_[pb]);
            physical_[logical_[pa]] = pa;
            physical_[logical_[pb]] = pb;
        } else {
            entangle(g.kind, pa, pb);
        }
        if (options_.restore_permutation) {
            unroute(done);
        }
    }

    CompiledCircuit finish(int n) {
        CompiledCircuit out;
        out.layout = QubitLayout::regular(n);
        if (options_.place) {
            out.mesh = place_in_mesh(program_, options_.scheme, 3 * n);
        }
        out.program = std::move(program_);
        out.ledger = std::move(ledger_);
        out.final_permutation = physical_;
        out.post_selected_gates = post_selected_;
        return out;
    }

   private:
    void add(const GateDescriptor &d, int offset) {
        program_.add_layer(LinearLayer::from_blocks(d.blocks_at(offset), program_.mode_count(), d.name));
    }

    CompileOptions options_;
    NetworkProgram program_;
    CascadeLedger ledger_;
    std::vector<int> physical_;
    std::vector<int> logical_;
    int post_selected_ = 0;
};

}  // namespace

CompiledCircuit compile(const CircuitIR &circuit, const CompileOptions &options) {
    circuit.validate();
    Lowerer lowerer(circuit.qubit_count, options);
    for (const auto &g : circuit.gates) {
        lowerer.gate(g);
    }
    return lowerer.finish(circuit.qubit_count);
}

CompiledCircuit compile_ghz_swap_variant(const CompileOptions &options) {
    Lowerer lowerer(3, options);
    lowerer.single({SingleQubitGate::kH, 0}, 0);
    lowerer.entangle(CircuitGate::Kind::kCnot, 0, 1);
    lowerer.swap_adjacent(1);
    lowerer.entangle(CircuitGate::Kind::kCnot, 0, 1);
    return lowerer.finish(3);
}

SimulationResult simulate_program(const CompiledCircuit &compiled, const NetworkProgram &program,
                                  std::string_view input_bits, bool unmap) {
    const int n = compiled.layout.qubit_count();
    if (static_cast<int>(input_bits.size()) != n) {
        throw std::invalid_argument("input has " + std::to_string(input_bits.size()) + " bits, circuit has " +
                                    std::to_string(n) + " qubits");
    }
    // The network starts with logical qubit q on triplet q.
    PhotonicState input = prepare_computational_basis(input_bits, compiled.layout);
    SimulationResult out;
    out.output_state = run_program(program, input);
    QubitAmplitudes decoded = decode_qubits(project_qubit_structure(out.output_state, compiled.layout),
                                            compiled.layout);
    out.success_probability = decoded.success_probability;
    if (!unmap) {
        out.amplitudes = std::move(decoded.amplitudes);
        return out;
    }
    out.amplitudes.assign(decoded.amplitudes.size(), 0);
    for (std::size_t phys = 0; phys < decoded.amplitudes.size(); phys++) {
        std::size_t logical = 0;
        for (int q = 0; q < n; q++) {
            int p = compiled.final_permutation[q];
            std::size_t bit = (phys >> (n - 1 - p)) & 1;
            logical |= bit << (n - 1 - q);
        }
        out.amplitudes[logical] = decoded.amplitudes[phys];
    }
    return out;
}

SimulationResult simulate_compiled(const CompiledCircuit &compiled, std::string_view input_bits, bool unmap) {
    return simulate_program(compiled, compiled.program, input_bits, unmap);
}

SimulationResult simulate_circuit(const CircuitIR &circuit, std::string_view input_bits,
                                  const CompileOptions &options) {
    return simulate_compiled(compile(circuit, options), input_bits);
}

}  // namespace photonmesh
