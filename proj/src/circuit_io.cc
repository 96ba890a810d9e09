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

#include "photonmesh/circuit_io.h"

#include <map>

#include "json.hpp"
#include "photonmesh/format.h"

namespace photonmesh {

namespace {

int qubit_field(const nlohmann::json &gate, const char *key, std::size_t index) {
    if (!gate.contains(key) || !gate[key].is_number_integer()) {
        throw CircuitParseError("gate " + std::to_string(index) + ": missing integer field '" + key + "'");
    }
    return gate[key].get<int>();
}

}  // namespace

CircuitIR parse_circuit_json(std::string_view text) {
    static const std::map<std::string, SingleQubitGate> singles{
        {"I", SingleQubitGate::kI},   {"H", SingleQubitGate::kH},   {"X", SingleQubitGate::kX},
        {"Y", SingleQubitGate::kY},   {"Z", SingleQubitGate::kZ},   {"T", SingleQubitGate::kT},
        {"RZ", SingleQubitGate::kRz}, {"RX", SingleQubitGate::kRx}, {"RY", SingleQubitGate::kRy},
    };
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw CircuitParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("qubits") || !doc["qubits"].is_number_integer()) {
        throw CircuitParseError("circuit must be an object with an integer 'qubits' field");
    }
    CircuitIR circuit;
    circuit.qubit_count = doc["qubits"].get<int>();
    if (doc.contains("gates")) {
        if (!doc["gates"].is_array()) {
            throw CircuitParseError("'gates' must be an array");
        }
        std::size_t index = 0;
        for (const auto &gate : doc["gates"]) {
            if (!gate.is_object() || !gate.contains("g") || !gate["g"].is_string()) {
                throw CircuitParseError("gate " + std::to_string(index) + ": missing string field 'g'");
            }
            std::string name = gate["g"].get<std::string>();
            if (auto it = singles.find(name); it != singles.end()) {
                SingleQubitOp op{it->second, 0};
                bool rotation = it->second == SingleQubitGate::kRz || it->second == SingleQubitGate::kRx ||
                                it->second == SingleQubitGate::kRy;
                if (rotation) {
                    if (!gate.contains("angle") || !gate["angle"].is_number()) {
                        throw CircuitParseError("gate " + std::to_string(index) + ": " + name +
                                                " needs a numeric 'angle'");
                    }
                    op.angle = gate["angle"].get<double>();
                }
                circuit.gates.push_back(CircuitGate::single(op, qubit_field(gate, "q", index)));
            } else if (name == "CNOT") {
                circuit.gates.push_back(
                    CircuitGate::cnot(qubit_field(gate, "c", index), qubit_field(gate, "t", index)));
            } else if (name == "CZ") {
                circuit.gates.push_back(CircuitGate::cz(qubit_field(gate, "a", index), qubit_field(gate, "b", index)));
            } else if (name == "SWAP") {
                circuit.gates.push_back(
                    CircuitGate::swap(qubit_field(gate, "a", index), qubit_field(gate, "b", index)));
            } else {
                throw CircuitParseError("gate " + std::to_string(index) + ": unknown gate '" + name + "'");
            }
            index++;
        }
    }
    try {
        circuit.validate();
    } catch (const std::invalid_argument &e) {
        throw CircuitParseError(e.what());
    }
    return circuit;
}

std::string phase_table_json(const MeshAssignment &mesh) {
    nlohmann::json slots = nlohmann::json::array();
    for (const auto &s : mesh.slots) {
        nlohmann::json rec{{"layer", s.layer},       {"top_mode", s.top_mode}, {"theta1", round_to_printed(s.setting.theta1)},
                           {"theta2", round_to_printed(s.setting.theta2)}, {"phi1", round_to_printed(s.setting.phi1)},   {"phi2", round_to_printed(s.setting.phi2)},
                           {"role", s.role}};
        if (s.setting.phi3) {
            rec["phi3"] = round_to_printed(*s.setting.phi3);
        }
        if (s.setting.phi4) {
            rec["phi4"] = round_to_printed(*s.setting.phi4);
        }
        slots.push_back(std::move(rec));
    }
    nlohmann::json truncations = nlohmann::json::array();
    for (const auto &t : mesh.truncations) {
        truncations.push_back({{"after_layer", t.after_layer}, {"modes", t.modes}});
    }
    nlohmann::json doc{{"scheme", std::string(scheme_name(mesh.scheme))},
                       {"modes", mesh.mode_count},
                       {"layers", mesh.layer_count},
                       {"slots_used", mesh.used_slots()},
                       {"slots_total", mesh.slots.size()},
                       {"slots", std::move(slots)},
                       {"truncations", std::move(truncations)}};
    return doc.dump(2) + "\n";
}

}  // namespace photonmesh
