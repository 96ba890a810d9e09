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

#ifndef PHOTONMESH_CIRCUIT_IO_H
#define PHOTONMESH_CIRCUIT_IO_H

#include <stdexcept>
#include <string>
#include <string_view>

#include "photonmesh/compiler.h"

namespace photonmesh {

class CircuitParseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Parses {"qubits": n, "gates": [{"g": "H", "q": 0}, {"g": "CNOT", "c": 0, "t": 1}, ...]}.
/// Single-qubit gates take "q" (and "angle" for RZ/RX/RY); CZ and SWAP take
/// "a" and "b"; CNOT takes "c" and "t". Throws CircuitParseError.
CircuitIR parse_circuit_json(std::string_view text);

/// Phase table as JSON: scheme, mode count, slot records and truncation records.
std::string phase_table_json(const MeshAssignment &mesh);

}  // namespace photonmesh

#endif
