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

#include "photonmesh/gates.h"

#include <cmath>
#include <stdexcept>

namespace photonmesh {

namespace {

const Complex kI{0, 1};

ComplexMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
    ComplexMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

ComplexMatrix pauli(RotationAxis axis) {
    switch (axis) {
        case RotationAxis::kX:
            return mat2(0, 1, 1, 0);
        case RotationAxis::kY:
            return mat2(0, -kI, kI, 0);
        case RotationAxis::kZ:
            return mat2(1, 0, 0, -1);
    }
    throw std::invalid_argument("unknown rotation axis");
}

// exp(i a sigma) = cos(a) I + i sin(a) sigma for any Pauli sigma.
ComplexMatrix pauli_exp(RotationAxis axis, double a) {
    return std::cos(a) * ComplexMatrix::Identity(2, 2) + kI * std::sin(a) * pauli(axis);
}

ComplexMatrix permutation_matrix(const std::vector<int> &image) {
    int n = static_cast<int>(image.size());
    ComplexMatrix p = ComplexMatrix::Zero(n, n);
    for (int j = 0; j < n; j++) {
        p(j, image[j]) = 1;
    }
    return p;
}

ComplexMatrix pauli_x_device() {
    return mat2(0, 1, 1, 0);
}

MziBlock x_block(int top_mode) {
    return exact_block(top_mode, pauli_x_device(), "X");
}

std::vector<MziBlock> x_blocks(std::initializer_list<int> top_modes) {
    std::vector<MziBlock> out;
    for (int k : top_modes) {
        out.push_back(x_block(k));
    }
    return out;
}

void extend(std::vector<MziBlock> &dst, const std::vector<MziBlock> &src) {
    dst.insert(dst.end(), src.begin(), src.end());
}

ComplexMatrix hadamard() {
    return mat2(1, 1, 1, -1) / std::sqrt(2.0);
}

}  // namespace

std::string_view labeling_name(Labeling labeling) {
    return labeling == Labeling::kRegular ? "regular" : "nonregular";
}

std::string single_qubit_name(SingleQubitGate gate) {
    switch (gate) {
        case SingleQubitGate::kI:
            return "I";
        case SingleQubitGate::kX:
            return "X";
        case SingleQubitGate::kY:
            return "Y";
        case SingleQubitGate::kZ:
            return "Z";
        case SingleQubitGate::kH:
            return "H";
        case SingleQubitGate::kT:
            return "T";
        case SingleQubitGate::kRz:
            return "RZ";
        case SingleQubitGate::kRx:
            return "RX";
        case SingleQubitGate::kRy:
            return "RY";
    }
    throw std::invalid_argument("unknown single-qubit gate");
}

ComplexMatrix textbook_gate(const SingleQubitOp &op) {
    switch (op.gate) {
        case SingleQubitGate::kI:
            return ComplexMatrix::Identity(2, 2);
        case SingleQubitGate::kX:
            return pauli(RotationAxis::kX);
        case SingleQubitGate::kY:
            return pauli(RotationAxis::kY);
        case SingleQubitGate::kZ:
            return pauli(RotationAxis::kZ);
        case SingleQubitGate::kH:
            return hadamard();
        case SingleQubitGate::kT:
            return mat2(1, 0, 0, std::polar(1.0, kPi / 4));
        case SingleQubitGate::kRz:
            return pauli_exp(RotationAxis::kZ, -op.angle / 2);
        case SingleQubitGate::kRx:
            return pauli_exp(RotationAxis::kX, -op.angle / 2);
        case SingleQubitGate::kRy:
            return pauli_exp(RotationAxis::kY, -op.angle / 2);
    }
    throw std::invalid_argument("unknown single-qubit gate");
}

MziSetting rotation_recipe(RotationAxis axis, double angle) {
    switch (axis) {
        case RotationAxis::kZ:
            return MziSetting::from_relative(kPi, kPi - angle);
        case RotationAxis::kX:
            return MziSetting::from_relative(kPi - angle, kPi / 2, kPi / 2);
        case RotationAxis::kY:
            return MziSetting::from_relative(kPi - angle, 0, kPi);
    }
    throw std::invalid_argument("unknown rotation axis");
}

int rotation_sign(RotationAxis axis) {
    ComplexMatrix u = device_matrix(rotation_recipe(axis, kPi / 2));
    bool minus = equal_mod_global_phase(u, pauli_exp(axis, -kPi / 4), kConstructionTol);
    bool plus = equal_mod_global_phase(u, pauli_exp(axis, kPi / 4), kConstructionTol);
    if (minus == plus) {
        throw std::logic_error("rotation recipe matches neither rotation sign");
    }
    return plus ? 1 : -1;
}

MziSetting single_qubit_setting(const SingleQubitOp &op) {
    switch (op.gate) {
        case SingleQubitGate::kI:
            return MziSetting::from_relative(kPi, kPi);
        case SingleQubitGate::kX:
            return MziSetting::from_relative(0, 0);
        case SingleQubitGate::kY:
            return MziSetting::from_relative(0, kPi);
        case SingleQubitGate::kZ:
            return MziSetting::from_relative(kPi, 0);
        case SingleQubitGate::kH:
            return MziSetting::from_relative(kPi / 2, 0);
        case SingleQubitGate::kT:
            return rotation_recipe(RotationAxis::kZ, kPi / 4);
        case SingleQubitGate::kRz:
            return rotation_recipe(RotationAxis::kZ, -rotation_sign(RotationAxis::kZ) * op.angle);
        case SingleQubitGate::kRx:
            return rotation_recipe(RotationAxis::kX, -rotation_sign(RotationAxis::kX) * op.angle);
        case SingleQubitGate::kRy:
            return rotation_recipe(RotationAxis::kY, -rotation_sign(RotationAxis::kY) * op.angle);
    }
    throw std::invalid_argument("unknown single-qubit gate");
}

ComplexMatrix GateDescriptor::block_transformation() const {
    return LinearLayer::from_blocks(blocks, mode_count()).transformation;
}

std::vector<MziBlock> GateDescriptor::blocks_at(int offset) const {
    std::vector<MziBlock> out = blocks;
    for (auto &b : out) {
        b.top_mode += offset;
    }
    return out;
}

GateDescriptor make_descriptor(std::string name, int arity, ComplexMatrix matrix, Labeling labeling,
                               std::vector<MziBlock> blocks, bool truncate_after) {
    GateDescriptor d{std::move(name), arity, std::move(matrix), labeling, std::move(blocks), truncate_after};
    if (d.matrix.rows() != d.matrix.cols() || d.matrix.rows() < 2) {
        throw std::logic_error(d.name + ": matrix must be square with at least 2 modes");
    }
    if (!equal_mod_global_phase(d.block_transformation(), d.matrix, kPhysicsTol)) {
        throw std::logic_error(d.name + ": MZI blocks do not reproduce the gate matrix");
    }
    return d;
}

MziBlock exact_block(int top_mode, const ComplexMatrix &device, std::string role) {
    return MziBlock{top_mode, fit_mzi_setting(device), std::move(role)};
}

const R13Matrices &r13_matrices() {
    static const R13Matrices value = [] {
        const double a = 1 / std::sqrt(3.0);
        const double b = std::sqrt(2.0) / std::sqrt(3.0);
        R13Matrices r;
        r.r13 = mat2(-a, b, -b, -a);
        r.r13_prime = mat2(-a, b, b, a);
        r.r13_dagger = pauli(RotationAxis::kX) * r.r13 * pauli(RotationAxis::kX);
        r.r13_setting = fit_mzi_setting(r.r13);
        r.r13_prime_setting = fit_mzi_setting(r.r13_prime);
        r.r13_dagger_setting = fit_mzi_setting(r.r13_dagger);
        return r;
    }();
    return value;
}

GateDescriptor single_qubit_descriptor(const SingleQubitOp &op) {
    // Amplitudes evolve with the transpose of the transformation, so a gate G
    // is the transformation G^T.
    ComplexMatrix t = textbook_gate(op).transpose();
    std::string role = op.gate == SingleQubitGate::kI    ? "ID"
                       : op.gate == SingleQubitGate::kRz || op.gate == SingleQubitGate::kRx ||
                               op.gate == SingleQubitGate::kRy
                           ? "ROT"
                           : single_qubit_name(op.gate);
    return make_descriptor(single_qubit_name(op.gate), 1, t, Labeling::kRegular,
                           {exact_block(0, to_device(t), role)}, false);
}

namespace {

ComplexMatrix block_diag(std::initializer_list<ComplexMatrix> parts) {
    int n = 0;
    for (const auto &p : parts) {
        n += static_cast<int>(p.rows());
    }
    ComplexMatrix out = ComplexMatrix::Zero(n, n);
    int k = 0;
    for (const auto &p : parts) {
        out.block(k, k, p.rows(), p.cols()) = p;
        k += static_cast<int>(p.rows());
    }
    return out;
}

std::vector<MziBlock> cz_core_blocks() {
    const auto &r = r13_matrices();
    return {MziBlock{0, r.r13_prime_setting, "R13p"}, MziBlock{2, r.r13_setting, "R13"},
            MziBlock{4, r.r13_setting, "R13"}};
}

std::vector<MziBlock> cz_regular_blocks(CzForm form) {
    const auto &r = r13_matrices();
    std::vector<MziBlock> out;
    if (form == CzForm::kCompressed) {
        out.push_back(x_block(3));
        out.push_back(MziBlock{0, r.r13_prime_setting, "R13p"});
        out.push_back(MziBlock{2, r.r13_setting, "R13"});
        out.push_back(MziBlock{4, r.r13_dagger_setting, "R13d"});
        out.push_back(x_block(3));
    } else {
        extend(out, x_blocks({3, 4}));
        extend(out, cz_core_blocks());
        extend(out, x_blocks({4, 3}));
    }
    return out;
}

MziBlock hadamard_block(int top_mode) {
    return exact_block(top_mode, to_device(hadamard().transpose()), "H");
}

}  // namespace

GateDescriptor cz_ps_nonregular() {
    const auto &r = r13_matrices();
    ComplexMatrix m = block_diag({r.r13_prime, r.r13, r.r13}).inverse();
    return make_descriptor("CZ_PS_NONREGULAR", 2, m, Labeling::kNonRegular, cz_core_blocks(), true);
}

ComplexMatrix ancilla_shift_matrix() {
    // Identity on the first qubit; the second triplet is rotated so that its
    // aux mode moves from the bottom (non-regular) to the top (regular).
    return permutation_matrix({0, 1, 2, 5, 3, 4});
}

GateDescriptor cz_ps_regular(CzForm form) {
    ComplexMatrix d = ancilla_shift_matrix();
    ComplexMatrix m = d * cz_ps_nonregular().matrix * d.transpose();
    return make_descriptor(form == CzForm::kCompressed ? "CZ_PS" : "CZ_PS_SANDWICH", 2, m, Labeling::kRegular,
                           cz_regular_blocks(form), true);
}

GateDescriptor cnot_ps(Labeling labeling, bool target_is_second, CzForm form) {
    GateDescriptor cz = labeling == Labeling::kRegular ? cz_ps_regular(form) : cz_ps_nonregular();
    // Target doublet: rails of the second qubit are (4,5) regular and (3,4)
    // non-regular; the first qubit always uses (1,2).
    int top = target_is_second ? (labeling == Labeling::kRegular ? 4 : 3) : 1;
    ComplexMatrix h = embed_block_at(hadamard(), top, 6);
    ComplexMatrix m = h * cz.matrix * h;
    std::vector<MziBlock> blocks{hadamard_block(top)};
    extend(blocks, cz.blocks);
    blocks.push_back(hadamard_block(top));
    std::string name = labeling == Labeling::kRegular ? "CNOT_PS" : "CNOT_PS_NONREGULAR";
    if (!target_is_second) {
        name += "_REVERSED";
    }
    return make_descriptor(name, 2, m, labeling, std::move(blocks), true);
}

GateDescriptor x_swap() {
    return make_descriptor("X_SWAP", 1, pauli(RotationAxis::kX), Labeling::kRegular, x_blocks({0}), false);
}

GateDescriptor swap2_prime() {
    return make_descriptor("SWAP2_PRIME", 2, permutation_matrix({2, 3, 0, 1}), Labeling::kRegular,
                           x_blocks({1, 0, 2, 1}), false);
}

GateDescriptor swap1_a() {
    return make_descriptor("SWAP1_A", 1, permutation_matrix({1, 2, 0}), Labeling::kRegular, x_blocks({1, 0}),
                           false);
}

GateDescriptor swap2_a() {
    // The permutation is an involution, so the factor list may be read in
    // either direction; this order starts with the three-block layer, which
    // is the one that packs into the 6-mode rectangular mesh.
    std::vector<MziBlock> blocks;
    extend(blocks, x_blocks({0, 2, 4}));
    extend(blocks, x_blocks({1, 3}));
    extend(blocks, x_blocks({0, 2, 4}));
    extend(blocks, x_blocks({1, 3}));
    extend(blocks, x_blocks({2}));
    extend(blocks, x_blocks({1, 3}));
    return make_descriptor("SWAP2_A", 2, permutation_matrix({3, 4, 5, 0, 1, 2}), Labeling::kRegular,
                           std::move(blocks), false);
}

GateDescriptor swap2() {
    // Five alternating layers reverse modes 1..5. On the qubits this is a
    // swap composed with X on both of them.
    std::vector<MziBlock> blocks;
    for (int layer = 0; layer < 5; layer++) {
        extend(blocks, layer % 2 == 0 ? x_blocks({2, 4}) : x_blocks({1, 3}));
    }
    return make_descriptor("SWAP2", 2, permutation_matrix({0, 5, 4, 3, 2, 1}), Labeling::kRegular,
                           std::move(blocks), false);
}

GateDescriptor qubit_swap() {
    GateDescriptor base = swap2();
    std::vector<MziBlock> blocks = base.blocks;
    extend(blocks, x_blocks({1, 4}));
    return make_descriptor("SWAP2_QUBIT", 2, permutation_matrix({0, 4, 5, 3, 1, 2}), Labeling::kRegular,
                           std::move(blocks), false);
}

std::vector<GateDescriptor> gate_library() {
    std::vector<GateDescriptor> out;
    for (auto g : {SingleQubitGate::kI, SingleQubitGate::kX, SingleQubitGate::kY, SingleQubitGate::kZ,
                   SingleQubitGate::kH, SingleQubitGate::kT}) {
        out.push_back(single_qubit_descriptor({g, 0}));
    }
    const auto &r = r13_matrices();
    out.push_back(make_descriptor("R13", 1, to_transformation(r.r13), Labeling::kRegular,
                                  {MziBlock{0, r.r13_setting, "R13"}}, false));
    out.push_back(make_descriptor("R13_PRIME", 1, to_transformation(r.r13_prime), Labeling::kRegular,
                                  {MziBlock{0, r.r13_prime_setting, "R13p"}}, false));
    out.push_back(make_descriptor("R13_DAGGER", 1, to_transformation(r.r13_dagger), Labeling::kRegular,
                                  {MziBlock{0, r.r13_dagger_setting, "R13d"}}, false));
    out.push_back(cz_ps_nonregular());
    out.push_back(cz_ps_regular(CzForm::kCompressed));
    out.push_back(cz_ps_regular(CzForm::kSwapSandwich));
    out.push_back(cnot_ps(Labeling::kNonRegular));
    out.push_back(cnot_ps(Labeling::kRegular));
    out.push_back(x_swap());
    out.push_back(swap2_prime());
    out.push_back(swap1_a());
    out.push_back(swap2_a());
    out.push_back(swap2());
    out.push_back(qubit_swap());
    return out;
}

}  // namespace photonmesh
