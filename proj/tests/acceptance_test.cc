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

// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "photonmesh/analysis.h"
#include "photonmesh/compiler.h"
#include "photonmesh/fock.h"
#include "photonmesh/gates.h"
#include "test_util.h"

using namespace photonmesh;
using namespace photonmesh::testing;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void check(bool ok, const std::string &what) {
        if (!ok) {
            if (pass) {
                detail << " failed:";
            }
            pass = false;
            detail << " " << what << ";";
        }
    }
};

std::vector<OccupationVector> occupations(int modes, int photons) {
    std::vector<OccupationVector> out;
    OccupationVector v(modes, 0);
    std::function<void(int, int)> rec = [&](int k, int left) {
        if (k == modes - 1) {
            v[k] = static_cast<std::uint8_t>(left);
            out.push_back(v);
            return;
        }
        for (int n = 0; n <= left; n++) {
            v[k] = static_cast<std::uint8_t>(n);
            rec(k + 1, left - n);
        }
    };
    rec(0, photons);
    return out;
}

CompileOptions unplaced() {
    CompileOptions o;
    o.place = false;
    return o;
}

void cz_correctness(Outcome &o) {
    std::mt19937_64 rng(101);
    ComplexMatrix cz = ComplexMatrix::Identity(4, 4);
    cz(3, 3) = -1;
    struct Variant {
        const char *name;
        ComplexMatrix t;
        QubitLayout layout;
    };
    Variant variants[] = {{"regular", cz_ps_regular().block_transformation(), QubitLayout::regular(2)},
                          {"nonregular", cz_ps_nonregular().block_transformation(), QubitLayout::nonregular_pair()}};
    for (auto &v : variants) {
        std::vector<std::vector<std::pair<Complex, Complex>>> inputs;
        for (int b = 0; b < 4; b++) {
            inputs.push_back({b & 2 ? std::pair<Complex, Complex>{0, 1} : std::pair<Complex, Complex>{1, 0},
                              b & 1 ? std::pair<Complex, Complex>{0, 1} : std::pair<Complex, Complex>{1, 0}});
        }
        for (int i = 0; i < 50; i++) {
            inputs.push_back({random_qubit(rng), random_qubit(rng)});
        }
        for (const auto &q : inputs) {
            PhotonicState out = apply_linear(prepare_product_state(q, v.layout), v.t);
            QubitAmplitudes d = decode_qubits(project_qubit_structure(out, v.layout), v.layout);
            ComplexMatrix in(4, 1);
            in << q[0].first * q[1].first, q[0].first * q[1].second, q[0].second * q[1].first,
                q[0].second * q[1].second;
            o.check(equal_mod_global_phase(as_column(d.amplitudes), cz * in, 1e-9),
                    std::string(v.name) + " map differs from diag(1,1,1,-1)");
            o.check(std::abs(d.success_probability - 1.0 / 9) <= 1e-10, std::string(v.name) + " p != 1/9");
        }
    }
}

void bell(Outcome &o) {
    auto r = simulate_circuit(ghz_chain(2), "00", {});
    o.check(overlap_squared(ghz_vector(2), r.amplitudes) >= 1 - 1e-10, "fidelity");
    o.check(std::abs(r.success_probability - 1.0 / 9) <= 1e-10, "p != 1/9");
    o.detail << " p=" << r.success_probability;
}

void ghz_both(Outcome &o) {
    auto chain = simulate_circuit(ghz_chain(3), "000", {});
    auto swap = simulate_compiled(compile_ghz_swap_variant(unplaced()), "000");
    for (const auto *r : {&chain, &swap}) {
        o.check(overlap_squared(ghz_vector(3), r->amplitudes) >= 1 - 1e-10, "fidelity");
        o.check(std::abs(r->success_probability - 1.0 / 81) <= 1e-10, "p != 1/81");
    }
    o.detail << " p_chain=" << chain.success_probability << " p_swap=" << swap.success_probability;
}

void ghz_scaling(Outcome &o) {
    for (int n = 2; n <= 5; n++) {
        auto r = simulate_circuit(ghz_chain(n), std::string(n, '0'), unplaced());
        o.check(std::abs(r.success_probability - std::pow(9.0, 1 - n)) <= 1e-10, "n=" + std::to_string(n));
    }
}

void truncation_necessity(Outcome &o) {
    CompileOptions opt = unplaced();
    opt.truncate_aux = false;
    auto r = simulate_circuit(ghz_chain(3), "000", opt);
    double ov = overlap_squared(ghz_vector(3), r.amplitudes);
    o.check(ov < 1 - 1e-3, "untruncated chain still yields GHZ");
    o.detail << " overlap=" << ov;
}

void cascade(Outcome &o) {
    bool thrown = false;
    try {
        compile(CircuitIR{2, {CircuitGate::cnot(0, 1), CircuitGate::cz(0, 1)}}, {});
    } catch (const IllegalCascade &) {
        thrown = true;
    }
    o.check(thrown, "no IllegalCascade");
}

void oracle(Outcome &o) {
    std::mt19937_64 rng(107);
    double worst = 0;
    for (int i = 0; i < 100; i++) {
        int m = 2 + i % 5;
        int photons = 1 + (i / 5) % 3;
        ComplexMatrix t = random_unitary(rng, m);
        for (const auto &in : occupations(m, photons)) {
            PhotonicState s(m);
            s.add(in, 1);
            PhotonicState out = apply_linear(s, t);
            for (const auto &outocc : occupations(m, photons)) {
                worst = std::max(worst, std::abs(out.amplitude(outocc) - amplitude_via_permanent(t, in, outocc)));
            }
        }
    }
    o.check(worst <= 1e-10, "mismatch");
    o.detail << " max_diff=" << worst;
}

NetworkProgram single_gate(const GateDescriptor &d) {
    NetworkProgram p(d.mode_count());
    p.add_layer(LinearLayer::from_blocks(d.blocks, d.mode_count(), d.name));
    return p;
}

void embedding(Outcome &o) {
    LayeredTemplate nonreg = gate_template(cz_ps_nonregular());
    LayeredTemplate reg = gate_template(cz_ps_regular());
    int a = enumerate_placements(nonreg, MeshScheme::kClements, 6);
    int b = enumerate_placements(nonreg, MeshScheme::kReck, 6);
    int c = enumerate_placements(reg, MeshScheme::kClements, 6);
    int d = enumerate_placements(reg, MeshScheme::kReck, 6);
    o.detail << " nonregular " << a << "/" << b << " compressed " << c << "/" << d;
    o.check(a == 5, "nonregular Clements count " + std::to_string(a) + " != 5");
    o.check(b == 1, "nonregular Reck count != 1");
    o.check(c == 2, "compressed Clements count != 2");
    o.check(d == 1, "compressed Reck count != 1");
    bool overflow = false;
    try {
        place_in_mesh(single_gate(swap2_a()), MeshScheme::kReck, 6);
    } catch (const PlacementOverflow &) {
        overflow = true;
    }
    o.check(overflow, "SWAP2_A accepted by Reck");
    for (auto scheme : {MeshScheme::kClements, MeshScheme::kReck}) {
        try {
            place_in_mesh(single_gate(swap2()), scheme, 6);
        } catch (const PlacementOverflow &) {
            o.check(false, "SWAP2 rejected by " + std::string(scheme_name(scheme)));
        }
    }
}

void table_phases(Outcome &o) {
    for (auto g : {SingleQubitGate::kI, SingleQubitGate::kX, SingleQubitGate::kY, SingleQubitGate::kZ,
                   SingleQubitGate::kH, SingleQubitGate::kT}) {
        SingleQubitOp op{g, 0};
        o.check(equal_mod_global_phase(device_matrix(single_qubit_setting(op)), textbook_gate(op), 1e-9),
                single_qubit_name(g));
    }
    for (auto g : {SingleQubitGate::kRz, SingleQubitGate::kRx, SingleQubitGate::kRy}) {
        for (double d : {-2.0, -0.5, 0.3, 1.0, 2.9}) {
            SingleQubitOp op{g, d};
            o.check(equal_mod_global_phase(device_matrix(single_qubit_setting(op)), textbook_gate(op), 1e-9),
                    single_qubit_name(g));
        }
    }
}

void four_mode_no_go(Outcome &o) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-2, 2);
    double least = 1e300;
    for (int i = 0; i < 100; i++) {
        least = std::min(least, check_four_mode_constraints(Complex(u(rng), u(rng)), Complex(u(rng), u(rng)),
                                                             Complex(u(rng), u(rng))));
    }
    o.check(least > 1e-3, "constraint residual too small");
    FeasibilityReport r = search_cz_in_4x4(200, 2024);
    bool found = r.best_process_fidelity > 1 - 1e-3 && r.best_success_probability > 1e-6;
    o.check(!found, "search found a CZ");
    o.detail << " min_residual=" << least << " best_fidelity=" << r.best_process_fidelity
             << " at p=" << r.best_success_probability;
}

void mesh_faithfulness(Outcome &o) {
    for (int n : {2, 3}) {
        CompiledCircuit c = compile(ghz_chain(n), {});
        NetworkProgram rebuilt = reconstruct_from_mesh(*c.mesh);
        for (std::size_t input = 0; input < (std::size_t{1} << n); input++) {
            std::string bits(n, '0');
            for (int q = 0; q < n; q++) {
                bits[q] = ((input >> (n - 1 - q)) & 1) ? '1' : '0';
            }
            auto a = simulate_compiled(c, bits);
            auto b = simulate_program(c, rebuilt, bits);
            for (std::size_t k = 0; k < a.amplitudes.size(); k++) {
                o.check(std::abs(a.amplitudes[k] - b.amplitudes[k]) <= 1e-10, "n=" + std::to_string(n) + " " + bits);
            }
        }
    }
}

void hom(Outcome &o) {
    PhotonicState s(2);
    s.add({1, 1}, 1);
    PhotonicState out = apply_linear(s, to_transformation(beam_splitter()));
    o.check(std::abs(out.amplitude({1, 1})) <= 1e-12, "coincidence amplitude");
}

}  // namespace

int main() {
    struct Criterion {
        const char *name;
        void (*run)(Outcome &);
        double budget_seconds;
    };
    const Criterion criteria[] = {
        {"cz_correctness", cz_correctness, 1},
        {"bell_circuit", bell, 1},
        {"ghz_both_variants", ghz_both, 5},
        {"ghz_scaling", ghz_scaling, 60},
        {"truncation_necessity", truncation_necessity, 60},
        {"cascade_prohibition", cascade, 60},
        {"oracle_equivalence", oracle, 30},
        {"embedding_counts", embedding, 60},
        {"table_phases", table_phases, 60},
        {"four_mode_no_go", four_mode_no_go, 300},
        {"mesh_faithfulness", mesh_faithfulness, 60},
        {"hom_dip", hom, 60},
    };
    int failures = 0;
    int index = 1;
    for (const auto &c : criteria) {
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception &e) {
            o.check(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        o.check(secs <= c.budget_seconds, "over time budget");
        failures += !o.pass;
        std::printf("%s %2d %s (%.3fs)%s\n", o.pass ? "PASS" : "FAIL", index++, c.name, secs, o.detail.str().c_str());
    }
    std::printf("%d/%d criteria passed\n", 12 - failures, 12);
    return failures == 0 ? 0 : 1;
}
