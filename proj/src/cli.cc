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

#include "photonmesh/cli.h"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "photonmesh/analysis.h"
#include "photonmesh/circuit_io.h"
#include "photonmesh/compiler.h"
#include "photonmesh/format.h"
#include "photonmesh/gates.h"

namespace photonmesh {

namespace {

using nlohmann::json;

// Residue of exact cancellations; printed as 0.
constexpr double kPrintFloor = 1e-13;

double clean(double x) {
    return std::abs(x) < kPrintFloor ? 0.0 : x;
}

// Round-trips through the printed form so JSON output carries 15 significant digits.
double rounded(double x) {
    return round_to_printed(clean(x));
}

json complex_json(Complex z) {
    return json::array({rounded(z.real()), rounded(z.imag())});
}

json setting_json(const MziSetting &s) {
    json j{{"theta1", rounded(s.theta1)}, {"theta2", rounded(s.theta2)}, {"phi1", rounded(s.phi1)},
           {"phi2", rounded(s.phi2)}};
    if (s.phi3) {
        j["phi3"] = rounded(*s.phi3);
    }
    if (s.phi4) {
        j["phi4"] = rounded(*s.phi4);
    }
    return j;
}

json descriptor_json(const GateDescriptor &d) {
    json matrix = json::array();
    for (int r = 0; r < d.matrix.rows(); r++) {
        json row = json::array();
        for (int c = 0; c < d.matrix.cols(); c++) {
            row.push_back(complex_json(d.matrix(r, c)));
        }
        matrix.push_back(std::move(row));
    }
    json blocks = json::array();
    for (const auto &b : d.blocks) {
        json jb = setting_json(b.setting);
        jb["top_mode"] = b.top_mode;
        jb["role"] = b.role;
        blocks.push_back(std::move(jb));
    }
    return json{{"name", d.name},
                {"arity", d.arity},
                {"labeling", std::string(labeling_name(d.labeling))},
                {"modes", d.mode_count()},
                {"truncate_after", d.truncate_after},
                {"matrix", std::move(matrix)},
                {"blocks", std::move(blocks)}};
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw CircuitParseError("cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    out << text;
}

std::string bitstring(std::size_t index, int n) {
    std::string s(n, '0');
    for (int q = 0; q < n; q++) {
        if ((index >> (n - 1 - q)) & 1) {
            s[q] = '1';
        }
    }
    return s;
}

struct Config {
    std::string scheme = "clements";
    std::string format = "human";
    std::uint64_t seed = 1;
    std::string dump_state;
    std::string circuit_path;
    std::string builtin;
    std::string input_bits;
    std::string output_path;
    std::string gate_name;
    bool json_flag = false;
    int restarts = 200;
    int max_n = 5;
    bool no_restore = false;
};

MeshScheme scheme_of(const Config &cfg) {
    auto s = parse_scheme(cfg.scheme);
    if (!s) {
        throw CircuitParseError("unknown scheme '" + cfg.scheme + "'");
    }
    return *s;
}

std::string format_of(const Config &cfg) {
    return cfg.json_flag ? "json" : cfg.format;
}

CompiledCircuit compile_from_config(const Config &cfg, bool place) {
    CompileOptions options;
    options.place = place;
    options.scheme = scheme_of(cfg);
    options.restore_permutation = !cfg.no_restore;
    if (!cfg.builtin.empty()) {
        if (cfg.builtin == "bell") {
            return compile(ghz_chain(2), options);
        }
        if (cfg.builtin == "ghz") {
            return compile(ghz_chain(3), options);
        }
        if (cfg.builtin == "ghz-swap") {
            return compile_ghz_swap_variant(options);
        }
        throw CircuitParseError("unknown builtin circuit '" + cfg.builtin + "'");
    }
    if (cfg.circuit_path.empty()) {
        throw CircuitParseError("no circuit file given");
    }
    return compile(parse_circuit_json(read_file(cfg.circuit_path)), options);
}

int cmd_compile(const Config &cfg, std::ostream &out) {
    CompiledCircuit compiled = compile_from_config(cfg, true);
    const MeshAssignment &mesh = *compiled.mesh;
    std::string table = phase_table_json(mesh);
    if (!cfg.output_path.empty()) {
        write_file(cfg.output_path, table);
    }
    std::string fmt = format_of(cfg);
    if (fmt == "json") {
        out << table;
    } else if (fmt == "tsv") {
        out << "scheme\tmodes\tlayers\tlayers_used\tslots_used\tslots_total\ttruncations\n";
        out << scheme_name(mesh.scheme) << '\t' << mesh.mode_count << '\t' << mesh.layer_count << '\t'
            << mesh.used_layers() << '\t' << mesh.used_slots() << '\t' << mesh.slots.size() << '\t'
            << mesh.truncations.size() << '\n';
    } else {
        out << "scheme: " << scheme_name(mesh.scheme) << "\n";
        out << "modes: " << mesh.mode_count << "\n";
        out << "slots used: " << mesh.used_slots() << " / " << mesh.slots.size() << "\n";
        out << "layers used: " << mesh.used_layers() << " / " << mesh.layer_count << "\n";
        out << "post-selected gates: " << compiled.post_selected_gates << "\n";
        // Logical qubit q ends on physical qubit final_permutation[q].
        out << "final permutation:";
        for (int p : compiled.final_permutation) {
            out << ' ' << p;
        }
        out << "\n";
        for (const auto &t : mesh.truncations) {
            out << "truncate after layer " << t.after_layer << ": modes";
            for (int k : t.modes) {
                out << ' ' << k;
            }
            out << "\n";
        }
    }
    return kExitOk;
}

int cmd_simulate(const Config &cfg, std::ostream &out) {
    CompiledCircuit compiled = compile_from_config(cfg, false);
    const int n = compiled.layout.qubit_count();
    std::string bits = cfg.input_bits.empty() ? std::string(n, '0') : cfg.input_bits;
    if (static_cast<int>(bits.size()) != n || bits.find_first_not_of("01") != std::string::npos) {
        throw CircuitParseError("input must be a bitstring of length " + std::to_string(n));
    }
    SimulationResult result = simulate_compiled(compiled, bits);
    if (!cfg.dump_state.empty()) {
        write_file(cfg.dump_state, result.output_state.dump());
    }
    std::string fmt = format_of(cfg);
    if (fmt == "json") {
        json amps = json::object();
        for (std::size_t i = 0; i < result.amplitudes.size(); i++) {
            if (std::abs(result.amplitudes[i]) > 1e-12) {
                amps[bitstring(i, n)] = complex_json(result.amplitudes[i]);
            }
        }
        json doc{{"input", bits},
                 {"success_probability", rounded(result.success_probability)},
                 {"amplitudes", std::move(amps)}};
        out << doc.dump(2) << "\n";
        return kExitOk;
    }
    const char *sep = fmt == "tsv" ? "\t" : " ";
    out << "success_probability" << sep << format_number(result.success_probability) << "\n";
    for (std::size_t i = 0; i < result.amplitudes.size(); i++) {
        if (std::abs(result.amplitudes[i]) > 1e-12) {
            out << bitstring(i, n) << sep << format_number(clean(result.amplitudes[i].real())) << sep
                << format_number(clean(result.amplitudes[i].imag())) << "\n";
        }
    }
    return kExitOk;
}

int cmd_gates_list(const Config &cfg, std::ostream &out) {
    std::vector<GateDescriptor> gates = gate_library();
    if (!cfg.gate_name.empty()) {
        std::erase_if(gates, [&](const auto &d) {
            return d.name != cfg.gate_name;
        });
        if (gates.empty()) {
            throw CircuitParseError("no gate named '" + cfg.gate_name + "'");
        }
    }
    std::string fmt = format_of(cfg);
    if (fmt == "json") {
        json doc = json::array();
        for (const auto &d : gates) {
            doc.push_back(descriptor_json(d));
        }
        out << doc.dump(2) << "\n";
        return kExitOk;
    }
    const char *sep = fmt == "tsv" ? "\t" : "  ";
    out << "name" << sep << "arity" << sep << "labeling" << sep << "modes" << sep << "blocks" << sep
        << "truncate_after\n";
    for (const auto &d : gates) {
        out << d.name << sep << d.arity << sep << labeling_name(d.labeling) << sep << d.mode_count() << sep
            << d.blocks.size() << sep << (d.truncate_after ? "yes" : "no") << "\n";
    }
    return kExitOk;
}

int cmd_cz4x4(const Config &cfg, std::ostream &out) {
    FeasibilityReport r = search_cz_in_4x4(cfg.restarts, cfg.seed);
    if (format_of(cfg) == "json") {
        json params = json::array();
        for (double p : r.best_parameters) {
            params.push_back(rounded(p));
        }
        json doc{{"restarts", r.restarts},
                 {"seed", cfg.seed},
                 {"best_process_fidelity", rounded(r.best_process_fidelity)},
                 {"best_success_probability", rounded(r.best_success_probability)},
                 {"best_restart", r.best_restart},
                 {"best_parameters", std::move(params)},
                 {"constraint_residual", rounded(r.constraint_residual)}};
        out << doc.dump(2) << "\n";
        return kExitOk;
    }
    out << "restarts " << r.restarts << "\n";
    out << "best_process_fidelity " << format_number(r.best_process_fidelity) << "\n";
    out << "best_success_probability " << format_number(r.best_success_probability) << "\n";
    out << "constraint_residual " << format_number(r.constraint_residual) << "\n";
    return kExitOk;
}

int cmd_ghz_scan(const Config &cfg, std::ostream &out) {
    auto scan = ghz_probability_scan(cfg.max_n);
    if (format_of(cfg) == "json") {
        json doc = json::array();
        for (auto [n, p] : scan) {
            doc.push_back({{"n", n}, {"probability", rounded(p)}, {"expected", rounded(std::pow(9.0, 1 - n))}});
        }
        out << doc.dump(2) << "\n";
        return kExitOk;
    }
    for (auto [n, p] : scan) {
        out << n << (format_of(cfg) == "tsv" ? "\t" : " ") << format_number(p) << "\n";
    }
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    Config cfg;
    CLI::App app{"Path-encoded photonic circuit compiler and simulator"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--scheme", cfg.scheme, "Mesh scheme")->check(CLI::IsMember({"clements", "reck"}));
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "tsv", "human"}));
    app.add_option("--seed", cfg.seed, "Random seed");
    app.add_option("--dump-state", cfg.dump_state, "Write the full output state to PATH");

    auto *compile_cmd = app.add_subcommand("compile", "Compile a circuit and emit its phase table");
    auto *simulate_cmd = app.add_subcommand("simulate", "Simulate a circuit on a basis input");
    for (auto *cmd : {compile_cmd, simulate_cmd}) {
        cmd->add_option("circuit", cfg.circuit_path, "Circuit JSON file");
        cmd->add_option("--builtin", cfg.builtin, "bell, ghz or ghz-swap instead of a file");
        cmd->add_flag("--no-restore", cfg.no_restore, "Keep routed qubits where they end up");
        cmd->add_flag("--json", cfg.json_flag, "Same as --format json");
    }
    compile_cmd->add_option("-o,--output", cfg.output_path, "Phase table JSON file");
    simulate_cmd->add_option("--input", cfg.input_bits, "Input bitstring, qubit 0 first");

    auto *gates_cmd = app.add_subcommand("gates", "Gate library");
    gates_cmd->require_subcommand(1)->fallthrough();
    auto *list_cmd = gates_cmd->add_subcommand("list", "List gate descriptors");
    list_cmd->add_flag("--json", cfg.json_flag, "Same as --format json");
    list_cmd->add_option("--name", cfg.gate_name, "Only this descriptor");

    auto *analyze_cmd = app.add_subcommand("analyze", "Numerical studies");
    analyze_cmd->require_subcommand(1)->fallthrough();
    auto *cz_cmd = analyze_cmd->add_subcommand("cz4x4", "Search for a post-selected CZ on 4 modes");
    cz_cmd->add_option("--restarts", cfg.restarts)->check(CLI::PositiveNumber);
    cz_cmd->add_option("--seed", cfg.seed);
    cz_cmd->add_flag("--json", cfg.json_flag);
    auto *scan_cmd = analyze_cmd->add_subcommand("ghz-scan", "GHZ chain success probabilities");
    scan_cmd->add_option("--max-n", cfg.max_n)->check(CLI::Range(2, 5));
    scan_cmd->add_flag("--json", cfg.json_flag);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitParseError;
    }

    try {
        if (compile_cmd->parsed()) {
            return cmd_compile(cfg, out);
        }
        if (simulate_cmd->parsed()) {
            return cmd_simulate(cfg, out);
        }
        if (list_cmd->parsed()) {
            return cmd_gates_list(cfg, out);
        }
        if (cz_cmd->parsed()) {
            return cmd_cz4x4(cfg, out);
        }
        if (scan_cmd->parsed()) {
            return cmd_ghz_scan(cfg, out);
        }
    } catch (const IllegalCascade &e) {
        err << "illegal cascade: " << e.what() << "\n";
        return kExitIllegalCascade;
    } catch (const PlacementOverflow &e) {
        err << "placement overflow: " << e.what() << "\n";
        return kExitPlacementOverflow;
    } catch (const CircuitParseError &e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitFailure;
}

}  // namespace photonmesh
