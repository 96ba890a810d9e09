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

#include "photonmesh/fock.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "photonmesh/format.h"

namespace photonmesh {

namespace {

// sqrt(n!) for the small counts that occur in practice.
double sqrt_factorial(int n) {
    double r = 1;
    for (int k = 2; k <= n; ++k) {
        r *= k;
    }
    return std::sqrt(r);
}

double sqrt_factorial_product(const OccupationVector &occ) {
    double r = 1;
    for (auto n : occ) {
        r *= sqrt_factorial(n);
    }
    return r;
}

void require_modes(int expected, int actual, const char *what) {
    if (expected != actual) {
        throw std::invalid_argument(std::string(what) + ": mode count mismatch (" + std::to_string(expected) +
                                    " vs " + std::to_string(actual) + ")");
    }
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) {
        parent[find(a)] = find(b);
    }
};

// Groups of modes mixed by the transformation. Modes acted on trivially are
// left out; every returned group is closed under the matrix.
std::vector<std::vector<int>> active_components(const ComplexMatrix &t) {
    const int m = static_cast<int>(t.rows());
    UnionFind uf(m);
    std::vector<bool> active(m, false);
    for (int j = 0; j < m; ++j) {
        for (int k = 0; k < m; ++k) {
            if (j == k) {
                if (t(j, k) != Complex{1, 0}) {
                    active[j] = true;
                }
            } else if (t(j, k) != Complex{0, 0}) {
                active[j] = active[k] = true;
                uf.unite(j, k);
            }
        }
    }
    std::map<int, std::vector<int>> groups;
    for (int j = 0; j < m; ++j) {
        if (active[j]) {
            groups[uf.find(j)].push_back(j);
        }
    }
    std::vector<std::vector<int>> out;
    for (auto &[root, modes] : groups) {
        out.push_back(std::move(modes));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Applies the restriction of `t` to `modes` to every term.
PhotonicState apply_component(const PhotonicState &state, const ComplexMatrix &t, const std::vector<int> &modes) {
    const int width = static_cast<int>(modes.size());
    PhotonicState out(state.mode_count());
    std::map<OccupationVector, Complex> poly;
    std::map<OccupationVector, Complex> next;
    for (const auto &[occ, amp] : state.terms()) {
        bool touched = false;
        for (int mode : modes) {
            touched |= occ[mode] != 0;
        }
        if (!touched) {
            out.add(occ, amp);
            continue;
        }
        // Multiply out prod_j (sum_k t_jk a_k^dagger)^{n_j} over the group's modes.
        poly.clear();
        poly.emplace(OccupationVector(width, 0), Complex{1, 0});
        double in_norm = 1;
        for (int a = 0; a < width; ++a) {
            int count = occ[modes[a]];
            in_norm *= sqrt_factorial(count);
            for (int rep = 0; rep < count; ++rep) {
                next.clear();
                for (const auto &[mono, coef] : poly) {
                    for (int b = 0; b < width; ++b) {
                        Complex tk = t(modes[a], modes[b]);
                        if (tk == Complex{0, 0}) {
                            continue;
                        }
                        OccupationVector grown = mono;
                        grown[b] += 1;
                        next[grown] += coef * tk;
                    }
                }
                poly.swap(next);
            }
        }
        OccupationVector result = occ;
        for (const auto &[mono, coef] : poly) {
            for (int b = 0; b < width; ++b) {
                result[modes[b]] = mono[b];
            }
            out.add(result, amp * coef * (sqrt_factorial_product(mono) / in_norm));
        }
    }
    return out;
}

}  // namespace

int total_photons(const OccupationVector &occupation) {
    int total = 0;
    for (auto n : occupation) {
        total += n;
    }
    return total;
}

PhotonicState::PhotonicState(int mode_count) : mode_count_(mode_count) {
    if (mode_count < 1) {
        throw std::invalid_argument("PhotonicState: mode count must be positive");
    }
}

void PhotonicState::add(const OccupationVector &occupation, Complex amplitude) {
    if (static_cast<int>(occupation.size()) != mode_count_) {
        throw std::invalid_argument("PhotonicState::add: occupation length " + std::to_string(occupation.size()) +
                                    " != mode count " + std::to_string(mode_count_));
    }
    terms_[occupation] += amplitude;
}

Complex PhotonicState::amplitude(const OccupationVector &occupation) const {
    auto it = terms_.find(occupation);
    return it == terms_.end() ? Complex{0, 0} : it->second;
}

double PhotonicState::norm_squared() const {
    double total = 0;
    for (const auto &[occ, amp] : terms_) {
        total += std::norm(amp);
    }
    return total;
}

void PhotonicState::prune(double threshold) {
    std::erase_if(terms_, [threshold](const auto &kv) { return std::abs(kv.second) < threshold; });
}

std::string PhotonicState::dump() const {
    std::ostringstream out;
    for (const auto &[occ, amp] : terms_) {
        for (std::size_t k = 0; k < occ.size(); ++k) {
            if (k) {
                out << ',';
            }
            out << static_cast<int>(occ[k]);
        }
        out << ' ' << format_number(amp.real()) << ' ' << format_number(amp.imag()) << '\n';
    }
    return out.str();
}

QubitLayout QubitLayout::regular(int qubit_count) {
    if (qubit_count < 1) {
        throw std::invalid_argument("QubitLayout: need at least one qubit");
    }
    std::vector<QubitModes> q;
    for (int j = 0; j < qubit_count; ++j) {
        q.push_back({3 * j, 3 * j + 1, 3 * j + 2});
    }
    return QubitLayout(std::move(q));
}

QubitLayout QubitLayout::nonregular_pair() {
    return from_triplets({{0, 1, 2}, {5, 3, 4}});
}

QubitLayout QubitLayout::from_triplets(std::vector<QubitModes> triplets) {
    if (triplets.empty()) {
        throw std::invalid_argument("QubitLayout: need at least one qubit");
    }
    const int m = 3 * static_cast<int>(triplets.size());
    std::vector<int> seen(m, 0);
    for (const auto &t : triplets) {
        for (int mode : {t.aux, t.zero, t.one}) {
            if (mode < 0 || mode >= m || seen[mode]++) {
                throw std::invalid_argument("QubitLayout: triplets must partition modes 0.." + std::to_string(m - 1));
            }
        }
    }
    return QubitLayout(std::move(triplets));
}

std::vector<int> QubitLayout::aux_modes() const {
    std::vector<int> out;
    for (const auto &q : qubits_) {
        out.push_back(q.aux);
    }
    return out;
}

LinearLayer LinearLayer::from_blocks(std::vector<MziBlock> blocks, int mode_count, std::string label) {
    ComplexMatrix device = ComplexMatrix::Identity(mode_count, mode_count);
    for (const auto &b : blocks) {
        device = embed_block_at(b.device(), b.top_mode, mode_count) * device;
    }
    LinearLayer layer;
    layer.transformation = to_transformation(device);
    layer.blocks = std::move(blocks);
    layer.label = std::move(label);
    return layer;
}

NetworkProgram::NetworkProgram(int mode_count) : mode_count_(mode_count) {
    if (mode_count < 1) {
        throw std::invalid_argument("NetworkProgram: mode count must be positive");
    }
}

void NetworkProgram::add_layer(LinearLayer layer) {
    if (layer.transformation.rows() != mode_count_ || layer.transformation.cols() != mode_count_) {
        throw std::invalid_argument("NetworkProgram: layer must be " + std::to_string(mode_count_) + "x" +
                                    std::to_string(mode_count_));
    }
    steps_.emplace_back(std::move(layer));
}

void NetworkProgram::add_truncation(std::vector<int> modes) {
    for (int mode : modes) {
        if (mode < 0 || mode >= mode_count_) {
            throw std::out_of_range("NetworkProgram: truncation mode " + std::to_string(mode) + " out of range");
        }
    }
    std::sort(modes.begin(), modes.end());
    modes.erase(std::unique(modes.begin(), modes.end()), modes.end());
    steps_.emplace_back(TruncateAux{std::move(modes)});
}

void NetworkProgram::append(const NetworkProgram &other) {
    require_modes(mode_count_, other.mode_count_, "NetworkProgram::append");
    steps_.insert(steps_.end(), other.steps_.begin(), other.steps_.end());
}

std::size_t NetworkProgram::block_count() const {
    std::size_t n = 0;
    for (const auto &step : steps_) {
        if (const auto *layer = std::get_if<LinearLayer>(&step)) {
            n += layer->blocks.size();
        }
    }
    return n;
}

std::size_t NetworkProgram::truncation_count() const {
    return std::count_if(steps_.begin(), steps_.end(),
                         [](const ProgramStep &s) { return std::holds_alternative<TruncateAux>(s); });
}

PhotonicState prepare_computational_basis(std::string_view bits, const QubitLayout &layout) {
    if (static_cast<int>(bits.size()) != layout.qubit_count()) {
        throw std::invalid_argument("prepare_computational_basis: " + std::to_string(bits.size()) +
                                    " bits for " + std::to_string(layout.qubit_count()) + " qubits");
    }
    OccupationVector occ(layout.mode_count(), 0);
    for (int j = 0; j < layout.qubit_count(); ++j) {
        if (bits[j] == '0') {
            occ[layout.qubit(j).zero] = 1;
        } else if (bits[j] == '1') {
            occ[layout.qubit(j).one] = 1;
        } else {
            throw std::invalid_argument("prepare_computational_basis: bits must be '0' or '1'");
        }
    }
    PhotonicState state(layout.mode_count());
    state.add(occ, 1.0);
    return state;
}

PhotonicState prepare_product_state(const std::vector<std::pair<Complex, Complex>> &qubits,
                                    const QubitLayout &layout) {
    const int n = layout.qubit_count();
    if (static_cast<int>(qubits.size()) != n) {
        throw std::invalid_argument("prepare_product_state: qubit count mismatch");
    }
    PhotonicState state(layout.mode_count());
    for (std::uint64_t index = 0; index < (std::uint64_t{1} << n); ++index) {
        OccupationVector occ(layout.mode_count(), 0);
        Complex amp{1, 0};
        for (int j = 0; j < n; ++j) {
            bool one = (index >> (n - 1 - j)) & 1;
            occ[one ? layout.qubit(j).one : layout.qubit(j).zero] = 1;
            amp *= one ? qubits[j].second : qubits[j].first;
        }
        if (amp != Complex{0, 0}) {
            state.add(occ, amp);
        }
    }
    return state;
}

PhotonicState apply_linear(const PhotonicState &state, const ComplexMatrix &transformation) {
    if (transformation.rows() != transformation.cols()) {
        throw std::invalid_argument("apply_linear: transformation must be square");
    }
    require_modes(state.mode_count(), static_cast<int>(transformation.rows()), "apply_linear");
    PhotonicState current = state;
    for (const auto &modes : active_components(transformation)) {
        current = apply_component(current, transformation, modes);
    }
    current.prune();
    return current;
}

Complex amplitude_via_permanent(const ComplexMatrix &transformation, const OccupationVector &input,
                                const OccupationVector &output) {
    const int m = static_cast<int>(transformation.rows());
    if (transformation.cols() != m || static_cast<int>(input.size()) != m ||
        static_cast<int>(output.size()) != m) {
        throw std::invalid_argument("amplitude_via_permanent: dimension mismatch");
    }
    const int photons = total_photons(input);
    if (photons != total_photons(output)) {
        throw std::invalid_argument("amplitude_via_permanent: photon number mismatch");
    }
    if (photons == 0) {
        return 1.0;
    }
    std::vector<int> rows, cols;
    for (int j = 0; j < m; ++j) {
        rows.insert(rows.end(), input[j], j);
        cols.insert(cols.end(), output[j], j);
    }
    ComplexMatrix sub(photons, photons);
    for (int a = 0; a < photons; ++a) {
        for (int b = 0; b < photons; ++b) {
            sub(a, b) = transformation(rows[a], cols[b]);
        }
    }
    return permanent(sub) / (sqrt_factorial_product(input) * sqrt_factorial_product(output));
}

PhotonicState truncate_aux(const PhotonicState &state, const std::vector<int> &aux_modes) {
    for (int mode : aux_modes) {
        if (mode < 0 || mode >= state.mode_count()) {
            throw std::out_of_range("truncate_aux: mode " + std::to_string(mode) + " out of range");
        }
    }
    PhotonicState out(state.mode_count());
    for (const auto &[occ, amp] : state.terms()) {
        bool clean = std::all_of(aux_modes.begin(), aux_modes.end(), [&](int m) { return occ[m] == 0; });
        if (clean) {
            out.add(occ, amp);
        }
    }
    return out;
}

PostSelectionResult project_qubit_structure(const PhotonicState &state, const QubitLayout &layout) {
    require_modes(layout.mode_count(), state.mode_count(), "project_qubit_structure");
    PhotonicState kept(state.mode_count());
    for (const auto &[occ, amp] : state.terms()) {
        bool ok = true;
        for (int j = 0; j < layout.qubit_count() && ok; ++j) {
            const auto &q = layout.qubit(j);
            ok = occ[q.aux] == 0 && occ[q.zero] + occ[q.one] == 1;
        }
        if (ok) {
            kept.add(occ, amp);
        }
    }
    double p = kept.norm_squared();
    return {std::move(kept), std::min(p, 1.0)};
}

QubitAmplitudes decode_qubits(const PostSelectionResult &result, const QubitLayout &layout) {
    require_modes(layout.mode_count(), result.projected_state.mode_count(), "decode_qubits");
    const int n = layout.qubit_count();
    std::vector<Complex> amps(std::size_t{1} << n, Complex{0, 0});
    for (const auto &[occ, amp] : result.projected_state.terms()) {
        std::size_t index = 0;
        for (int j = 0; j < n; ++j) {
            const auto &q = layout.qubit(j);
            if (occ[q.aux] != 0 || occ[q.zero] + occ[q.one] != 1) {
                throw std::invalid_argument("decode_qubits: state violates the qubit structure");
            }
            index = (index << 1) | (occ[q.one] ? 1 : 0);
        }
        amps[index] += amp;
    }
    double norm2 = 0;
    for (auto a : amps) {
        norm2 += std::norm(a);
    }
    if (norm2 <= 0) {
        throw std::domain_error("decode_qubits: post-selection left an empty state");
    }
    double scale = 1 / std::sqrt(norm2);
    for (auto &a : amps) {
        a *= scale;
    }
    return {std::move(amps), result.success_probability};
}

PhotonicState run_program(const NetworkProgram &program, const PhotonicState &input) {
    require_modes(program.mode_count(), input.mode_count(), "run_program");
    PhotonicState state = input;
    for (const auto &step : program.steps()) {
        if (const auto *layer = std::get_if<LinearLayer>(&step)) {
            state = apply_linear(state, layer->transformation);
        } else {
            state = truncate_aux(state, std::get<TruncateAux>(step).modes);
        }
    }
    return state;
}

}  // namespace photonmesh
