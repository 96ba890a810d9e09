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

#include "photonmesh/analysis.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <thread>

#include "photonmesh/compiler.h"
#include "photonmesh/fock.h"

namespace photonmesh {

namespace {

constexpr double kMinSuccess = 1e-6;

ComplexMatrix target_matrix(SearchTarget target) {
    ComplexMatrix g = ComplexMatrix::Identity(4, 4);
    if (target == SearchTarget::kCz) {
        g(3, 3) = -1;
    }
    return g;
}

double objective(const std::vector<double> &params, const ComplexMatrix &target, double *success) {
    auto [fidelity, p] = process_fidelity(postselected_map_4x4(mesh4_unitary(params)), target);
    if (success) {
        *success = p;
    }
    return p > kMinSuccess ? fidelity : 0;
}

struct LocalResult {
    double value = 0;
    std::vector<double> params;
};

template <typename F>
LocalResult coordinate_descent(std::vector<double> x, F f) {
    double best = f(x);
    for (double step = 1.0; step > 1e-7;) {
        bool improved = false;
        for (std::size_t i = 0; i < x.size(); i++) {
            for (double dir : {1.0, -1.0}) {
                double saved = x[i];
                x[i] = saved + dir * step;
                double v = f(x);
                if (v > best) {
                    best = v;
                    improved = true;
                    break;
                }
                x[i] = saved;
            }
        }
        if (!improved) {
            step /= 2;
        }
    }
    return {best, std::move(x)};
}

std::vector<double> random_vector(std::mt19937_64 &rng, std::size_t n, double lo, double hi) {
    std::uniform_real_distribution<double> dist(lo, hi);
    std::vector<double> v(n);
    for (auto &x : v) {
        x = dist(rng);
    }
    return v;
}

std::mt19937_64 restart_rng(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

// Least-infeasible point of the constrained family; parameters are
// (re, im) of gamma11, gamma23, c.
double minimal_constraint_residual(std::uint64_t seed) {
    auto negated = [](const std::vector<double> &x) {
        Complex g11(x[0], x[1]);
        Complex g23(x[2], x[3]);
        Complex c(x[4], x[5]);
        if (std::abs(g11) < 1e-9 || std::abs(g23) < 1e-9 || std::abs(c) < 1e-9) {
            return -1e300;
        }
        return -check_four_mode_constraints(g11, g23, c);
    };
    double best = 1e300;
    for (int r = 0; r < 8; r++) {
        auto rng = restart_rng(seed ^ 0x5bd1e995u, r);
        best = std::min(best, -coordinate_descent(random_vector(rng, 6, -1.5, 1.5), negated).value);
    }
    return best;
}

}  // namespace

ComplexMatrix mesh4_unitary(const std::vector<double> &params) {
    if (params.size() != kMesh4Parameters) {
        throw std::invalid_argument("mesh4_unitary: expected 16 phases");
    }
    static const int tops[6] = {0, 2, 1, 0, 2, 1};
    ComplexMatrix u = ComplexMatrix::Identity(4, 4);
    for (int j = 0; j < 6; j++) {
        MziSetting s{params[2 * j], 0, params[2 * j + 1], 0, std::nullopt, std::nullopt};
        u = embed_block_at(mzi_unitary(s), tops[j], 4) * u;
    }
    ComplexMatrix out = ComplexMatrix::Zero(4, 4);
    for (int k = 0; k < 4; k++) {
        out(k, k) = std::polar(1.0, params[12 + k]);
    }
    return out * u;
}

ComplexMatrix postselected_map_4x4(const ComplexMatrix &device) {
    ComplexMatrix t = to_transformation(device);
    ComplexMatrix m(4, 4);
    for (int in = 0; in < 4; in++) {
        OccupationVector input(4, 0);
        input[in >> 1] = 1;
        input[2 + (in & 1)] = 1;
        for (int out = 0; out < 4; out++) {
            OccupationVector output(4, 0);
            output[out >> 1] = 1;
            output[2 + (out & 1)] = 1;
            m(out, in) = amplitude_via_permanent(t, input, output);
        }
    }
    return m;
}

std::pair<double, double> process_fidelity(const ComplexMatrix &m, const ComplexMatrix &target) {
    double norm2 = m.squaredNorm();
    double p = norm2 / 4;
    if (norm2 == 0) {
        return {0, 0};
    }
    double overlap = std::norm((m.adjoint() * target).trace());
    return {std::clamp(overlap / (4 * norm2), 0.0, 1.0), std::clamp(p, 0.0, 1.0)};
}

int configured_threads() {
    int n = 0;
    if (const char *env = std::getenv("PHOTONMESH_THREADS")) {
        n = std::atoi(env);
    }
    if (n <= 0) {
        n = static_cast<int>(std::thread::hardware_concurrency());
    }
    return std::max(n, 1);
}

FeasibilityReport search_cz_in_4x4(int restarts, std::uint64_t seed, SearchTarget target, int threads) {
    if (restarts < 1) {
        throw std::invalid_argument("search_cz_in_4x4: restarts must be >= 1");
    }
    const ComplexMatrix g = target_matrix(target);
    std::vector<LocalResult> results(restarts);
    auto run = [&](int r) {
        auto rng = restart_rng(seed, r);
        results[r] = coordinate_descent(random_vector(rng, kMesh4Parameters, 0, 2 * kPi),
                                        [&](const std::vector<double> &x) {
                                            return objective(x, g, nullptr);
                                        });
    };
    int workers = std::min(threads > 0 ? threads : configured_threads(), restarts);
    if (workers <= 1) {
        for (int r = 0; r < restarts; r++) {
            run(r);
        }
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; w++) {
            pool.emplace_back([&, w] {
                for (int r = w; r < restarts; r += workers) {
                    run(r);
                }
            });
        }
        for (auto &t : pool) {
            t.join();
        }
    }

    FeasibilityReport report;
    report.restarts = restarts;
    for (int r = 0; r < restarts; r++) {
        if (report.best_restart < 0 || results[r].value > report.best_process_fidelity) {
            report.best_restart = r;
            report.best_process_fidelity = results[r].value;
        }
    }
    report.best_parameters = results[report.best_restart].params;
    objective(report.best_parameters, g, &report.best_success_probability);
    report.constraint_residual = minimal_constraint_residual(seed);
    return report;
}

double check_four_mode_constraints(Complex gamma11, Complex gamma23, Complex c) {
    if (gamma11 == Complex(0) || gamma23 == Complex(0) || c == Complex(0)) {
        throw std::invalid_argument("check_four_mode_constraints: parameters must be nonzero");
    }
    ComplexMatrix v = ComplexMatrix::Zero(4, 4);
    v(0, 0) = gamma11;
    v(1, 1) = -gamma11;
    v(1, 2) = gamma23;
    v(2, 1) = 2.0 * c / gamma23;
    v(2, 2) = c / gamma11;
    v(3, 3) = c / gamma11;
    return check_unitary(v).max_deviation;
}

std::vector<std::pair<int, double>> ghz_probability_scan(int n_max) {
    if (n_max < 2 || n_max > 5) {
        throw std::invalid_argument("ghz_probability_scan: n_max must be in [2, 5]");
    }
    CompileOptions options;
    options.place = false;
    std::vector<std::pair<int, double>> out;
    for (int n = 2; n <= n_max; n++) {
        auto result = simulate_circuit(ghz_chain(n), std::string(n, '0'), options);
        out.emplace_back(n, result.success_probability);
    }
    return out;
}

}  // namespace photonmesh
