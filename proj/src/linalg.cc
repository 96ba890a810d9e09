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

#include "photonmesh/linalg.h"

#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace photonmesh {

namespace {

constexpr Complex kI{0, 1};

void require_square(const ComplexMatrix &m, const char *what) {
    if (m.rows() != m.cols() || m.rows() < 1) {
        throw std::invalid_argument(std::string(what) + ": expected a non-empty square matrix, got " +
                                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
}

void require_finite(double x, const char *what) {
    if (!std::isfinite(x)) {
        throw std::invalid_argument(std::string(what) + ": non-finite value");
    }
}

}  // namespace

MziSetting MziSetting::from_relative(double theta_diff, double phi_diff) {
    MziSetting s;
    s.theta1 = theta_diff;
    s.phi1 = phi_diff;
    return s;
}

MziSetting MziSetting::from_relative(double theta_diff, double phi_diff, double out_diff) {
    MziSetting s = from_relative(theta_diff, phi_diff);
    s.phi3 = out_diff;
    s.phi4 = 0.0;
    return s;
}

std::string MziSetting::str() const {
    std::ostringstream out;
    out << "MziSetting(theta=" << theta1 << "," << theta2 << " phi=" << phi1 << "," << phi2;
    if (is_extended()) {
        out << " out=" << phi3.value_or(0) << "," << phi4.value_or(0);
    }
    out << ")";
    return out.str();
}

double wrap_angle(double angle) {
    double r = std::remainder(angle, 2 * kPi);
    if (r <= -kPi) {
        r += 2 * kPi;
    }
    return r;
}

ComplexMatrix bs_general(double t, double r) {
    require_finite(t, "bs_general");
    require_finite(r, "bs_general");
    ComplexMatrix m(2, 2);
    m << t, kI * r, kI * r, t;
    return m;
}

ComplexMatrix beam_splitter() {
    const double h = 1 / std::sqrt(2.0);
    return bs_general(h, h);
}

ComplexMatrix phase_shifter(double theta1, double theta2) {
    require_finite(theta1, "phase_shifter");
    require_finite(theta2, "phase_shifter");
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = std::polar(1.0, theta1);
    m(1, 1) = std::polar(1.0, theta2);
    return m;
}

ComplexMatrix mzi_unitary(const MziSetting &setting) {
    if (setting.is_extended()) {
        throw std::invalid_argument("mzi_unitary: setting carries output phases; use extended_mzi_unitary");
    }
    const ComplexMatrix bs = beam_splitter();
    return bs * phase_shifter(setting.theta1, setting.theta2) * bs * phase_shifter(setting.phi1, setting.phi2);
}

ComplexMatrix extended_mzi_unitary(const MziSetting &setting) {
    if (!setting.phi3.has_value() || !setting.phi4.has_value()) {
        throw std::invalid_argument("extended_mzi_unitary: output phases (phi3, phi4) are required");
    }
    MziSetting inner = setting;
    inner.phi3.reset();
    inner.phi4.reset();
    return phase_shifter(*setting.phi3, *setting.phi4) * mzi_unitary(inner);
}

ComplexMatrix device_matrix(const MziSetting &setting) {
    return setting.is_extended() ? extended_mzi_unitary(setting) : mzi_unitary(setting);
}

MziSetting fit_mzi_setting(const ComplexMatrix &u) {
    if (u.rows() != 2 || u.cols() != 2) {
        throw std::invalid_argument("fit_mzi_setting: expected a 2x2 matrix");
    }
    if (!check_unitary(u, kPhysicsTol).is_unitary) {
        throw std::invalid_argument("fit_mzi_setting: matrix is not unitary");
    }
    constexpr double eps = 1e-12;

    // Output phases are needed only when the second column is not real up to
    // a common phase.
    std::optional<double> out_phase;
    ComplexMatrix w = u;
    if (std::abs(u(0, 1)) > eps && std::abs(u(1, 1)) > eps) {
        double rel = wrap_angle(std::arg(u(0, 1)) - std::arg(u(1, 1)));
        if (std::abs(std::sin(rel)) > 1e-10) {
            out_phase = rel;
            w.row(0) *= std::polar(1.0, -rel);
        }
    }

    // w = g [[e^{i dphi} s, c], [e^{i dphi} c, -s]] with g = i e^{i(theta1+theta2+2 phi2)/2}.
    Complex ref = std::abs(w(0, 1)) >= std::abs(w(1, 1)) ? w(0, 1) : w(1, 1);
    Complex g = ref / std::abs(ref);
    double c = std::real(w(0, 1) / g);
    double s = -std::real(w(1, 1) / g);
    double theta_diff = 2 * std::atan2(s, c);
    Complex col0 = std::abs(s) >= std::abs(c) ? w(0, 0) / (g * s) : w(1, 0) / (g * c);
    double phi_diff = std::arg(col0);

    MziSetting out;
    out.theta1 = wrap_angle(theta_diff);
    out.theta2 = 0;
    out.phi2 = wrap_angle(std::arg(g) - kPi / 2 - theta_diff / 2);
    out.phi1 = wrap_angle(out.phi2 + phi_diff);
    if (out_phase) {
        out.phi3 = *out_phase;
        out.phi4 = 0.0;
    }
    return out;
}

ComplexMatrix embed_block_at(const ComplexMatrix &block, int top_mode, int m) {
    if (block.rows() != 2 || block.cols() != 2) {
        throw std::invalid_argument("embed_block: block must be 2x2");
    }
    if (top_mode < 0 || top_mode + 1 >= m) {
        throw std::out_of_range("embed_block: modes (" + std::to_string(top_mode) + "," +
                                std::to_string(top_mode + 1) + ") outside " + std::to_string(m) + " modes");
    }
    ComplexMatrix e = ComplexMatrix::Identity(m, m);
    e.block(top_mode, top_mode, 2, 2) = block;
    return e;
}

ComplexMatrix embed_block(const ComplexMatrix &block, int k, int m) {
    if (k < 1 || k > m - 1) {
        throw std::out_of_range("embed_block: k=" + std::to_string(k) + " must lie in [1, " +
                                std::to_string(m - 1) + "]");
    }
    return embed_block_at(block, k - 1, m);
}

Complex permanent(const ComplexMatrix &m) {
    require_square(m, "permanent");
    const int n = static_cast<int>(m.rows());
    if (n > kPermanentMaxDim) {
        throw std::invalid_argument("permanent: dimension " + std::to_string(n) + " exceeds cap " +
                                    std::to_string(kPermanentMaxDim));
    }
    if (n == 1) {
        return m(0, 0);
    }

    // Per(A) = (-1)^n sum_{S} (-1)^{|S|} prod_i sum_{j in S} a_ij, visiting
    // subsets in Gray-code order so each step toggles one column.
    std::vector<Complex> row_sums(n, Complex{0, 0});
    Complex total{0, 0};
    Complex compensation{0, 0};
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t step = 1; step < count; ++step) {
        int col = __builtin_ctzll(step);
        bool added = ((step ^ (step >> 1)) >> col) & 1;
        for (int i = 0; i < n; ++i) {
            row_sums[i] += added ? m(i, col) : -m(i, col);
        }
        Complex prod{1, 0};
        for (int i = 0; i < n; ++i) {
            prod *= row_sums[i];
        }
        int popcount = __builtin_popcountll(step ^ (step >> 1));
        Complex term = (popcount % 2 == 0) ? prod : -prod;
        // Kahan summation keeps the result independent of accumulated drift.
        Complex y = term - compensation;
        Complex t = total + y;
        compensation = (t - total) - y;
        total = t;
    }
    return (n % 2 == 0) ? total : -total;
}

UnitarityReport check_unitary(const ComplexMatrix &m, double tol) {
    require_square(m, "check_unitary");
    ComplexMatrix gram = m.adjoint() * m;
    gram -= ComplexMatrix::Identity(m.rows(), m.cols());
    UnitarityReport report;
    report.max_deviation = gram.cwiseAbs().maxCoeff();
    report.is_unitary = report.max_deviation <= tol;
    return report;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("max_abs_diff: dimension mismatch");
    }
    return (a - b).cwiseAbs().maxCoeff();
}

bool equal_mod_global_phase(const ComplexMatrix &a, const ComplexMatrix &b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("equal_mod_global_phase: dimension mismatch");
    }
    Eigen::Index bi = 0, bj = 0;
    (a.cwiseAbs() + b.cwiseAbs()).maxCoeff(&bi, &bj);
    Complex pa = a(bi, bj);
    Complex pb = b(bi, bj);
    Complex phase{1, 0};
    if (std::abs(pa) > 0 && std::abs(pb) > 0) {
        phase = pa * std::conj(pb);
        phase /= std::abs(phase);
    }
    return (a - phase * b).cwiseAbs().maxCoeff() <= tol;
}

ComplexMatrix to_transformation(const ComplexMatrix &device) {
    require_square(device, "to_transformation");
    if (check_unitary(device, kConstructionTol).is_unitary) {
        return device.adjoint();
    }
    Eigen::FullPivLU<ComplexMatrix> lu(device);
    if (!lu.isInvertible()) {
        throw std::invalid_argument("to_transformation: device matrix is singular");
    }
    return lu.inverse();
}

ComplexMatrix to_device(const ComplexMatrix &transformation) {
    // Inversion is an involution, so the same conversion applies both ways.
    return to_transformation(transformation);
}

}  // namespace photonmesh
