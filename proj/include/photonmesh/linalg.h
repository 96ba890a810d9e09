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

#ifndef PHOTONMESH_LINALG_H
#define PHOTONMESH_LINALG_H

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <string>

namespace photonmesh {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double kPi = 3.14159265358979323846;

/// Tolerance for identities that hold by construction (products of exact blocks).
inline constexpr double kConstructionTol = 1e-12;
/// Tolerance for physics-level comparisons (post-selected maps, gate equivalence).
inline constexpr double kPhysicsTol = 1e-9;

/// Largest square matrix accepted by `permanent`.
inline constexpr int kPermanentMaxDim = 14;

/// Phase settings of one MZI slot.
///
/// Device matrix: BS . PS(theta1, theta2) . BS . PS(phi1, phi2), optionally
/// followed by an output phase pair PS(phi3, phi4). Gate recipes only fix the
/// differences theta1 - theta2 and phi1 - phi2 (and phi3 - phi4); absolute
/// values additionally fix the global phase of the block.
struct MziSetting {
    double theta1 = 0;
    double theta2 = 0;
    double phi1 = 0;
    double phi2 = 0;
    std::optional<double> phi3;
    std::optional<double> phi4;

    /// Canonical setting with theta2 = phi2 = 0.
    static MziSetting from_relative(double theta_diff, double phi_diff);
    /// Canonical extended setting with theta2 = phi2 = phi4 = 0.
    static MziSetting from_relative(double theta_diff, double phi_diff, double out_diff);

    bool is_extended() const {
        return phi3.has_value() || phi4.has_value();
    }
    double theta_diff() const {
        return theta1 - theta2;
    }
    double phi_diff() const {
        return phi1 - phi2;
    }
    double out_diff() const {
        return phi3.value_or(0) - phi4.value_or(0);
    }
    std::string str() const;
};

/// Generic beam splitter [[t, i r], [i r, t]]. Lossy or unbalanced values are allowed.
ComplexMatrix bs_general(double t, double r);

/// Ideal 50:50 beam splitter, plus-sign (MMI) variant.
ComplexMatrix beam_splitter();

/// diag(e^{i theta1}, e^{i theta2}).
ComplexMatrix phase_shifter(double theta1, double theta2);

/// MZI device matrix. Throws std::invalid_argument for an extended setting.
ComplexMatrix mzi_unitary(const MziSetting &setting);

/// PS(phi3, phi4) . MZI. Throws std::invalid_argument if the output pair is absent.
ComplexMatrix extended_mzi_unitary(const MziSetting &setting);

/// Dispatches to mzi_unitary or extended_mzi_unitary.
ComplexMatrix device_matrix(const MziSetting &setting);

/// Finds absolute phases whose device matrix equals `u` exactly (no leftover
/// global phase). A plain MZI is used whenever possible; otherwise the output
/// pair is added. `u` must be a 2x2 unitary.
MziSetting fit_mzi_setting(const ComplexMatrix &u);

/// Embeds a 2x2 block on 1-based modes (k, k+1) of an m-mode identity.
ComplexMatrix embed_block(const ComplexMatrix &block, int k, int m);

/// Same as embed_block but with a 0-based top mode.
ComplexMatrix embed_block_at(const ComplexMatrix &block, int top_mode, int m);

/// Ryser inclusion-exclusion in Gray-code order, O(2^n n).
Complex permanent(const ComplexMatrix &m);

struct UnitarityReport {
    double max_deviation = 0;
    bool is_unitary = false;
};

/// Max entry-wise deviation of U^dagger U from identity.
UnitarityReport check_unitary(const ComplexMatrix &m, double tol = kConstructionTol);

/// True iff max |a - e^{i g} b| <= tol, with g taken from the entry pair of
/// largest combined magnitude.
bool equal_mod_global_phase(const ComplexMatrix &a, const ComplexMatrix &b, double tol = kPhysicsTol);

/// Max entry-wise |a - b|. Dimensions must agree.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

// Convention converters. Devices are described by the matrix U with
// (outputs) = U (inputs); the engine works with the creation-operator
// substitution a_j^dagger -> sum_k t_jk a_k^dagger, which is t = U^{-1}.
ComplexMatrix to_transformation(const ComplexMatrix &device);
ComplexMatrix to_device(const ComplexMatrix &transformation);

/// Wraps an angle into (-pi, pi].
double wrap_angle(double angle);

}  // namespace photonmesh

#endif
