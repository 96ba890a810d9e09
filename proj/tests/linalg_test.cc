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

#include <gtest/gtest.h>

#include <numeric>

#include "test_util.h"

using namespace photonmesh;
using photonmesh::testing::random_matrix;
using photonmesh::testing::random_unitary;

namespace {

const Complex kI{0, 1};

ComplexMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
    ComplexMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

// Closed form of the MZI device matrix.
ComplexMatrix mzi_closed_form(double t1, double t2, double p1, double p2) {
    double s = std::sin((t1 - t2) / 2);
    double c = std::cos((t1 - t2) / 2);
    Complex e = std::polar(1.0, p1 - p2);
    return kI * std::polar(1.0, (t1 + t2 + 2 * p2) / 2) * mat2(e * s, c, e * c, -s);
}

// Sum over all permutations; the oracle for Ryser.
Complex leibniz_permanent(const ComplexMatrix &m) {
    std::vector<int> p(m.rows());
    std::iota(p.begin(), p.end(), 0);
    Complex total = 0;
    do {
        Complex term = 1;
        for (int r = 0; r < m.rows(); r++) {
            term *= m(r, p[r]);
        }
        total += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

}  // namespace

TEST(BeamSplitter, plus_sign_fifty_fifty) {
    const double h = 1 / std::sqrt(2.0);
    ComplexMatrix expected = mat2(1, kI, kI, 1) * h;
    EXPECT_EQ(max_abs_diff(bs_general(h, h), expected), 0);
    EXPECT_EQ(max_abs_diff(beam_splitter(), expected), 0);
}

TEST(BeamSplitter, rejects_non_finite) {
    EXPECT_THROW(bs_general(NAN, 0.5), std::invalid_argument);
    EXPECT_THROW(phase_shifter(0, INFINITY), std::invalid_argument);
}

TEST(Mzi, matches_closed_form) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-7, 7);
    for (int i = 0; i < 50; i++) {
        double t1 = u(rng), t2 = u(rng), p1 = u(rng), p2 = u(rng);
        MziSetting s{t1, t2, p1, p2, std::nullopt, std::nullopt};
        EXPECT_LT(max_abs_diff(mzi_unitary(s), mzi_closed_form(t1, t2, p1, p2)), 1e-13);
    }
}

TEST(Mzi, unitary_for_any_phases) {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(-100, 100);
    for (int i = 0; i < 200; i++) {
        MziSetting s{u(rng), u(rng), u(rng), u(rng), std::nullopt, std::nullopt};
        EXPECT_TRUE(check_unitary(mzi_unitary(s)).is_unitary);
        s.phi3 = u(rng);
        s.phi4 = u(rng);
        EXPECT_TRUE(check_unitary(extended_mzi_unitary(s)).is_unitary);
    }
}

TEST(Mzi, extended_and_plain_are_not_interchangeable) {
    EXPECT_THROW(mzi_unitary(MziSetting::from_relative(1, 2, 3)), std::invalid_argument);
    EXPECT_THROW(extended_mzi_unitary(MziSetting::from_relative(1, 2)), std::invalid_argument);
    EXPECT_NO_THROW(device_matrix(MziSetting::from_relative(1, 2, 3)));
}

TEST(Mzi, relative_pi_zero_is_pauli_z) {
    EXPECT_TRUE(equal_mod_global_phase(mzi_unitary(MziSetting::from_relative(kPi, 0)), mat2(1, 0, 0, -1)));
}

TEST(Mzi, identity_setting_is_exactly_identity) {
    EXPECT_LT(max_abs_diff(mzi_unitary(MziSetting::from_relative(kPi, kPi)), ComplexMatrix::Identity(2, 2)),
              1e-15);
}

TEST(Embed, is_a_homomorphism) {
    std::mt19937_64 rng(13);
    for (int m = 2; m <= 7; m++) {
        for (int k = 1; k < m; k++) {
            ComplexMatrix a = random_matrix(rng, 2);
            ComplexMatrix b = random_matrix(rng, 2);
            ComplexMatrix lhs = embed_block(a, k, m) * embed_block(b, k, m);
            EXPECT_LT(max_abs_diff(lhs, embed_block(a * b, k, m)), 1e-12);
        }
    }
}

TEST(Embed, one_based_and_zero_based_agree) {
    ComplexMatrix a = mat2(1, 2, 3, 4);
    EXPECT_EQ(max_abs_diff(embed_block(a, 2, 5), embed_block_at(a, 1, 5)), 0);
    EXPECT_EQ(embed_block_at(a, 1, 5)(2, 1), Complex(3));
    EXPECT_THROW(embed_block(a, 5, 5), std::out_of_range);
    EXPECT_THROW(embed_block(a, 0, 5), std::out_of_range);
    EXPECT_THROW(embed_block(ComplexMatrix::Identity(3, 3), 1, 5), std::invalid_argument);
}

TEST(Permanent, agrees_with_leibniz) {
    std::mt19937_64 rng(14);
    for (int n = 1; n <= 6; n++) {
        for (int i = 0; i < 100; i++) {
            ComplexMatrix m = random_matrix(rng, n);
            Complex expected = leibniz_permanent(m);
            EXPECT_LT(std::abs(permanent(m) - expected), 1e-12 * std::max(1.0, std::abs(expected)));
        }
    }
}

TEST(Permanent, all_ones_is_factorial) {
    double f = 1;
    for (int n = 1; n <= 10; n++) {
        f *= n;
        EXPECT_NEAR(permanent(ComplexMatrix::Ones(n, n)).real(), f, 1e-9 * f);
    }
}

TEST(Permanent, is_deterministic_and_capped) {
    std::mt19937_64 rng(15);
    ComplexMatrix m = random_matrix(rng, 12);
    EXPECT_EQ(permanent(m), permanent(m));
    EXPECT_NO_THROW(permanent(random_matrix(rng, kPermanentMaxDim)));
    EXPECT_THROW(permanent(random_matrix(rng, kPermanentMaxDim + 1)), std::invalid_argument);
    EXPECT_THROW(permanent(ComplexMatrix(2, 3)), std::invalid_argument);
}

TEST(CheckUnitary, reports_deviation) {
    auto id = check_unitary(ComplexMatrix::Identity(4, 4));
    EXPECT_EQ(id.max_deviation, 0);
    EXPECT_TRUE(id.is_unitary);
    auto lossy = check_unitary(bs_general(0.9, 0.3));
    EXPECT_FALSE(lossy.is_unitary);
    EXPECT_NEAR(lossy.max_deviation, 0.1, 1e-12);
    EXPECT_THROW(check_unitary(ComplexMatrix(2, 3)), std::invalid_argument);
}

TEST(GlobalPhase, examples) {
    std::mt19937_64 rng(16);
    ComplexMatrix u = random_unitary(rng, 4);
    EXPECT_TRUE(equal_mod_global_phase(u, std::polar(1.0, kPi / 4) * u));
    ComplexMatrix h = mat2(1, 1, 1, -1) / std::sqrt(2.0);
    EXPECT_FALSE(equal_mod_global_phase(h, mat2(0, 1, 1, 0)));
    EXPECT_FALSE(equal_mod_global_phase(u, 2.0 * u));
    EXPECT_THROW(equal_mod_global_phase(u, h), std::invalid_argument);
}

TEST(GlobalPhase, reflexive_symmetric_and_weakly_transitive) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    std::normal_distribution<double> noise(0, 2e-10);
    const double tol = 1e-9;
    for (int i = 0; i < 200; i++) {
        ComplexMatrix a = random_unitary(rng, 3);
        ComplexMatrix b = std::polar(1.0, angle(rng)) * a;
        ComplexMatrix c = std::polar(1.0, angle(rng)) * b;
        for (int r = 0; r < 3; r++) {
            for (int k = 0; k < 3; k++) {
                b(r, k) += Complex(noise(rng), noise(rng));
                c(r, k) += Complex(noise(rng), noise(rng));
            }
        }
        EXPECT_TRUE(equal_mod_global_phase(a, a, 0));
        EXPECT_EQ(equal_mod_global_phase(a, b, tol), equal_mod_global_phase(b, a, tol));
        if (equal_mod_global_phase(a, b, tol) && equal_mod_global_phase(b, c, tol)) {
            EXPECT_TRUE(equal_mod_global_phase(a, c, 2 * tol));
        }
    }
}

TEST(FitMzi, reproduces_random_unitaries_exactly) {
    std::mt19937_64 rng(18);
    for (int i = 0; i < 500; i++) {
        ComplexMatrix u = random_unitary(rng, 2);
        EXPECT_LT(max_abs_diff(device_matrix(fit_mzi_setting(u)), u), 1e-12);
    }
}

TEST(FitMzi, plain_setting_when_possible) {
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> u(-kPi, kPi);
    for (int i = 0; i < 100; i++) {
        ComplexMatrix target = mzi_unitary(MziSetting{u(rng), u(rng), u(rng), u(rng), std::nullopt, std::nullopt});
        MziSetting fit = fit_mzi_setting(target);
        EXPECT_FALSE(fit.is_extended());
        EXPECT_EQ(fit.theta2, 0);
        EXPECT_LT(max_abs_diff(mzi_unitary(fit), target), 1e-12);
    }
}

TEST(FitMzi, edge_cases) {
    for (const ComplexMatrix &u :
         {ComplexMatrix(ComplexMatrix::Identity(2, 2)), mat2(0, 1, 1, 0), mat2(1, 0, 0, -1), mat2(0, -kI, kI, 0),
          mat2(1, 0, 0, std::polar(1.0, kPi / 4)), mat2(0, kI, 1, 0), ComplexMatrix(-ComplexMatrix::Identity(2, 2))}) {
        EXPECT_LT(max_abs_diff(device_matrix(fit_mzi_setting(u)), u), 1e-12);
    }
    EXPECT_THROW(fit_mzi_setting(bs_general(0.9, 0.3)), std::invalid_argument);
    EXPECT_THROW(fit_mzi_setting(ComplexMatrix::Identity(3, 3)), std::invalid_argument);
}

TEST(Convention, transformation_is_inverse_of_device) {
    std::mt19937_64 rng(20);
    ComplexMatrix u = random_unitary(rng, 5);
    EXPECT_LT(max_abs_diff(to_transformation(u), u.adjoint()), 1e-15);
    ComplexMatrix lossy = bs_general(0.9, 0.3);
    EXPECT_LT(max_abs_diff(to_transformation(lossy) * lossy, ComplexMatrix::Identity(2, 2)), 1e-12);
    EXPECT_LT(max_abs_diff(to_device(to_transformation(lossy)), lossy), 1e-12);
    EXPECT_THROW(to_transformation(ComplexMatrix::Zero(2, 2)), std::invalid_argument);
}

TEST(WrapAngle, lands_in_half_open_interval) {
    for (double x : {-10.0, -kPi, -1.0, 0.0, kPi, 3 * kPi, 7.5}) {
        double w = wrap_angle(x);
        EXPECT_GT(w, -kPi - 1e-15);
        EXPECT_LE(w, kPi);
        EXPECT_NEAR(std::remainder(w - x, 2 * kPi), 0, 1e-12);
    }
    EXPECT_DOUBLE_EQ(wrap_angle(-kPi), kPi);
}
