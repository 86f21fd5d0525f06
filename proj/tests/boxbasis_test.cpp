// Copyright 2026 The ghzbox Authors
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

#include "ghzbox/boxbasis.hpp"

#include <gtest/gtest.h>

#include "ghzbox/errors.hpp"
#include "test_util.hpp"

using namespace ghzbox;
using namespace ghzbox::testing;

TEST(boxbasis, beta_state_examples) {
    expect_amplitudes_near(beta_state(PhaseFactor::i()), {kInvSqrt2, kI * kInvSqrt2});
    expect_amplitudes_near(beta_state(PhaseFactor::one()), {kInvSqrt2, kInvSqrt2});
    expect_amplitudes_near(beta_state(PhaseFactor::minus_one()), {kInvSqrt2, -kInvSqrt2});
    const Amplitude e = std::polar(1.0, 0.3);
    expect_amplitudes_near(beta_state(PhaseFactor(e)), {kInvSqrt2, e * kInvSqrt2});
    EXPECT_NEAR(beta_state(PhaseFactor(e)).norm(), 1.0, 1e-12);
}

TEST(boxbasis, phase_factor_rejects_non_unit_modulus) {
    EXPECT_THROW(PhaseFactor(Amplitude{2.0, 0.0}), InvalidPhaseError);
    EXPECT_THROW(PhaseFactor(Amplitude{0.0, 0.0}), InvalidPhaseError);
    EXPECT_THROW(PhaseFactor(Amplitude{1.0 + 1e-9, 0.0}), InvalidPhaseError);
    EXPECT_NO_THROW(PhaseFactor(Amplitude{1.0 + 1e-13, 0.0}));
}

TEST(boxbasis, basis_vectors_as_written) {
    const auto pos = basis_vectors(Basis::Position);
    expect_amplitudes_near(pos[0], {1.0, 0.0});
    expect_amplitudes_near(pos[1], {0.0, 1.0});
    const auto bond = basis_vectors(Basis::Bonding);
    expect_amplitudes_near(bond[0], {kInvSqrt2, kInvSqrt2});
    expect_amplitudes_near(bond[1], {kInvSqrt2, -kInvSqrt2});
    const auto phase = basis_vectors(Basis::Phase);
    expect_amplitudes_near(phase[0], {kInvSqrt2, kI * kInvSqrt2});
    expect_amplitudes_near(phase[1], {kInvSqrt2, -kI * kInvSqrt2});
}

TEST(boxbasis, basis_vectors_orthonormal) {
    for (Basis b : kAllBases) {
        const auto v = basis_vectors(b);
        expect_amplitude_near(inner(v[0], v[0]), 1.0);
        expect_amplitude_near(inner(v[1], v[1]), 1.0);
        expect_amplitude_near(inner(v[0], v[1]), 0.0);
    }
}

TEST(boxbasis, phase_states_in_bonding_frame) {
    const BoxState plus = change_basis(beta_state(PhaseFactor::i()), Basis::Bonding);
    EXPECT_EQ(plus.frame_of(Box::A), Basis::Bonding);
    const Amplitude c = (1.0 + kI) / 2.0;
    expect_amplitudes_near(plus, {c, -kI * c});

    const BoxState minus = change_basis(beta_state(PhaseFactor::minus_i()), Basis::Bonding);
    const Amplitude d = (1.0 - kI) / 2.0;
    expect_amplitudes_near(minus, {d, kI * d});
}

TEST(boxbasis, position_to_position_is_identity) {
    const BoxState l = BoxState::basis_vector(Basis::Position, 0);
    EXPECT_TRUE(approx_equal(change_basis(l, Basis::Position), l));
}

TEST(boxbasis, change_basis_is_single_box_only) {
    const BoxState two = tensor(beta_state(PhaseFactor::i()), beta_state(PhaseFactor::i()));
    EXPECT_THROW(change_basis(two, Basis::Bonding), FrameError);
}

// Substituting the bonding states into the bonding-frame coefficients of
// Psi_{+-i} must give back the phase states over (L, R). Everything here is
// written out by hand; nothing comes from the library's tables.
TEST(boxbasis, bonding_expansion_of_phase_states_substitutes_back) {
    const Amplitude plus1[2] = {kInvSqrt2, kInvSqrt2};
    const Amplitude minus1[2] = {kInvSqrt2, -kInvSqrt2};
    struct Case {
        Amplitude prefactor;
        Amplitude coeff_plus1;
        Amplitude coeff_minus1;
        Amplitude expected_l;
        Amplitude expected_r;
    };
    const Case cases[] = {
        {(1.0 + kI) / 2.0, 1.0, -kI, kInvSqrt2, kI * kInvSqrt2},
        {(1.0 - kI) / 2.0, 1.0, kI, kInvSqrt2, -kI * kInvSqrt2},
    };
    for (const Case& c : cases) {
        const Amplitude l = c.prefactor * (c.coeff_plus1 * plus1[0] + c.coeff_minus1 * minus1[0]);
        const Amplitude r = c.prefactor * (c.coeff_plus1 * plus1[1] + c.coeff_minus1 * minus1[1]);
        expect_amplitude_near(l, c.expected_l);
        expect_amplitude_near(r, c.expected_r);
    }
    // And the library's own expansion agrees with the hand-written one.
    const BoxState plus = change_basis(beta_state(PhaseFactor::i()), Basis::Bonding);
    expect_amplitude_near(plus[0], cases[0].prefactor * cases[0].coeff_plus1);
    expect_amplitude_near(plus[1], cases[0].prefactor * cases[0].coeff_minus1);
}

TEST(boxbasis, spin_map) {
    EXPECT_EQ(spin_map(Basis::Position), SpinAxis::Z);
    EXPECT_EQ(spin_map(Basis::Phase), SpinAxis::Y);
    EXPECT_EQ(spin_map(Basis::Bonding), SpinAxis::X);
    EXPECT_EQ(to_string(SpinAxis::Y), "y");
}

TEST(boxbasis_property, change_matrices_unitary) {
    for (Basis from : kAllBases) {
        for (Basis to : kAllBases) {
            const Matrix2 m = change_matrix(from, to);
            const Matrix2 mm = multiply(adjoint(m), m);
            expect_amplitude_near(mm[0][0], 1.0);
            expect_amplitude_near(mm[1][1], 1.0);
            expect_amplitude_near(mm[0][1], 0.0);
            expect_amplitude_near(mm[1][0], 0.0);
        }
    }
}

TEST(boxbasis_property, cycle_position_phase_bonding_position_is_identity) {
    const Matrix2 cycle = multiply(change_matrix(Basis::Bonding, Basis::Position),
                                   multiply(change_matrix(Basis::Phase, Basis::Bonding),
                                            change_matrix(Basis::Position, Basis::Phase)));
    expect_amplitude_near(cycle[0][0], 1.0);
    expect_amplitude_near(cycle[0][1], 0.0);
    expect_amplitude_near(cycle[1][0], 0.0);
    expect_amplitude_near(cycle[1][1], 1.0);
}

TEST(boxbasis_property, change_basis_round_trip) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const Basis original = random_basis(rng);
        const Basis target = random_basis(rng);
        const BoxState s = random_state(rng, {original});
        const BoxState back = change_basis(change_basis(s, target), original);
        EXPECT_TRUE(approx_equal(back, s));
        EXPECT_NEAR(change_basis(s, target).norm(), 1.0, 1e-12);
    }
}
