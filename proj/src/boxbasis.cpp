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

#include <cmath>

#include "ghzbox/errors.hpp"

namespace ghzbox {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
constexpr Amplitude kI{0.0, 1.0};

}  // namespace

PhaseFactor::PhaseFactor(Amplitude value) : value_(value) {
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag()) ||
        std::abs(std::abs(value) - 1.0) > kAmplitudeTolerance) {
        throw InvalidPhaseError("phase factor must have unit modulus, got |beta| = " +
                                std::to_string(std::abs(value)));
    }
}

std::string_view to_string(SpinAxis axis) {
    switch (axis) {
        case SpinAxis::X:
            return "x";
        case SpinAxis::Y:
            return "y";
        case SpinAxis::Z:
            return "z";
    }
    return "?";
}

BoxState beta_state(PhaseFactor beta) {
    return BoxState({Amplitude{kInvSqrt2, 0.0}, beta.value() * kInvSqrt2}, {Basis::Position});
}

Matrix2 to_position_matrix(Basis basis) {
    switch (basis) {
        case Basis::Position:
            return {{{1.0, 0.0}, {0.0, 1.0}}};
        case Basis::Bonding:
            // Psi_{+1} = (L + R)/sqrt2, Psi_{-1} = (L - R)/sqrt2
            return {{{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}}};
        case Basis::Phase:
            // Psi_{+i} = (L + iR)/sqrt2, Psi_{-i} = (L - iR)/sqrt2
            return {{{kInvSqrt2, kInvSqrt2}, {kI * kInvSqrt2, -kI * kInvSqrt2}}};
    }
    throw std::logic_error("bad basis");
}

std::array<BoxState, 2> basis_vectors(Basis basis) {
    const Matrix2 m = to_position_matrix(basis);
    return {BoxState({m[0][0], m[1][0]}, {Basis::Position}), BoxState({m[0][1], m[1][1]}, {Basis::Position})};
}

Matrix2 change_matrix(Basis from, Basis to) {
    if (from == to) return to_position_matrix(Basis::Position);
    return multiply(adjoint(to_position_matrix(to)), to_position_matrix(from));
}

BoxState change_basis(const BoxState& s, Basis target) {
    if (s.n_boxes() != 1) {
        throw FrameError("change_basis works on single-box states; use reframe for " + std::to_string(s.n_boxes()) +
                         " boxes");
    }
    return apply_local(s, Box::A, change_matrix(s.frame_of(Box::A), target), target);
}

SpinAxis spin_map(Basis basis) {
    switch (basis) {
        case Basis::Position:
            return SpinAxis::Z;
        case Basis::Phase:
            return SpinAxis::Y;
        case Basis::Bonding:
            return SpinAxis::X;
    }
    throw std::logic_error("bad basis");
}

}  // namespace ghzbox
