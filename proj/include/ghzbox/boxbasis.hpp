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

#ifndef GHZBOX_BOXBASIS_HPP
#define GHZBOX_BOXBASIS_HPP

#include <array>

#include "ghzbox/qstate.hpp"

namespace ghzbox {

/// Unit-modulus relative phase between the L and R components of one box.
class PhaseFactor {
   public:
    /// Throws InvalidPhaseError unless |value| = 1 within 1e-12.
    explicit PhaseFactor(Amplitude value);

    static PhaseFactor one() { return PhaseFactor(Amplitude{1.0, 0.0}); }
    static PhaseFactor minus_one() { return PhaseFactor(Amplitude{-1.0, 0.0}); }
    static PhaseFactor i() { return PhaseFactor(Amplitude{0.0, 1.0}); }
    static PhaseFactor minus_i() { return PhaseFactor(Amplitude{0.0, -1.0}); }

    Amplitude value() const { return value_; }

   private:
    Amplitude value_;
};

enum class SpinAxis { X, Y, Z };

std::string_view to_string(SpinAxis axis);

/// (|L> + beta |R>) / sqrt(2), one box, Position frame.
BoxState beta_state(PhaseFactor beta);

/// Both vectors of `basis` over (L, R), stored with the coefficients exactly
/// as written for each basis: no global phase canonicalization.
std::array<BoxState, 2> basis_vectors(Basis basis);

/// Columns are the basis vectors of `basis` in Position coordinates, so
/// multiplying by it takes `basis` coordinates to Position coordinates.
Matrix2 to_position_matrix(Basis basis);

/// Coordinate change for one box: coefficients in `from` -> coefficients in `to`.
Matrix2 change_matrix(Basis from, Basis to);

/// Re-expresses a one-box state in `target`. Throws FrameError for multi-box
/// states; use reframe() for those.
BoxState change_basis(const BoxState& s, Basis target);

/// Spin-1/2 axis the basis plays the role of: Position -> z, Phase -> y, Bonding -> x.
SpinAxis spin_map(Basis basis);

}  // namespace ghzbox

#endif  // GHZBOX_BOXBASIS_HPP
