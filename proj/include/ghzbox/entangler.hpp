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

#ifndef GHZBOX_ENTANGLER_HPP
#define GHZBOX_ENTANGLER_HPP

#include <span>
#include <vector>

#include "ghzbox/qstate.hpp"

namespace ghzbox {

/// One surviving product term of an expansion, e.g. (i/2) L_A L_B R_C.
struct ProductTerm {
    std::vector<Label> labels;
    Amplitude coefficient;
};

struct Expansion {
    std::vector<Basis> frames;
    /// Sorted by joint label order (box A most significant, first label first).
    std::vector<ProductTerm> terms;
    /// Products generated when multiplying out the source state's nonzero
    /// terms against the nonzero basis-change coefficients, before any
    /// cancellation. 16 for the three-box state taken from its phase form.
    int raw_products = 0;
    /// Joint labels of the target frame whose coefficient vanished.
    int cancelled_labels = 0;
};

/// (LL + RR)/sqrt(2) over two boxes, Position frame.
BoxState two_box_correlated();

/// (Psi_{+i}^{x3} - Psi_{-i}^{x3}) / sqrt(2), stored in the Position frame.
BoxState ghz_state();

/// Per-box coordinate change of a multi-box state to `frames`.
BoxState reframe(const BoxState& s, std::span<const Basis> frames);

/// reframe() to all-Position, the library's frame of record.
BoxState to_position(const BoxState& s);

/// Multiplies `s` out in the per-box frames and drops terms with
/// |coefficient| <= tol. Throws FrameError when frames.size() != n_boxes.
Expansion expand_in(const BoxState& s, std::span<const Basis> frames, double tol = kAmplitudeTolerance);

/// Sums the terms back into a state in `expansion.frames`.
BoxState resum(const Expansion& expansion);

/// Relabels boxes: box k of the result is box order[k] of `s`.
BoxState permute_boxes(const BoxState& s, std::span<const Box> order);

}  // namespace ghzbox

#endif  // GHZBOX_ENTANGLER_HPP
