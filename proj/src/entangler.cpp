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

#include "ghzbox/entangler.hpp"

#include <cmath>

#include "ghzbox/boxbasis.hpp"
#include "ghzbox/errors.hpp"

namespace ghzbox {

BoxState two_box_correlated() {
    const BoxState ll = tensor(BoxState::basis_vector(Basis::Position, 0), BoxState::basis_vector(Basis::Position, 0));
    const BoxState rr = tensor(BoxState::basis_vector(Basis::Position, 1), BoxState::basis_vector(Basis::Position, 1));
    std::vector<Amplitude> amps(4);
    for (std::size_t i = 0; i < 4; ++i) amps[i] = ll[i] + rr[i];
    return normalize(BoxState(std::move(amps), ll.frame()));
}

BoxState ghz_state() {
    const BoxState plus = beta_state(PhaseFactor::i());
    const BoxState minus = beta_state(PhaseFactor::minus_i());
    const BoxState ppp = tensor(tensor(plus, plus), plus);
    const BoxState mmm = tensor(tensor(minus, minus), minus);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::vector<Amplitude> amps(8);
    for (std::size_t i = 0; i < 8; ++i) amps[i] = inv_sqrt2 * (ppp[i] - mmm[i]);
    return BoxState(std::move(amps), ppp.frame());
}

BoxState reframe(const BoxState& s, std::span<const Basis> frames) {
    if (frames.size() != static_cast<std::size_t>(s.n_boxes())) {
        throw FrameError("expected " + std::to_string(s.n_boxes()) + " frames, got " + std::to_string(frames.size()));
    }
    BoxState out = s;
    for (int k = 0; k < s.n_boxes(); ++k) {
        const Box box = kAllBoxes[static_cast<std::size_t>(k)];
        const Basis from = out.frame_of(box);
        const Basis to = frames[static_cast<std::size_t>(k)];
        if (from != to) out = apply_local(out, box, change_matrix(from, to), to);
    }
    return out;
}

BoxState to_position(const BoxState& s) {
    const std::vector<Basis> frames(static_cast<std::size_t>(s.n_boxes()), Basis::Position);
    return reframe(s, frames);
}

Expansion expand_in(const BoxState& s, std::span<const Basis> frames, double tol) {
    const BoxState target = reframe(s, frames);

    Expansion out;
    out.frames.assign(frames.begin(), frames.end());

    // Nonzero coefficients in each column of every per-box change matrix.
    std::vector<std::array<int, 2>> fan_out;
    for (int k = 0; k < s.n_boxes(); ++k) {
        const Matrix2 m = change_matrix(s.frame()[static_cast<std::size_t>(k)], frames[static_cast<std::size_t>(k)]);
        std::array<int, 2> count{};
        for (int col = 0; col < 2; ++col) {
            for (int row = 0; row < 2; ++row) {
                if (std::abs(m[row][col]) > tol) ++count[col];
            }
        }
        fan_out.push_back(count);
    }
    for (std::size_t i = 0; i < s.dimension(); ++i) {
        if (std::abs(s[i]) <= tol) continue;
        const auto idx = outcome_indices(i, s.n_boxes());
        int products = 1;
        for (std::size_t k = 0; k < idx.size(); ++k) products *= fan_out[k][static_cast<std::size_t>(idx[k])];
        out.raw_products += products;
    }

    for (std::size_t i = 0; i < target.dimension(); ++i) {
        if (std::abs(target[i]) <= tol) {
            ++out.cancelled_labels;
            continue;
        }
        out.terms.push_back({joint_labels(i, frames), target[i]});
    }
    return out;
}

BoxState resum(const Expansion& expansion) {
    const std::size_t dim = std::size_t{1} << expansion.frames.size();
    std::vector<Amplitude> amps(dim, Amplitude{0.0, 0.0});
    for (const ProductTerm& term : expansion.terms) {
        std::vector<int> idx;
        for (Label l : term.labels) idx.push_back(index_of(l));
        amps[joint_index(idx)] += term.coefficient;
    }
    return BoxState(std::move(amps), expansion.frames);
}

BoxState permute_boxes(const BoxState& s, std::span<const Box> order) {
    const int n = s.n_boxes();
    if (order.size() != static_cast<std::size_t>(n)) {
        throw FrameError("permutation length does not match box count");
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (Box b : order) {
        if (index_of(b) >= n || seen[static_cast<std::size_t>(index_of(b))]) {
            throw BoxIndexError("not a permutation of the state's boxes");
        }
        seen[static_cast<std::size_t>(index_of(b))] = true;
    }
    std::vector<Basis> frame(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) frame[static_cast<std::size_t>(k)] = s.frame_of(order[static_cast<std::size_t>(k)]);
    std::vector<Amplitude> amps(s.dimension());
    for (std::size_t i = 0; i < s.dimension(); ++i) {
        const auto old_idx = outcome_indices(i, n);
        std::vector<int> new_idx(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            new_idx[static_cast<std::size_t>(k)] = old_idx[static_cast<std::size_t>(index_of(order[static_cast<std::size_t>(k)]))];
        }
        amps[joint_index(new_idx)] = s[i];
    }
    return BoxState(std::move(amps), std::move(frame));
}

}  // namespace ghzbox
