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

#include "ghzbox/measurement.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ghzbox/boxbasis.hpp"
#include "ghzbox/entangler.hpp"
#include "ghzbox/errors.hpp"

namespace ghzbox {

namespace {

// |v><v| over (L, R) for basis vector `index` of `basis`.
Matrix2 projector(Basis basis, int index) {
    const Matrix2 m = to_position_matrix(basis);
    const Amplitude v0 = m[0][static_cast<std::size_t>(index)];
    const Amplitude v1 = m[1][static_cast<std::size_t>(index)];
    return {{{v0 * std::conj(v0), v0 * std::conj(v1)}, {v1 * std::conj(v0), v1 * std::conj(v1)}}};
}

BoxState project(const BoxState& position_state, Box box, Label outcome) {
    return apply_local(position_state, box, projector(basis_of(outcome), index_of(outcome)), Basis::Position);
}

void check_box(const BoxState& s, Box box) {
    if (index_of(box) >= s.n_boxes()) {
        throw BoxIndexError("box " + std::string(to_string(box)) + " is not part of a " +
                            std::to_string(s.n_boxes()) + "-box state");
    }
}

}  // namespace

std::array<double, 2> outcome_probabilities(const BoxState& s, Box box, Basis basis) {
    check_box(s, box);
    const BoxState pos = to_position(s);
    const auto labels = labels_of(basis);
    std::array<double, 2> p{project(pos, box, labels[0]).norm_squared(), project(pos, box, labels[1]).norm_squared()};
    // Both projections are computed independently; rescale so rounding in
    // an unnormalized input does not leak into the sum.
    const double total = p[0] + p[1];
    if (total > 0.0) {
        p[0] /= total;
        p[1] /= total;
    }
    return p;
}

BoxState measure_collapse(const BoxState& s, Box box, Label outcome) {
    check_box(s, box);
    const BoxState projected = project(to_position(s), box, outcome);
    const double p = projected.norm_squared() / s.norm_squared();
    if (p <= kImpossibleProbability) {
        throw ImpossibleOutcomeError("outcome " + std::string(to_string(outcome)) + " on box " +
                                     std::string(to_string(box)) + " has probability 0");
    }
    return normalize(projected);
}

SampledOutcome sample_measure(const BoxState& s, Box box, Basis basis, std::mt19937_64& rng) {
    const auto p = outcome_probabilities(s, box, basis);
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const Label outcome = label_of(basis, u < p[0] ? 0 : 1);
    return {outcome, measure_collapse(s, box, outcome)};
}

SampledOutcome sample_measure(const BoxState& s, Box box, Basis basis, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return sample_measure(s, box, basis, rng);
}

Prediction predict_remaining(const BoxState& s, std::span<const MeasurementRecord> records, Box target_box,
                             Basis target_basis) {
    check_box(s, target_box);
    BoxState current = to_position(s);
    for (const MeasurementRecord& rec : records) {
        if (rec.box == target_box) {
            throw std::invalid_argument("target box " + std::string(to_string(target_box)) + " is already measured");
        }
        if (basis_of(rec.outcome) != rec.basis) {
            throw std::invalid_argument("outcome " + std::string(to_string(rec.outcome)) + " is not a " +
                                        std::string(to_string(rec.basis)) + " label");
        }
        current = measure_collapse(current, rec.box, rec.outcome);
    }
    Prediction out{target_box, target_basis, outcome_probabilities(current, target_box, target_basis), std::nullopt};
    for (int k = 0; k < 2; ++k) {
        if (out.probabilities[static_cast<std::size_t>(k)] >= kCertaintyThreshold) {
            out.certain = label_of(target_basis, k);
        }
    }
    return out;
}

double joint_probability(const BoxState& s, std::span<const MeasurementRecord> records) {
    BoxState current = to_position(s);
    double p = 1.0;
    for (const MeasurementRecord& rec : records) {
        const auto probs = outcome_probabilities(current, rec.box, rec.basis);
        const double step = probs[static_cast<std::size_t>(index_of(rec.outcome))];
        if (step <= kImpossibleProbability) return 0.0;
        p *= step;
        current = measure_collapse(current, rec.box, rec.outcome);
    }
    return p;
}

}  // namespace ghzbox
