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

#ifndef GHZBOX_MEASUREMENT_HPP
#define GHZBOX_MEASUREMENT_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <span>

#include "ghzbox/qstate.hpp"

namespace ghzbox {

/// A verdict counts as certain when one outcome probability reaches this.
inline constexpr double kCertaintyThreshold = 1.0 - 1e-9;

/// Outcomes with probability at or below this are impossible.
inline constexpr double kImpossibleProbability = 1e-12;

struct MeasurementRecord {
    Box box;
    Basis basis;
    Label outcome;
};

/// Outcome statistics for one box in one basis. `certain` is set when one
/// outcome has probability >= kCertaintyThreshold.
struct Prediction {
    Box box;
    Basis basis;
    std::array<double, 2> probabilities;
    std::optional<Label> certain;

    bool is_certain() const { return certain.has_value(); }
    double probability(Label label) const { return probabilities[static_cast<std::size_t>(index_of(label))]; }
};

/// Probabilities of the two outcomes of `basis` on `box`, indexed like labels_of(basis).
std::array<double, 2> outcome_probabilities(const BoxState& s, Box box, Basis basis);

/// Projects `box` onto `outcome` and renormalizes. The result is in the
/// all-Position frame. Throws ImpossibleOutcomeError for probability <= 1e-12.
BoxState measure_collapse(const BoxState& s, Box box, Label outcome);

struct SampledOutcome {
    Label outcome;
    BoxState state;
};

/// Draws an outcome from `rng`. A uniform variate in [0, 1) is built from
/// the top 53 bits of one mt19937_64 draw; outcome 0 is chosen when it is
/// below the outcome-0 probability.
SampledOutcome sample_measure(const BoxState& s, Box box, Basis basis, std::mt19937_64& rng);

/// Same as above with a fresh generator seeded by `seed`.
SampledOutcome sample_measure(const BoxState& s, Box box, Basis basis, std::uint64_t seed);

/// Collapses `s` through every record in order, then reports the outcome
/// statistics of `target_box` in `target_basis`. Throws ImpossibleOutcomeError
/// when the records have zero joint probability and std::invalid_argument when
/// the target box was itself measured.
Prediction predict_remaining(const BoxState& s, std::span<const MeasurementRecord> records, Box target_box,
                             Basis target_basis);

/// Probability of observing every record in order.
double joint_probability(const BoxState& s, std::span<const MeasurementRecord> records);

}  // namespace ghzbox

#endif  // GHZBOX_MEASUREMENT_HPP
