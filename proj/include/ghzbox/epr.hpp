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

// Reality-criterion machinery for the three-box state.
//
// Every inference here follows one rule: when predict_remaining() returns a
// certain outcome for an unmeasured box, that box is taken to possess the
// outcome as a property. All pairings are evaluated against the same
// uncollapsed state, so outcomes from different (counterfactual) measurement
// choices can be pooled.

#ifndef GHZBOX_EPR_HPP
#define GHZBOX_EPR_HPP

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ghzbox/qstate.hpp"

namespace ghzbox {

enum class Parity { Same, Different };

std::string_view to_string(Parity parity);

/// One joint outcome of the two measured boxes and what it implies for the third.
struct RuleRow {
    Label first;
    Label second;
    double joint_probability = 0.0;
    /// Set for reachable rows; the certain outcome of the target box.
    std::optional<Label> target;
    /// Probability of `target`, recomputed by collapse + outcome_probabilities.
    double target_probability = 0.0;

    bool reachable() const { return joint_probability > 1e-12; }
};

/// Certain predictions for one choice of (first, second) -> target boxes.
/// Rows are ordered by outcome index: (0,0), (0,1), (1,0), (1,1).
struct RuleTable {
    Box first_box;
    Basis first_basis;
    Box second_box;
    Basis second_basis;
    Box target_box;
    Basis target_basis;
    std::array<RuleRow, 4> rows;

    const RuleRow& row(Label first, Label second) const;
    /// Target label for a reachable row, nullopt for unreachable rows.
    std::optional<Label> lookup(Label first, Label second) const;
};

/// Builds the table by calling predict_remaining for each joint outcome.
/// Throws NoRuleError when a reachable row is not certain.
RuleTable derive_rule_table(const BoxState& s, Box first_box, Basis first_basis, Box second_box, Basis second_basis,
                            Box target_box, Basis target_basis);

/// Pair rule: two boxes measured in the same basis fix the third box's outcome.
struct PairRule {
    Basis measured_basis;
    Basis target_basis;
    /// (A,B)->C, (A,C)->B, (B,C)->A; identical rows by construction.
    std::array<RuleTable, 3> pairings;

    const std::array<RuleRow, 4>& rows() const { return pairings[0].rows; }
    /// No unreachable rows.
    bool total() const;
    /// Target for every reachable row of the given parity, if they agree.
    std::optional<Label> by_parity(Parity parity) const;
    /// Both parities map to a single label (the same/different table exists).
    bool parity_determined() const;
    /// Throws NoRuleError for an unreachable row.
    Label apply(Label first, Label second) const;
};

/// Derives the rule for all three pair choices and checks they agree.
/// Throws NoRuleError when some reachable joint outcome leaves the third box
/// uncertain and AsymmetryError when pair choices disagree.
PairRule derive_pair_rule(const BoxState& s, Basis measured_basis, Basis target_basis);

/// Position properties (A, B, C).
struct PropertyDistribution {
    std::array<Label, 3> positions;

    std::string to_string() const;
    auto operator<=>(const PropertyDistribution&) const = default;
};

std::optional<PropertyDistribution> parse_distribution(std::string_view text);

/// Position distributions implied by a total rule with a Position target.
///
/// All 2^3 assignments of the measured-side property are enumerated; for
/// each, the rule is applied to the three pairs and the implied positions of
/// the third box are collected. Result order: distributions in which one box
/// differs from the other two (ordered by that box, C first), then unanimous
/// ones.
std::vector<PropertyDistribution> reality_distributions(const PairRule& rule);

std::vector<PropertyDistribution> intersection(std::span<const PropertyDistribution> a,
                                               std::span<const PropertyDistribution> b);

/// True when the two sets share no distribution.
bool contradiction_check(std::span<const PropertyDistribution> a, std::span<const PropertyDistribution> b);

/// A possessed value for every measurable property of every box.
struct HiddenAssignment {
    std::array<Label, 3> position;
    std::array<Label, 3> bonding;

    Label value(Box box, Basis basis) const;
    std::string to_string() const;
    bool operator==(const HiddenAssignment&) const = default;
};

/// All 64 assignments. Index bits per box (A most significant): position
/// index then bonding index.
std::vector<HiddenAssignment> all_hidden_assignments();

enum class ConstraintFamily {
    PositionRule,  // positions of two boxes -> position of the third
    BondingRule,   // bonding of two boxes -> position of the third
    MixedRule,     // bonding of one box and position of another -> bonding of the third
};

inline constexpr std::array<ConstraintFamily, 3> kAllConstraintFamilies = {
    ConstraintFamily::PositionRule, ConstraintFamily::BondingRule, ConstraintFamily::MixedRule};

std::string_view to_string(ConstraintFamily family);

struct Constraint {
    ConstraintFamily family;
    RuleTable table;

    /// The assignment's value on the target box equals the certain prediction
    /// from its values on the two measured boxes. Unreachable rows fail.
    bool holds(const HiddenAssignment& h) const;
    std::string describe() const;
};

/// 3 position, 3 bonding and 6 mixed constraints read off `s`.
std::vector<Constraint> build_constraints(const BoxState& s, std::span<const ConstraintFamily> families);

struct ScanEntry {
    HiddenAssignment assignment;
    /// Families with at least one violated constraint, in family order.
    std::vector<ConstraintFamily> violated;
};

struct LhvScanResult {
    int total = 0;
    std::vector<ConstraintFamily> families;
    std::vector<ScanEntry> entries;
    std::vector<HiddenAssignment> survivors;
    /// Assignments violating at least one constraint of the family.
    std::map<ConstraintFamily, int> violations;
};

/// Exhaustive scan over all 64 assignments against the selected families.
LhvScanResult lhv_scan(const BoxState& s, std::span<const ConstraintFamily> families);

/// Scan of the three-box state against every family.
LhvScanResult lhv_scan();

/// +1 for L and +1, -1 for R and -1. Phase labels throw std::invalid_argument.
int sign_of(Label label);

struct SignedDistribution {
    PropertyDistribution distribution;
    int product;
};

/// Algebraic summary of the clash between the two property sets under the
/// encoding L = +1, R = -1 for positions and +-1 for bonding labels.
struct ParityCertificate {
    /// Position rule table equals p_target = -p_first * p_second on every pairing.
    bool position_rule_is_parity_law = false;
    /// Bonding rule table equals p_target = b_first * b_second on every pairing.
    bool bonding_rule_is_parity_law = false;
    std::vector<SignedDistribution> position_members;
    std::vector<SignedDistribution> bonding_members;
    /// Product p_A p_B p_C forced by the position rule (-1).
    int position_product = 0;
    /// Product forced by multiplying the three bonding constraints (+1):
    /// (b_A b_B b_C)^2 p_A p_B p_C = p_A p_B p_C.
    int bonding_product = 0;
    bool clash = false;
    std::vector<std::string> report;
};

ParityCertificate parity_certificate(const BoxState& s);
ParityCertificate parity_certificate();

}  // namespace ghzbox

#endif  // GHZBOX_EPR_HPP
