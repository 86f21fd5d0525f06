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

#include "ghzbox/epr.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "ghzbox/entangler.hpp"
#include "ghzbox/errors.hpp"
#include "ghzbox/measurement.hpp"

namespace ghzbox {

namespace {

struct PairChoice {
    Box first;
    Box second;
    Box target;
};

constexpr std::array<PairChoice, 3> kPairChoices = {{
    {Box::A, Box::B, Box::C},
    {Box::A, Box::C, Box::B},
    {Box::B, Box::C, Box::A},
}};

std::size_t row_index(Label first, Label second) {
    return static_cast<std::size_t>(index_of(first) * 2 + index_of(second));
}

std::string row_name(const RuleTable& t, const RuleRow& r) {
    return std::string(to_string(t.first_box)) + "=" + std::string(to_string(r.first)) + ", " +
           std::string(to_string(t.second_box)) + "=" + std::string(to_string(r.second));
}

// Sort key placing distributions with an odd box first (C, then B, then A)
// and unanimous distributions last.
int case_key(const PropertyDistribution& d) {
    const auto& p = d.positions;
    if (p[0] == p[1] && p[1] == p[2]) return 3;
    if (p[0] == p[1]) return 0;  // C differs
    if (p[0] == p[2]) return 1;  // B differs
    return 2;                    // A differs
}

}  // namespace

std::string_view to_string(Parity parity) { return parity == Parity::Same ? "same" : "different"; }

const RuleRow& RuleTable::row(Label first, Label second) const {
    if (basis_of(first) != first_basis || basis_of(second) != second_basis) {
        throw std::invalid_argument("labels do not match the rule's measured bases");
    }
    return rows[row_index(first, second)];
}

std::optional<Label> RuleTable::lookup(Label first, Label second) const {
    const RuleRow& r = row(first, second);
    return r.reachable() ? r.target : std::nullopt;
}

RuleTable derive_rule_table(const BoxState& s, Box first_box, Basis first_basis, Box second_box, Basis second_basis,
                            Box target_box, Basis target_basis) {
    if (first_box == second_box || first_box == target_box || second_box == target_box) {
        throw std::invalid_argument("rule boxes must be distinct");
    }
    RuleTable table{first_box, first_basis, second_box, second_basis, target_box, target_basis, {}};
    for (Label a : labels_of(first_basis)) {
        for (Label b : labels_of(second_basis)) {
            RuleRow& r = table.rows[row_index(a, b)];
            r.first = a;
            r.second = b;
            const std::array<MeasurementRecord, 2> records{{{first_box, first_basis, a}, {second_box, second_basis, b}}};
            r.joint_probability = joint_probability(s, records);
            if (!r.reachable()) continue;

            const Prediction pred = predict_remaining(s, records, target_box, target_basis);
            if (!pred.is_certain()) {
                throw NoRuleError("outcome " + row_name(table, r) + " leaves box " +
                                  std::string(to_string(target_box)) + " uncertain in the " +
                                  std::string(to_string(target_basis)) + " basis");
            }
            r.target = pred.certain;

            const BoxState collapsed = measure_collapse(measure_collapse(s, first_box, a), second_box, b);
            r.target_probability =
                outcome_probabilities(collapsed, target_box, target_basis)[static_cast<std::size_t>(index_of(*r.target))];
        }
    }
    return table;
}

bool PairRule::total() const {
    return std::all_of(rows().begin(), rows().end(), [](const RuleRow& r) { return r.reachable(); });
}

std::optional<Label> PairRule::by_parity(Parity parity) const {
    std::optional<Label> found;
    for (const RuleRow& r : rows()) {
        const bool same = index_of(r.first) == index_of(r.second);
        if (same != (parity == Parity::Same) || !r.reachable()) continue;
        if (found && *found != *r.target) return std::nullopt;
        found = r.target;
    }
    return found;
}

bool PairRule::parity_determined() const {
    return total() && by_parity(Parity::Same).has_value() && by_parity(Parity::Different).has_value();
}

Label PairRule::apply(Label first, Label second) const {
    const auto t = pairings[0].lookup(first, second);
    if (!t) {
        throw NoRuleError("joint outcome (" + std::string(to_string(first)) + ", " + std::string(to_string(second)) +
                          ") is unreachable");
    }
    return *t;
}

PairRule derive_pair_rule(const BoxState& s, Basis measured_basis, Basis target_basis) {
    if (s.n_boxes() != 3) {
        throw FrameError("pair rules need a three-box state");
    }
    PairRule rule{measured_basis, target_basis, {}};
    for (std::size_t k = 0; k < kPairChoices.size(); ++k) {
        const PairChoice& c = kPairChoices[k];
        rule.pairings[k] = derive_rule_table(s, c.first, measured_basis, c.second, measured_basis, c.target, target_basis);
    }
    for (std::size_t k = 1; k < rule.pairings.size(); ++k) {
        for (std::size_t r = 0; r < 4; ++r) {
            const RuleRow& ref = rule.pairings[0].rows[r];
            const RuleRow& row = rule.pairings[k].rows[r];
            if (ref.reachable() != row.reachable() || ref.target != row.target) {
                throw AsymmetryError("pairing " + std::string(to_string(rule.pairings[k].first_box)) +
                                     std::string(to_string(rule.pairings[k].second_box)) +
                                     " disagrees with pairing AB at row " + row_name(rule.pairings[k], row));
            }
        }
    }
    return rule;
}

std::string PropertyDistribution::to_string() const {
    std::string out;
    for (Label l : positions) out += ghzbox::to_string(l);
    return out;
}

std::optional<PropertyDistribution> parse_distribution(std::string_view text) {
    if (text.size() != 3) return std::nullopt;
    PropertyDistribution d{};
    for (std::size_t k = 0; k < 3; ++k) {
        if (text[k] == 'L') {
            d.positions[k] = Label::L;
        } else if (text[k] == 'R') {
            d.positions[k] = Label::R;
        } else {
            return std::nullopt;
        }
    }
    return d;
}

std::vector<PropertyDistribution> reality_distributions(const PairRule& rule) {
    if (rule.target_basis != Basis::Position) {
        throw std::invalid_argument("property distributions need a rule with a position target");
    }
    if (!rule.total()) {
        throw NoRuleError("rule has unreachable rows; distributions need a total rule");
    }
    std::vector<PropertyDistribution> out;
    for (int bits = 0; bits < 8; ++bits) {
        std::array<Label, 3> measured{};
        for (int k = 0; k < 3; ++k) measured[static_cast<std::size_t>(k)] = label_of(rule.measured_basis, (bits >> (2 - k)) & 1);

        PropertyDistribution d{};
        for (const RuleTable& t : rule.pairings) {
            const auto target = t.lookup(measured[static_cast<std::size_t>(index_of(t.first_box))],
                                         measured[static_cast<std::size_t>(index_of(t.second_box))]);
            d.positions[static_cast<std::size_t>(index_of(t.target_box))] = *target;
        }
        if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
    }
    std::sort(out.begin(), out.end(), [](const PropertyDistribution& a, const PropertyDistribution& b) {
        return std::make_tuple(case_key(a), a) < std::make_tuple(case_key(b), b);
    });
    return out;
}

std::vector<PropertyDistribution> intersection(std::span<const PropertyDistribution> a,
                                               std::span<const PropertyDistribution> b) {
    std::vector<PropertyDistribution> out;
    for (const auto& d : a) {
        if (std::find(b.begin(), b.end(), d) != b.end() && std::find(out.begin(), out.end(), d) == out.end()) {
            out.push_back(d);
        }
    }
    return out;
}

bool contradiction_check(std::span<const PropertyDistribution> a, std::span<const PropertyDistribution> b) {
    return intersection(a, b).empty();
}

Label HiddenAssignment::value(Box box, Basis basis) const {
    const auto k = static_cast<std::size_t>(index_of(box));
    switch (basis) {
        case Basis::Position:
            return position[k];
        case Basis::Bonding:
            return bonding[k];
        case Basis::Phase:
            break;
    }
    throw std::invalid_argument("hidden assignments carry position and bonding values only");
}

std::string HiddenAssignment::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < 3; ++k) {
        if (k > 0) out += ' ';
        out += ghzbox::to_string(kAllBoxes[k]);
        out += '=';
        out += ghzbox::to_string(position[k]);
        out += ',';
        out += ghzbox::to_string(bonding[k]);
    }
    return out;
}

std::vector<HiddenAssignment> all_hidden_assignments() {
    std::vector<HiddenAssignment> out;
    out.reserve(64);
    for (int bits = 0; bits < 64; ++bits) {
        HiddenAssignment h{};
        for (int k = 0; k < 3; ++k) {
            const int pair = (bits >> (2 * (2 - k))) & 3;
            h.position[static_cast<std::size_t>(k)] = label_of(Basis::Position, pair >> 1);
            h.bonding[static_cast<std::size_t>(k)] = label_of(Basis::Bonding, pair & 1);
        }
        out.push_back(h);
    }
    return out;
}

std::string_view to_string(ConstraintFamily family) {
    switch (family) {
        case ConstraintFamily::PositionRule:
            return "position";
        case ConstraintFamily::BondingRule:
            return "bonding";
        case ConstraintFamily::MixedRule:
            return "mixed";
    }
    return "?";
}

bool Constraint::holds(const HiddenAssignment& h) const {
    const auto predicted = table.lookup(h.value(table.first_box, table.first_basis),
                                        h.value(table.second_box, table.second_basis));
    return predicted && *predicted == h.value(table.target_box, table.target_basis);
}

std::string Constraint::describe() const {
    return std::string(to_string(family)) + ": " + std::string(to_string(table.first_box)) + "(" +
           std::string(to_string(table.first_basis)) + ") + " + std::string(to_string(table.second_box)) + "(" +
           std::string(to_string(table.second_basis)) + ") -> " + std::string(to_string(table.target_box)) + "(" +
           std::string(to_string(table.target_basis)) + ")";
}

std::vector<Constraint> build_constraints(const BoxState& s, std::span<const ConstraintFamily> families) {
    std::vector<Constraint> out;
    for (ConstraintFamily f : kAllConstraintFamilies) {
        if (std::find(families.begin(), families.end(), f) == families.end()) continue;
        switch (f) {
            case ConstraintFamily::PositionRule:
                for (const RuleTable& t : derive_pair_rule(s, Basis::Position, Basis::Position).pairings) {
                    out.push_back({f, t});
                }
                break;
            case ConstraintFamily::BondingRule:
                for (const RuleTable& t : derive_pair_rule(s, Basis::Bonding, Basis::Position).pairings) {
                    out.push_back({f, t});
                }
                break;
            case ConstraintFamily::MixedRule:
                for (Box bonded : kAllBoxes) {
                    for (Box placed : kAllBoxes) {
                        if (bonded == placed) continue;
                        const Box target = static_cast<Box>(3 - index_of(bonded) - index_of(placed));
                        out.push_back(
                            {f, derive_rule_table(s, bonded, Basis::Bonding, placed, Basis::Position, target, Basis::Bonding)});
                    }
                }
                break;
        }
    }
    return out;
}

LhvScanResult lhv_scan(const BoxState& s, std::span<const ConstraintFamily> families) {
    const std::vector<Constraint> constraints = build_constraints(s, families);
    LhvScanResult result;
    result.families.assign(families.begin(), families.end());
    for (ConstraintFamily f : families) result.violations[f] = 0;

    for (const HiddenAssignment& h : all_hidden_assignments()) {
        ++result.total;
        ScanEntry entry{h, {}};
        for (const Constraint& c : constraints) {
            if (!c.holds(h) && std::find(entry.violated.begin(), entry.violated.end(), c.family) == entry.violated.end()) {
                entry.violated.push_back(c.family);
            }
        }
        std::sort(entry.violated.begin(), entry.violated.end());
        for (ConstraintFamily f : entry.violated) ++result.violations[f];
        if (entry.violated.empty()) result.survivors.push_back(h);
        result.entries.push_back(std::move(entry));
    }
    return result;
}

LhvScanResult lhv_scan() { return lhv_scan(ghz_state(), kAllConstraintFamilies); }

int sign_of(Label label) {
    switch (label) {
        case Label::L:
        case Label::PlusOne:
            return +1;
        case Label::R:
        case Label::MinusOne:
            return -1;
        default:
            throw std::invalid_argument("no +-1 encoding for label " + std::string(to_string(label)));
    }
}

namespace {

bool rule_matches_parity_law(const PairRule& rule, int sign) {
    for (const RuleTable& t : rule.pairings) {
        for (const RuleRow& r : t.rows) {
            if (!r.reachable() || !r.target) return false;
            if (sign_of(*r.target) != sign * sign_of(r.first) * sign_of(r.second)) return false;
        }
    }
    return true;
}

int product_of(const PropertyDistribution& d) {
    return sign_of(d.positions[0]) * sign_of(d.positions[1]) * sign_of(d.positions[2]);
}

std::string join_members(const std::vector<SignedDistribution>& members, bool unanimous) {
    std::string out;
    for (const auto& m : members) {
        if ((case_key(m.distribution) == 3) != unanimous) continue;
        if (!out.empty()) out += ", ";
        out += m.distribution.to_string();
    }
    return out;
}

// Common value of `products`, or 0 when they differ.
int common_value(const std::vector<int>& products) {
    if (products.empty()) return 0;
    for (int p : products) {
        if (p != products.front()) return 0;
    }
    return products.front();
}

}  // namespace

ParityCertificate parity_certificate(const BoxState& s) {
    const PairRule position_rule = derive_pair_rule(s, Basis::Position, Basis::Position);
    const PairRule bonding_rule = derive_pair_rule(s, Basis::Bonding, Basis::Position);

    ParityCertificate cert;
    cert.position_rule_is_parity_law = rule_matches_parity_law(position_rule, -1);
    cert.bonding_rule_is_parity_law = rule_matches_parity_law(bonding_rule, +1);

    std::vector<int> products;
    for (const auto& d : reality_distributions(position_rule)) {
        cert.position_members.push_back({d, product_of(d)});
        products.push_back(product_of(d));
    }
    cert.position_product = common_value(products);

    for (const auto& d : reality_distributions(bonding_rule)) {
        cert.bonding_members.push_back({d, product_of(d)});
    }

    // Multiply the three bonding constraints p_target = b_first * b_second for
    // every bonding triple; each b appears twice, so only p_A p_B p_C survives.
    products.clear();
    for (int bits = 0; bits < 8; ++bits) {
        std::array<Label, 3> b{};
        for (int k = 0; k < 3; ++k) b[static_cast<std::size_t>(k)] = label_of(Basis::Bonding, (bits >> (2 - k)) & 1);
        int lhs = 1;
        int squares = 1;
        for (const RuleTable& t : bonding_rule.pairings) {
            const Label bf = b[static_cast<std::size_t>(index_of(t.first_box))];
            const Label bs = b[static_cast<std::size_t>(index_of(t.second_box))];
            lhs *= sign_of(*t.lookup(bf, bs));
            squares *= sign_of(bf) * sign_of(bs);
        }
        // squares == (b_A b_B b_C)^2 == 1, so lhs is p_A p_B p_C itself.
        products.push_back(squares == 1 ? lhs : 0);
    }
    cert.bonding_product = common_value(products);
    cert.clash = cert.position_product != 0 && cert.bonding_product != 0 && cert.position_product != cert.bonding_product;

    auto& rep = cert.report;
    rep.push_back("encoding: L = +1, R = -1 for positions; +1, -1 for bonding labels");
    rep.push_back(std::string("position rule (same -> R, different -> L) is p_C = -p_A p_B on every pairing: ") +
                  (cert.position_rule_is_parity_law ? "yes" : "no"));
    rep.push_back("  all three pairs same: " + join_members(cert.position_members, true));
    rep.push_back("  one pair same, two different: " + join_members(cert.position_members, false));
    rep.push_back("  so p_A p_B p_C = " + std::to_string(cert.position_product) + " on every member");
    rep.push_back(std::string("bonding rule (same -> L, different -> R) is p_C = b_A b_B on every pairing: ") +
                  (cert.bonding_rule_is_parity_law ? "yes" : "no"));
    rep.push_back("  all three pairs same: " + join_members(cert.bonding_members, true));
    rep.push_back("  one pair same, two different: " + join_members(cert.bonding_members, false));
    rep.push_back("  multiplying the three versions: (b_A b_B b_C)^2 p_A p_B p_C = p_A p_B p_C = " +
                  std::to_string(cert.bonding_product));
    rep.push_back(cert.clash ? "clash: " + std::to_string(cert.position_product) + " != " +
                                   std::to_string(cert.bonding_product) + ", no assignment satisfies both rules"
                             : "no clash");
    return cert;
}

ParityCertificate parity_certificate() { return parity_certificate(ghz_state()); }

}  // namespace ghzbox
