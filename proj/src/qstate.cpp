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

#include "ghzbox/qstate.hpp"

#include <cmath>
#include <numeric>

#include "ghzbox/errors.hpp"

namespace ghzbox {

Basis basis_of(Label label) {
    switch (label) {
        case Label::L:
        case Label::R:
            return Basis::Position;
        case Label::PlusOne:
        case Label::MinusOne:
            return Basis::Bonding;
        case Label::PlusI:
        case Label::MinusI:
            return Basis::Phase;
    }
    throw std::logic_error("bad label");
}

int index_of(Label label) {
    switch (label) {
        case Label::L:
        case Label::PlusOne:
        case Label::PlusI:
            return 0;
        default:
            return 1;
    }
}

Label label_of(Basis basis, int index) {
    if (index != 0 && index != 1) {
        throw std::out_of_range("outcome index must be 0 or 1");
    }
    return labels_of(basis)[index];
}

std::array<Label, 2> labels_of(Basis basis) {
    switch (basis) {
        case Basis::Position:
            return {Label::L, Label::R};
        case Basis::Bonding:
            return {Label::PlusOne, Label::MinusOne};
        case Basis::Phase:
            return {Label::PlusI, Label::MinusI};
    }
    throw std::logic_error("bad basis");
}

std::string_view to_string(Basis basis) {
    switch (basis) {
        case Basis::Position:
            return "position";
        case Basis::Bonding:
            return "bonding";
        case Basis::Phase:
            return "phase";
    }
    return "?";
}

std::string_view to_string(Label label) {
    switch (label) {
        case Label::L:
            return "L";
        case Label::R:
            return "R";
        case Label::PlusOne:
            return "+1";
        case Label::MinusOne:
            return "-1";
        case Label::PlusI:
            return "+i";
        case Label::MinusI:
            return "-i";
    }
    return "?";
}

std::string_view to_string(Box box) {
    switch (box) {
        case Box::A:
            return "A";
        case Box::B:
            return "B";
        case Box::C:
            return "C";
    }
    return "?";
}

std::optional<Basis> parse_basis(std::string_view text) {
    for (Basis b : kAllBases) {
        if (text == to_string(b)) return b;
    }
    return std::nullopt;
}

std::optional<Label> parse_label(std::string_view text) {
    for (Label l : {Label::L, Label::R, Label::PlusOne, Label::MinusOne, Label::PlusI, Label::MinusI}) {
        if (text == to_string(l)) return l;
    }
    return std::nullopt;
}

std::optional<Box> parse_box(std::string_view text) {
    for (Box b : kAllBoxes) {
        if (text == to_string(b)) return b;
    }
    if (text == "a") return Box::A;
    if (text == "b") return Box::B;
    if (text == "c") return Box::C;
    return std::nullopt;
}

Matrix2 adjoint(const Matrix2& m) {
    Matrix2 out{};
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            out[r][c] = std::conj(m[c][r]);
        }
    }
    return out;
}

Matrix2 multiply(const Matrix2& lhs, const Matrix2& rhs) {
    Matrix2 out{};
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            out[r][c] = lhs[r][0] * rhs[0][c] + lhs[r][1] * rhs[1][c];
        }
    }
    return out;
}

BoxState::BoxState(std::vector<Amplitude> amplitudes, std::vector<Basis> frame)
    : amplitudes_(std::move(amplitudes)), frame_(std::move(frame)) {
    if (frame_.empty()) {
        throw FrameError("a state needs at least one box");
    }
    if (frame_.size() > static_cast<std::size_t>(kMaxBoxes)) {
        throw CapacityError("at most 3 boxes are supported, got " + std::to_string(frame_.size()));
    }
    if (amplitudes_.size() != (std::size_t{1} << frame_.size())) {
        throw FrameError("amplitude count " + std::to_string(amplitudes_.size()) + " does not match " +
                         std::to_string(frame_.size()) + " boxes");
    }
    for (const Amplitude& a : amplitudes_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw DegenerateStateError("non-finite amplitude");
        }
    }
}

BoxState BoxState::basis_vector(Basis basis, int index) {
    std::vector<Amplitude> amps(2, Amplitude{0.0, 0.0});
    amps.at(static_cast<std::size_t>(index)) = 1.0;
    return BoxState(std::move(amps), {basis});
}

Basis BoxState::frame_of(Box box) const {
    if (index_of(box) >= n_boxes()) {
        throw BoxIndexError("box " + std::string(to_string(box)) + " is not part of a " +
                            std::to_string(n_boxes()) + "-box state");
    }
    return frame_[static_cast<std::size_t>(index_of(box))];
}

Amplitude BoxState::amplitude(std::span<const Label> labels) const {
    if (labels.size() != frame_.size()) {
        throw FrameError("label count does not match box count");
    }
    std::vector<int> idx(labels.size());
    for (std::size_t k = 0; k < labels.size(); ++k) {
        if (basis_of(labels[k]) != frame_[k]) {
            throw FrameError("label " + std::string(to_string(labels[k])) + " is not in the " +
                             std::string(to_string(frame_[k])) + " frame");
        }
        idx[k] = index_of(labels[k]);
    }
    return amplitudes_[joint_index(idx)];
}

double BoxState::norm_squared() const {
    return std::accumulate(amplitudes_.begin(), amplitudes_.end(), 0.0,
                           [](double acc, const Amplitude& a) { return acc + std::norm(a); });
}

double BoxState::norm() const { return std::sqrt(norm_squared()); }

std::size_t joint_index(std::span<const int> outcome_indices) {
    std::size_t idx = 0;
    for (int o : outcome_indices) {
        idx = (idx << 1) | static_cast<std::size_t>(o & 1);
    }
    return idx;
}

std::vector<int> outcome_indices(std::size_t joint_index, int n_boxes) {
    std::vector<int> out(static_cast<std::size_t>(n_boxes));
    for (int k = n_boxes - 1; k >= 0; --k) {
        out[static_cast<std::size_t>(k)] = static_cast<int>(joint_index & 1);
        joint_index >>= 1;
    }
    return out;
}

std::vector<Label> joint_labels(std::size_t joint_index, std::span<const Basis> frame) {
    auto idx = outcome_indices(joint_index, static_cast<int>(frame.size()));
    std::vector<Label> out;
    out.reserve(frame.size());
    for (std::size_t k = 0; k < frame.size(); ++k) {
        out.push_back(label_of(frame[k], idx[k]));
    }
    return out;
}

std::string joint_label_string(std::span<const Label> labels) {
    bool single_chars = true;
    for (Label l : labels) {
        single_chars = single_chars && to_string(l).size() == 1;
    }
    std::string out;
    for (std::size_t k = 0; k < labels.size(); ++k) {
        if (k > 0 && !single_chars) out += ',';
        out += to_string(labels[k]);
    }
    return out;
}

BoxState tensor(const BoxState& a, const BoxState& b) {
    if (a.n_boxes() + b.n_boxes() > kMaxBoxes) {
        throw CapacityError("tensor product would span " + std::to_string(a.n_boxes() + b.n_boxes()) +
                            " boxes; at most 3 are supported");
    }
    std::vector<Amplitude> amps;
    amps.reserve(a.dimension() * b.dimension());
    for (Amplitude x : a.amplitudes()) {
        for (Amplitude y : b.amplitudes()) {
            amps.push_back(x * y);
        }
    }
    std::vector<Basis> frame = a.frame();
    frame.insert(frame.end(), b.frame().begin(), b.frame().end());
    return BoxState(std::move(amps), std::move(frame));
}

Amplitude inner(const BoxState& a, const BoxState& b) {
    if (a.frame() != b.frame()) {
        throw FrameError("inner product needs both states in the same frame; change basis first");
    }
    Amplitude acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

BoxState normalize(const BoxState& a) {
    const double n = a.norm();
    if (!(n > kAmplitudeTolerance)) {
        throw DegenerateStateError("cannot normalize a zero vector");
    }
    std::vector<Amplitude> amps(a.amplitudes().begin(), a.amplitudes().end());
    for (Amplitude& x : amps) x /= n;
    return BoxState(std::move(amps), a.frame());
}

BoxState apply_local(const BoxState& s, Box box, const Matrix2& op, Basis new_basis) {
    const int k = index_of(box);
    const int n = s.n_boxes();
    if (k >= n) {
        throw BoxIndexError("box " + std::string(to_string(box)) + " is not part of a " +
                            std::to_string(n) + "-box state");
    }
    const std::size_t stride = std::size_t{1} << (n - 1 - k);
    std::vector<Amplitude> out(s.dimension());
    for (std::size_t i = 0; i < s.dimension(); ++i) {
        if (i & stride) continue;
        const Amplitude x0 = s[i];
        const Amplitude x1 = s[i | stride];
        out[i] = op[0][0] * x0 + op[0][1] * x1;
        out[i | stride] = op[1][0] * x0 + op[1][1] * x1;
    }
    std::vector<Basis> frame = s.frame();
    frame[static_cast<std::size_t>(k)] = new_basis;
    return BoxState(std::move(out), std::move(frame));
}

bool approx_equal(Amplitude a, Amplitude b, double tol) {
    return std::abs(a.real() - b.real()) <= tol && std::abs(a.imag() - b.imag()) <= tol;
}

bool approx_equal(const BoxState& a, const BoxState& b, double tol) {
    if (a.frame() != b.frame()) return false;
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        if (!approx_equal(a[i], b[i], tol)) return false;
    }
    return true;
}

}  // namespace ghzbox
