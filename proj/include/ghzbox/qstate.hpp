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

#ifndef GHZBOX_QSTATE_HPP
#define GHZBOX_QSTATE_HPP

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ghzbox {

using Amplitude = std::complex<double>;

/// Amplitude equality tolerance used throughout the library.
inline constexpr double kAmplitudeTolerance = 1e-12;

/// Largest number of boxes a state may span.
inline constexpr int kMaxBoxes = 3;

/// The three single-box bases. Each has exactly two outcomes, indexed 0 and 1.
enum class Basis : std::uint8_t {
    Position,  // (L, R)
    Bonding,   // (+1, -1)
    Phase,     // (+i, -i)
};

/// Outcome labels of all three bases.
enum class Label : std::uint8_t { L, R, PlusOne, MinusOne, PlusI, MinusI };

/// Boxes are always ordered A, B, C. A is the most significant digit of a
/// joint label index, so over two boxes the order is (LL, LR, RL, RR).
enum class Box : std::uint8_t { A = 0, B = 1, C = 2 };

inline constexpr std::array<Box, 3> kAllBoxes = {Box::A, Box::B, Box::C};
inline constexpr std::array<Basis, 3> kAllBases = {Basis::Position, Basis::Bonding, Basis::Phase};

constexpr int index_of(Box b) { return static_cast<int>(b); }

Basis basis_of(Label label);
/// 0 for the first label of the basis (L, +1, +i), 1 for the second.
int index_of(Label label);
Label label_of(Basis basis, int index);
std::array<Label, 2> labels_of(Basis basis);

std::string_view to_string(Basis basis);
std::string_view to_string(Label label);
std::string_view to_string(Box box);
std::optional<Basis> parse_basis(std::string_view text);
std::optional<Label> parse_label(std::string_view text);
std::optional<Box> parse_box(std::string_view text);

/// Row-major 2x2 complex matrix acting on one box.
using Matrix2 = std::array<std::array<Amplitude, 2>, 2>;

Matrix2 adjoint(const Matrix2& m);
Matrix2 multiply(const Matrix2& lhs, const Matrix2& rhs);

/// Amplitudes of one to three boxes over the product of per-box basis labels.
///
/// The constructor validates shape and finiteness only; it does not
/// normalize. Named constructors elsewhere in the library always return
/// normalized states.
class BoxState {
   public:
    BoxState(std::vector<Amplitude> amplitudes, std::vector<Basis> frame);

    /// Single basis vector `index` of `basis` on one box.
    static BoxState basis_vector(Basis basis, int index);

    int n_boxes() const { return static_cast<int>(frame_.size()); }
    std::size_t dimension() const { return amplitudes_.size(); }
    std::span<const Amplitude> amplitudes() const { return amplitudes_; }
    Amplitude operator[](std::size_t joint_index) const { return amplitudes_[joint_index]; }
    const std::vector<Basis>& frame() const { return frame_; }
    Basis frame_of(Box box) const;

    /// Amplitude at the joint label, e.g. {L, L, R}. Labels must match the frame.
    Amplitude amplitude(std::span<const Label> labels) const;

    double norm() const;
    double norm_squared() const;

   private:
    std::vector<Amplitude> amplitudes_;
    std::vector<Basis> frame_;
};

/// Joint index <-> per-box outcome indices, box A most significant.
std::size_t joint_index(std::span<const int> outcome_indices);
std::vector<int> outcome_indices(std::size_t joint_index, int n_boxes);
/// Labels of joint index under `frame`.
std::vector<Label> joint_labels(std::size_t joint_index, std::span<const Basis> frame);
/// Concatenated labels such as "LLR" or "+1,-1,L" (comma separated when any
/// label is longer than one character).
std::string joint_label_string(std::span<const Label> labels);

/// Product state on n_a + n_b boxes; throws CapacityError above three boxes.
BoxState tensor(const BoxState& a, const BoxState& b);

/// <a|b>, conjugate-linear in `a`. Throws FrameError when box count or frame differ.
Amplitude inner(const BoxState& a, const BoxState& b);

/// Throws DegenerateStateError when the norm is at most 1e-12.
BoxState normalize(const BoxState& a);

/// Applies `op` to box `box`, identity elsewhere. `new_basis` becomes that
/// box's frame entry; the operator is responsible for the coordinate change.
BoxState apply_local(const BoxState& s, Box box, const Matrix2& op, Basis new_basis);

/// Same frame and every amplitude within `tol`.
bool approx_equal(const BoxState& a, const BoxState& b, double tol = kAmplitudeTolerance);

bool approx_equal(Amplitude a, Amplitude b, double tol = kAmplitudeTolerance);

}  // namespace ghzbox

#endif  // GHZBOX_QSTATE_HPP
