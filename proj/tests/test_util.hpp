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

#ifndef GHZBOX_TESTS_TEST_UTIL_HPP
#define GHZBOX_TESTS_TEST_UTIL_HPP

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "ghzbox/qstate.hpp"

namespace ghzbox::testing {

inline const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
inline constexpr Amplitude kI{0.0, 1.0};

inline void expect_amplitudes_near(const BoxState& s, const std::vector<Amplitude>& ref, double tol = 1e-12) {
    ASSERT_EQ(s.dimension(), ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) {
        EXPECT_NEAR(s[i].real(), ref[i].real(), tol) << "i=" << i << " (real)";
        EXPECT_NEAR(s[i].imag(), ref[i].imag(), tol) << "i=" << i << " (imag)";
    }
}

inline void expect_amplitude_near(Amplitude got, Amplitude want, double tol = 1e-12) {
    EXPECT_NEAR(got.real(), want.real(), tol);
    EXPECT_NEAR(got.imag(), want.imag(), tol);
}

/// Haar-ish random normalized state: Gaussian real and imaginary parts.
inline BoxState random_state(std::mt19937_64& rng, std::vector<Basis> frame) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Amplitude> amps(std::size_t{1} << frame.size());
    double n2 = 0.0;
    for (auto& a : amps) {
        a = {gauss(rng), gauss(rng)};
        n2 += std::norm(a);
    }
    for (auto& a : amps) a /= std::sqrt(n2);
    return BoxState(std::move(amps), std::move(frame));
}

inline Basis random_basis(std::mt19937_64& rng) {
    return kAllBases[std::uniform_int_distribution<int>(0, 2)(rng)];
}

}  // namespace ghzbox::testing

#endif  // GHZBOX_TESTS_TEST_UTIL_HPP
