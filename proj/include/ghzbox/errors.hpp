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

#ifndef GHZBOX_ERRORS_HPP
#define GHZBOX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ghzbox {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// More than three boxes requested.
class CapacityError : public Error {
   public:
    using Error::Error;
};

/// Two states (or a state and an operation) disagree on box count or basis frame.
class FrameError : public Error {
   public:
    using Error::Error;
};

/// Zero vector where a normalizable state is required.
class DegenerateStateError : public Error {
   public:
    using Error::Error;
};

/// Phase factor with modulus different from one.
class InvalidPhaseError : public Error {
   public:
    using Error::Error;
};

/// Requested outcome (or sequence of outcomes) has probability zero.
class ImpossibleOutcomeError : public Error {
   public:
    using Error::Error;
};

/// Box index outside the state.
class BoxIndexError : public Error {
   public:
    using Error::Error;
};

/// Some reachable joint outcome does not give a certain prediction.
class NoRuleError : public Error {
   public:
    using Error::Error;
};

/// The rule differs between pair choices.
class AsymmetryError : public Error {
   public:
    using Error::Error;
};

class UnknownFigureError : public Error {
   public:
    using Error::Error;
};

}  // namespace ghzbox

#endif  // GHZBOX_ERRORS_HPP
