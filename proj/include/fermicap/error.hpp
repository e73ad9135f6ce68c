/*
 * Copyright 2026 The fermicap Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fermicap {

enum class ErrorKind {
    NotHermitian,
    NoConvergence,
    NotPSD,
    OddDimension,
    NotAntisymmetric,
    IndexOutOfRange,
    DimensionMismatch,
    InvalidChannel,
    InvalidState,
    Inadmissible,
    OddWeight,
    NotOrthogonal,
    NotPure,
    OutOfRange,
    LengthMismatch,
    HypothesisViolated,
    InvalidConfig,
};

constexpr std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotHermitian: return "NotHermitian";
        case ErrorKind::NoConvergence: return "NoConvergence";
        case ErrorKind::NotPSD: return "NotPSD";
        case ErrorKind::OddDimension: return "OddDimension";
        case ErrorKind::NotAntisymmetric: return "NotAntisymmetric";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::InvalidChannel: return "InvalidChannel";
        case ErrorKind::InvalidState: return "InvalidState";
        case ErrorKind::Inadmissible: return "Inadmissible";
        case ErrorKind::OddWeight: return "OddWeight";
        case ErrorKind::NotOrthogonal: return "NotOrthogonal";
        case ErrorKind::NotPure: return "NotPure";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::HypothesisViolated: return "HypothesisViolated";
        case ErrorKind::InvalidConfig: return "InvalidConfig";
    }
    return "Unknown";
}

/// Single exception type for the library; `kind()` distinguishes failure modes.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    /// True for failures of the numerical kernels rather than of the caller's input.
    bool is_numerical() const noexcept {
        return kind_ == ErrorKind::NoConvergence || kind_ == ErrorKind::NotPSD ||
               kind_ == ErrorKind::NotHermitian;
    }

private:
    ErrorKind kind_;
};

inline void require(bool condition, ErrorKind kind, const std::string& what) {
    if (!condition) throw Error(kind, what);
}

}  // namespace fermicap
