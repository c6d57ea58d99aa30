// Copyright 2026 The qudit-epi Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qepi/error.hpp"

namespace qepi {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotUnitTrace: return "NotUnitTrace";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::BadSubsystemIndex: return "BadSubsystemIndex";
    case ErrorKind::BadPermutation: return "BadPermutation";
    case ErrorKind::EigenSolverFailure: return "EigenSolverFailure";
    case ErrorKind::BadRank: return "BadRank";
    case ErrorKind::BadDimension: return "BadDimension";
    case ErrorKind::DegenerateSample: return "DegenerateSample";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::NotComplete: return "NotComplete";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::NegligibleOutcome: return "NegligibleOutcome";
    case ErrorKind::TotalMismatch: return "TotalMismatch";
    case ErrorKind::NotDistribution: return "NotDistribution";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::IoFailure: return "IoFailure";
    case ErrorKind::ParseFailure: return "ParseFailure";
    }
    return "Unknown";
}

} // namespace qepi
