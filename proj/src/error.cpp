// Copyright 2026 The varbound Authors
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

#include "varbound/error.hpp"

namespace varbound {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kNotHermitian: return "NotHermitian";
    case ErrorCode::kNotSquare: return "NotSquare";
    case ErrorCode::kNonFinite: return "NonFinite";
    case ErrorCode::kNegativeEigenvalue: return "NegativeEigenvalue";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kBlochNormExceeded: return "BlochNormExceeded";
    case ErrorCode::kTraceNotOne: return "TraceNotOne";
    case ErrorCode::kNotPSD: return "NotPSD";
    case ErrorCode::kDimMismatch: return "DimMismatch";
    case ErrorCode::kEmptySet: return "EmptySet";
    case ErrorCode::kNeedAtLeastTwo: return "NeedAtLeastTwo";
    case ErrorCode::kNeedAtLeastThree: return "NeedAtLeastThree";
    case ErrorCode::kAllCompatible: return "AllCompatible";
    case ErrorCode::kAllCovariancesVanish: return "AllCovariancesVanish";
    case ErrorCode::kCommutatorStructureViolated: return "CommutatorStructureViolated";
    case ErrorCode::kBadRank: return "BadRank";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

bool is_degenerate_bound(ErrorCode code) noexcept {
  return code == ErrorCode::kAllCompatible || code == ErrorCode::kAllCovariancesVanish ||
         code == ErrorCode::kCommutatorStructureViolated;
}

}  // namespace varbound
