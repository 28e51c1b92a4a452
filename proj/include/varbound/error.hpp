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

#ifndef VARBOUND_ERROR_HPP
#define VARBOUND_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace varbound {

// Every failure the library can raise. The numeric values are part of the C
// ABI (see varbound.h) and must not be reordered.
enum class ErrorCode : int {
  kNotHermitian = 1,
  kNotSquare = 2,
  kNonFinite = 3,
  kNegativeEigenvalue = 4,
  kShapeMismatch = 5,
  kBlochNormExceeded = 6,
  kTraceNotOne = 7,
  kNotPSD = 8,
  kDimMismatch = 9,
  kEmptySet = 10,
  kNeedAtLeastTwo = 11,
  kNeedAtLeastThree = 12,
  kAllCompatible = 13,
  kAllCovariancesVanish = 14,
  kCommutatorStructureViolated = 15,
  kBadRank = 16,
  kInvalidArgument = 17,
  kParseError = 18,
  kIoError = 19,
};

std::string_view error_name(ErrorCode code) noexcept;

// True for the errors a bound raises when the configuration it was asked
// about is excluded by the underlying inequality (zero denominators).
bool is_degenerate_bound(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace varbound

#endif  // VARBOUND_ERROR_HPP
