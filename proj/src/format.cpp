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

#include "varbound/format.hpp"

#include <cstdio>

namespace varbound {

std::string format_number(double x) {
  if (x == 0.0) return "0";
  char buf[40];
  // The "C" locale is never changed by this library, so '.' is the separator.
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

}  // namespace varbound
