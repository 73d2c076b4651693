// Copyright 2026 The dirprod Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Helpers shared by the unit suites.

#pragma once

#include <catch2/catch_amalgamated.hpp>

#include <functional>

#include "dirprod/error.hpp"

namespace testing {

/// Runs `f` and returns the code of the library error it raised.
inline dirprod::ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const dirprod::Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return dirprod::ErrorCode::BadParameter;
}

}  // namespace testing
