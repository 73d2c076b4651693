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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dirprod {

enum class ErrorCode {
  LoopEdge,
  DuplicateEdge,
  BadId,
  BadParameter,
  BadCoordinate,
  BadCorner,
  BadCycle,
  EvenCycle,
  NoOddCycle,
  NotAWalk,
  NotAGeodesic,
  Disconnected,
  EmptyGraph,
  GeodesicBudgetExceeded,
  OverlappingBalls,
  UncoveredOddCycle,
  NotMRegular,
  NotBipartite,
  ResourceLimit,
  ParseError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::BadId: return "BadId";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::BadCoordinate: return "BadCoordinate";
    case ErrorCode::BadCorner: return "BadCorner";
    case ErrorCode::BadCycle: return "BadCycle";
    case ErrorCode::EvenCycle: return "EvenCycle";
    case ErrorCode::NoOddCycle: return "NoOddCycle";
    case ErrorCode::NotAWalk: return "NotAWalk";
    case ErrorCode::NotAGeodesic: return "NotAGeodesic";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::GeodesicBudgetExceeded: return "GeodesicBudgetExceeded";
    case ErrorCode::OverlappingBalls: return "OverlappingBalls";
    case ErrorCode::UncoveredOddCycle: return "UncoveredOddCycle";
    case ErrorCode::NotMRegular: return "NotMRegular";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when a geodesic enumeration would emit more paths than allowed.
class GeodesicBudgetExceeded : public Error {
 public:
  GeodesicBudgetExceeded(std::uint64_t count, std::uint64_t cap)
      : Error(ErrorCode::GeodesicBudgetExceeded,
              std::to_string(count) + " geodesics exceed cap " + std::to_string(cap)),
        count_(count) {}

  /// Number of geodesics counted (saturated at 2^63).
  std::uint64_t count() const noexcept { return count_; }

 private:
  std::uint64_t count_;
};

/// Raised by a side-validity check; carries the offending side index.
class NotAGeodesic : public Error {
 public:
  explicit NotAGeodesic(int side)
      : Error(ErrorCode::NotAGeodesic, "side " + std::to_string(side) + " is not a geodesic"),
        side_(side) {}

  int side() const noexcept { return side_; }

 private:
  int side_;
};

}  // namespace dirprod
