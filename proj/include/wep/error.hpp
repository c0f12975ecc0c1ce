// Copyright 2026 The wep Authors
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

#include <stdexcept>
#include <string>
#include <string_view>

namespace wep {

// Every failure raised by the library carries one of these kinds so callers
// (and tests) can branch on the cause without parsing messages.
enum class ErrorKind {
  // graph input
  MalformedGraph6,
  MalformedEdgeList,
  SelfLoop,
  DuplicateEdge,
  VertexOutOfRange,
  GraphTooLarge,
  EmptySet,
  NotConnected,
  // numerics / matrices
  NoConvergence,
  DimensionMismatch,
  NotSquare,
  NotSymmetric,
  NegativeEntry,
  // partitions and permutations
  Overlap,
  Uncovered,
  EmptyCell,
  GroundSetMismatch,
  MalformedPartition,
  NotPermutation,
  MalformedPermutation,
  NotInvolution,
  HasFixedPoint,
  NotTwoHomogeneous,
  // joint partitions
  SpectralRadiusMismatch,
  NotBalanced,
  NotWeightEquitable,
  NuNotCellConstant,
  // cographs
  NotCograph,
  InvalidCotree,
  NoSuchAutomorphism,
  OddOrder,
  BadC,
  BadN,
  // oracle / experiment
  TooLarge,
  NoHomogeneousPartition,
  SeedRequired,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedGraph6: return "MalformedGraph6";
    case ErrorKind::MalformedEdgeList: return "MalformedEdgeList";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::GraphTooLarge: return "GraphTooLarge";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NegativeEntry: return "NegativeEntry";
    case ErrorKind::Overlap: return "Overlap";
    case ErrorKind::Uncovered: return "Uncovered";
    case ErrorKind::EmptyCell: return "EmptyCell";
    case ErrorKind::GroundSetMismatch: return "GroundSetMismatch";
    case ErrorKind::MalformedPartition: return "MalformedPartition";
    case ErrorKind::NotPermutation: return "NotPermutation";
    case ErrorKind::MalformedPermutation: return "MalformedPermutation";
    case ErrorKind::NotInvolution: return "NotInvolution";
    case ErrorKind::HasFixedPoint: return "HasFixedPoint";
    case ErrorKind::NotTwoHomogeneous: return "NotTwoHomogeneous";
    case ErrorKind::SpectralRadiusMismatch: return "SpectralRadiusMismatch";
    case ErrorKind::NotBalanced: return "NotBalanced";
    case ErrorKind::NotWeightEquitable: return "NotWeightEquitable";
    case ErrorKind::NuNotCellConstant: return "NuNotCellConstant";
    case ErrorKind::NotCograph: return "NotCograph";
    case ErrorKind::InvalidCotree: return "InvalidCotree";
    case ErrorKind::NoSuchAutomorphism: return "NoSuchAutomorphism";
    case ErrorKind::OddOrder: return "OddOrder";
    case ErrorKind::BadC: return "BadC";
    case ErrorKind::BadN: return "BadN";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NoHomogeneousPartition: return "NoHomogeneousPartition";
    case ErrorKind::SeedRequired: return "SeedRequired";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

namespace detail {

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool condition, ErrorKind kind, const std::string& what) {
  if (!condition) fail(kind, what);
}

}  // namespace detail
}  // namespace wep
