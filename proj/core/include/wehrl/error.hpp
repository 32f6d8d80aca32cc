// Copyright 2026 The wehrlkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wehrl {

enum class ErrorCode {
  InvalidArgument,
  InvalidState,
  TailTooLarge,
  NotPSD,
  BoundaryMaximum,
  ValueTooSmall,
  RadiusTooSmall,
  NoCrossing,
  QuadratureDisagreement,
  NonIntegrable,
  DimensionMismatch,
  EmptyLevelSet,
  ConfigError,
  AssertionFailure,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wehrl
