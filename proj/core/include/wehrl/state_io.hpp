// Copyright 2026 The wehrlkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// JSON state files:
//   {"dim": n, "kind": "pure",  "re": [n values],   "im": [n values]}
//   {"dim": n, "kind": "mixed", "re": [n*n values], "im": [n*n values]}  (row-major)
// Doubles are written in shortest round-trip form, so save/load is bit exact.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "wehrl/fock.hpp"

namespace wehrl {

struct LoadedState {
  DensityMatrix rho;
  std::optional<FockVector> pure;  // set for kind == "pure"
};

LoadedState parse_state_json(std::string_view text);
LoadedState load_state(const std::filesystem::path& path);

std::string state_to_json(const FockVector& f);
std::string state_to_json(const DensityMatrix& rho);

void save_state(const std::filesystem::path& path, const FockVector& f);
void save_state(const std::filesystem::path& path, const DensityMatrix& rho);

}  // namespace wehrl
