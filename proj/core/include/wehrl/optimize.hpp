// Copyright 2026 The wehrlkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <functional>

namespace wehrl {

using Point2 = std::array<double, 2>;

struct NelderMeadOptions {
  double initial_step = 0.1;
  double xtol = 1e-10;  // stop when the simplex diameter drops below this
  int max_evals = 4000;
};

struct NelderMeadResult {
  Point2 x;
  double value;
  int evals;
};

/// Minimizes f over the plane with the Nelder-Mead simplex method.
NelderMeadResult nelder_mead_2d(const std::function<double(const Point2&)>& f, Point2 start,
                                const NelderMeadOptions& opts = {});

}  // namespace wehrl
