// Copyright 2026 The wehrlkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "wehrl/optimize.hpp"

#include <algorithm>
#include <cmath>

namespace wehrl {

namespace {

Point2 lerp(const Point2& a, const Point2& b, double t) {
  return {a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])};
}

double dist(const Point2& a, const Point2& b) { return std::hypot(a[0] - b[0], a[1] - b[1]); }

}  // namespace

NelderMeadResult nelder_mead_2d(const std::function<double(const Point2&)>& f, Point2 start,
                                const NelderMeadOptions& opts) {
  std::array<Point2, 3> p = {start, Point2{start[0] + opts.initial_step, start[1]},
                             Point2{start[0], start[1] + opts.initial_step}};
  std::array<double, 3> v;
  int evals = 0;
  auto eval = [&](const Point2& x) {
    ++evals;
    return f(x);
  };
  for (int i = 0; i < 3; ++i) v[i] = eval(p[i]);

  while (evals < opts.max_evals) {
    // order: best, middle, worst
    std::array<int, 3> idx = {0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return v[a] < v[b]; });
    p = {p[idx[0]], p[idx[1]], p[idx[2]]};
    v = {v[idx[0]], v[idx[1]], v[idx[2]]};

    const double diam = std::max({dist(p[0], p[1]), dist(p[0], p[2]), dist(p[1], p[2])});
    if (diam < opts.xtol) break;

    const Point2 centroid = lerp(p[0], p[1], 0.5);
    const Point2 refl = lerp(centroid, p[2], -1.0);
    const double fr = eval(refl);
    if (fr < v[0]) {
      const Point2 expd = lerp(centroid, p[2], -2.0);
      const double fe = eval(expd);
      if (fe < fr) {
        p[2] = expd;
        v[2] = fe;
      } else {
        p[2] = refl;
        v[2] = fr;
      }
    } else if (fr < v[1]) {
      p[2] = refl;
      v[2] = fr;
    } else {
      const bool outside = fr < v[2];
      const Point2 contr = outside ? lerp(centroid, refl, 0.5) : lerp(centroid, p[2], 0.5);
      const double fc = eval(contr);
      if (fc < std::min(fr, v[2])) {
        p[2] = contr;
        v[2] = fc;
      } else {
        for (int i = 1; i < 3; ++i) {
          p[i] = lerp(p[0], p[i], 0.5);
          v[i] = eval(p[i]);
        }
      }
    }
  }
  const int best = static_cast<int>(std::min_element(v.begin(), v.end()) - v.begin());
  return {p[best], v[best], evals};
}

}  // namespace wehrl
