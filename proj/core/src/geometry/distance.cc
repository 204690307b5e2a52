/*
 * Copyright 2026 The VMap Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "vmap/geometry/distance.h"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace vmap {
namespace geometry {

Point2D Normalize(Point2D p, const NormalizationFrame& frame) {
  return {(p.x - frame.min_x) / frame.Width(),
          (p.y - frame.min_y) / frame.Height()};
}

Point2D Denormalize(Point2D p, const NormalizationFrame& frame) {
  return {frame.min_x + p.x * frame.Width(),
          frame.min_y + p.y * frame.Height()};
}

double ManhattanDistance(Point2D a, Point2D b) {
  return std::abs(a.x - b.x) + std::abs(a.y - b.y);
}

namespace {

double MeanNearestNeighbor(const std::vector<Point2D>& from,
                           const std::vector<Point2D>& to) {
  double sum = 0.0;
  for (const Point2D& p : from) {
    double best = std::numeric_limits<double>::infinity();
    for (const Point2D& q : to) {
      best = std::min(best, EuclideanDistance(p, q));
    }
    sum += best;
  }
  return sum / static_cast<double>(from.size());
}

}  // namespace

double ChamferDistance(const std::vector<Point2D>& a,
                       const std::vector<Point2D>& b) {
  if (a.empty() || b.empty()) {
    throw std::invalid_argument("chamfer distance of an empty point set");
  }
  return 0.5 * (MeanNearestNeighbor(a, b) + MeanNearestNeighbor(b, a));
}

double CosineSimilarity(Point2D u, Point2D v) {
  const double nu = std::hypot(u.x, u.y);
  const double nv = std::hypot(v.x, v.y);
  return (u.x * v.x + u.y * v.y) / (nu * nv + kCosineEpsilon);
}

}  // namespace geometry
}  // namespace vmap
