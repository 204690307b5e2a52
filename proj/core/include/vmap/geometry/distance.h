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

#pragma once

#include <vector>

#include "vmap/geometry/types.h"

namespace vmap {
namespace geometry {

// Min-max normalization of a point into the unit square. Points outside
// the frame map outside [0,1]; clipping is the caller's decision.
Point2D Normalize(Point2D p, const NormalizationFrame& frame);
Point2D Denormalize(Point2D p, const NormalizationFrame& frame);

double ManhattanDistance(Point2D a, Point2D b);

// Symmetric averaged Chamfer distance:
//   0.5 * (mean_a min_b |a-b| + mean_b min_a |a-b|).
// Throws std::invalid_argument when either set is empty.
double ChamferDistance(const std::vector<Point2D>& a,
                       const std::vector<Point2D>& b);

// u.v / (|u||v| + eps) with eps guarding zero-length edges.
inline constexpr double kCosineEpsilon = 1e-8;
double CosineSimilarity(Point2D u, Point2D v);

}  // namespace geometry
}  // namespace vmap
