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

// Total arc length of the element, including the closing segment for
// closed elements.
double PolylineLength(const MapElement& element);

struct ResampleResult {
  MapElement element;
  // True when the input had zero arc length and the output is n copies
  // of the single location.
  bool degenerate = false;
};

// Resamples the element to exactly n_points at equal arc-length spacing.
// Open elements keep both endpoints exactly; closed elements keep point 0
// at the original first vertex and spread points over the full perimeter.
// Category and closed flag are preserved. Requires n_points >= 2.
ResampleResult ResampleUniform(const MapElement& element, int n_points);

// Consecutive-point difference vectors: n-1 for open elements, n for
// closed elements (the closing edge is included).
std::vector<Point2D> EdgeVectors(const MapElement& element);

// Clips an element to an axis-aligned frame. Open polylines may split
// into several pieces when they leave and re-enter the frame; closed
// elements are clipped to the intersection polygon. Elements fully
// outside yield an empty result. Pieces degenerating to fewer than two
// points are dropped.
std::vector<MapElement> ClipToFrame(const MapElement& element,
                                    const NormalizationFrame& frame);

// Distance from point p to the segment [a, b].
double PointSegmentDistance(Point2D p, Point2D a, Point2D b);

// Even-odd test; points exactly on the boundary may fall on either side.
bool PointInPolygon(Point2D p, const std::vector<Point2D>& polygon);

// Shortest distance from p to the element's geometry (edges only; the
// interior of closed elements is not considered).
double PointElementDistance(Point2D p, const MapElement& element);

}  // namespace geometry
}  // namespace vmap
