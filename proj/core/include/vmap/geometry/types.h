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

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace vmap {
namespace geometry {

// A point in a local planar frame, in meters.
struct Point2D {
  double x = 0.0;
  double y = 0.0;

  bool IsFinite() const { return std::isfinite(x) && std::isfinite(y); }
};

inline Point2D operator+(Point2D a, Point2D b) { return {a.x + b.x, a.y + b.y}; }
inline Point2D operator-(Point2D a, Point2D b) { return {a.x - b.x, a.y - b.y}; }
inline Point2D operator*(double s, Point2D p) { return {s * p.x, s * p.y}; }

inline double EuclideanDistance(Point2D a, Point2D b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

// Semantic categories of map elements. Integer codes are part of the
// model and file contracts; kBackgroundCode is reserved for "no object"
// in classification heads and never appears on a stored element.
enum class ElementCategory : int {
  kLaneDivider = 0,
  kStopLine = 1,
  kCrosswalk = 2,
};

inline constexpr int kNumCategories = 3;
inline constexpr int kBackgroundCode = 3;

const char* CategoryName(ElementCategory category);
// Throws std::invalid_argument for an unknown name.
ElementCategory CategoryFromName(const std::string& name);

// One semantic map element: an ordered point list plus a category.
// Closed elements (polygons, e.g. crosswalks) do not repeat the first
// point at the end; closure is implicit.
struct MapElement {
  ElementCategory category = ElementCategory::kLaneDivider;
  std::vector<Point2D> points;
  bool closed = false;
};

// Throws std::invalid_argument if the element violates its invariants
// (fewer than 2 points, or a non-finite coordinate).
void ValidateElement(const MapElement& element);

// The element set perceived by one vehicle during one trip.
struct PerceivedTrip {
  std::int64_t trip_id = 0;
  std::vector<MapElement> elements;
};

// Axis-aligned frame used for min-max coordinate normalization.
struct NormalizationFrame {
  double min_x = 0.0;
  double min_y = 0.0;
  double max_x = 1.0;
  double max_y = 1.0;

  double Width() const { return max_x - min_x; }
  double Height() const { return max_y - min_y; }
  bool IsValid() const {
    return std::isfinite(min_x) && std::isfinite(min_y) &&
           std::isfinite(max_x) && std::isfinite(max_y) && max_x > min_x &&
           max_y > min_y;
  }
  bool Contains(Point2D p, double slack = 0.0) const {
    return p.x >= min_x - slack && p.x <= max_x + slack &&
           p.y >= min_y - slack && p.y <= max_y + slack;
  }
};

// Ground truth plus the crowdsourced trip collection for one tile.
struct Scene {
  std::string scene_id;
  NormalizationFrame bounds;
  std::vector<MapElement> gt_elements;
  std::vector<PerceivedTrip> trips;
};

// Dense binary occupancy grid (row-major; row 0 at min_y, column 0 at
// min_x of the frame it was rasterized over).
struct BinaryGrid {
  int height = 0;
  int width = 0;
  std::vector<std::uint8_t> cells;

  BinaryGrid() = default;
  BinaryGrid(int h, int w) : height(h), width(w), cells(h * w, 0) {}

  std::uint8_t& At(int row, int col) { return cells[row * width + col]; }
  std::uint8_t At(int row, int col) const { return cells[row * width + col]; }
  int CountSet() const;
};

}  // namespace geometry
}  // namespace vmap
