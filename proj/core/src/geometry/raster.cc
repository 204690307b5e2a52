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

#include "vmap/geometry/raster.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vmap/geometry/polyline.h"

namespace vmap {
namespace geometry {
namespace {

struct CellGeometry {
  double cell_w;
  double cell_h;
  double origin_x;
  double origin_y;

  double CenterX(int col) const { return origin_x + (col + 0.5) * cell_w; }
  double CenterY(int row) const { return origin_y + (row + 0.5) * cell_h; }
  int ColRange(double x) const { return static_cast<int>(std::floor((x - origin_x) / cell_w)); }
  int RowRange(double y) const { return static_cast<int>(std::floor((y - origin_y) / cell_h)); }
};

// Marks cells whose center is within radius of segment [a,b]; only cells
// inside the segment's padded bounding box are visited.
void StampSegment(Point2D a, Point2D b, double radius, const CellGeometry& g,
                  BinaryGrid& grid) {
  const int col_lo = std::max(0, g.ColRange(std::min(a.x, b.x) - radius));
  const int col_hi =
      std::min(grid.width - 1, g.ColRange(std::max(a.x, b.x) + radius));
  const int row_lo = std::max(0, g.RowRange(std::min(a.y, b.y) - radius));
  const int row_hi =
      std::min(grid.height - 1, g.RowRange(std::max(a.y, b.y) + radius));
  for (int row = row_lo; row <= row_hi; ++row) {
    for (int col = col_lo; col <= col_hi; ++col) {
      if (grid.At(row, col)) continue;
      const Point2D center{g.CenterX(col), g.CenterY(row)};
      if (PointSegmentDistance(center, a, b) <= radius) {
        grid.At(row, col) = 1;
      }
    }
  }
}

void FillPolygonInterior(const std::vector<Point2D>& polygon,
                         const CellGeometry& g, BinaryGrid& grid) {
  double min_x = polygon.front().x, max_x = polygon.front().x;
  double min_y = polygon.front().y, max_y = polygon.front().y;
  for (const Point2D& p : polygon) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const int col_lo = std::max(0, g.ColRange(min_x));
  const int col_hi = std::min(grid.width - 1, g.ColRange(max_x));
  const int row_lo = std::max(0, g.RowRange(min_y));
  const int row_hi = std::min(grid.height - 1, g.RowRange(max_y));
  for (int row = row_lo; row <= row_hi; ++row) {
    for (int col = col_lo; col <= col_hi; ++col) {
      if (grid.At(row, col)) continue;
      const Point2D center{g.CenterX(col), g.CenterY(row)};
      if (PointInPolygon(center, polygon)) {
        grid.At(row, col) = 1;
      }
    }
  }
}

}  // namespace

BinaryGrid Rasterize(const std::vector<MapElement>& elements,
                     const NormalizationFrame& frame, int height, int width,
                     double line_width) {
  if (height < 1 || width < 1) {
    throw std::invalid_argument("raster grid needs at least one cell");
  }
  if (!(line_width > 0.0)) {
    throw std::invalid_argument("raster line width must be positive");
  }
  BinaryGrid grid(height, width);
  const CellGeometry g{frame.Width() / width, frame.Height() / height,
                       frame.min_x, frame.min_y};
  const double radius = 0.5 * line_width;
  for (const MapElement& element : elements) {
    ValidateElement(element);
    const std::vector<Point2D>& pts = element.points;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      StampSegment(pts[i], pts[i + 1], radius, g, grid);
    }
    if (element.closed) {
      StampSegment(pts.back(), pts.front(), radius, g, grid);
      FillPolygonInterior(pts, g, grid);
    }
  }
  return grid;
}

}  // namespace geometry
}  // namespace vmap
