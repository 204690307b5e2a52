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

#include "vmap/geometry/polyline.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace vmap {
namespace geometry {
namespace {

// Vertex ring of the element, with the first point appended again for
// closed elements so segment walks cover the closing edge.
std::vector<Point2D> SegmentChain(const MapElement& element) {
  std::vector<Point2D> chain = element.points;
  if (element.closed) chain.push_back(element.points.front());
  return chain;
}

}  // namespace

double PolylineLength(const MapElement& element) {
  ValidateElement(element);
  const std::vector<Point2D> chain = SegmentChain(element);
  double length = 0.0;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    length += EuclideanDistance(chain[i], chain[i + 1]);
  }
  return length;
}

ResampleResult ResampleUniform(const MapElement& element, int n_points) {
  ValidateElement(element);
  if (n_points < 2) {
    throw std::invalid_argument("resample needs n_points >= 2, got " +
                                std::to_string(n_points));
  }

  const std::vector<Point2D> chain = SegmentChain(element);
  std::vector<double> cumulative(chain.size(), 0.0);
  for (std::size_t i = 1; i < chain.size(); ++i) {
    cumulative[i] =
        cumulative[i - 1] + EuclideanDistance(chain[i - 1], chain[i]);
  }
  const double total = cumulative.back();

  ResampleResult result;
  result.element.category = element.category;
  result.element.closed = element.closed;

  if (total <= 0.0) {
    result.element.points.assign(n_points, element.points.front());
    result.degenerate = true;
    return result;
  }

  // Open elements span [0, total] inclusive; closed elements spread
  // n_points over the perimeter without duplicating the closure point.
  const double spacing =
      element.closed ? total / n_points : total / (n_points - 1);

  result.element.points.reserve(n_points);
  std::size_t segment = 0;
  for (int k = 0; k < n_points; ++k) {
    if (k == 0) {
      result.element.points.push_back(chain.front());
      continue;
    }
    if (!element.closed && k == n_points - 1) {
      result.element.points.push_back(chain.back());
      continue;
    }
    const double target = k * spacing;
    while (segment + 2 < chain.size() && cumulative[segment + 1] < target) {
      ++segment;
    }
    const double seg_len = cumulative[segment + 1] - cumulative[segment];
    const double t =
        seg_len > 0.0 ? (target - cumulative[segment]) / seg_len : 0.0;
    result.element.points.push_back(chain[segment] +
                                    t * (chain[segment + 1] - chain[segment]));
  }
  return result;
}

std::vector<Point2D> EdgeVectors(const MapElement& element) {
  ValidateElement(element);
  const std::vector<Point2D> chain = SegmentChain(element);
  std::vector<Point2D> edges;
  edges.reserve(chain.size() - 1);
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    edges.push_back(chain[i + 1] - chain[i]);
  }
  return edges;
}

double PointSegmentDistance(Point2D p, Point2D a, Point2D b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  if (len2 == 0.0) return EuclideanDistance(p, a);
  double t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return EuclideanDistance(p, {a.x + t * dx, a.y + t * dy});
}

bool PointInPolygon(Point2D p, const std::vector<Point2D>& polygon) {
  bool inside = false;
  const std::size_t n = polygon.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point2D& a = polygon[i];
    const Point2D& b = polygon[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x_cross = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
      if (p.x < x_cross) inside = !inside;
    }
  }
  return inside;
}

double PointElementDistance(Point2D p, const MapElement& element) {
  const std::vector<Point2D> chain = SegmentChain(element);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    best = std::min(best, PointSegmentDistance(p, chain[i], chain[i + 1]));
  }
  return best;
}

namespace {

enum class FrameEdge { kMinX, kMaxX, kMinY, kMaxY };

bool InsideEdge(Point2D p, FrameEdge edge, const NormalizationFrame& f) {
  switch (edge) {
    case FrameEdge::kMinX:
      return p.x >= f.min_x;
    case FrameEdge::kMaxX:
      return p.x <= f.max_x;
    case FrameEdge::kMinY:
      return p.y >= f.min_y;
    case FrameEdge::kMaxY:
      return p.y <= f.max_y;
  }
  return false;
}

// Intersection of segment [a,b] with the boundary line of the edge. The
// clipped coordinate is set to the boundary value exactly.
Point2D IntersectEdge(Point2D a, Point2D b, FrameEdge edge,
                      const NormalizationFrame& f) {
  switch (edge) {
    case FrameEdge::kMinX:
      return {f.min_x, a.y + (f.min_x - a.x) / (b.x - a.x) * (b.y - a.y)};
    case FrameEdge::kMaxX:
      return {f.max_x, a.y + (f.max_x - a.x) / (b.x - a.x) * (b.y - a.y)};
    case FrameEdge::kMinY:
      return {a.x + (f.min_y - a.y) / (b.y - a.y) * (b.x - a.x), f.min_y};
    case FrameEdge::kMaxY:
      return {a.x + (f.max_y - a.y) / (b.y - a.y) * (b.x - a.x), f.max_y};
  }
  return a;
}

// Clips open polyline pieces against one half-plane; a piece can split.
std::vector<std::vector<Point2D>> ClipPiecesToEdge(
    const std::vector<std::vector<Point2D>>& pieces, FrameEdge edge,
    const NormalizationFrame& f) {
  std::vector<std::vector<Point2D>> out;
  for (const auto& piece : pieces) {
    std::vector<Point2D> current;
    for (std::size_t i = 0; i < piece.size(); ++i) {
      const Point2D p = piece[i];
      const bool in_now = InsideEdge(p, edge, f);
      if (i > 0) {
        const Point2D prev = piece[i - 1];
        const bool in_prev = InsideEdge(prev, edge, f);
        if (in_prev != in_now) {
          current.push_back(IntersectEdge(prev, p, edge, f));
          if (!in_now) {
            out.push_back(std::move(current));
            current.clear();
          }
        }
      }
      if (in_now) current.push_back(p);
    }
    if (!current.empty()) out.push_back(std::move(current));
  }
  return out;
}

std::vector<Point2D> ClipPolygonToEdge(const std::vector<Point2D>& polygon,
                                       FrameEdge edge,
                                       const NormalizationFrame& f) {
  std::vector<Point2D> out;
  const std::size_t n = polygon.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2D cur = polygon[i];
    const Point2D prev = polygon[(i + n - 1) % n];
    const bool cur_in = InsideEdge(cur, edge, f);
    const bool prev_in = InsideEdge(prev, edge, f);
    if (cur_in) {
      if (!prev_in) out.push_back(IntersectEdge(prev, cur, edge, f));
      out.push_back(cur);
    } else if (prev_in) {
      out.push_back(IntersectEdge(prev, cur, edge, f));
    }
  }
  return out;
}

std::vector<Point2D> DropConsecutiveDuplicates(std::vector<Point2D> points,
                                               bool closed) {
  std::vector<Point2D> out;
  for (const Point2D& p : points) {
    if (out.empty() || EuclideanDistance(out.back(), p) > 1e-12) {
      out.push_back(p);
    }
  }
  if (closed && out.size() > 1 &&
      EuclideanDistance(out.front(), out.back()) <= 1e-12) {
    out.pop_back();
  }
  return out;
}

}  // namespace

std::vector<MapElement> ClipToFrame(const MapElement& element,
                                    const NormalizationFrame& frame) {
  ValidateElement(element);
  if (!frame.IsValid()) {
    throw std::invalid_argument("clip frame is invalid");
  }
  constexpr FrameEdge kEdges[] = {FrameEdge::kMinX, FrameEdge::kMaxX,
                                  FrameEdge::kMinY, FrameEdge::kMaxY};
  std::vector<MapElement> result;
  if (element.closed) {
    std::vector<Point2D> polygon = element.points;
    for (FrameEdge edge : kEdges) {
      polygon = ClipPolygonToEdge(polygon, edge, frame);
      if (polygon.empty()) return result;
    }
    polygon = DropConsecutiveDuplicates(std::move(polygon), /*closed=*/true);
    if (polygon.size() >= 3) {
      result.push_back({element.category, std::move(polygon), true});
    }
    return result;
  }

  std::vector<std::vector<Point2D>> pieces = {element.points};
  for (FrameEdge edge : kEdges) {
    pieces = ClipPiecesToEdge(pieces, edge, frame);
    if (pieces.empty()) return result;
  }
  for (auto& piece : pieces) {
    piece = DropConsecutiveDuplicates(std::move(piece), /*closed=*/false);
    if (piece.size() >= 2) {
      result.push_back({element.category, std::move(piece), false});
    }
  }
  return result;
}

}  // namespace geometry
}  // namespace vmap
