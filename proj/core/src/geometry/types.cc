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

#include "vmap/geometry/types.h"

#include <algorithm>
#include <stdexcept>

namespace vmap {
namespace geometry {

const char* CategoryName(ElementCategory category) {
  switch (category) {
    case ElementCategory::kLaneDivider:
      return "lane_divider";
    case ElementCategory::kStopLine:
      return "stop_line";
    case ElementCategory::kCrosswalk:
      return "crosswalk";
  }
  throw std::invalid_argument("unknown element category code");
}

ElementCategory CategoryFromName(const std::string& name) {
  if (name == "lane_divider") return ElementCategory::kLaneDivider;
  if (name == "stop_line") return ElementCategory::kStopLine;
  if (name == "crosswalk") return ElementCategory::kCrosswalk;
  throw std::invalid_argument("unknown element category name: '" + name + "'");
}

void ValidateElement(const MapElement& element) {
  if (element.points.size() < 2) {
    throw std::invalid_argument("map element needs at least 2 points, got " +
                                std::to_string(element.points.size()));
  }
  for (const Point2D& p : element.points) {
    if (!p.IsFinite()) {
      throw std::invalid_argument("map element contains a non-finite point");
    }
  }
}

int BinaryGrid::CountSet() const {
  return static_cast<int>(std::count(cells.begin(), cells.end(), 1));
}

}  // namespace geometry
}  // namespace vmap
