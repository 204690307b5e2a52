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

// Rasterizes map elements into an H x W binary grid over the frame. A
// cell is set iff its center lies within line_width/2 of any element's
// geometry; interiors of closed elements are filled. Cell centers only,
// no anti-aliasing. Deterministic for fixed input.
BinaryGrid Rasterize(const std::vector<MapElement>& elements,
                     const NormalizationFrame& frame, int height, int width,
                     double line_width);

}  // namespace geometry
}  // namespace vmap
