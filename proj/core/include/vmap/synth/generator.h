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

#include <cstdint>
#include <vector>

#include "vmap/geometry/types.h"
#include "vmap/synth/config.h"

namespace vmap {
namespace synth {

// Generates a ground-truth scene (trips empty). Deterministic given the
// seed. Throws std::invalid_argument when the configuration cannot fit
// even one lane band inside the frame.
geometry::Scene GenerateScene(const SceneConfig& config, std::uint64_t seed);

// Simulates one crowdsourced trip over the ground truth. Applies, in
// order: per-trip rigid transform, per-element dropout, per-element
// truncation (a contiguous arc of at least 50% is kept), per-point
// Gaussian jitter, Poisson-many spurious elements. The result is clipped
// to the frame. Deterministic given trip_seed.
geometry::PerceivedTrip PerturbTrip(
    const std::vector<geometry::MapElement>& gt_elements,
    const NoiseConfig& noise, std::uint64_t trip_seed,
    const geometry::NormalizationFrame& frame, std::int64_t trip_id);

// Generates scene_count scenes, each with trips_per_scene perturbed
// trips. Scene ids embed the per-scene seed so that train/val hash
// splits vary with the root seed.
std::vector<geometry::Scene> BuildSceneSet(int scene_count,
                                           const SceneConfig& config,
                                           const NoiseConfig& noise,
                                           int trips_per_scene,
                                           std::uint64_t seed);

}  // namespace synth
}  // namespace vmap
