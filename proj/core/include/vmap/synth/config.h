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
#include <string>

namespace vmap {
namespace synth {

// Parameters of the synthetic ground-truth scene generator. Scenes are
// square tiles of side frame_size meters containing parallel lane
// dividers with optional smooth curvature, stop lines perpendicular to
// the lanes, and crosswalk rectangles.
struct SceneConfig {
  double frame_size = 60.0;
  int lanes_min = 2;
  int lanes_max = 4;
  double lane_spacing = 3.5;
  // Maximum heading deviation of a lane from straight, in radians.
  double max_curvature = 0.15;
  double stop_line_prob = 0.5;
  double crosswalk_prob = 0.5;
  std::uint64_t seed = 0;
};

// Throws std::invalid_argument when a field is out of range.
void ValidateSceneConfig(const SceneConfig& config);

enum class Severity { kNormal, kRain, kNight };

const char* SeverityName(Severity severity);
Severity SeverityFromName(const std::string& name);

// Per-trip degradation model. All draws are deterministic given the
// trip seed.
struct NoiseConfig {
  double point_jitter_sigma = 0.15;     // meters, per coordinate
  double trip_drift_sigma = 0.30;       // meters, rigid translation std
  double trip_rotation_sigma = 0.010;   // radians, about the frame center
  double element_dropout_prob = 0.05;
  double spurious_element_rate = 0.20;  // expected count per trip
  double partial_observation_prob = 0.05;
};

void ValidateNoiseConfig(const NoiseConfig& config);

// Preset table; fields are totally ordered normal <= rain <= night.
// Magnitudes are calibrated for measurable degradation, not measured
// from any fleet.
NoiseConfig NoiseForSeverity(Severity severity);

// Zero noise in every field; trips reproduce ground truth exactly.
NoiseConfig ZeroNoise();

}  // namespace synth
}  // namespace vmap
