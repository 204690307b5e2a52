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

#include "vmap/synth/config.h"

#include <stdexcept>

namespace vmap {
namespace synth {
namespace {

void CheckProbability(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " must be in [0,1]");
  }
}

void CheckNonNegative(double value, const char* name) {
  if (!(value >= 0.0)) {
    throw std::invalid_argument(std::string(name) + " must be non-negative");
  }
}

}  // namespace

void ValidateSceneConfig(const SceneConfig& config) {
  if (!(config.frame_size > 0.0)) {
    throw std::invalid_argument("frame_size must be positive");
  }
  if (config.lanes_min < 1 || config.lanes_max < config.lanes_min) {
    throw std::invalid_argument("lane count range must satisfy 1 <= min <= max");
  }
  if (!(config.lane_spacing > 0.0)) {
    throw std::invalid_argument("lane_spacing must be positive");
  }
  if (!(config.max_curvature >= 0.0 && config.max_curvature < 1.0)) {
    throw std::invalid_argument("max_curvature must be in [0,1) radians");
  }
  CheckProbability(config.stop_line_prob, "stop_line_prob");
  CheckProbability(config.crosswalk_prob, "crosswalk_prob");
}

void ValidateNoiseConfig(const NoiseConfig& config) {
  CheckNonNegative(config.point_jitter_sigma, "point_jitter_sigma");
  CheckNonNegative(config.trip_drift_sigma, "trip_drift_sigma");
  CheckNonNegative(config.trip_rotation_sigma, "trip_rotation_sigma");
  CheckNonNegative(config.spurious_element_rate, "spurious_element_rate");
  CheckProbability(config.element_dropout_prob, "element_dropout_prob");
  CheckProbability(config.partial_observation_prob, "partial_observation_prob");
}

const char* SeverityName(Severity severity) {
  switch (severity) {
    case Severity::kNormal:
      return "normal";
    case Severity::kRain:
      return "rain";
    case Severity::kNight:
      return "night";
  }
  throw std::invalid_argument("unknown severity code");
}

Severity SeverityFromName(const std::string& name) {
  if (name == "normal") return Severity::kNormal;
  if (name == "rain") return Severity::kRain;
  if (name == "night") return Severity::kNight;
  throw std::invalid_argument("unknown severity preset: '" + name + "'");
}

NoiseConfig NoiseForSeverity(Severity severity) {
  NoiseConfig noise;
  switch (severity) {
    case Severity::kNormal:
      noise = {0.15, 0.30, 0.010, 0.05, 0.20, 0.05};
      break;
    case Severity::kRain:
      noise = {0.30, 0.45, 0.015, 0.15, 0.40, 0.10};
      break;
    case Severity::kNight:
      noise = {0.45, 0.60, 0.020, 0.25, 0.60, 0.15};
      break;
  }
  return noise;
}

NoiseConfig ZeroNoise() { return {0.0, 0.0, 0.0, 0.0, 0.0, 0.0}; }

}  // namespace synth
}  // namespace vmap
