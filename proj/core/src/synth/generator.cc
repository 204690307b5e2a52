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

#include "vmap/synth/generator.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "vmap/common/rng.h"
#include "vmap/geometry/distance.h"
#include "vmap/geometry/polyline.h"

namespace vmap {
namespace synth {

using geometry::MapElement;
using geometry::NormalizationFrame;
using geometry::PerceivedTrip;
using geometry::Point2D;
using geometry::Scene;

namespace {

constexpr double kEdgeMargin = 2.0;     // keep geometry off the frame border
constexpr double kLaneStep = 3.0;       // sampling step along lanes, meters
constexpr double kStopLineOverhang = 0.6;
constexpr double kCrosswalkOverhang = 1.0;

double UniformIn(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace

Scene GenerateScene(const SceneConfig& config, std::uint64_t seed) {
  ValidateSceneConfig(config);
  std::mt19937_64 rng = common::MakeRng(seed);

  Scene scene;
  scene.bounds = {0.0, 0.0, config.frame_size, config.frame_size};
  scene.scene_id = "s-" + common::HexDigest(seed);

  const double usable = config.frame_size - 2.0 * kEdgeMargin;
  const int lane_count = std::uniform_int_distribution<int>(
      config.lanes_min, config.lanes_max)(rng);

  // Worst-case vertical extent of the band: lane spread plus the bend
  // displacement of the shared quadratic curvature.
  const double band = (config.lanes_max - 1) * config.lane_spacing;
  const double bend_max = std::tan(config.max_curvature) * usable / 4.0;
  if (band + 2.0 * bend_max >= usable) {
    throw std::invalid_argument(
        "scene config cannot fit the lane band inside the frame");
  }

  const double x_lo = kEdgeMargin;
  const double x_hi = config.frame_size - kEdgeMargin;
  const double half_band = (lane_count - 1) * config.lane_spacing / 2.0;
  const double center_lo = kEdgeMargin + half_band + bend_max;
  const double center_hi = config.frame_size - kEdgeMargin - half_band - bend_max;
  const double center_y = UniformIn(rng, center_lo, center_hi);

  // Shared bend: y offset = slope_coeff * (x - mid)^2, sign random, zero
  // at the frame middle so lanes stay parallel.
  const double bend_angle = UniformIn(rng, -config.max_curvature,
                                      config.max_curvature);
  const double bend_coeff = std::tan(bend_angle) / usable;
  const double mid_x = 0.5 * (x_lo + x_hi);
  const auto bend_at = [&](double x) {
    const double d = x - mid_x;
    return bend_coeff * d * d;
  };

  const int steps = std::max(2, static_cast<int>(usable / kLaneStep) + 1);
  for (int lane = 0; lane < lane_count; ++lane) {
    const double base_y =
        center_y + (lane - (lane_count - 1) / 2.0) * config.lane_spacing;
    MapElement divider;
    divider.category = geometry::ElementCategory::kLaneDivider;
    for (int i = 0; i < steps; ++i) {
      const double x = x_lo + usable * i / (steps - 1);
      divider.points.push_back({x, base_y + bend_at(x)});
    }
    scene.gt_elements.push_back(std::move(divider));
  }

  const double band_bottom = center_y - half_band;
  const double band_top = center_y + half_band;

  // Up to two stop-line sites and two crosswalk sites, each drawn
  // independently. Sites stay clear of the frame border.
  for (int site = 0; site < 2; ++site) {
    const double x = UniformIn(rng, x_lo + 4.0, x_hi - 4.0);
    const bool present = UniformIn(rng, 0.0, 1.0) < config.stop_line_prob;
    if (!present) continue;
    const double dy = bend_at(x);
    MapElement stop;
    stop.category = geometry::ElementCategory::kStopLine;
    stop.points = {{x, band_bottom + dy - kStopLineOverhang},
                   {x, band_top + dy + kStopLineOverhang}};
    scene.gt_elements.push_back(std::move(stop));
  }

  for (int site = 0; site < 2; ++site) {
    const double x = UniformIn(rng, x_lo + 6.0, x_hi - 6.0);
    const double half_w = UniformIn(rng, 1.2, 2.0);
    const bool present = UniformIn(rng, 0.0, 1.0) < config.crosswalk_prob;
    if (!present) continue;
    const double dy = bend_at(x);
    const double y0 = band_bottom + dy - kCrosswalkOverhang;
    const double y1 = band_top + dy + kCrosswalkOverhang;
    MapElement walk;
    walk.category = geometry::ElementCategory::kCrosswalk;
    walk.closed = true;
    walk.points = {{x - half_w, y0}, {x + half_w, y0}, {x + half_w, y1},
                   {x - half_w, y1}};
    scene.gt_elements.push_back(std::move(walk));
  }

  // Curvature or overhangs can still push individual vertices out of the
  // frame for extreme configurations; clip to keep the scene invariant.
  std::vector<MapElement> clipped;
  for (const MapElement& element : scene.gt_elements) {
    for (MapElement& piece : geometry::ClipToFrame(element, scene.bounds)) {
      clipped.push_back(std::move(piece));
    }
  }
  scene.gt_elements = std::move(clipped);
  return scene;
}

namespace {

// Cuts the arc [s0, s1] (arc-length positions; s1 may wrap past the
// perimeter for closed elements) out of the element as an open polyline.
MapElement ExtractArc(const MapElement& element, double s0, double s1) {
  std::vector<Point2D> chain = element.points;
  if (element.closed) {
    // Two laps make wrapped arcs a plain interval walk.
    std::vector<Point2D> doubled = chain;
    doubled.insert(doubled.end(), chain.begin(), chain.end());
    doubled.push_back(chain.front());
    chain = std::move(doubled);
  }
  std::vector<double> cum(chain.size(), 0.0);
  for (std::size_t i = 1; i < chain.size(); ++i) {
    cum[i] = cum[i - 1] + geometry::EuclideanDistance(chain[i - 1], chain[i]);
  }

  const auto point_at = [&](double s) {
    std::size_t i = 0;
    while (i + 2 < chain.size() && cum[i + 1] < s) ++i;
    const double seg = cum[i + 1] - cum[i];
    const double t = seg > 0.0 ? (s - cum[i]) / seg : 0.0;
    return chain[i] + t * (chain[i + 1] - chain[i]);
  };

  MapElement out;
  out.category = element.category;
  out.closed = false;
  out.points.push_back(point_at(s0));
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (cum[i] > s0 && cum[i] < s1) out.points.push_back(chain[i]);
  }
  out.points.push_back(point_at(s1));
  return out;
}

}  // namespace

PerceivedTrip PerturbTrip(const std::vector<MapElement>& gt_elements,
                          const NoiseConfig& noise, std::uint64_t trip_seed,
                          const NormalizationFrame& frame,
                          std::int64_t trip_id) {
  ValidateNoiseConfig(noise);
  std::mt19937_64 rng = common::MakeRng(trip_seed);
  std::normal_distribution<double> unit_normal(0.0, 1.0);

  PerceivedTrip trip;
  trip.trip_id = trip_id;

  // Rigid registration residual shared by the whole trip.
  double tx = 0.0, ty = 0.0, theta = 0.0;
  if (noise.trip_drift_sigma > 0.0) {
    tx = noise.trip_drift_sigma * unit_normal(rng);
    ty = noise.trip_drift_sigma * unit_normal(rng);
  }
  if (noise.trip_rotation_sigma > 0.0) {
    theta = noise.trip_rotation_sigma * unit_normal(rng);
  }
  const double cx = 0.5 * (frame.min_x + frame.max_x);
  const double cy = 0.5 * (frame.min_y + frame.max_y);
  const bool rigid = tx != 0.0 || ty != 0.0 || theta != 0.0;
  const double cos_t = std::cos(theta);
  const double sin_t = std::sin(theta);
  const auto transform = [&](Point2D p) -> Point2D {
    if (!rigid) return p;
    const double dx = p.x - cx;
    const double dy = p.y - cy;
    return {cx + cos_t * dx - sin_t * dy + tx,
            cy + sin_t * dx + cos_t * dy + ty};
  };

  std::vector<MapElement> observed;
  for (const MapElement& gt : gt_elements) {
    if (noise.element_dropout_prob > 0.0 &&
        UniformIn(rng, 0.0, 1.0) < noise.element_dropout_prob) {
      continue;
    }

    MapElement element = gt;
    for (Point2D& p : element.points) p = transform(p);

    if (noise.partial_observation_prob > 0.0 &&
        UniformIn(rng, 0.0, 1.0) < noise.partial_observation_prob) {
      const double length = geometry::PolylineLength(element);
      if (length > 0.0) {
        const double frac = UniformIn(rng, 0.5, 0.9);
        const double start = element.closed
                                 ? UniformIn(rng, 0.0, length)
                                 : UniformIn(rng, 0.0, (1.0 - frac) * length);
        element = ExtractArc(element, start, start + frac * length);
      }
    }

    if (noise.point_jitter_sigma > 0.0) {
      for (Point2D& p : element.points) {
        p.x += noise.point_jitter_sigma * unit_normal(rng);
        p.y += noise.point_jitter_sigma * unit_normal(rng);
      }
    }
    observed.push_back(std::move(element));
  }

  if (noise.spurious_element_rate > 0.0) {
    const int spurious =
        std::poisson_distribution<int>(noise.spurious_element_rate)(rng);
    for (int i = 0; i < spurious; ++i) {
      MapElement ghost;
      ghost.category = static_cast<geometry::ElementCategory>(
          std::uniform_int_distribution<int>(0, 2)(rng));
      const double x = UniformIn(rng, frame.min_x + 1.0, frame.max_x - 1.0);
      const double y = UniformIn(rng, frame.min_y + 1.0, frame.max_y - 1.0);
      const double heading = UniformIn(rng, 0.0, 2.0 * M_PI);
      const double length = UniformIn(rng, 1.0, 4.0);
      const double kink = UniformIn(rng, -0.3, 0.3);
      const Point2D dir{std::cos(heading), std::sin(heading)};
      const Point2D normal{-dir.y, dir.x};
      ghost.points = {{x, y},
                      Point2D{x, y} + 0.5 * length * dir + kink * normal,
                      Point2D{x, y} + length * dir};
      observed.push_back(std::move(ghost));
    }
  }

  for (const MapElement& element : observed) {
    for (MapElement& piece : geometry::ClipToFrame(element, frame)) {
      trip.elements.push_back(std::move(piece));
    }
  }
  return trip;
}

std::vector<Scene> BuildSceneSet(int scene_count, const SceneConfig& config,
                                 const NoiseConfig& noise, int trips_per_scene,
                                 std::uint64_t seed) {
  if (scene_count < 1 || trips_per_scene < 1) {
    throw std::invalid_argument(
        "scene_count and trips_per_scene must be at least 1");
  }
  std::vector<Scene> scenes;
  scenes.reserve(scene_count);
  for (int i = 0; i < scene_count; ++i) {
    const std::uint64_t scene_seed = common::DeriveSeed(seed, i);
    Scene scene = GenerateScene(config, scene_seed);
    char tag[16];
    std::snprintf(tag, sizeof(tag), "s%05d-", i);
    scene.scene_id = std::string(tag) + common::HexDigest(scene_seed).substr(8);
    for (int t = 0; t < trips_per_scene; ++t) {
      const std::uint64_t trip_seed = common::DeriveSeed(scene_seed, 7000 + t);
      scene.trips.push_back(
          PerturbTrip(scene.gt_elements, noise, trip_seed, scene.bounds, t));
    }
    scenes.push_back(std::move(scene));
  }
  return scenes;
}

}  // namespace synth
}  // namespace vmap
