// Copyright 2026 The saddlebos Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Model inputs from the ten-marker pelvis/foot set: ground-plane CoM, eCoPs,
// foot length (heel to metatarsal midpoint), foot width (MT1 to MT5) and
// foot orientation relative to the eCoP line.
#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

#include "saddlebos/geometry.hpp"

namespace saddle {

/// Column order of the trial CSV follows this enumeration.
enum class MarkerLabel {
  kLASI,
  kRASI,
  kLPSI,
  kRPSI,
  kLHEE,
  kRHEE,
  kLMT1,
  kLMT5,
  kRMT1,
  kRMT5,
};

inline constexpr std::size_t kMarkerCount = 10;

std::string_view marker_name(MarkerLabel label) noexcept;
std::optional<MarkerLabel> marker_from_name(std::string_view name) noexcept;
const std::array<MarkerLabel, kMarkerCount>& all_markers() noexcept;

struct Point3 {
  double x = 0;
  double y = 0;
  double z = 0;
};

/// Which capture axis points up. The ground plane keeps the other two axes
/// in cyclic order (x,y for z-up; y,z for x-up; z,x for y-up).
enum class UpAxis { kX, kY, kZ };

Point2 ground_projection(const Point3& p, UpAxis up) noexcept;

struct MarkerFrame {
  double time = 0;
  std::array<std::optional<Point3>, kMarkerCount> positions{};

  const std::optional<Point3>& operator[](MarkerLabel label) const {
    return positions[static_cast<std::size_t>(label)];
  }
  std::optional<Point3>& operator[](MarkerLabel label) {
    return positions[static_cast<std::size_t>(label)];
  }

  /// All ten markers present.
  bool complete() const noexcept;
};

struct FootGeometry {
  Point2 heel;
  Point2 mt_mid;
  double d_f = 0;
  double d_l = 0;
  Point2 ecop;
  /// Task-space angle of the heel-to-toe axis. foot_poses() turns this into
  /// the eCoP-line-relative theta_f.
  double heading = 0;
};

struct FootPair {
  FootPose left;
  FootPose right;
};

inline constexpr double kDefaultEcopFraction = 0.5;
inline constexpr double kMinFootDimension = 1e-3;

/// Centroid of LASI, RASI, LPSI, RPSI projected on the ground plane.
Point2 com_from_pelvis(const MarkerFrame& frame, UpAxis up = UpAxis::kZ);

/// ecop_fraction in (0, 1) places the eCoP along heel -> metatarsal midpoint.
FootGeometry foot_geometry(const MarkerFrame& frame, Side side,
                           double ecop_fraction = kDefaultEcopFraction,
                           UpAxis up = UpAxis::kZ);

FootPair foot_poses(const MarkerFrame& frame,
                    double ecop_fraction = kDefaultEcopFraction,
                    UpAxis up = UpAxis::kZ);

}  // namespace saddle
