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

#pragma once

#include <gtest/gtest.h>

#include <utility>

#include "saddlebos/error.hpp"
#include "saddlebos/geometry.hpp"
#include "saddlebos/markers.hpp"

namespace saddle::test {

template <typename F>
void expect_error(ErrorCode code, F&& f) {
  try {
    std::forward<F>(f)();
    ADD_FAILURE() << "expected " << error_name(code) << ", nothing thrown";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

/// D = 0.30, 0.25 x 0.10 feet, both at 90 deg, Saddle frame = task frame.
inline std::pair<FootPose, FootPose> parallel_posture() {
  return {make_foot_pose(Side::kLeft, {0, 0.15}, kPi / 2, 0.25, 0.10),
          make_foot_pose(Side::kRight, {0, -0.15}, kPi / 2, 0.25, 0.10)};
}

inline void set_marker(MarkerFrame& f, MarkerLabel label, double x, double y, double z) {
  f[label] = Point3{x, y, z};
}

/// Feet pointing along +x with heels at (-0.125, +-0.15); pelvis centred on `com`.
inline MarkerFrame parallel_frame(double time = 0, Point2 com = {0, 0}) {
  MarkerFrame f;
  f.time = time;
  set_marker(f, MarkerLabel::kLASI, com.x + 0.1, com.y + 0.1, 0.9);
  set_marker(f, MarkerLabel::kRASI, com.x + 0.1, com.y - 0.1, 0.9);
  set_marker(f, MarkerLabel::kLPSI, com.x - 0.1, com.y + 0.1, 0.9);
  set_marker(f, MarkerLabel::kRPSI, com.x - 0.1, com.y - 0.1, 0.9);
  set_marker(f, MarkerLabel::kLHEE, -0.125, 0.15, 0.02);
  set_marker(f, MarkerLabel::kLMT1, 0.125, 0.10, 0.02);
  set_marker(f, MarkerLabel::kLMT5, 0.125, 0.20, 0.02);
  set_marker(f, MarkerLabel::kRHEE, -0.125, -0.15, 0.02);
  set_marker(f, MarkerLabel::kRMT1, 0.125, -0.10, 0.02);
  set_marker(f, MarkerLabel::kRMT5, 0.125, -0.20, 0.02);
  return f;
}

}  // namespace saddle::test
