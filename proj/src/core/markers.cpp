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

#include "saddlebos/markers.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "saddlebos/error.hpp"

namespace saddle {

namespace {

constexpr std::array<MarkerLabel, kMarkerCount> kAllMarkers = {
    MarkerLabel::kLASI, MarkerLabel::kRASI, MarkerLabel::kLPSI, MarkerLabel::kRPSI,
    MarkerLabel::kLHEE, MarkerLabel::kRHEE, MarkerLabel::kLMT1, MarkerLabel::kLMT5,
    MarkerLabel::kRMT1, MarkerLabel::kRMT5,
};

constexpr std::array<std::string_view, kMarkerCount> kMarkerNames = {
    "LASI", "RASI", "LPSI", "RPSI", "LHEE", "RHEE", "LMT1", "LMT5", "RMT1", "RMT5",
};

Point2 require(const MarkerFrame& frame, MarkerLabel label, UpAxis up) {
  const auto& p = frame[label];
  if (!p) {
    std::ostringstream os;
    os << marker_name(label) << " absent at t=" << frame.time << " s";
    throw Error(ErrorCode::kMissingMarker, os.str());
  }
  return ground_projection(*p, up);
}

}  // namespace

std::string_view marker_name(MarkerLabel label) noexcept {
  return kMarkerNames[static_cast<std::size_t>(label)];
}

std::optional<MarkerLabel> marker_from_name(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kMarkerCount; ++i) {
    if (kMarkerNames[i] == name) return kAllMarkers[i];
  }
  return std::nullopt;
}

const std::array<MarkerLabel, kMarkerCount>& all_markers() noexcept { return kAllMarkers; }

Point2 ground_projection(const Point3& p, UpAxis up) noexcept {
  switch (up) {
    case UpAxis::kX: return {p.y, p.z};
    case UpAxis::kY: return {p.z, p.x};
    case UpAxis::kZ: break;
  }
  return {p.x, p.y};
}

bool MarkerFrame::complete() const noexcept {
  for (const auto& p : positions) {
    if (!p || !std::isfinite(p->x) || !std::isfinite(p->y) || !std::isfinite(p->z)) {
      return false;
    }
  }
  return true;
}

Point2 com_from_pelvis(const MarkerFrame& frame, UpAxis up) {
  const Point2 lasi = require(frame, MarkerLabel::kLASI, up);
  const Point2 rasi = require(frame, MarkerLabel::kRASI, up);
  const Point2 lpsi = require(frame, MarkerLabel::kLPSI, up);
  const Point2 rpsi = require(frame, MarkerLabel::kRPSI, up);
  return 0.25 * (lasi + rasi + lpsi + rpsi);
}

FootGeometry foot_geometry(const MarkerFrame& frame, Side side, double ecop_fraction,
                           UpAxis up) {
  if (!(ecop_fraction > 0.0 && ecop_fraction < 1.0)) {
    std::ostringstream os;
    os << "ecop_fraction must lie in (0, 1), got " << ecop_fraction;
    throw Error(ErrorCode::kInvalidArgument, os.str());
  }
  const bool left = side == Side::kLeft;
  const Point2 heel = require(frame, left ? MarkerLabel::kLHEE : MarkerLabel::kRHEE, up);
  const Point2 mt1 = require(frame, left ? MarkerLabel::kLMT1 : MarkerLabel::kRMT1, up);
  const Point2 mt5 = require(frame, left ? MarkerLabel::kLMT5 : MarkerLabel::kRMT5, up);

  FootGeometry g;
  g.heel = heel;
  g.mt_mid = 0.5 * (mt1 + mt5);
  g.d_l = distance(mt1, mt5);
  g.d_f = distance(heel, g.mt_mid);
  if (g.d_l < kMinFootDimension || g.d_f < kMinFootDimension) {
    std::ostringstream os;
    os << (left ? "left" : "right") << " foot has D_F=" << g.d_f << " m, D_L=" << g.d_l
       << " m at t=" << frame.time << " s";
    throw Error(ErrorCode::kDegenerateFoot, os.str());
  }
  const Point2 axis = g.mt_mid - heel;
  g.ecop = heel + ecop_fraction * axis;
  g.heading = std::atan2(axis.y, axis.x);
  return g;
}

FootPair foot_poses(const MarkerFrame& frame, double ecop_fraction, UpAxis up) {
  const FootGeometry left = foot_geometry(frame, Side::kLeft, ecop_fraction, up);
  const FootGeometry right = foot_geometry(frame, Side::kRight, ecop_fraction, up);

  // Left-to-right eCoP direction; theta_f is measured from it.
  const Point2 line = right.ecop - left.ecop;
  if (norm(line) <= kMinFootSeparation) {
    throw Error(ErrorCode::kCoincidentFeet, "left and right eCoPs coincide");
  }
  const double reference = std::atan2(line.y, line.x);
  return FootPair{
      make_foot_pose(Side::kLeft, left.ecop, left.heading - reference, left.d_f, left.d_l),
      make_foot_pose(Side::kRight, right.ecop, right.heading - reference, right.d_f,
                     right.d_l),
  };
}

}  // namespace saddle
