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

#include "saddlebos/analysis.hpp"

#include <sstream>

#include "saddlebos/error.hpp"

namespace saddle {

namespace {

struct PostureFit {
  FootPair feet;
  SaddleFrame frame;
};

PostureFit fit_from_markers(const MarkerFrame& frame, const AnalysisConfig& config) {
  PostureFit fit;
  fit.feet = foot_poses(frame, config.ecop_fraction, config.up_axis);
  fit.frame = saddle_frame_from_ecops(fit.feet.right.ecop, fit.feet.left.ecop);
  if (config.d_from_mt_mid) {
    const Point2 left_mid = foot_geometry(frame, Side::kLeft, config.ecop_fraction, config.up_axis).mt_mid;
    const Point2 right_mid = foot_geometry(frame, Side::kRight, config.ecop_fraction, config.up_axis).mt_mid;
    fit.frame.d = distance(left_mid, right_mid);
  }
  return fit;
}

}  // namespace

FootPair place_feet(const FootPair& feet, const SaddleFrame& target) {
  const SaddleFrame current = saddle_frame_from_ecops(feet.right.ecop, feet.left.ecop);
  RigidMotion motion;
  motion.rotation = target.theta - current.theta;
  motion.translation = target.origin - RigidMotion{motion.rotation, {}}(current.origin);
  return FootPair{apply(motion, feet.left), apply(motion, feet.right)};
}

AnalysisResult analyze_trial(std::span<const MarkerFrame> frames, const AnalysisConfig& config,
                             const std::optional<FootPair>& fixed_feet, bool anchor_to_trial) {
  if (frames.empty()) throw Error(ErrorCode::kEmptyTrajectory, "trial has no frames");

  AnalysisResult result;
  result.n_frames = frames.size();
  std::vector<const MarkerFrame*> complete;
  complete.reserve(frames.size());
  for (const MarkerFrame& f : frames) {
    if (f.complete()) complete.push_back(&f);
  }
  result.n_incomplete = frames.size() - complete.size();
  const double incomplete_share =
      static_cast<double>(result.n_incomplete) / static_cast<double>(frames.size());
  if (incomplete_share > config.max_incomplete_fraction) {
    std::ostringstream os;
    os << result.n_incomplete << " of " << frames.size() << " frames incomplete ("
       << 100.0 * incomplete_share << "%)";
    throw Error(ErrorCode::kDataQuality, os.str());
  }
  if (complete.empty()) throw Error(ErrorCode::kEmptyTrajectory, "trial has no complete frame");

  // One boundary per posture segment; a single segment unless refitting.
  std::vector<BosBoundary> boundaries;
  std::vector<std::size_t> segment_of(complete.size(), 0);
  const std::size_t every = fixed_feet ? 0 : config.refit_feet_every;
  for (std::size_t i = 0; i < complete.size(); ++i) {
    const bool new_segment = i == 0 || (every > 0 && i % every == 0);
    if (new_segment) {
      PostureFit fit;
      if (fixed_feet) {
        fit.feet = *fixed_feet;
        if (anchor_to_trial) {
          fit.feet = place_feet(fit.feet, fit_from_markers(*complete[i], config).frame);
        }
        fit.frame = saddle_frame_from_ecops(fit.feet.right.ecop, fit.feet.left.ecop);
      } else {
        fit = fit_from_markers(*complete[i], config);
      }
      boundaries.emplace_back(derive_bos_params(fit.frame, fit.feet.left, fit.feet.right),
                              fit.frame, BoundaryMode::kContinuous);
      if (i == 0) result.feet = fit.feet;
    }
    segment_of[i] = boundaries.size() - 1;
  }
  result.frame = boundaries.front().frame();
  result.params = boundaries.front().params();

  std::vector<ComSample> task_samples;
  std::vector<Point2> local;
  task_samples.reserve(complete.size());
  local.reserve(complete.size());
  result.saddle_samples.reserve(complete.size());
  std::size_t inside = 0;
  for (std::size_t i = 0; i < complete.size(); ++i) {
    const Point2 com = com_from_pelvis(*complete[i], config.up_axis);
    const BosBoundary& boundary = boundaries[segment_of[i]];
    const Point2 p = to_saddle_space(boundary.frame(), com);
    task_samples.push_back({complete[i]->time, com});
    local.push_back(p);
    result.saddle_samples.push_back({complete[i]->time, p});
    if (contains(boundary, p, config.tol) != Containment::kOutside) ++inside;
  }

  const std::vector<std::size_t> border = outer_border_indices(local, config.n_bins, config.bin_center);
  std::size_t border_inside = 0;
  for (std::size_t idx : border) {
    if (contains(boundaries[segment_of[idx]], local[idx], config.tol) != Containment::kOutside) {
      ++border_inside;
    }
  }

  MetricsReport& report = result.report;
  report.n_samples = complete.size();
  report.n_outer = border.size();
  report.poi = 100.0 * static_cast<double>(inside) / static_cast<double>(complete.size());
  report.poi360 = 100.0 * static_cast<double>(border_inside) / static_cast<double>(border.size());
  try {
    report.covariance_ellipse = covariance_ellipse(ComTrajectory(std::move(task_samples)), config.k_sigma);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kDegenerateCovariance) throw;
  }
  return result;
}

}  // namespace saddle
