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

// End-to-end trial analysis: marker frames -> feet and CoM -> BoS -> metrics.
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "saddlebos/geometry.hpp"
#include "saddlebos/markers.hpp"
#include "saddlebos/metrics.hpp"

namespace saddle {

struct AnalysisConfig {
  double ecop_fraction = kDefaultEcopFraction;
  std::size_t n_bins = kDefaultAngularBins;
  double k_sigma = kDefaultKSigma;
  UpAxis up_axis = UpAxis::kZ;
  double tol = kDefaultBoundaryTol;
  BinCenter bin_center = BinCenter::kSaddleOrigin;
  /// Use the metatarsal-midpoint separation as D instead of the eCoP one.
  bool d_from_mt_mid = false;
  /// 0 keeps the posture of the first complete frame for the whole trial;
  /// N > 0 re-derives the feet from every N-th complete frame.
  std::size_t refit_feet_every = 0;
  /// Trials with a larger share of incomplete frames fail with DataQuality.
  double max_incomplete_fraction = 0.10;
};

struct AnalysisResult {
  MetricsReport report;
  std::size_t n_frames = 0;
  std::size_t n_incomplete = 0;
  /// Posture, frame and parameters of the first boundary used.
  FootPair feet;
  SaddleFrame frame;
  BosParams params;
  /// CoM samples in the Saddle frame of the boundary each was judged against.
  std::vector<ComSample> saddle_samples;
};

/// Feet rigidly moved so that their Saddle frame has the origin and heading
/// of `target` (separation is kept).
FootPair place_feet(const FootPair& feet, const SaddleFrame& target);

/// Analyzes a trial. With `fixed_feet` the posture comes from the caller
/// instead of the markers; `anchor_to_trial` then places it on the trial's
/// own marker-derived Saddle frame.
AnalysisResult analyze_trial(std::span<const MarkerFrame> frames, const AnalysisConfig& config,
                             const std::optional<FootPair>& fixed_feet = std::nullopt,
                             bool anchor_to_trial = false);

}  // namespace saddle
