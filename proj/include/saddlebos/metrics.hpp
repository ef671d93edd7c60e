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

// Inclusion metrics over CoM trajectories: PoI (share of samples inside the
// BoS), PoI360 (share of the angular outer border inside the BoS) and the
// covariance ellipse of the trajectory.
#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "saddlebos/geometry.hpp"

namespace saddle {

struct ComSample {
  double time = 0;
  Point2 position;
};

/// Time-ordered CoM samples. May be empty; metrics reject empty input.
class ComTrajectory {
 public:
  ComTrajectory() = default;
  /// Throws NonMonotonicTime unless times are strictly increasing.
  explicit ComTrajectory(std::vector<ComSample> samples);

  const std::vector<ComSample>& samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }
  bool empty() const noexcept { return samples_.empty(); }

 private:
  std::vector<ComSample> samples_;
};

struct CovarianceEllipse {
  Point2 center;
  /// Major then minor semi-axis.
  std::array<double, 2> semi_axes{};
  /// Angle of the major axis, (-pi/2, pi/2].
  double orientation = 0;
};

struct MetricsReport {
  double poi = 0;
  double poi360 = 0;
  std::size_t n_samples = 0;
  std::size_t n_outer = 0;
  /// Absent when the trajectory is too short or collinear.
  std::optional<CovarianceEllipse> covariance_ellipse;
};

/// Reference point for the outer-border angular bins.
enum class BinCenter { kSaddleOrigin, kTrajectoryMean };

inline constexpr std::size_t kDefaultAngularBins = 360;
inline constexpr double kDefaultKSigma = 2.0;
inline constexpr double kMinEigenvalue = 1e-12;

/// Percentage of samples inside or on the boundary. Samples are mapped into
/// the boundary's Saddle frame first.
double poi(const ComTrajectory& trajectory, const BosBoundary& boundary,
           double tol = kDefaultBoundaryTol);

/// Indices of the farthest sample in each nonempty angular sector, in sector
/// order. Points are Saddle-space coordinates.
std::vector<std::size_t> outer_border_indices(std::span<const Point2> saddle_points,
                                              std::size_t n_bins = kDefaultAngularBins,
                                              BinCenter center = BinCenter::kSaddleOrigin);

/// Outer-border samples in Saddle coordinates.
std::vector<Point2> outer_border(const ComTrajectory& trajectory, const SaddleFrame& frame,
                                 std::size_t n_bins = kDefaultAngularBins,
                                 BinCenter center = BinCenter::kSaddleOrigin);

double poi360(const ComTrajectory& trajectory, const BosBoundary& boundary,
              std::size_t n_bins = kDefaultAngularBins,
              BinCenter center = BinCenter::kSaddleOrigin,
              double tol = kDefaultBoundaryTol);

/// Ellipse from the unbiased 2x2 sample covariance; semi-axes are
/// k_sigma * sqrt(eigenvalue).
CovarianceEllipse covariance_ellipse(const ComTrajectory& trajectory,
                                     double k_sigma = kDefaultKSigma);

}  // namespace saddle
