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

#include "saddlebos/metrics.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>

#include "saddlebos/error.hpp"

namespace saddle {

namespace {

void require_samples(const ComTrajectory& trajectory) {
  if (trajectory.empty()) throw Error(ErrorCode::kEmptyTrajectory, "trajectory has no samples");
}

std::vector<Point2> to_saddle(const ComTrajectory& trajectory, const SaddleFrame& frame) {
  std::vector<Point2> out;
  out.reserve(trajectory.size());
  for (const ComSample& s : trajectory.samples()) out.push_back(to_saddle_space(frame, s.position));
  return out;
}

bool included(const BosBoundary& boundary, Point2 p, double tol) {
  return contains(boundary, p, tol) != Containment::kOutside;
}

}  // namespace

ComTrajectory::ComTrajectory(std::vector<ComSample> samples) : samples_(std::move(samples)) {
  for (std::size_t i = 1; i < samples_.size(); ++i) {
    if (!(samples_[i].time > samples_[i - 1].time)) {
      std::ostringstream os;
      os << "sample " << i << " at t=" << samples_[i].time << " s does not follow t="
         << samples_[i - 1].time << " s";
      throw Error(ErrorCode::kNonMonotonicTime, os.str());
    }
  }
}

double poi(const ComTrajectory& trajectory, const BosBoundary& boundary, double tol) {
  require_samples(trajectory);
  std::size_t inside = 0;
  for (const ComSample& s : trajectory.samples()) {
    if (included(boundary, to_saddle_space(boundary.frame(), s.position), tol)) ++inside;
  }
  return 100.0 * static_cast<double>(inside) / static_cast<double>(trajectory.size());
}

std::vector<std::size_t> outer_border_indices(std::span<const Point2> saddle_points,
                                              std::size_t n_bins, BinCenter center) {
  if (saddle_points.empty()) throw Error(ErrorCode::kEmptyTrajectory, "no samples to bin");
  if (n_bins < 8) throw Error(ErrorCode::kInvalidArgument, "need at least 8 angular bins");

  Point2 c{};
  if (center == BinCenter::kTrajectoryMean) {
    for (const Point2& p : saddle_points) c = c + p;
    c = (1.0 / static_cast<double>(saddle_points.size())) * c;
  }

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> best(n_bins, kNone);
  std::vector<double> best_radius(n_bins, -1.0);
  const double width = kTwoPi / static_cast<double>(n_bins);
  for (std::size_t i = 0; i < saddle_points.size(); ++i) {
    const Point2 rel = saddle_points[i] - c;
    const double angle = wrap_two_pi(std::atan2(rel.y, rel.x));
    const auto bin = std::min(static_cast<std::size_t>(angle / width), n_bins - 1);
    const double r = norm(rel);
    if (r > best_radius[bin]) {
      best_radius[bin] = r;
      best[bin] = i;
    }
  }

  std::vector<std::size_t> out;
  for (std::size_t idx : best) {
    if (idx != kNone) out.push_back(idx);
  }
  return out;
}

std::vector<Point2> outer_border(const ComTrajectory& trajectory, const SaddleFrame& frame,
                                 std::size_t n_bins, BinCenter center) {
  require_samples(trajectory);
  const std::vector<Point2> local = to_saddle(trajectory, frame);
  std::vector<Point2> out;
  for (std::size_t idx : outer_border_indices(local, n_bins, center)) out.push_back(local[idx]);
  return out;
}

double poi360(const ComTrajectory& trajectory, const BosBoundary& boundary,
              std::size_t n_bins, BinCenter center, double tol) {
  const std::vector<Point2> border = outer_border(trajectory, boundary.frame(), n_bins, center);
  std::size_t inside = 0;
  for (const Point2& p : border) {
    if (included(boundary, p, tol)) ++inside;
  }
  return 100.0 * static_cast<double>(inside) / static_cast<double>(border.size());
}

CovarianceEllipse covariance_ellipse(const ComTrajectory& trajectory, double k_sigma) {
  if (trajectory.size() < 3) {
    throw Error(ErrorCode::kDegenerateCovariance, "need at least 3 samples");
  }
  if (!(k_sigma > 0)) throw Error(ErrorCode::kInvalidArgument, "k_sigma must be positive");

  const double n = static_cast<double>(trajectory.size());
  Eigen::Vector2d mean = Eigen::Vector2d::Zero();
  for (const ComSample& s : trajectory.samples()) mean += Eigen::Vector2d(s.position.x, s.position.y);
  mean /= n;

  Eigen::Matrix2d cov = Eigen::Matrix2d::Zero();
  for (const ComSample& s : trajectory.samples()) {
    const Eigen::Vector2d dev = Eigen::Vector2d(s.position.x, s.position.y) - mean;
    cov += dev * dev.transpose();
  }
  cov /= (n - 1.0);

  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> solver(cov);
  const Eigen::Vector2d eigenvalues = solver.eigenvalues();  // ascending
  if (eigenvalues(0) < kMinEigenvalue) {
    std::ostringstream os;
    os << "smallest covariance eigenvalue " << eigenvalues(0) << " m^2";
    throw Error(ErrorCode::kDegenerateCovariance, os.str());
  }
  const Eigen::Vector2d major = solver.eigenvectors().col(1);

  CovarianceEllipse e;
  e.center = {mean(0), mean(1)};
  e.semi_axes = {k_sigma * std::sqrt(eigenvalues(1)), k_sigma * std::sqrt(eigenvalues(0))};
  double angle = std::atan2(major(1), major(0));
  if (angle <= -kPi / 2) angle += kPi;
  if (angle > kPi / 2) angle -= kPi;
  e.orientation = angle;
  return e;
}

}  // namespace saddle
