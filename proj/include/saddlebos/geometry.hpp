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

// Saddle reference frame, Saddle/task space transforms and the
// posture-dependent Base of Support (BoS) boundary.
//
// Conventions used throughout:
//  * Angles are radians. FootPose::theta_f lives in [0, 2pi), SaddleFrame::theta
//    in (-pi, pi].
//  * y_Saddle runs from the right eCoP toward the left eCoP, so the left eCoP
//    sits at (0, +d/2) and the right one at (0, -d/2) in Saddle coordinates.
//  * theta_f is the counterclockwise angle from the left-to-right eCoP
//    direction to the foot's heel-to-toe axis. Feet parallel to x_Saddle and
//    pointing forward have theta_f = pi/2 on both sides.
#pragma once

#include <cstddef>
#include <numbers>
#include <vector>

namespace saddle {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Tolerance used by contains() to classify a point as lying on the boundary.
inline constexpr double kDefaultBoundaryTol = 1e-9;
/// Minimum eCoP separation accepted by saddle_frame_from_ecops().
inline constexpr double kMinFootSeparation = 1e-9;

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }

double dot(Point2 a, Point2 b);
double cross(Point2 a, Point2 b);
double norm(Point2 p);
double distance(Point2 a, Point2 b);

/// Wraps an angle into [0, 2pi).
double wrap_two_pi(double angle);
/// Wraps an angle into (-pi, pi].
double wrap_pi(double angle);

enum class Side { kLeft, kRight };

struct FootPose {
  Point2 ecop;          // task space
  double theta_f = 0;   // see header comment
  double length = 0;    // D_F
  double width = 0;     // D_L
  Side side = Side::kLeft;
};

/// Validated FootPose; normalizes theta_f. Throws InvalidArgument.
FootPose make_foot_pose(Side side, Point2 ecop, double theta_f, double length,
                        double width);

struct SaddleFrame {
  Point2 origin;
  double theta = 0;
  double d = 0;
};

/// The eight scalars that shape the BoS. Naming follows the usual
/// biomechanics notation: capital L/R are the full Saddle-space extents,
/// lower-case l/r the per-foot contributions.
struct BosParams {
  double d_Ly = 0;
  double d_Ry = 0;
  double d_ly = 0;
  double d_ry = 0;
  double d_Lx = 0;
  double d_Rx = 0;
  double m_Bk = 0;
  double m_Fw = 0;
};

enum class BoundaryMode {
  /// Closed arc-and-chord curve, star-shaped about the Saddle origin.
  kContinuous,
  /// Piecewise branch evaluation of the published formula. Not closed;
  /// boundary_point() only.
  kStrict,
};

enum class Containment { kInside, kOn, kOutside };

/// A BoS boundary bound to its Saddle frame. Immutable; construction checks
/// that a Continuous boundary is well formed (DegenerateGeometry otherwise).
class BosBoundary {
 public:
  BosBoundary(const BosParams& params, const SaddleFrame& frame,
              BoundaryMode mode = BoundaryMode::kContinuous);

  const BosParams& params() const noexcept { return params_; }
  const SaddleFrame& frame() const noexcept { return frame_; }
  BoundaryMode mode() const noexcept { return mode_; }

  /// Distance from the Saddle origin to the boundary along direction phi.
  /// Continuous mode only.
  double radius(double phi) const;

 private:
  BosParams params_;
  SaddleFrame frame_;
  BoundaryMode mode_;
  // Arc endpoints (Continuous mode): left arc ends at (+-left_half_x_, left_end_y_),
  // right arc at (+-right_half_x_, -right_end_y_).
  double left_half_x_ = 0;
  double right_half_x_ = 0;
  double left_end_y_ = 0;
  double right_end_y_ = 0;
  double left_end_angle_ = 0;
  double right_end_angle_ = 0;
};

/// Ordered, implicitly closed vertex list.
class Polygon2 {
 public:
  /// Throws InvalidArgument on fewer than 3 vertices, non-finite coordinates
  /// or consecutive vertices closer than 1e-12 m.
  explicit Polygon2(std::vector<Point2> vertices);

  const std::vector<Point2>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  const Point2& operator[](std::size_t i) const { return vertices_[i]; }

 private:
  std::vector<Point2> vertices_;
};

/// Planar rotation about the task origin followed by a translation.
struct RigidMotion {
  double rotation = 0;
  Point2 translation;

  Point2 operator()(Point2 p) const;
};

/// Moves a foot rigidly. theta_f is relative to the eCoP line and so is
/// unchanged when both feet undergo the same motion.
FootPose apply(const RigidMotion& motion, const FootPose& foot);

SaddleFrame saddle_frame_from_ecops(Point2 right_ecop, Point2 left_ecop);

Point2 to_task_space(const SaddleFrame& frame, Point2 p_saddle);
Point2 to_saddle_space(const SaddleFrame& frame, Point2 p_task);

BosParams derive_bos_params(const SaddleFrame& frame, const FootPose& left,
                            const FootPose& right);

/// Builds frame and parameters from a pair of feet.
BosBoundary make_boundary(const FootPose& left, const FootPose& right,
                          BoundaryMode mode = BoundaryMode::kContinuous);

/// Boundary point in direction phi, Saddle coordinates.
Point2 boundary_point(const BosBoundary& boundary, double phi);

/// n vertices at phi_k = 2 pi k / n, Saddle coordinates, counterclockwise.
Polygon2 sample_boundary(const BosBoundary& boundary, std::size_t n);

Containment contains(const BosBoundary& boundary, Point2 p_saddle,
                     double tol = kDefaultBoundaryTol);

Polygon2 bos_polygon_task_space(const FootPose& left, const FootPose& right,
                                std::size_t n,
                                BoundaryMode mode = BoundaryMode::kContinuous);

}  // namespace saddle
