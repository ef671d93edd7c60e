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

#include "saddlebos/geometry.hpp"

#include <cmath>
#include <sstream>

#include "saddlebos/error.hpp"

namespace saddle {

namespace {

constexpr double kSlopeDenominatorEps = 1e-12;
constexpr double kMinPolygonEdge = 1e-12;
constexpr double kMinHalfWidth = 1e-12;

bool finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

Point2 rotate(Point2 p, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

// Distance along unit direction u from the origin to the segment [p, q].
double ray_segment_distance(Point2 u, Point2 p, Point2 q) {
  const Point2 e = q - p;
  return cross(p, e) / cross(u, e);
}

// Branch-by-branch evaluation of the published piecewise boundary.
Point2 strict_point(const BosParams& bp, double phi) {
  const double t = wrap_two_pi(phi);
  const bool left_half = t < kPi;
  const double y = (left_half ? bp.d_Ly : bp.d_Ry) * std::cos(t);
  if (left_half) {
    const double x_left = bp.d_Ly * std::sin(t);
    if (std::abs(x_left) <= std::abs(bp.d_Lx)) return {x_left, y};
  } else {
    const double x_right = bp.d_Ry * std::sin(t);
    if (std::abs(x_right) <= std::abs(bp.d_Rx)) return {x_right, y};
  }
  if (t >= kPi / 2 && t < 3 * kPi / 2) return {bp.m_Bk * y - bp.d_Rx, y};
  return {bp.m_Fw * y + bp.d_Rx, y};
}

}  // namespace

double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
double norm(Point2 p) { return std::hypot(p.x, p.y); }
double distance(Point2 a, Point2 b) { return norm(a - b); }

double wrap_two_pi(double angle) {
  double r = std::fmod(angle, kTwoPi);
  if (r < 0) r += kTwoPi;
  // fmod of a tiny negative value can round up to exactly 2pi.
  if (r >= kTwoPi) r = 0.0;
  return r;
}

double wrap_pi(double angle) {
  double r = wrap_two_pi(angle);
  if (r > kPi) r -= kTwoPi;
  return r;
}

FootPose make_foot_pose(Side side, Point2 ecop, double theta_f, double length,
                        double width) {
  if (!finite(ecop) || !std::isfinite(theta_f)) {
    throw Error(ErrorCode::kInvalidArgument, "foot pose has non-finite components");
  }
  if (!(length > 0) || !(width > 0) || !std::isfinite(length) || !std::isfinite(width)) {
    std::ostringstream os;
    os << "foot length and width must be positive (got " << length << ", " << width << ")";
    throw Error(ErrorCode::kInvalidArgument, os.str());
  }
  return FootPose{ecop, wrap_two_pi(theta_f), length, width, side};
}

Point2 RigidMotion::operator()(Point2 p) const { return rotate(p, rotation) + translation; }

FootPose apply(const RigidMotion& motion, const FootPose& foot) {
  FootPose moved = foot;
  moved.ecop = motion(foot.ecop);
  return moved;
}

SaddleFrame saddle_frame_from_ecops(Point2 right_ecop, Point2 left_ecop) {
  if (!finite(right_ecop) || !finite(left_ecop)) {
    throw Error(ErrorCode::kInvalidArgument, "eCoP coordinates must be finite");
  }
  const Point2 across = left_ecop - right_ecop;
  const double d = norm(across);
  if (d <= kMinFootSeparation) {
    std::ostringstream os;
    os << "eCoPs separated by " << d << " m";
    throw Error(ErrorCode::kCoincidentFeet, os.str());
  }
  SaddleFrame frame;
  frame.origin = 0.5 * (right_ecop + left_ecop);
  frame.theta = wrap_pi(std::atan2(across.y, across.x) - kPi / 2);
  frame.d = d;
  return frame;
}

Point2 to_task_space(const SaddleFrame& frame, Point2 p_saddle) {
  return rotate(p_saddle, frame.theta) + frame.origin;
}

Point2 to_saddle_space(const SaddleFrame& frame, Point2 p_task) {
  return rotate(p_task - frame.origin, -frame.theta);
}

BosParams derive_bos_params(const SaddleFrame& frame, const FootPose& left,
                            const FootPose& right) {
  const double d = frame.d;
  const double ul = left.theta_f - kPi / 2;
  const double ur = right.theta_f - kPi / 2;

  BosParams bp;
  bp.d_ly = (left.length * std::sin(ul) + left.width * std::cos(ul)) / 2;
  bp.d_Lx = (left.length * std::cos(ul) - left.width * std::sin(ul)) / 2;
  bp.d_ry = (right.length * std::sin(ur) - right.width * std::cos(ur)) / 2;
  bp.d_Rx = (right.length * std::cos(ur) - right.width * std::sin(ur)) / 2;
  bp.d_Ly = d / 2 + bp.d_ly;
  bp.d_Ry = -d / 2 + bp.d_ry;

  const double denominator = d + bp.d_Ry - bp.d_Ly;
  if (std::abs(denominator) <= kSlopeDenominatorEps) {
    throw Error(ErrorCode::kDegenerateGeometry,
                "edge slope denominator D + D_Ry - D_Ly vanishes");
  }
  bp.m_Bk = (bp.d_Rx - bp.d_Lx) / denominator;
  bp.m_Fw = (bp.d_Lx - bp.d_Rx) / denominator;
  return bp;
}

BosBoundary::BosBoundary(const BosParams& params, const SaddleFrame& frame,
                         BoundaryMode mode)
    : params_(params), frame_(frame), mode_(mode) {
  if (mode_ == BoundaryMode::kStrict) return;

  const double left_radius = params_.d_Ly;
  const double right_radius = -params_.d_Ry;
  left_half_x_ = std::abs(params_.d_Lx);
  right_half_x_ = std::abs(params_.d_Rx);

  std::ostringstream os;
  if (!(left_radius > 0) || !(right_radius > 0)) {
    os << "arc radii must satisfy D_Ly > 0 and D_Ry < 0 (got " << params_.d_Ly << ", "
       << params_.d_Ry << ")";
  } else if (left_half_x_ >= left_radius) {
    os << "|D_Lx| = " << left_half_x_ << " is not below D_Ly = " << left_radius;
  } else if (right_half_x_ >= right_radius) {
    os << "|D_Rx| = " << right_half_x_ << " is not below |D_Ry| = " << right_radius;
  } else if (left_half_x_ < kMinHalfWidth && right_half_x_ < kMinHalfWidth) {
    os << "boundary has zero width along x_Saddle";
  }
  if (!os.str().empty()) throw Error(ErrorCode::kDegenerateGeometry, os.str());

  left_end_y_ = std::sqrt(left_radius * left_radius - left_half_x_ * left_half_x_);
  right_end_y_ = std::sqrt(right_radius * right_radius - right_half_x_ * right_half_x_);
  left_end_angle_ = std::atan2(left_end_y_, left_half_x_);
  right_end_angle_ = std::atan2(right_end_y_, right_half_x_);
}

double BosBoundary::radius(double phi) const {
  if (mode_ == BoundaryMode::kStrict) {
    throw Error(ErrorCode::kStrictModeUnsupported,
                "strict boundary is not a closed curve; use Continuous mode");
  }
  const double t = wrap_two_pi(phi);
  if (t >= left_end_angle_ && t <= kPi - left_end_angle_) return params_.d_Ly;
  if (t >= kPi + right_end_angle_ && t <= kTwoPi - right_end_angle_) return -params_.d_Ry;

  const Point2 u{std::cos(t), std::sin(t)};
  const Point2 left_front{left_half_x_, left_end_y_};
  const Point2 right_front{right_half_x_, -right_end_y_};
  if (t < left_end_angle_ || t > kTwoPi - right_end_angle_) {
    return ray_segment_distance(u, right_front, left_front);
  }
  const Point2 left_back{-left_half_x_, left_end_y_};
  const Point2 right_back{-right_half_x_, -right_end_y_};
  return ray_segment_distance(u, left_back, right_back);
}

Polygon2::Polygon2(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) {
    throw Error(ErrorCode::kInvalidArgument, "polygon needs at least 3 vertices");
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const Point2& a = vertices_[i];
    const Point2& b = vertices_[(i + 1) % vertices_.size()];
    if (!finite(a)) throw Error(ErrorCode::kInvalidArgument, "non-finite polygon vertex");
    if (distance(a, b) <= kMinPolygonEdge) {
      std::ostringstream os;
      os << "polygon vertices " << i << " and " << (i + 1) % vertices_.size()
         << " coincide";
      throw Error(ErrorCode::kInvalidArgument, os.str());
    }
  }
}

BosBoundary make_boundary(const FootPose& left, const FootPose& right, BoundaryMode mode) {
  const SaddleFrame frame = saddle_frame_from_ecops(right.ecop, left.ecop);
  return BosBoundary(derive_bos_params(frame, left, right), frame, mode);
}

Point2 boundary_point(const BosBoundary& boundary, double phi) {
  if (!std::isfinite(phi)) throw Error(ErrorCode::kInvalidArgument, "phi must be finite");
  if (boundary.mode() == BoundaryMode::kStrict) return strict_point(boundary.params(), phi);
  const double t = wrap_two_pi(phi);
  const double r = boundary.radius(t);
  return {r * std::cos(t), r * std::sin(t)};
}

Polygon2 sample_boundary(const BosBoundary& boundary, std::size_t n) {
  if (n < 3) throw Error(ErrorCode::kInvalidArgument, "need at least 3 boundary samples");
  std::vector<Point2> vertices;
  vertices.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    vertices.push_back(boundary_point(boundary, kTwoPi * static_cast<double>(k) / n));
  }
  return Polygon2(std::move(vertices));
}

Containment contains(const BosBoundary& boundary, Point2 p_saddle, double tol) {
  if (boundary.mode() == BoundaryMode::kStrict) {
    throw Error(ErrorCode::kStrictModeUnsupported,
                "containment needs a closed boundary; use Continuous mode");
  }
  const double r = norm(p_saddle);
  if (r <= 1e-12) return Containment::kInside;
  const double edge = boundary.radius(std::atan2(p_saddle.y, p_saddle.x));
  if (std::abs(r - edge) <= tol) return Containment::kOn;
  return r < edge ? Containment::kInside : Containment::kOutside;
}

Polygon2 bos_polygon_task_space(const FootPose& left, const FootPose& right, std::size_t n,
                                BoundaryMode mode) {
  const BosBoundary boundary = make_boundary(left, right, mode);
  const Polygon2 local = sample_boundary(boundary, n);
  std::vector<Point2> vertices;
  vertices.reserve(local.size());
  for (const Point2& v : local.vertices()) {
    vertices.push_back(to_task_space(boundary.frame(), v));
  }
  return Polygon2(std::move(vertices));
}

}  // namespace saddle
