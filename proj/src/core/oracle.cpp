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

#include "saddlebos/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>

#include "saddlebos/error.hpp"

namespace saddle::oracle {

namespace {

double segment_distance(Point2 p, Point2 a, Point2 b) {
  const Point2 e = b - a;
  const double len2 = dot(e, e);
  double t = len2 > 0 ? dot(p - a, e) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return distance(p, a + t * e);
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Arc points (r sin s, r cos s) for s from `from` to `to`, endpoints excluded
// when `open` so neighbouring pieces do not duplicate vertices.
void append_arc(std::vector<Point2>& out, double r, double from, double to, std::size_t count) {
  for (std::size_t k = 0; k < count; ++k) {
    const double s = from + (to - from) * static_cast<double>(k) / static_cast<double>(count);
    out.push_back({r * std::sin(s), r * std::cos(s)});
  }
}

void append_segment(std::vector<Point2>& out, Point2 a, Point2 b, std::size_t count) {
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(a + (static_cast<double>(k) / static_cast<double>(count)) * (b - a));
  }
}

nlohmann::ordered_json star_json(const StarShapeReport& r) {
  nlohmann::ordered_json j;
  j["pass"] = r.ok();
  j["rays"] = r.rays.size();
  j["violations"] = r.violations.size();
  if (!r.ok()) {
    auto first = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < std::min<std::size_t>(r.violations.size(), 10); ++i) {
      first.push_back(r.violations[i]);
    }
    j["first_violating_phi"] = first;
  }
  return j;
}

}  // namespace

Containment point_in_polygon(const Polygon2& polygon, Point2 p, double on_tol) {
  const auto& v = polygon.vertices();
  bool inside = false;
  for (std::size_t i = 0, j = v.size() - 1; i < v.size(); j = i++) {
    const Point2 a = v[j];
    const Point2 b = v[i];
    if (p.x >= std::min(a.x, b.x) - on_tol && p.x <= std::max(a.x, b.x) + on_tol &&
        p.y >= std::min(a.y, b.y) - on_tol && p.y <= std::max(a.y, b.y) + on_tol &&
        segment_distance(p, a, b) <= on_tol) {
      return Containment::kOn;
    }
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x_cross = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x_cross) inside = !inside;
    }
  }
  return inside ? Containment::kInside : Containment::kOutside;
}

EvenOddLocator::EvenOddLocator(const Polygon2& polygon, double on_tol)
    : vertices_(polygon.vertices()), on_tol_(on_tol) {
  double y_max = vertices_[0].y;
  y_min_ = vertices_[0].y;
  for (const Point2& v : vertices_) {
    y_min_ = std::min(y_min_, v.y);
    y_max = std::max(y_max, v.y);
  }
  const std::size_t count = std::max<std::size_t>(1, vertices_.size() / 4);
  slab_height_ = std::max((y_max - y_min_) / static_cast<double>(count), 1e-12);
  slabs_.resize(count);
  const auto slab_of = [&](double y) {
    const double k = std::floor((y - y_min_) / slab_height_);
    return static_cast<std::size_t>(std::clamp(k, 0.0, static_cast<double>(count - 1)));
  };
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const Point2 a = vertices_[i];
    const Point2 b = vertices_[(i + 1) % vertices_.size()];
    const std::size_t lo = slab_of(std::min(a.y, b.y) - on_tol_);
    const std::size_t hi = slab_of(std::max(a.y, b.y) + on_tol_);
    for (std::size_t s = lo; s <= hi; ++s) slabs_[s].push_back(i);
  }
}

Containment EvenOddLocator::locate(Point2 p) const {
  const double k = std::floor((p.y - y_min_) / slab_height_);
  if (k < -1.0 || k > static_cast<double>(slabs_.size())) return Containment::kOutside;
  const auto slab = static_cast<std::size_t>(std::clamp(k, 0.0, static_cast<double>(slabs_.size() - 1)));
  bool inside = false;
  const std::size_t n = vertices_.size();
  for (std::size_t i : slabs_[slab]) {
    const Point2 a = vertices_[i];
    const Point2 b = vertices_[(i + 1) % n];
    if (p.x >= std::min(a.x, b.x) - on_tol_ && p.x <= std::max(a.x, b.x) + on_tol_ &&
        p.y >= std::min(a.y, b.y) - on_tol_ && p.y <= std::max(a.y, b.y) + on_tol_ &&
        segment_distance(p, a, b) <= on_tol_) {
      return Containment::kOn;
    }
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x_cross = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x_cross) inside = !inside;
    }
  }
  return inside ? Containment::kInside : Containment::kOutside;
}

double distance_to_polygon(const Polygon2& polygon, Point2 p) {
  const auto& v = polygon.vertices();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0, j = v.size() - 1; i < v.size(); j = i++) {
    best = std::min(best, segment_distance(p, v[j], v[i]));
  }
  return best;
}

std::vector<Point2> trace_boundary(const BosParams& params, std::size_t n) {
  const double a = std::abs(params.d_Lx);
  const double b = std::abs(params.d_Rx);
  const double rl = params.d_Ly;
  const double rr = params.d_Ry;
  const double sl = std::asin(std::clamp(a / std::abs(rl), -1.0, 1.0));
  const double sr = std::asin(std::clamp(b / std::abs(rr), -1.0, 1.0));

  // Piece endpoints, counterclockwise for a well-formed boundary.
  const Point2 left_front{rl * std::sin(sl), rl * std::cos(sl)};
  const Point2 left_back{rl * std::sin(-sl), rl * std::cos(-sl)};
  const Point2 right_back{rr * std::sin(sr), rr * std::cos(sr)};
  const Point2 right_front{rr * std::sin(-sr), rr * std::cos(-sr)};

  const double lengths[4] = {
      distance(right_front, left_front),
      std::abs(rl) * 2 * sl,
      distance(left_back, right_back),
      std::abs(rr) * 2 * sr,
  };
  const double total = lengths[0] + lengths[1] + lengths[2] + lengths[3];
  std::size_t counts[4];
  for (int i = 0; i < 4; ++i) {
    counts[i] = std::max<std::size_t>(
        2, static_cast<std::size_t>(std::round(static_cast<double>(n) * lengths[i] / total)));
  }

  std::vector<Point2> out;
  out.reserve(counts[0] + counts[1] + counts[2] + counts[3]);
  append_segment(out, right_front, left_front, counts[0]);
  append_arc(out, rl, sl, -sl, counts[1]);
  append_segment(out, left_back, right_back, counts[2]);
  append_arc(out, rr, sr, -sr, counts[3]);
  return out;
}

StarShapeReport check_star_shape(const BosParams& params, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "need at least one ray");
  const std::vector<Point2> curve = trace_boundary(params, std::max<std::size_t>(n, 720));
  StarShapeReport report;
  report.rays.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double phi = kTwoPi * (static_cast<double>(k) + 0.5) / static_cast<double>(n);
    const Point2 u{std::cos(phi), std::sin(phi)};
    std::size_t crossings = 0;
    for (std::size_t i = 0; i < curve.size(); ++i) {
      const Point2 p = curve[i];
      const Point2 e = curve[(i + 1) % curve.size()] - p;
      const double denom = cross(u, e);
      if (denom == 0.0) continue;
      const double t = cross(p, e) / denom;
      const double s = cross(p, u) / denom;
      if (t > 0 && s >= 0 && s < 1) ++crossings;
    }
    report.rays.push_back({phi, crossings});
    if (crossings != 1) report.violations.push_back(phi);
  }
  return report;
}

StarShapeReport check_star_shape(const BosBoundary& boundary, std::size_t n) {
  return check_star_shape(boundary.params(), n);
}

bool check_convexity(const Polygon2& polygon) {
  const auto& v = polygon.vertices();
  const std::size_t n = v.size();
  int sign = 0;
  double turning = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 e1 = v[(i + 1) % n] - v[i];
    const Point2 e2 = v[(i + 2) % n] - v[(i + 1) % n];
    const double c = cross(e1, e2);
    turning += std::atan2(c, dot(e1, e2));
    if (std::abs(c) <= 1e-9 * norm(e1) * norm(e2)) continue;
    const int s = c > 0 ? 1 : -1;
    if (sign == 0) sign = s;
    else if (s != sign) return false;
  }
  // A pentagram turns one way throughout but winds twice.
  return std::abs(std::abs(turning) - kTwoPi) < 1e-6;
}

AgreementReport containment_agreement(const BosBoundary& boundary, std::size_t n_points,
                                      std::uint64_t seed, std::size_t polygon_n, double tol) {
  const Polygon2 polygon = sample_boundary(boundary, polygon_n);
  Point2 lo = polygon[0];
  Point2 hi = polygon[0];
  for (const Point2& v : polygon.vertices()) {
    lo = {std::min(lo.x, v.x), std::min(lo.y, v.y)};
    hi = {std::max(hi.x, v.x), std::max(hi.y, v.y)};
  }

  const EvenOddLocator locator(polygon, tol);
  std::mt19937_64 rng(seed);
  AgreementReport report;
  report.points = n_points;
  for (std::size_t i = 0; i < n_points; ++i) {
    const Point2 p{uniform(rng, lo.x, hi.x), uniform(rng, lo.y, hi.y)};
    const Containment radial = contains(boundary, p, tol);
    const Containment crossing = locator.locate(p);
    const bool agree = radial == Containment::kOn || crossing == Containment::kOn ||
                       (radial == Containment::kInside) == (crossing == Containment::kInside);
    if (agree) {
      ++report.agreements;
    } else {
      const double gap = std::abs(norm(p) - boundary.radius(std::atan2(p.y, p.x)));
      report.max_disagreement_distance = std::max(report.max_disagreement_distance, gap);
    }
  }
  return report;
}

double equivariance_error(const FootPose& left, const FootPose& right,
                          const RigidMotion& motion, std::size_t n) {
  const Polygon2 moved_first = bos_polygon_task_space(apply(motion, left), apply(motion, right), n);
  const Polygon2 base = bos_polygon_task_space(left, right, n);
  double worst = 0;
  for (std::size_t i = 0; i < base.size(); ++i) {
    worst = std::max(worst, distance(moved_first[i], motion(base[i])));
  }
  return worst;
}

FootPair mirror_posture(const FootPose& left, const FootPose& right) {
  const SaddleFrame frame = saddle_frame_from_ecops(right.ecop, left.ecop);
  const auto reflect = [&](Point2 p) {
    const Point2 local = to_saddle_space(frame, p);
    return to_task_space(frame, {local.x, -local.y});
  };
  return FootPair{
      make_foot_pose(Side::kLeft, reflect(right.ecop), kPi - right.theta_f, right.length,
                     right.width),
      make_foot_pose(Side::kRight, reflect(left.ecop), kPi - left.theta_f, left.length,
                     left.width),
  };
}

PostureSpec random_posture(std::mt19937_64& rng) {
  constexpr double kTurn = kPi / 6;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const double d = uniform(rng, 0.15, 0.45);
    const double length = uniform(rng, 0.22, 0.28);
    const double width = uniform(rng, 0.08, 0.11);
    const double theta_lf = kPi / 2 + uniform(rng, -kTurn, kTurn);
    const double theta_rf = kPi / 2 + uniform(rng, -kTurn, kTurn);
    const RigidMotion placement = random_motion(rng);
    PostureSpec p = make_posture("random", d, theta_lf, theta_rf, length, width);
    p.left = apply(placement, p.left);
    p.right = apply(placement, p.right);
    try {
      (void)make_boundary(p.left, p.right);
      return p;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kDegenerateGeometry) throw;
    }
  }
  throw Error(ErrorCode::kDegenerateGeometry, "no non-degenerate random posture found");
}

RigidMotion random_motion(std::mt19937_64& rng) {
  return RigidMotion{uniform(rng, -kPi, kPi), {uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0)}};
}

ValidationResult run_validation(const ValidationOptions& options) {
  std::vector<PostureSpec> postures = posture_catalog();
  std::mt19937_64 rng(options.seed);
  for (std::size_t i = 0; i < options.random_postures; ++i) {
    PostureSpec p = random_posture(rng);
    p.name = "random-" + std::to_string(i);
    postures.push_back(std::move(p));
  }
  for (const PostureSpec& p : options.extra_postures) postures.push_back(p);

  ValidationResult result;
  nlohmann::ordered_json doc;
  doc["seed"] = options.seed;
  doc["random_postures"] = options.random_postures;
  auto list = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < postures.size(); ++i) {
    const PostureSpec& p = postures[i];
    nlohmann::ordered_json entry;
    entry["name"] = p.name;
    bool ok = true;
    try {
      const BosBoundary boundary = make_boundary(p.left, p.right);
      nlohmann::ordered_json checks;

      const StarShapeReport star = check_star_shape(boundary, options.star_rays);
      checks["star_shape"] = star_json(star);
      ok = ok && star.ok();

      const bool convex = check_convexity(sample_boundary(boundary, options.polygon_samples));
      checks["convexity"] = {{"pass", convex}};
      ok = ok && convex;

      const AgreementReport agreement = containment_agreement(
          boundary, options.oracle_points, options.seed + i, options.polygon_samples);
      const bool agree_ok = agreement.agreement() >= options.min_agreement &&
                            agreement.max_disagreement_distance <= options.max_disagreement_distance;
      checks["oracle_agreement"] = {
          {"pass", agree_ok},
          {"points", agreement.points},
          {"agreement", agreement.agreement()},
          {"max_disagreement_distance", agreement.max_disagreement_distance},
      };
      ok = ok && agree_ok;

      std::mt19937_64 motion_rng(options.seed ^ (0x9e3779b97f4a7c15ULL * (i + 1)));
      double worst = 0;
      for (std::size_t m = 0; m < options.motions_per_posture; ++m) {
        worst = std::max(worst, equivariance_error(p.left, p.right, random_motion(motion_rng), 360));
      }
      const bool equi_ok = worst <= options.equivariance_tol;
      checks["equivariance"] = {{"pass", equi_ok}, {"max_error", worst}};
      ok = ok && equi_ok;

      entry["checks"] = checks;
    } catch (const Error& e) {
      ok = false;
      entry["error"] = std::string(error_name(e.code()));
      entry["detail"] = e.what();
    }
    entry["pass"] = ok;
    result.passed = result.passed && ok;
    list.push_back(entry);
  }
  doc["postures"] = list;
  doc["passed"] = result.passed;
  result.json = doc.dump(2) + "\n";
  return result;
}

}  // namespace saddle::oracle
