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

// Brute-force reference checks for the BoS geometry. These deliberately use a
// different algorithm family from the main path: even-odd crossing instead of
// radial lookup, and a parametric trace of the arc/chord pieces instead of
// ray intersection. Speed is not a goal.
#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "saddlebos/geometry.hpp"
#include "saddlebos/trial_io.hpp"

namespace saddle::oracle {

/// Even-odd rule; kOn within on_tol of an edge.
Containment point_in_polygon(const Polygon2& polygon, Point2 p, double on_tol = 1e-9);

/// Even-odd locator with edges bucketed into horizontal slabs, for repeated
/// queries against one polygon. Same answers as point_in_polygon().
class EvenOddLocator {
 public:
  explicit EvenOddLocator(const Polygon2& polygon, double on_tol = 1e-9);

  Containment locate(Point2 p) const;

 private:
  std::vector<Point2> vertices_;
  double on_tol_;
  double y_min_ = 0;
  double slab_height_ = 1;
  std::vector<std::vector<std::size_t>> slabs_;  // edge start indices
};

/// Distance from p to the closest polygon edge.
double distance_to_polygon(const Polygon2& polygon, Point2 p);

/// Closed curve traced piece by piece (front chord, left arc, back chord,
/// right arc) with `n` vertices in total. Arcs follow the signed
/// (D sin s, D cos s) parameterization, so a wrong-signed radius shows up as
/// a folded curve.
std::vector<Point2> trace_boundary(const BosParams& params, std::size_t n);

struct RayResult {
  double phi = 0;
  std::size_t crossings = 0;
};

struct StarShapeReport {
  std::vector<RayResult> rays;
  /// Directions whose ray does not cross the traced curve exactly once.
  std::vector<double> violations;

  bool ok() const noexcept { return violations.empty(); }
};

/// Casts n rays from the Saddle origin at phi_k = 2 pi (k + 1/2) / n against
/// the traced curve (max(n, 720) vertices).
StarShapeReport check_star_shape(const BosParams& params, std::size_t n);
StarShapeReport check_star_shape(const BosBoundary& boundary, std::size_t n);

/// True iff all consecutive edge cross products share one sign (products
/// below 1e-9 of |e1||e2| count as zero) and the boundary winds exactly once.
bool check_convexity(const Polygon2& polygon);

struct AgreementReport {
  std::size_t points = 0;
  std::size_t agreements = 0;
  /// Largest radial distance to the boundary among disagreeing points.
  double max_disagreement_distance = 0;

  double agreement() const noexcept {
    return points == 0 ? 1.0 : static_cast<double>(agreements) / static_cast<double>(points);
  }
};

/// contains() versus point_in_polygon() on sample_boundary(polygon_n) for
/// uniform points over the polygon's bounding box. On counts as inside.
AgreementReport containment_agreement(const BosBoundary& boundary, std::size_t n_points,
                                      std::uint64_t seed, std::size_t polygon_n = 3600,
                                      double tol = kDefaultBoundaryTol);

/// Largest vertex distance between bos(g.left, g.right) and g.bos(left, right).
double equivariance_error(const FootPose& left, const FootPose& right,
                          const RigidMotion& motion, std::size_t n);

/// Feet swapped and reflected across x_Saddle: the new left foot is the old
/// right one mirrored (theta -> pi - theta) and vice versa.
FootPair mirror_posture(const FootPose& left, const FootPose& right);

/// Random stance within everyday ranges (D 0.15-0.45 m, feet 0.22-0.28 m by
/// 0.08-0.11 m, each foot turned up to 30 degrees either way from parallel)
/// at a random task-space placement and heading.
PostureSpec random_posture(std::mt19937_64& rng);

RigidMotion random_motion(std::mt19937_64& rng);

struct ValidationOptions {
  std::uint64_t seed = 42;
  std::size_t random_postures = 20;
  std::size_t star_rays = 3600;
  std::size_t polygon_samples = 3600;
  std::size_t oracle_points = 20000;
  std::size_t motions_per_posture = 10;
  double min_agreement = 0.998;
  double max_disagreement_distance = 1e-6;
  double equivariance_tol = 1e-9;
  std::vector<PostureSpec> extra_postures;
};

struct ValidationResult {
  bool passed = true;
  /// Deterministic JSON findings document.
  std::string json;
};

ValidationResult run_validation(const ValidationOptions& options);

}  // namespace saddle::oracle
