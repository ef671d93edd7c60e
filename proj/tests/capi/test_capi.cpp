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

#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

#include "saddlebos/saddlebos.h"

namespace {

namespace fs = std::filesystem;

const fs::path kData = SADDLEBOS_TEST_DATA_DIR;
constexpr double kPi = 3.14159265358979323846;

sb_foot_pose foot(double x, double y, double theta) {
  return sb_foot_pose{{x, y}, theta, 0.25, 0.10};
}

struct BoundaryHandle {
  sb_boundary* h = nullptr;
  ~BoundaryHandle() { sb_boundary_destroy(h); }
};

struct PolygonHandle {
  sb_polygon* h = nullptr;
  ~PolygonHandle() { sb_polygon_destroy(h); }
};

TEST(CApi, VersionAndStatusNames) {
  EXPECT_STREQ(sb_version(), "1.0.0");
  EXPECT_STREQ(sb_status_name(SB_OK), "Ok");
  EXPECT_STREQ(sb_status_name(SB_ERR_COINCIDENT_FEET), "CoincidentFeet");
  EXPECT_STREQ(sb_status_name(SB_ERR_DATA_QUALITY), "DataQuality");
}

TEST(CApi, FrameAndTransforms) {
  sb_frame f;
  ASSERT_EQ(sb_frame_from_ecops({0, 0}, {0.3, 0}, &f), SB_OK);
  EXPECT_NEAR(f.theta, -kPi / 2, 1e-15);
  EXPECT_NEAR(f.origin.x, 0.15, 1e-15);
  const sb_point p = sb_to_saddle_space(&f, sb_to_task_space(&f, {0.1, -0.2}));
  EXPECT_NEAR(p.x, 0.1, 1e-12);
  EXPECT_NEAR(p.y, -0.2, 1e-12);
}

TEST(CApi, ErrorsCarryStatusAndMessage) {
  sb_frame f;
  EXPECT_EQ(sb_frame_from_ecops({1, 1}, {1, 1}, &f), SB_ERR_COINCIDENT_FEET);
  EXPECT_NE(std::string(sb_last_error_message()).find("CoincidentFeet"), std::string::npos);
  EXPECT_EQ(sb_frame_from_ecops({0, 0}, {1, 0}, nullptr), SB_ERR_INVALID_ARGUMENT);
}

TEST(CApi, ParallelBoundary) {
  const sb_foot_pose l = foot(0, 0.15, kPi / 2), r = foot(0, -0.15, kPi / 2);
  BoundaryHandle b;
  ASSERT_EQ(sb_boundary_create(&l, &r, SB_MODE_CONTINUOUS, &b.h), SB_OK);
  sb_bos_params p;
  ASSERT_EQ(sb_boundary_params(b.h, &p), SB_OK);
  EXPECT_NEAR(p.d_Ly, 0.20, 1e-12);
  EXPECT_NEAR(p.d_Ry, -0.20, 1e-12);
  sb_point q;
  ASSERT_EQ(sb_boundary_point(b.h, 0.0, &q), SB_OK);
  EXPECT_NEAR(q.x, 0.125, 1e-9);
  sb_containment c;
  ASSERT_EQ(sb_boundary_contains(b.h, {0, 0.21}, 1e-9, &c), SB_OK);
  EXPECT_EQ(c, SB_OUTSIDE);
  ASSERT_EQ(sb_boundary_contains(b.h, {0.124, 0}, 1e-9, &c), SB_OK);
  EXPECT_EQ(c, SB_INSIDE);

  PolygonHandle poly;
  ASSERT_EQ(sb_boundary_sample(b.h, 4, 0, &poly.h), SB_OK);
  ASSERT_EQ(sb_polygon_size(poly.h), 4u);
  std::vector<sb_point> v(4);
  ASSERT_EQ(sb_polygon_vertices(poly.h, v.data(), v.size()), SB_OK);
  EXPECT_NEAR(v[1].y, 0.2, 1e-9);
  std::vector<sb_point> two(2);
  ASSERT_EQ(sb_polygon_vertices(poly.h, two.data(), two.size()), SB_OK);
  EXPECT_NEAR(two[1].y, 0.2, 1e-9);
}

TEST(CApi, StrictBoundaryRefusesContainment) {
  const sb_foot_pose l = foot(0, 0.15, kPi / 2), r = foot(0, -0.15, kPi / 2);
  BoundaryHandle b;
  ASSERT_EQ(sb_boundary_create(&l, &r, SB_MODE_STRICT, &b.h), SB_OK);
  sb_containment c;
  EXPECT_EQ(sb_boundary_contains(b.h, {0, 0}, 1e-9, &c), SB_ERR_STRICT_MODE_UNSUPPORTED);
}

TEST(CApi, DegeneratePosture) {
  sb_posture p;
  ASSERT_EQ(sb_posture_make("tandem", 0.30, kPi, kPi, 0.25, 0.10, &p), SB_OK);
  BoundaryHandle b;
  EXPECT_EQ(sb_boundary_create(&p.left, &p.right, SB_MODE_CONTINUOUS, &b.h),
            SB_ERR_DEGENERATE_GEOMETRY);
  EXPECT_EQ(b.h, nullptr);
}

TEST(CApi, Catalog) {
  ASSERT_EQ(sb_catalog_size(), 6u);
  sb_posture p;
  ASSERT_EQ(sb_catalog_posture(0, &p), SB_OK);
  EXPECT_STREQ(p.name, "parallel");
  EXPECT_EQ(sb_catalog_posture(6, &p), SB_ERR_INVALID_ARGUMENT);
}

TEST(CApi, PolygonRoundTripThroughFiles) {
  const fs::path dir = fs::temp_directory_path() / "saddlebos_capi_test";
  fs::create_directories(dir);
  const sb_point sq[] = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  PolygonHandle a;
  ASSERT_EQ(sb_polygon_create(sq, 4, &a.h), SB_OK);
  const std::string path = (dir / "sq.json").string();
  ASSERT_EQ(sb_polygon_export(a.h, path.c_str(), SB_FORMAT_JSON), SB_OK);
  PolygonHandle b;
  ASSERT_EQ(sb_polygon_import(path.c_str(), SB_FORMAT_JSON, &b.h), SB_OK);
  EXPECT_EQ(sb_polygon_size(b.h), 4u);
  sb_containment c;
  ASSERT_EQ(sb_polygon_contains(b.h, {1.0, 0.5}, 1e-9, &c), SB_OK);
  EXPECT_EQ(c, SB_ON);
  EXPECT_EQ(sb_polygon_export(a.h, "/nonexistent-dir/x.csv", SB_FORMAT_CSV), SB_ERR_IO);
  fs::remove_all(dir);
}

TEST(CApi, AnalyzeSyntheticTrial) {
  sb_trial* trial = nullptr;
  ASSERT_EQ(sb_trial_load_csv((kData / "synthetic_trial.csv").string().c_str(), &trial), SB_OK);
  EXPECT_EQ(sb_trial_frame_count(trial), 3000u);
  sb_analysis_options o;
  sb_analysis_options_default(&o);
  EXPECT_EQ(o.n_bins, 360u);
  EXPECT_EQ(o.ecop_fraction, 0.5);
  sb_analysis* a = nullptr;
  ASSERT_EQ(sb_analyze(trial, &o, nullptr, 0, &a), SB_OK) << sb_last_error_message();
  sb_report r;
  ASSERT_EQ(sb_analysis_report(a, &r), SB_OK);
  EXPECT_NEAR(r.poi, 68.9333, 1e-4);
  EXPECT_NEAR(r.poi360, 17.7778, 1e-4);
  EXPECT_EQ(r.n_outer, 360u);
  EXPECT_EQ(r.has_ellipse, 1);
  char* json = nullptr;
  ASSERT_EQ(sb_report_to_json(&r, &json), SB_OK);
  EXPECT_NE(std::string(json).find("\"poi\": 68.9333"), std::string::npos) << json;
  sb_string_free(json);
  sb_analysis_destroy(a);
  sb_trial_destroy(trial);
}

TEST(CApi, DataQualityAndParseErrors) {
  sb_trial* trial = nullptr;
  ASSERT_EQ(sb_trial_load_csv((kData / "incomplete_trial.csv").string().c_str(), &trial), SB_OK);
  EXPECT_EQ(sb_trial_incomplete_count(trial), 3u);
  sb_analysis_options o;
  sb_analysis_options_default(&o);
  sb_analysis* a = nullptr;
  EXPECT_EQ(sb_analyze(trial, &o, nullptr, 0, &a), SB_ERR_DATA_QUALITY);
  EXPECT_EQ(a, nullptr);
  sb_trial_destroy(trial);

  sb_trial* bad = nullptr;
  EXPECT_EQ(sb_trial_load_csv((kData / "corrupt_trial.csv").string().c_str(), &bad),
            SB_ERR_BAD_ROW);
  EXPECT_NE(std::string(sb_last_error_message()).find("row 3"), std::string::npos);
  EXPECT_EQ(sb_trial_load_csv("/nonexistent-dir/t.csv", &bad), SB_ERR_IO);
}

TEST(CApi, TrialFootPoses) {
  sb_trial* trial = nullptr;
  ASSERT_EQ(sb_trial_load_csv((kData / "static_orthogonal.csv").string().c_str(), &trial),
            SB_OK);
  sb_foot_pose l, r;
  ASSERT_EQ(sb_trial_foot_poses(trial, 0.5, SB_UP_Z, &l, &r), SB_OK);
  EXPECT_NEAR(l.theta_f, kPi / 2, 1e-9);
  EXPECT_NEAR(r.theta_f, 0.0, 1e-9);
  EXPECT_NEAR(r.length, 0.25, 1e-9);
  sb_trial_destroy(trial);
}

TEST(CApi, ValidateDegenerateExtra) {
  sb_validate_options o;
  sb_validate_options_default(&o);
  o.random_postures = 0;
  o.oracle_points = 1000;
  sb_posture extra;
  ASSERT_EQ(sb_posture_make("tandem", 0.30, kPi, kPi, 0.25, 0.10, &extra), SB_OK);
  int passed = 1;
  char* json = nullptr;
  ASSERT_EQ(sb_validate(&o, &extra, 1, &passed, &json), SB_OK);
  EXPECT_EQ(passed, 0);
  EXPECT_NE(std::string(json).find("DegenerateGeometry"), std::string::npos);
  sb_string_free(json);
}

TEST(CApi, FormatNumber) {
  char buf[32];
  ASSERT_EQ(sb_format_number(1.0 / 3.0, buf, sizeof buf), SB_OK);
  EXPECT_STREQ(buf, "0.333333333333");
  EXPECT_EQ(sb_format_number(1.0 / 3.0, buf, 4), SB_ERR_INVALID_ARGUMENT);
}

TEST(CApi, NullHandlesAreSafeToDestroy) {
  sb_boundary_destroy(nullptr);
  sb_polygon_destroy(nullptr);
  sb_trial_destroy(nullptr);
  sb_analysis_destroy(nullptr);
  sb_string_free(nullptr);
  EXPECT_EQ(sb_polygon_size(nullptr), 0u);
}

}  // namespace
