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

/* C interface to the saddlebos library.
 *
 * Objects are opaque handles created by sb_*_create / sb_*_load functions and
 * released with the matching sb_*_destroy. Every fallible call returns an
 * sb_status; on failure a human-readable message for the calling thread is
 * available from sb_last_error_message() until the next failing call.
 *
 * Units: meters, seconds, radians.
 */
#ifndef SADDLEBOS_SADDLEBOS_H
#define SADDLEBOS_SADDLEBOS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SADDLEBOS_BUILDING)
#    define SB_API __declspec(dllexport)
#  else
#    define SB_API __declspec(dllimport)
#  endif
#else
#  define SB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sb_status {
  SB_OK = 0,
  SB_ERR_COINCIDENT_FEET = 1,
  SB_ERR_DEGENERATE_GEOMETRY = 2,
  SB_ERR_STRICT_MODE_UNSUPPORTED = 3,
  SB_ERR_MISSING_MARKER = 4,
  SB_ERR_DEGENERATE_FOOT = 5,
  SB_ERR_EMPTY_TRAJECTORY = 6,
  SB_ERR_DEGENERATE_COVARIANCE = 7,
  SB_ERR_BAD_HEADER = 8,
  SB_ERR_BAD_ROW = 9,
  SB_ERR_NON_MONOTONIC_TIME = 10,
  SB_ERR_IO = 11,
  SB_ERR_INVALID_ARGUMENT = 12,
  SB_ERR_DATA_QUALITY = 13,
  SB_ERR_INTERNAL = 99
} sb_status;

typedef enum sb_boundary_mode { SB_MODE_CONTINUOUS = 0, SB_MODE_STRICT = 1 } sb_boundary_mode;
typedef enum sb_containment { SB_INSIDE = 0, SB_ON = 1, SB_OUTSIDE = 2 } sb_containment;
typedef enum sb_format { SB_FORMAT_CSV = 0, SB_FORMAT_JSON = 1 } sb_format;
typedef enum sb_up_axis { SB_UP_X = 0, SB_UP_Y = 1, SB_UP_Z = 2 } sb_up_axis;
typedef enum sb_bin_center { SB_BIN_SADDLE_ORIGIN = 0, SB_BIN_TRAJECTORY_MEAN = 1 } sb_bin_center;

typedef struct sb_point {
  double x;
  double y;
} sb_point;

/* theta_f: counterclockwise angle from the left-to-right eCoP direction to
 * the heel-to-toe axis; pi/2 for forward-pointing parallel feet. */
typedef struct sb_foot_pose {
  sb_point ecop;
  double theta_f;
  double length;
  double width;
} sb_foot_pose;

typedef struct sb_frame {
  sb_point origin;
  double theta;
  double d;
} sb_frame;

typedef struct sb_bos_params {
  double d_Ly, d_Ry, d_ly, d_ry, d_Lx, d_Rx, m_Bk, m_Fw;
} sb_bos_params;

typedef struct sb_posture {
  char name[64];
  sb_foot_pose left;
  sb_foot_pose right;
} sb_posture;

typedef struct sb_ellipse {
  sb_point center;
  double semi_major;
  double semi_minor;
  double orientation;
} sb_ellipse;

typedef struct sb_report {
  double poi;
  double poi360;
  size_t n_samples;
  size_t n_outer;
  int has_ellipse;
  sb_ellipse ellipse;
} sb_report;

typedef struct sb_analysis_options {
  double ecop_fraction;
  size_t n_bins;
  double k_sigma;
  sb_up_axis up_axis;
  double tol;
  sb_bin_center bin_center;
  int d_from_mt_mid;
  size_t refit_feet_every;
  double max_incomplete_fraction;
} sb_analysis_options;

typedef struct sb_validate_options {
  uint64_t seed;
  size_t random_postures;
  size_t oracle_points;
} sb_validate_options;

typedef struct sb_boundary sb_boundary;
typedef struct sb_polygon sb_polygon;
typedef struct sb_trial sb_trial;
typedef struct sb_analysis sb_analysis;

/* Diagnostics */
SB_API const char* sb_status_name(sb_status status);
SB_API const char* sb_last_error_message(void);
SB_API const char* sb_version(void);
SB_API void sb_string_free(char* s);

/* Saddle frame and transforms */
SB_API sb_status sb_frame_from_ecops(sb_point right_ecop, sb_point left_ecop, sb_frame* out);
SB_API sb_point sb_to_task_space(const sb_frame* frame, sb_point p_saddle);
SB_API sb_point sb_to_saddle_space(const sb_frame* frame, sb_point p_task);
SB_API sb_status sb_derive_bos_params(const sb_frame* frame, const sb_foot_pose* left,
                                      const sb_foot_pose* right, sb_bos_params* out);

/* Boundary */
SB_API sb_status sb_boundary_create(const sb_foot_pose* left, const sb_foot_pose* right,
                                    sb_boundary_mode mode, sb_boundary** out);
SB_API sb_status sb_boundary_from_params(const sb_bos_params* params, const sb_frame* frame,
                                         sb_boundary_mode mode, sb_boundary** out);
SB_API void sb_boundary_destroy(sb_boundary* boundary);
SB_API sb_status sb_boundary_frame(const sb_boundary* boundary, sb_frame* out);
SB_API sb_status sb_boundary_params(const sb_boundary* boundary, sb_bos_params* out);
SB_API sb_status sb_boundary_point(const sb_boundary* boundary, double phi, sb_point* out);
SB_API sb_status sb_boundary_contains(const sb_boundary* boundary, sb_point p_saddle,
                                      double tol, sb_containment* out);
/* n vertices; task_space != 0 maps them through the boundary's frame. */
SB_API sb_status sb_boundary_sample(const sb_boundary* boundary, size_t n, int task_space,
                                    sb_polygon** out);

/* Polygons */
SB_API sb_status sb_polygon_create(const sb_point* vertices, size_t count, sb_polygon** out);
SB_API void sb_polygon_destroy(sb_polygon* polygon);
SB_API size_t sb_polygon_size(const sb_polygon* polygon);
/* Copies min(count, size) vertices. */
SB_API sb_status sb_polygon_vertices(const sb_polygon* polygon, sb_point* out, size_t count);
SB_API sb_status sb_polygon_export(const sb_polygon* polygon, const char* path, sb_format format);
SB_API sb_status sb_polygon_import(const char* path, sb_format format, sb_polygon** out);
SB_API sb_status sb_polygon_contains(const sb_polygon* polygon, sb_point p, double tol,
                                     sb_containment* out);

/* Posture catalog */
SB_API size_t sb_catalog_size(void);
SB_API sb_status sb_catalog_posture(size_t index, sb_posture* out);
/* Canonical placement: right eCoP at (0, -d/2), left at (0, d/2). */
SB_API sb_status sb_posture_make(const char* name, double d, double theta_lf, double theta_rf,
                                 double foot_length, double foot_width, sb_posture* out);

/* Trials */
SB_API sb_status sb_trial_load_csv(const char* path, sb_trial** out);
SB_API void sb_trial_destroy(sb_trial* trial);
SB_API size_t sb_trial_frame_count(const sb_trial* trial);
SB_API size_t sb_trial_incomplete_count(const sb_trial* trial);
/* Feet of the first complete frame. */
SB_API sb_status sb_trial_foot_poses(const sb_trial* trial, double ecop_fraction,
                                     sb_up_axis up_axis, sb_foot_pose* left, sb_foot_pose* right);

/* Analysis */
SB_API void sb_analysis_options_default(sb_analysis_options* options);
/* fixed_posture may be NULL (feet from markers). anchor_to_trial != 0 moves
 * the fixed posture onto the trial's marker-derived Saddle frame. */
SB_API sb_status sb_analyze(const sb_trial* trial, const sb_analysis_options* options,
                            const sb_posture* fixed_posture, int anchor_to_trial,
                            sb_analysis** out);
SB_API void sb_analysis_destroy(sb_analysis* analysis);
SB_API sb_status sb_analysis_report(const sb_analysis* analysis, sb_report* out);
SB_API sb_status sb_analysis_frame(const sb_analysis* analysis, sb_frame* frame,
                                   sb_bos_params* params);
SB_API sb_status sb_analysis_feet(const sb_analysis* analysis, sb_foot_pose* left,
                                  sb_foot_pose* right);
SB_API size_t sb_analysis_incomplete_count(const sb_analysis* analysis);
/* Writes `time,x,y` rows of the CoM in Saddle coordinates. */
SB_API sb_status sb_analysis_export_saddle_samples(const sb_analysis* analysis, const char* path);

/* Reports: JSON with fixed key order. */
SB_API sb_status sb_report_to_json(const sb_report* report, char** json_out);
SB_API sb_status sb_report_export(const sb_report* report, const char* path);
SB_API sb_status sb_report_import(const char* path, sb_report* out);

/* Reference-oracle validation suite; JSON findings. *passed is 1 iff every
 * check passed. extra may be NULL. */
SB_API void sb_validate_options_default(sb_validate_options* options);
SB_API sb_status sb_validate(const sb_validate_options* options, const sb_posture* extra,
                             size_t extra_count, int* passed, char** json_out);

/* Shortest round-trip text for a double with at most 12 significant digits. */
SB_API sb_status sb_format_number(double value, char* buffer, size_t capacity);

/* Writes text to a file (IoError on failure). */
SB_API sb_status sb_write_text_file(const char* path, const char* text);

#ifdef __cplusplus
}
#endif

#endif /* SADDLEBOS_SADDLEBOS_H */
