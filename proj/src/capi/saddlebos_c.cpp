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

#include "saddlebos/saddlebos.h"

#include <cstring>
#include <fstream>
#include <new>
#include <string>
#include <vector>

#include "saddlebos/analysis.hpp"
#include "saddlebos/error.hpp"
#include "saddlebos/geometry.hpp"
#include "saddlebos/metrics.hpp"
#include "saddlebos/oracle.hpp"
#include "saddlebos/trial_io.hpp"

struct sb_boundary {
  saddle::BosBoundary impl;
};

struct sb_polygon {
  saddle::Polygon2 impl;
};

struct sb_trial {
  std::vector<saddle::MarkerFrame> frames;
};

struct sb_analysis {
  saddle::AnalysisResult impl;
};

namespace {

thread_local std::string g_last_error;

sb_status to_status(saddle::ErrorCode code) {
  using saddle::ErrorCode;
  switch (code) {
    case ErrorCode::kCoincidentFeet: return SB_ERR_COINCIDENT_FEET;
    case ErrorCode::kDegenerateGeometry: return SB_ERR_DEGENERATE_GEOMETRY;
    case ErrorCode::kStrictModeUnsupported: return SB_ERR_STRICT_MODE_UNSUPPORTED;
    case ErrorCode::kMissingMarker: return SB_ERR_MISSING_MARKER;
    case ErrorCode::kDegenerateFoot: return SB_ERR_DEGENERATE_FOOT;
    case ErrorCode::kEmptyTrajectory: return SB_ERR_EMPTY_TRAJECTORY;
    case ErrorCode::kDegenerateCovariance: return SB_ERR_DEGENERATE_COVARIANCE;
    case ErrorCode::kBadHeader: return SB_ERR_BAD_HEADER;
    case ErrorCode::kBadRow: return SB_ERR_BAD_ROW;
    case ErrorCode::kNonMonotonicTime: return SB_ERR_NON_MONOTONIC_TIME;
    case ErrorCode::kIoError: return SB_ERR_IO;
    case ErrorCode::kInvalidArgument: return SB_ERR_INVALID_ARGUMENT;
    case ErrorCode::kDataQuality: return SB_ERR_DATA_QUALITY;
  }
  return SB_ERR_INTERNAL;
}

sb_status fail(sb_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs fn, translating library exceptions into status codes.
template <typename Fn>
sb_status guarded(Fn&& fn) {
  try {
    fn();
    return SB_OK;
  } catch (const saddle::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SB_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SB_ERR_INTERNAL, e.what());
  }
}

sb_status null_argument(const char* what) {
  return fail(SB_ERR_INVALID_ARGUMENT, std::string("InvalidArgument: null ") + what);
}

saddle::Point2 from_c(sb_point p) { return {p.x, p.y}; }
sb_point to_c(saddle::Point2 p) { return {p.x, p.y}; }

saddle::SaddleFrame from_c(const sb_frame& f) { return {from_c(f.origin), f.theta, f.d}; }
sb_frame to_c(const saddle::SaddleFrame& f) { return {to_c(f.origin), f.theta, f.d}; }

saddle::FootPose from_c(const sb_foot_pose& f, saddle::Side side) {
  return saddle::make_foot_pose(side, from_c(f.ecop), f.theta_f, f.length, f.width);
}
sb_foot_pose to_c(const saddle::FootPose& f) {
  return {to_c(f.ecop), f.theta_f, f.length, f.width};
}

saddle::BosParams from_c(const sb_bos_params& p) {
  return {p.d_Ly, p.d_Ry, p.d_ly, p.d_ry, p.d_Lx, p.d_Rx, p.m_Bk, p.m_Fw};
}
sb_bos_params to_c(const saddle::BosParams& p) {
  return {p.d_Ly, p.d_Ry, p.d_ly, p.d_ry, p.d_Lx, p.d_Rx, p.m_Bk, p.m_Fw};
}

saddle::BoundaryMode from_c(sb_boundary_mode m) {
  return m == SB_MODE_STRICT ? saddle::BoundaryMode::kStrict : saddle::BoundaryMode::kContinuous;
}

sb_containment to_c(saddle::Containment c) {
  switch (c) {
    case saddle::Containment::kInside: return SB_INSIDE;
    case saddle::Containment::kOn: return SB_ON;
    case saddle::Containment::kOutside: break;
  }
  return SB_OUTSIDE;
}

saddle::PolygonFormat from_c(sb_format f) {
  return f == SB_FORMAT_JSON ? saddle::PolygonFormat::kJson : saddle::PolygonFormat::kCsv;
}

saddle::UpAxis from_c(sb_up_axis a) {
  switch (a) {
    case SB_UP_X: return saddle::UpAxis::kX;
    case SB_UP_Y: return saddle::UpAxis::kY;
    case SB_UP_Z: break;
  }
  return saddle::UpAxis::kZ;
}

sb_posture to_c(const saddle::PostureSpec& p) {
  sb_posture out{};
  std::strncpy(out.name, p.name.c_str(), sizeof(out.name) - 1);
  out.left = to_c(p.left);
  out.right = to_c(p.right);
  return out;
}

saddle::PostureSpec from_c(const sb_posture& p) {
  saddle::PostureSpec spec;
  spec.name = std::string(p.name, strnlen(p.name, sizeof(p.name)));
  spec.left = from_c(p.left, saddle::Side::kLeft);
  spec.right = from_c(p.right, saddle::Side::kRight);
  return spec;
}

sb_report to_c(const saddle::MetricsReport& r) {
  sb_report out{};
  out.poi = r.poi;
  out.poi360 = r.poi360;
  out.n_samples = r.n_samples;
  out.n_outer = r.n_outer;
  if (r.covariance_ellipse) {
    out.has_ellipse = 1;
    out.ellipse = {to_c(r.covariance_ellipse->center), r.covariance_ellipse->semi_axes[0],
                   r.covariance_ellipse->semi_axes[1], r.covariance_ellipse->orientation};
  }
  return out;
}

saddle::MetricsReport from_c(const sb_report& r) {
  saddle::MetricsReport out;
  out.poi = r.poi;
  out.poi360 = r.poi360;
  out.n_samples = r.n_samples;
  out.n_outer = r.n_outer;
  if (r.has_ellipse) {
    out.covariance_ellipse = saddle::CovarianceEllipse{
        from_c(r.ellipse.center), {r.ellipse.semi_major, r.ellipse.semi_minor}, r.ellipse.orientation};
  }
  return out;
}

char* duplicate(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* sb_status_name(sb_status status) {
  switch (status) {
    case SB_OK: return "Ok";
    case SB_ERR_COINCIDENT_FEET: return "CoincidentFeet";
    case SB_ERR_DEGENERATE_GEOMETRY: return "DegenerateGeometry";
    case SB_ERR_STRICT_MODE_UNSUPPORTED: return "StrictModeUnsupported";
    case SB_ERR_MISSING_MARKER: return "MissingMarker";
    case SB_ERR_DEGENERATE_FOOT: return "DegenerateFoot";
    case SB_ERR_EMPTY_TRAJECTORY: return "EmptyTrajectory";
    case SB_ERR_DEGENERATE_COVARIANCE: return "DegenerateCovariance";
    case SB_ERR_BAD_HEADER: return "BadHeader";
    case SB_ERR_BAD_ROW: return "BadRow";
    case SB_ERR_NON_MONOTONIC_TIME: return "NonMonotonicTime";
    case SB_ERR_IO: return "IoError";
    case SB_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case SB_ERR_DATA_QUALITY: return "DataQuality";
    case SB_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* sb_last_error_message(void) { return g_last_error.c_str(); }

const char* sb_version(void) { return "1.0.0"; }

void sb_string_free(char* s) { delete[] s; }

sb_status sb_frame_from_ecops(sb_point right_ecop, sb_point left_ecop, sb_frame* out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = to_c(saddle::saddle_frame_from_ecops(from_c(right_ecop), from_c(left_ecop))); });
}

sb_point sb_to_task_space(const sb_frame* frame, sb_point p_saddle) {
  if (!frame) return p_saddle;
  return to_c(saddle::to_task_space(from_c(*frame), from_c(p_saddle)));
}

sb_point sb_to_saddle_space(const sb_frame* frame, sb_point p_task) {
  if (!frame) return p_task;
  return to_c(saddle::to_saddle_space(from_c(*frame), from_c(p_task)));
}

sb_status sb_derive_bos_params(const sb_frame* frame, const sb_foot_pose* left,
                               const sb_foot_pose* right, sb_bos_params* out) {
  if (!frame || !left || !right || !out) return null_argument("argument");
  return guarded([&] {
    *out = to_c(saddle::derive_bos_params(from_c(*frame), from_c(*left, saddle::Side::kLeft),
                                          from_c(*right, saddle::Side::kRight)));
  });
}

sb_status sb_boundary_create(const sb_foot_pose* left, const sb_foot_pose* right,
                             sb_boundary_mode mode, sb_boundary** out) {
  if (!left || !right || !out) return null_argument("argument");
  *out = nullptr;
  return guarded([&] {
    *out = new sb_boundary{saddle::make_boundary(from_c(*left, saddle::Side::kLeft),
                                                 from_c(*right, saddle::Side::kRight), from_c(mode))};
  });
}

sb_status sb_boundary_from_params(const sb_bos_params* params, const sb_frame* frame,
                                  sb_boundary_mode mode, sb_boundary** out) {
  if (!params || !frame || !out) return null_argument("argument");
  *out = nullptr;
  return guarded([&] {
    *out = new sb_boundary{saddle::BosBoundary(from_c(*params), from_c(*frame), from_c(mode))};
  });
}

void sb_boundary_destroy(sb_boundary* boundary) { delete boundary; }

sb_status sb_boundary_frame(const sb_boundary* boundary, sb_frame* out) {
  if (!boundary || !out) return null_argument("argument");
  *out = to_c(boundary->impl.frame());
  return SB_OK;
}

sb_status sb_boundary_params(const sb_boundary* boundary, sb_bos_params* out) {
  if (!boundary || !out) return null_argument("argument");
  *out = to_c(boundary->impl.params());
  return SB_OK;
}

sb_status sb_boundary_point(const sb_boundary* boundary, double phi, sb_point* out) {
  if (!boundary || !out) return null_argument("argument");
  return guarded([&] { *out = to_c(saddle::boundary_point(boundary->impl, phi)); });
}

sb_status sb_boundary_contains(const sb_boundary* boundary, sb_point p_saddle, double tol,
                               sb_containment* out) {
  if (!boundary || !out) return null_argument("argument");
  return guarded([&] { *out = to_c(saddle::contains(boundary->impl, from_c(p_saddle), tol)); });
}

sb_status sb_boundary_sample(const sb_boundary* boundary, size_t n, int task_space,
                             sb_polygon** out) {
  if (!boundary || !out) return null_argument("argument");
  *out = nullptr;
  return guarded([&] {
    saddle::Polygon2 local = saddle::sample_boundary(boundary->impl, n);
    if (!task_space) {
      *out = new sb_polygon{std::move(local)};
      return;
    }
    std::vector<saddle::Point2> vertices;
    vertices.reserve(local.size());
    for (const auto& v : local.vertices()) {
      vertices.push_back(saddle::to_task_space(boundary->impl.frame(), v));
    }
    *out = new sb_polygon{saddle::Polygon2(std::move(vertices))};
  });
}

sb_status sb_polygon_create(const sb_point* vertices, size_t count, sb_polygon** out) {
  if ((!vertices && count > 0) || !out) return null_argument("argument");
  *out = nullptr;
  return guarded([&] {
    std::vector<saddle::Point2> v;
    v.reserve(count);
    for (size_t i = 0; i < count; ++i) v.push_back(from_c(vertices[i]));
    *out = new sb_polygon{saddle::Polygon2(std::move(v))};
  });
}

void sb_polygon_destroy(sb_polygon* polygon) { delete polygon; }

size_t sb_polygon_size(const sb_polygon* polygon) { return polygon ? polygon->impl.size() : 0; }

sb_status sb_polygon_vertices(const sb_polygon* polygon, sb_point* out, size_t count) {
  if (!polygon || (!out && count > 0)) return null_argument("argument");
  const size_t n = std::min(count, polygon->impl.size());
  for (size_t i = 0; i < n; ++i) out[i] = to_c(polygon->impl[i]);
  return SB_OK;
}

sb_status sb_polygon_export(const sb_polygon* polygon, const char* path, sb_format format) {
  if (!polygon || !path) return null_argument("argument");
  return guarded([&] { saddle::export_polygon(polygon->impl, path, from_c(format)); });
}

sb_status sb_polygon_import(const char* path, sb_format format, sb_polygon** out) {
  if (!path || !out) return null_argument("argument");
  *out = nullptr;
  return guarded([&] { *out = new sb_polygon{saddle::import_polygon(path, from_c(format))}; });
}

sb_status sb_polygon_contains(const sb_polygon* polygon, sb_point p, double tol,
                              sb_containment* out) {
  if (!polygon || !out) return null_argument("argument");
  return guarded([&] { *out = to_c(saddle::oracle::point_in_polygon(polygon->impl, from_c(p), tol)); });
}

size_t sb_catalog_size(void) { return saddle::posture_catalog().size(); }

sb_status sb_catalog_posture(size_t index, sb_posture* out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto catalog = saddle::posture_catalog();
    if (index >= catalog.size()) {
      throw saddle::Error(saddle::ErrorCode::kInvalidArgument, "catalog index out of range");
    }
    *out = to_c(catalog[index]);
  });
}

sb_status sb_posture_make(const char* name, double d, double theta_lf, double theta_rf,
                          double foot_length, double foot_width, sb_posture* out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = to_c(saddle::make_posture(name ? name : "", d, theta_lf, theta_rf, foot_length, foot_width));
  });
}

sb_status sb_trial_load_csv(const char* path, sb_trial** out) {
  if (!path || !out) return null_argument("argument");
  *out = nullptr;
  return guarded([&] { *out = new sb_trial{saddle::parse_trial_csv(path)}; });
}

void sb_trial_destroy(sb_trial* trial) { delete trial; }

size_t sb_trial_frame_count(const sb_trial* trial) { return trial ? trial->frames.size() : 0; }

size_t sb_trial_incomplete_count(const sb_trial* trial) {
  if (!trial) return 0;
  size_t n = 0;
  for (const auto& f : trial->frames) n += f.complete() ? 0 : 1;
  return n;
}

sb_status sb_trial_foot_poses(const sb_trial* trial, double ecop_fraction, sb_up_axis up_axis,
                              sb_foot_pose* left, sb_foot_pose* right) {
  if (!trial || !left || !right) return null_argument("argument");
  return guarded([&] {
    for (const auto& f : trial->frames) {
      if (!f.complete()) continue;
      const saddle::FootPair feet = saddle::foot_poses(f, ecop_fraction, from_c(up_axis));
      *left = to_c(feet.left);
      *right = to_c(feet.right);
      return;
    }
    throw saddle::Error(saddle::ErrorCode::kEmptyTrajectory, "trial has no complete frame");
  });
}

void sb_analysis_options_default(sb_analysis_options* options) {
  if (!options) return;
  const saddle::AnalysisConfig d;
  options->ecop_fraction = d.ecop_fraction;
  options->n_bins = d.n_bins;
  options->k_sigma = d.k_sigma;
  options->up_axis = SB_UP_Z;
  options->tol = d.tol;
  options->bin_center = SB_BIN_SADDLE_ORIGIN;
  options->d_from_mt_mid = 0;
  options->refit_feet_every = d.refit_feet_every;
  options->max_incomplete_fraction = d.max_incomplete_fraction;
}

sb_status sb_analyze(const sb_trial* trial, const sb_analysis_options* options,
                     const sb_posture* fixed_posture, int anchor_to_trial, sb_analysis** out) {
  if (!trial || !out) return null_argument("argument");
  *out = nullptr;
  return guarded([&] {
    saddle::AnalysisConfig config;
    if (options) {
      config.ecop_fraction = options->ecop_fraction;
      config.n_bins = options->n_bins;
      config.k_sigma = options->k_sigma;
      config.up_axis = from_c(options->up_axis);
      config.tol = options->tol;
      config.bin_center = options->bin_center == SB_BIN_TRAJECTORY_MEAN
                              ? saddle::BinCenter::kTrajectoryMean
                              : saddle::BinCenter::kSaddleOrigin;
      config.d_from_mt_mid = options->d_from_mt_mid != 0;
      config.refit_feet_every = options->refit_feet_every;
      config.max_incomplete_fraction = options->max_incomplete_fraction;
    }
    std::optional<saddle::FootPair> fixed;
    if (fixed_posture) {
      const saddle::PostureSpec spec = from_c(*fixed_posture);
      fixed = saddle::FootPair{spec.left, spec.right};
    }
    *out = new sb_analysis{saddle::analyze_trial(trial->frames, config, fixed, anchor_to_trial != 0)};
  });
}

void sb_analysis_destroy(sb_analysis* analysis) { delete analysis; }

sb_status sb_analysis_report(const sb_analysis* analysis, sb_report* out) {
  if (!analysis || !out) return null_argument("argument");
  *out = to_c(analysis->impl.report);
  return SB_OK;
}

sb_status sb_analysis_frame(const sb_analysis* analysis, sb_frame* frame, sb_bos_params* params) {
  if (!analysis) return null_argument("analysis");
  if (frame) *frame = to_c(analysis->impl.frame);
  if (params) *params = to_c(analysis->impl.params);
  return SB_OK;
}

sb_status sb_analysis_feet(const sb_analysis* analysis, sb_foot_pose* left, sb_foot_pose* right) {
  if (!analysis) return null_argument("analysis");
  if (left) *left = to_c(analysis->impl.feet.left);
  if (right) *right = to_c(analysis->impl.feet.right);
  return SB_OK;
}

size_t sb_analysis_incomplete_count(const sb_analysis* analysis) {
  return analysis ? analysis->impl.n_incomplete : 0;
}

sb_status sb_analysis_export_saddle_samples(const sb_analysis* analysis, const char* path) {
  if (!analysis || !path) return null_argument("argument");
  return guarded([&] {
    std::string text = "time,x,y\n";
    for (const auto& s : analysis->impl.saddle_samples) {
      text += saddle::format_number(s.time) + ',' + saddle::format_number(s.position.x) + ',' +
              saddle::format_number(s.position.y) + '\n';
    }
    saddle::write_text_file(path, text);
  });
}

sb_status sb_report_to_json(const sb_report* report, char** json_out) {
  if (!report || !json_out) return null_argument("argument");
  *json_out = nullptr;
  return guarded([&] { *json_out = duplicate(saddle::report_to_json(from_c(*report))); });
}

sb_status sb_report_export(const sb_report* report, const char* path) {
  if (!report || !path) return null_argument("argument");
  return guarded([&] { saddle::export_report(from_c(*report), path); });
}

sb_status sb_report_import(const char* path, sb_report* out) {
  if (!path || !out) return null_argument("argument");
  return guarded([&] { *out = to_c(saddle::report_from_json(saddle::read_text_file(path))); });
}

void sb_validate_options_default(sb_validate_options* options) {
  if (!options) return;
  const saddle::oracle::ValidationOptions d;
  options->seed = d.seed;
  options->random_postures = d.random_postures;
  options->oracle_points = d.oracle_points;
}

sb_status sb_validate(const sb_validate_options* options, const sb_posture* extra,
                      size_t extra_count, int* passed, char** json_out) {
  if (!passed || !json_out || (!extra && extra_count > 0)) return null_argument("argument");
  *json_out = nullptr;
  return guarded([&] {
    saddle::oracle::ValidationOptions opts;
    if (options) {
      opts.seed = options->seed;
      opts.random_postures = options->random_postures;
      opts.oracle_points = options->oracle_points;
    }
    for (size_t i = 0; i < extra_count; ++i) {
      // Unchecked copy: degenerate postures must reach the validator so it can
      // report them.
      saddle::PostureSpec spec;
      spec.name = std::string(extra[i].name, strnlen(extra[i].name, sizeof(extra[i].name)));
      spec.left = {from_c(extra[i].left.ecop), saddle::wrap_two_pi(extra[i].left.theta_f),
                   extra[i].left.length, extra[i].left.width, saddle::Side::kLeft};
      spec.right = {from_c(extra[i].right.ecop), saddle::wrap_two_pi(extra[i].right.theta_f),
                    extra[i].right.length, extra[i].right.width, saddle::Side::kRight};
      opts.extra_postures.push_back(std::move(spec));
    }
    const saddle::oracle::ValidationResult result = saddle::oracle::run_validation(opts);
    *passed = result.passed ? 1 : 0;
    *json_out = duplicate(result.json);
  });
}

sb_status sb_format_number(double value, char* buffer, size_t capacity) {
  if (!buffer || capacity == 0) return null_argument("buffer");
  return guarded([&] {
    const std::string s = saddle::format_number(value);
    if (s.size() + 1 > capacity) {
      throw saddle::Error(saddle::ErrorCode::kInvalidArgument, "buffer too small");
    }
    std::memcpy(buffer, s.c_str(), s.size() + 1);
  });
}

sb_status sb_write_text_file(const char* path, const char* text) {
  if (!path || !text) return null_argument("argument");
  return guarded([&] { saddle::write_text_file(path, text); });
}

}  // extern "C"
