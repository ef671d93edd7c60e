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

// Trial ingestion (wide marker CSV), the six-posture catalog, and polygon and
// report export.
//
// Trial CSV: header `time,LASI_x,LASI_y,LASI_z,RASI_x,...,RMT5_z` with the ten
// markers in MarkerLabel order; one row per frame; meters and seconds; a blank
// cell marks that marker absent for the frame.
#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "saddlebos/geometry.hpp"
#include "saddlebos/markers.hpp"
#include "saddlebos/metrics.hpp"

namespace saddle {

std::vector<MarkerFrame> parse_trial_csv(const std::filesystem::path& path);
std::vector<MarkerFrame> parse_trial_csv(std::istream& in);

std::string trial_csv_header();
/// Writes frames in the format parse_trial_csv() reads, 12 significant digits.
void write_trial_csv(std::ostream& out, std::span<const MarkerFrame> frames);

struct PostureSpec {
  std::string name;
  FootPose left;
  FootPose right;
};

/// Feet of equal size placed with the right eCoP at (0, -d/2) and the left at
/// (0, d/2), so that the task frame coincides with the Saddle frame.
PostureSpec make_posture(std::string name, double d, double theta_lf, double theta_rf,
                         double foot_length, double foot_width);

/// Six reference stances, all with 0.25 m x 0.10 m feet:
///   parallel         D=0.30  theta_LF=90   theta_RF=90
///   narrow-parallel  D=0.20  theta_LF=90   theta_RF=90
///   wide-parallel    D=0.45  theta_LF=90   theta_RF=90
///   orthogonal-right D=0.30  theta_LF=90   theta_RF=0
///   orthogonal-left  D=0.30  theta_LF=180  theta_RF=90
///   inline           D=0.30  theta_LF=180  theta_RF=0
/// (degrees). The last three turn one or both feet onto the eCoP line.
std::vector<PostureSpec> posture_catalog();

enum class PolygonFormat { kCsv, kJson };

/// Locale-independent shortest form with at most `digits` significant digits.
std::string format_number(double value, int digits = 12);

std::string polygon_to_string(const Polygon2& polygon, PolygonFormat format);
Polygon2 polygon_from_string(std::string_view text, PolygonFormat format);
void export_polygon(const Polygon2& polygon, const std::filesystem::path& path,
                    PolygonFormat format);
Polygon2 import_polygon(const std::filesystem::path& path, PolygonFormat format);

/// Fixed key order: poi, poi360, n_samples, n_outer, covariance_ellipse.
/// Percentages are rounded to 4 decimals, ellipse values to 12 significant digits.
std::string report_to_json(const MetricsReport& report);
MetricsReport report_from_json(std::string_view text);
void export_report(const MetricsReport& report, const std::filesystem::path& path);

/// Writes text verbatim; IoError when the file cannot be opened or written.
void write_text_file(const std::filesystem::path& path, std::string_view text);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace saddle
