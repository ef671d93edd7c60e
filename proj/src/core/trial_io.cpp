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

#include "saddlebos/trial_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "saddlebos/error.hpp"

namespace saddle {

namespace {

constexpr std::size_t kColumnsPerMarker = 3;
constexpr std::size_t kTrialColumns = 1 + kColumnsPerMarker * kMarkerCount;
constexpr std::string_view kAxisSuffix[kColumnsPerMarker] = {"_x", "_y", "_z"};

std::vector<std::string> expected_trial_columns() {
  std::vector<std::string> cols{"time"};
  for (MarkerLabel label : all_markers()) {
    for (std::string_view suffix : kAxisSuffix) {
      cols.push_back(std::string(marker_name(label)) + std::string(suffix));
    }
  }
  return cols;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

// Strict decimal parse: the whole field must be a finite number.
std::optional<double> parse_double(std::string_view s) {
  double value = 0;
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value, std::chars_format::general);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) return std::nullopt;
  return value;
}

[[noreturn]] void bad_row(std::size_t row, std::size_t line, std::string_view field,
                          std::string_view detail) {
  std::ostringstream os;
  os << "row " << row << " (line " << line << "), field " << field << ": " << detail;
  throw Error(ErrorCode::kBadRow, os.str());
}

void check_header(std::string_view header_line) {
  const std::vector<std::string> expected = expected_trial_columns();
  std::vector<std::string> got;
  for (std::string_view f : split(trim(header_line), ',')) got.emplace_back(trim(f));

  std::vector<std::string> missing;
  for (const std::string& col : expected) {
    if (std::find(got.begin(), got.end(), col) == got.end()) missing.push_back(col);
  }
  std::ostringstream os;
  if (!missing.empty()) {
    os << "missing columns:";
    for (const std::string& m : missing) os << ' ' << m;
    throw Error(ErrorCode::kBadHeader, os.str());
  }
  if (got.size() != expected.size()) {
    os << "expected " << expected.size() << " columns, found " << got.size();
    throw Error(ErrorCode::kBadHeader, os.str());
  }
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (got[i] != expected[i]) {
      os << "column " << i + 1 << " is " << got[i] << ", expected " << expected[i];
      throw Error(ErrorCode::kBadHeader, os.str());
    }
  }
}

double round_to(double value, double scale) { return std::round(value * scale) / scale; }

double round_sig(double value) {
  const std::string s = format_number(value, 12);
  return *parse_double(s);
}

}  // namespace

std::string trial_csv_header() {
  std::string out;
  for (const std::string& col : expected_trial_columns()) {
    if (!out.empty()) out += ',';
    out += col;
  }
  return out;
}

std::vector<MarkerFrame> parse_trial_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::kBadHeader, "file is empty");
  check_header(line);

  const std::vector<std::string> columns = expected_trial_columns();
  std::vector<MarkerFrame> frames;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const std::size_t row = frames.size() + 1;
    const std::vector<std::string_view> fields = split(trim(line), ',');
    if (fields.size() != kTrialColumns) {
      std::ostringstream os;
      os << "expected " << kTrialColumns << " fields, found " << fields.size();
      bad_row(row, line_no, "(row)", os.str());
    }

    MarkerFrame frame;
    const auto time = parse_double(trim(fields[0]));
    if (!time) bad_row(row, line_no, columns[0], "'" + std::string(fields[0]) + "' is not a number");
    frame.time = *time;

    for (std::size_t m = 0; m < kMarkerCount; ++m) {
      double xyz[kColumnsPerMarker] = {};
      bool blank = false;
      for (std::size_t a = 0; a < kColumnsPerMarker; ++a) {
        const std::size_t col = 1 + m * kColumnsPerMarker + a;
        const std::string_view cell = trim(fields[col]);
        if (cell.empty()) {
          blank = true;
          continue;
        }
        const auto value = parse_double(cell);
        if (!value) bad_row(row, line_no, columns[col], "'" + std::string(cell) + "' is not a number");
        xyz[a] = *value;
      }
      if (!blank) frame.positions[m] = Point3{xyz[0], xyz[1], xyz[2]};
    }

    if (!frames.empty() && !(frame.time > frames.back().time)) {
      std::ostringstream os;
      os << "row " << row << " (line " << line_no << ") has t=" << frame.time
         << " s after t=" << frames.back().time << " s";
      throw Error(ErrorCode::kNonMonotonicTime, os.str());
    }
    frames.push_back(frame);
  }
  return frames;
}

std::vector<MarkerFrame> parse_trial_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  return parse_trial_csv(in);
}

void write_trial_csv(std::ostream& out, std::span<const MarkerFrame> frames) {
  out << trial_csv_header() << '\n';
  for (const MarkerFrame& f : frames) {
    out << format_number(f.time);
    for (const auto& p : f.positions) {
      if (p) {
        out << ',' << format_number(p->x) << ',' << format_number(p->y) << ','
            << format_number(p->z);
      } else {
        out << ",,,";
      }
    }
    out << '\n';
  }
}

PostureSpec make_posture(std::string name, double d, double theta_lf, double theta_rf,
                         double foot_length, double foot_width) {
  if (!(d > kMinFootSeparation) || !std::isfinite(d)) {
    throw Error(ErrorCode::kCoincidentFeet, "posture separation must be positive");
  }
  PostureSpec p;
  p.name = std::move(name);
  p.left = make_foot_pose(Side::kLeft, {0.0, d / 2}, theta_lf, foot_length, foot_width);
  p.right = make_foot_pose(Side::kRight, {0.0, -d / 2}, theta_rf, foot_length, foot_width);
  return p;
}

std::vector<PostureSpec> posture_catalog() {
  constexpr double kFootLength = 0.25;
  constexpr double kFootWidth = 0.10;
  constexpr double kQuarter = kPi / 2;
  return {
      make_posture("parallel", 0.30, kQuarter, kQuarter, kFootLength, kFootWidth),
      make_posture("narrow-parallel", 0.20, kQuarter, kQuarter, kFootLength, kFootWidth),
      make_posture("wide-parallel", 0.45, kQuarter, kQuarter, kFootLength, kFootWidth),
      make_posture("orthogonal-right", 0.30, kQuarter, 0.0, kFootLength, kFootWidth),
      make_posture("orthogonal-left", 0.30, kPi, kQuarter, kFootLength, kFootWidth),
      make_posture("inline", 0.30, kPi, 0.0, kFootLength, kFootWidth),
  };
}

std::string format_number(double value, int digits) {
  if (value == 0.0) return "0";
  char buf[64];
  const auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, digits);
  if (ec != std::errc()) throw Error(ErrorCode::kInvalidArgument, "cannot format number");
  return std::string(buf, ptr);
}

std::string polygon_to_string(const Polygon2& polygon, PolygonFormat format) {
  std::string out;
  if (format == PolygonFormat::kCsv) {
    out = "x,y\n";
    for (const Point2& v : polygon.vertices()) {
      out += format_number(v.x) + ',' + format_number(v.y) + '\n';
    }
    return out;
  }
  out = "{\n  \"vertices\": [\n";
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    out += "    [" + format_number(polygon[i].x) + ", " + format_number(polygon[i].y) + ']';
    out += i + 1 < polygon.size() ? ",\n" : "\n";
  }
  out += "  ],\n  \"closed\": true\n}\n";
  return out;
}

Polygon2 polygon_from_string(std::string_view text, PolygonFormat format) {
  std::vector<Point2> vertices;
  if (format == PolygonFormat::kCsv) {
    const std::vector<std::string_view> lines = split(text, '\n');
    if (lines.empty() || trim(lines[0]) != "x,y") {
      throw Error(ErrorCode::kBadHeader, "polygon CSV must start with 'x,y'");
    }
    for (std::size_t i = 1; i < lines.size(); ++i) {
      if (trim(lines[i]).empty()) continue;
      const std::vector<std::string_view> f = split(trim(lines[i]), ',');
      const auto x = f.size() == 2 ? parse_double(trim(f[0])) : std::nullopt;
      const auto y = f.size() == 2 ? parse_double(trim(f[1])) : std::nullopt;
      if (!x || !y) bad_row(i, i + 1, "x,y", "expected two numbers");
      vertices.push_back({*x, *y});
    }
    return Polygon2(std::move(vertices));
  }
  try {
    const auto doc = nlohmann::json::parse(text);
    for (const auto& v : doc.at("vertices")) {
      vertices.push_back({v.at(0).get<double>(), v.at(1).get<double>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kBadRow, std::string("polygon JSON: ") + e.what());
  }
  return Polygon2(std::move(vertices));
}

void export_polygon(const Polygon2& polygon, const std::filesystem::path& path,
                    PolygonFormat format) {
  write_text_file(path, polygon_to_string(polygon, format));
}

Polygon2 import_polygon(const std::filesystem::path& path, PolygonFormat format) {
  return polygon_from_string(read_text_file(path), format);
}

std::string report_to_json(const MetricsReport& report) {
  nlohmann::ordered_json j;
  j["poi"] = round_to(report.poi, 1e4);
  j["poi360"] = round_to(report.poi360, 1e4);
  j["n_samples"] = report.n_samples;
  j["n_outer"] = report.n_outer;
  if (report.covariance_ellipse) {
    const CovarianceEllipse& e = *report.covariance_ellipse;
    nlohmann::ordered_json ej;
    ej["center"] = {round_sig(e.center.x), round_sig(e.center.y)};
    ej["semi_axes"] = {round_sig(e.semi_axes[0]), round_sig(e.semi_axes[1])};
    ej["orientation"] = round_sig(e.orientation);
    j["covariance_ellipse"] = ej;
  } else {
    j["covariance_ellipse"] = nullptr;
  }
  return j.dump(2) + "\n";
}

MetricsReport report_from_json(std::string_view text) {
  MetricsReport r;
  try {
    const auto j = nlohmann::json::parse(text);
    r.poi = j.at("poi").get<double>();
    r.poi360 = j.at("poi360").get<double>();
    r.n_samples = j.at("n_samples").get<std::size_t>();
    r.n_outer = j.at("n_outer").get<std::size_t>();
    const auto& ej = j.at("covariance_ellipse");
    if (!ej.is_null()) {
      CovarianceEllipse e;
      e.center = {ej.at("center").at(0).get<double>(), ej.at("center").at(1).get<double>()};
      e.semi_axes = {ej.at("semi_axes").at(0).get<double>(),
                     ej.at("semi_axes").at(1).get<double>()};
      e.orientation = ej.at("orientation").get<double>();
      r.covariance_ellipse = e;
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kBadRow, std::string("metrics report JSON: ") + e.what());
  }
  return r;
}

void export_report(const MetricsReport& report, const std::filesystem::path& path) {
  write_text_file(path, report_to_json(report));
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot open " + path.string() + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.close();
  if (!out) throw Error(ErrorCode::kIoError, "failed writing " + path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace saddle
