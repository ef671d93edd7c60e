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

// saddle-bos: command-line front end over the saddlebos C API.
//
//   saddle-bos bos       BoS polygon and Saddle frame for one stance
//   saddle-bos analyze   PoI / PoI360 / covariance ellipse for a marker trial
//   saddle-bos sweep     polygons (and metrics) for the six-posture catalog
//   saddle-bos validate  reference-oracle checks, JSON findings on stdout
//
// Exit codes: 0 success, 1 validation failure, 2 input or geometry error,
// 3 data-quality failure. Angles on the command line are degrees.

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "saddlebos/saddlebos.h"

namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitInput = 2;
constexpr int kExitDataQuality = 3;

constexpr double kDegToRad = std::numbers::pi / 180.0;

// Failure carrying the exit code and the message for stderr.
struct CommandError {
  int exit_code;
  std::string message;
};

void check(sb_status status) {
  if (status == SB_OK) return;
  const int code = status == SB_ERR_DATA_QUALITY ? kExitDataQuality : kExitInput;
  throw CommandError{code, sb_last_error_message()};
}

[[noreturn]] void input_error(const std::string& message) {
  throw CommandError{kExitInput, message};
}

struct BoundaryDeleter {
  void operator()(sb_boundary* b) const { sb_boundary_destroy(b); }
};
struct PolygonDeleter {
  void operator()(sb_polygon* p) const { sb_polygon_destroy(p); }
};
struct TrialDeleter {
  void operator()(sb_trial* t) const { sb_trial_destroy(t); }
};
struct AnalysisDeleter {
  void operator()(sb_analysis* a) const { sb_analysis_destroy(a); }
};
struct StringDeleter {
  void operator()(char* s) const { sb_string_free(s); }
};
using Boundary = std::unique_ptr<sb_boundary, BoundaryDeleter>;
using Polygon = std::unique_ptr<sb_polygon, PolygonDeleter>;
using Trial = std::unique_ptr<sb_trial, TrialDeleter>;
using Analysis = std::unique_ptr<sb_analysis, AnalysisDeleter>;
using CString = std::unique_ptr<char, StringDeleter>;

// Rounds to the 12 significant digits used by every file the tool writes.
double r12(double value) {
  char buf[64];
  check(sb_format_number(value, buf, sizeof(buf)));
  double out = 0;
  std::from_chars(buf, buf + std::char_traits<char>::length(buf), out);
  return out;
}

ordered_json frame_json(const sb_frame& f) {
  ordered_json j;
  j["origin"] = {r12(f.origin.x), r12(f.origin.y)};
  j["theta"] = r12(f.theta);
  j["d"] = r12(f.d);
  return j;
}

ordered_json params_json(const sb_bos_params& p) {
  ordered_json j;
  j["d_Ly"] = r12(p.d_Ly);
  j["d_Ry"] = r12(p.d_Ry);
  j["d_ly"] = r12(p.d_ly);
  j["d_ry"] = r12(p.d_ry);
  j["d_Lx"] = r12(p.d_Lx);
  j["d_Rx"] = r12(p.d_Rx);
  j["m_Bk"] = r12(p.m_Bk);
  j["m_Fw"] = r12(p.m_Fw);
  return j;
}

ordered_json foot_json(const sb_foot_pose& f) {
  ordered_json j;
  j["ecop"] = {r12(f.ecop.x), r12(f.ecop.y)};
  j["theta_f_deg"] = r12(f.theta_f / kDegToRad);
  j["length"] = r12(f.length);
  j["width"] = r12(f.width);
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) input_error("IoError: cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  check(sb_write_text_file(path.c_str(), text.c_str()));
}

sb_format format_for(const std::string& path, const std::string& requested) {
  if (requested == "json") return SB_FORMAT_JSON;
  if (requested == "csv") return SB_FORMAT_CSV;
  return fs::path(path).extension() == ".json" ? SB_FORMAT_JSON : SB_FORMAT_CSV;
}

// Settings shared by several subcommands. Defaults come from the library,
// then SADDLE_BOS_CONFIG, then flags.
struct RunConfig {
  sb_analysis_options analysis{};
  std::string mode = "continuous";
  std::size_t samples = 360;
  std::string up_axis = "z";
  std::string bin_center = "origin";

  RunConfig() { sb_analysis_options_default(&analysis); }
};

void load_config_env(RunConfig& config) {
  const char* path = std::getenv("SADDLE_BOS_CONFIG");
  if (!path || !*path) return;
  ordered_json j;
  try {
    j = ordered_json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    input_error(std::string("BadRow: SADDLE_BOS_CONFIG: ") + e.what());
  }
  try {
    if (j.contains("ecop_fraction")) config.analysis.ecop_fraction = j["ecop_fraction"].get<double>();
    if (j.contains("mode")) config.mode = j["mode"].get<std::string>();
    if (j.contains("samples")) config.samples = j["samples"].get<std::size_t>();
    if (j.contains("bins")) config.analysis.n_bins = j["bins"].get<std::size_t>();
    if (j.contains("k_sigma")) config.analysis.k_sigma = j["k_sigma"].get<double>();
    if (j.contains("up_axis")) config.up_axis = j["up_axis"].get<std::string>();
    if (j.contains("tol")) config.analysis.tol = j["tol"].get<double>();
    if (j.contains("bin_center")) config.bin_center = j["bin_center"].get<std::string>();
    if (j.contains("d_from_mt_mid")) config.analysis.d_from_mt_mid = j["d_from_mt_mid"].get<bool>() ? 1 : 0;
    if (j.contains("refit_feet_every")) {
      config.analysis.refit_feet_every = j["refit_feet_every"].get<std::size_t>();
    }
  } catch (const nlohmann::json::exception& e) {
    input_error(std::string("InvalidArgument: SADDLE_BOS_CONFIG: ") + e.what());
  }
}

void finalize_config(RunConfig& config) {
  if (config.up_axis == "x") config.analysis.up_axis = SB_UP_X;
  else if (config.up_axis == "y") config.analysis.up_axis = SB_UP_Y;
  else if (config.up_axis == "z") config.analysis.up_axis = SB_UP_Z;
  else input_error("InvalidArgument: up axis must be x, y or z");

  if (config.bin_center == "origin") config.analysis.bin_center = SB_BIN_SADDLE_ORIGIN;
  else if (config.bin_center == "mean") config.analysis.bin_center = SB_BIN_TRAJECTORY_MEAN;
  else input_error("InvalidArgument: bin center must be origin or mean");

  if (config.mode != "continuous" && config.mode != "strict") {
    input_error("InvalidArgument: mode must be continuous or strict");
  }
}

sb_boundary_mode boundary_mode(const RunConfig& config) {
  return config.mode == "strict" ? SB_MODE_STRICT : SB_MODE_CONTINUOUS;
}

void add_analysis_flags(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("--ecop-fraction", config.analysis.ecop_fraction,
                  "eCoP position along heel -> metatarsal midpoint, in (0, 1)");
  cmd->add_option("--bins", config.analysis.n_bins, "Angular bins for the PoI360 outer border");
  cmd->add_option("--k-sigma", config.analysis.k_sigma, "Covariance ellipse scale in standard deviations");
  cmd->add_option("--up-axis", config.up_axis, "Vertical capture axis: x, y or z");
  cmd->add_option("--tol", config.analysis.tol, "Boundary classification tolerance (m)");
  cmd->add_option("--bin-center", config.bin_center, "Outer-border bin center: origin or mean");
  cmd->add_flag("--d-from-mt-mid", config.analysis.d_from_mt_mid,
                "Take D between metatarsal midpoints instead of eCoPs");
  cmd->add_option("--refit-feet-every", config.analysis.refit_feet_every,
                  "Re-derive the feet every N complete frames (0: first frame only)");
}

// Posture JSON: either {"d", "theta_lf", "theta_rf", "foot_length",
// "foot_width"} (degrees, canonical placement) or {"left": {...}, "right":
// {...}} with per-foot "ecop" [x, y], "theta_f" (degrees), "length", "width".
sb_posture parse_posture(const std::string& path, bool validate) {
  sb_posture out{};
  try {
    const auto j = ordered_json::parse(read_file(path));
    const std::string name = j.value("name", fs::path(path).stem().string());
    if (j.contains("left") || j.contains("right")) {
      const auto foot = [](const ordered_json& f) {
        sb_foot_pose p{};
        p.ecop = {f.at("ecop").at(0).get<double>(), f.at("ecop").at(1).get<double>()};
        p.theta_f = f.at("theta_f").get<double>() * kDegToRad;
        p.length = f.at("length").get<double>();
        p.width = f.at("width").get<double>();
        return p;
      };
      std::snprintf(out.name, sizeof(out.name), "%s", name.c_str());
      out.left = foot(j.at("left"));
      out.right = foot(j.at("right"));
      if (validate) {
        sb_frame frame{};
        sb_bos_params params{};
        check(sb_frame_from_ecops(out.right.ecop, out.left.ecop, &frame));
        check(sb_derive_bos_params(&frame, &out.left, &out.right, &params));
      }
      return out;
    }
    const double d = j.at("d").get<double>();
    const double lf = j.at("theta_lf").get<double>() * kDegToRad;
    const double rf = j.at("theta_rf").get<double>() * kDegToRad;
    const double length = j.at("foot_length").get<double>();
    const double width = j.at("foot_width").get<double>();
    if (validate) {
      check(sb_posture_make(name.c_str(), d, lf, rf, length, width, &out));
    } else {
      std::snprintf(out.name, sizeof(out.name), "%s", name.c_str());
      out.left = {{0.0, d / 2}, lf, length, width};
      out.right = {{0.0, -d / 2}, rf, length, width};
    }
  } catch (const nlohmann::json::exception& e) {
    input_error("BadRow: posture file " + path + ": " + e.what());
  }
  return out;
}

// ---------------------------------------------------------------------------

struct BosArgs {
  std::optional<double> d, theta_lf, theta_rf, foot_length, foot_width;
  std::string posture_file;
  std::string out;
  std::string format = "auto";
  std::string frame_out;
};

int run_bos(const BosArgs& args, const RunConfig& config) {
  sb_posture posture{};
  if (!args.posture_file.empty()) {
    posture = parse_posture(args.posture_file, true);
  } else {
    const std::pair<const char*, const std::optional<double>*> required[] = {
        {"--d", &args.d},
        {"--theta-lf", &args.theta_lf},
        {"--theta-rf", &args.theta_rf},
        {"--foot-length", &args.foot_length},
        {"--foot-width", &args.foot_width},
    };
    for (const auto& [flag, value] : required) {
      if (!value->has_value()) {
        throw CommandError{kExitInput, std::string("missing ") + flag + " (or give --posture-file)"};
      }
    }
    check(sb_posture_make("command-line", *args.d, *args.theta_lf * kDegToRad,
                          *args.theta_rf * kDegToRad, *args.foot_length, *args.foot_width,
                          &posture));
  }

  sb_boundary* raw = nullptr;
  check(sb_boundary_create(&posture.left, &posture.right, boundary_mode(config), &raw));
  const Boundary boundary(raw);
  sb_polygon* raw_polygon = nullptr;
  check(sb_boundary_sample(boundary.get(), config.samples, 1, &raw_polygon));
  const Polygon polygon(raw_polygon);
  check(sb_polygon_export(polygon.get(), args.out.c_str(), format_for(args.out, args.format)));

  sb_frame frame{};
  sb_bos_params params{};
  check(sb_boundary_frame(boundary.get(), &frame));
  check(sb_boundary_params(boundary.get(), &params));
  ordered_json j;
  j["posture"] = posture.name;
  j["mode"] = config.mode;
  j["samples"] = config.samples;
  j["frame"] = frame_json(frame);
  j["params"] = params_json(params);
  j["left"] = foot_json(posture.left);
  j["right"] = foot_json(posture.right);
  const std::string text = j.dump(2) + "\n";
  if (!args.frame_out.empty()) write_file(args.frame_out, text);
  std::cout << text;
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct AnalyzeArgs {
  std::string markers;
  std::string feet = "from-markers";
  std::string posture_file;
  bool anchor = false;
  std::string out;
  std::string polygon_out;
  std::string saddle_out;
};

Trial load_trial(const std::string& path) {
  sb_trial* raw = nullptr;
  check(sb_trial_load_csv(path.c_str(), &raw));
  return Trial(raw);
}

Analysis analyze(const sb_trial* trial, const RunConfig& config, const sb_posture* posture,
                 bool anchor) {
  sb_analysis* raw = nullptr;
  check(sb_analyze(trial, &config.analysis, posture, anchor ? 1 : 0, &raw));
  return Analysis(raw);
}

std::string report_text(const sb_analysis* analysis) {
  sb_report report{};
  check(sb_analysis_report(analysis, &report));
  char* raw = nullptr;
  check(sb_report_to_json(&report, &raw));
  const CString json(raw);
  return json.get();
}

void export_analysis_polygon(const sb_analysis* analysis, const RunConfig& config,
                             const std::string& path, sb_format format) {
  sb_frame frame{};
  sb_bos_params params{};
  check(sb_analysis_frame(analysis, &frame, &params));
  sb_boundary* raw = nullptr;
  check(sb_boundary_from_params(&params, &frame, SB_MODE_CONTINUOUS, &raw));
  const Boundary boundary(raw);
  sb_polygon* raw_polygon = nullptr;
  check(sb_boundary_sample(boundary.get(), config.samples, 1, &raw_polygon));
  const Polygon polygon(raw_polygon);
  check(sb_polygon_export(polygon.get(), path.c_str(), format));
}

int run_analyze(const AnalyzeArgs& args, const RunConfig& config) {
  std::optional<sb_posture> posture;
  if (!args.posture_file.empty()) {
    posture = parse_posture(args.posture_file, true);
  } else if (args.feet != "from-markers") {
    input_error("InvalidArgument: --feet must be from-markers (or give --posture-file)");
  }
  const Trial trial = load_trial(args.markers);
  const Analysis analysis = analyze(trial.get(), config, posture ? &*posture : nullptr, args.anchor);

  const std::string text = report_text(analysis.get());
  if (args.out.empty()) {
    std::cout << text;
  } else {
    write_file(args.out, text);
  }
  if (!args.polygon_out.empty()) {
    export_analysis_polygon(analysis.get(), config, args.polygon_out, format_for(args.polygon_out, "auto"));
  }
  if (!args.saddle_out.empty()) {
    check(sb_analysis_export_saddle_samples(analysis.get(), args.saddle_out.c_str()));
  }
  const std::size_t dropped = sb_analysis_incomplete_count(analysis.get());
  if (dropped > 0) {
    std::cerr << "note: dropped " << dropped << " incomplete frame(s)\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct SweepArgs {
  std::string out;
  std::string markers;
  std::string format = "csv";
};

std::string file_stem(std::size_t index, const char* name) {
  std::ostringstream os;
  os << (index + 1 < 10 ? "0" : "") << index + 1 << '_' << name;
  return os.str();
}

int run_sweep(const SweepArgs& args, const RunConfig& config) {
  std::error_code ec;
  fs::create_directories(args.out, ec);
  if (ec) input_error("IoError: cannot create " + args.out + ": " + ec.message());

  Trial trial;
  if (!args.markers.empty()) trial = load_trial(args.markers);

  const sb_format format = format_for("", args.format);
  const std::string extension = format == SB_FORMAT_JSON ? ".json" : ".csv";
  ordered_json summary;
  summary["samples"] = config.samples;
  summary["postures"] = ordered_json::array();
  const std::size_t count = sb_catalog_size();
  for (std::size_t i = 0; i < count; ++i) {
    sb_posture posture{};
    check(sb_catalog_posture(i, &posture));
    sb_boundary* raw = nullptr;
    check(sb_boundary_create(&posture.left, &posture.right, SB_MODE_CONTINUOUS, &raw));
    const Boundary boundary(raw);
    sb_polygon* raw_polygon = nullptr;
    check(sb_boundary_sample(boundary.get(), config.samples, 1, &raw_polygon));
    const Polygon polygon(raw_polygon);

    const std::string stem = file_stem(i, posture.name);
    const std::string polygon_file = stem + extension;
    check(sb_polygon_export(polygon.get(), (fs::path(args.out) / polygon_file).string().c_str(), format));

    sb_frame frame{};
    sb_bos_params params{};
    check(sb_boundary_frame(boundary.get(), &frame));
    check(sb_boundary_params(boundary.get(), &params));
    ordered_json entry;
    entry["name"] = posture.name;
    entry["left"] = foot_json(posture.left);
    entry["right"] = foot_json(posture.right);
    entry["frame"] = frame_json(frame);
    entry["params"] = params_json(params);
    entry["polygon"] = polygon_file;
    if (trial) {
      const Analysis analysis = analyze(trial.get(), config, &posture, true);
      const std::string report_file = stem + ".metrics.json";
      write_file((fs::path(args.out) / report_file).string(), report_text(analysis.get()));
      entry["report"] = report_file;
    }
    summary["postures"].push_back(entry);
  }
  write_file((fs::path(args.out) / "summary.json").string(), summary.dump(2) + "\n");
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct ValidateArgs {
  std::uint64_t seed = 42;
  std::size_t random_postures = 20;
  std::size_t oracle_points = 20000;
  std::vector<std::string> posture_files;
};

int run_validate(const ValidateArgs& args) {
  sb_validate_options options{};
  sb_validate_options_default(&options);
  options.seed = args.seed;
  options.random_postures = args.random_postures;
  options.oracle_points = args.oracle_points;

  std::vector<sb_posture> extra;
  for (const std::string& path : args.posture_files) extra.push_back(parse_posture(path, false));

  int passed = 0;
  char* raw = nullptr;
  check(sb_validate(&options, extra.data(), extra.size(), &passed, &raw));
  const CString json(raw);
  std::cout << json.get();
  return passed ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Saddle-space Base of Support toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", sb_version());

  RunConfig config;
  try {
    load_config_env(config);
  } catch (const CommandError& e) {
    std::cerr << e.message << '\n';
    return e.exit_code;
  }

  BosArgs bos;
  auto* bos_cmd = app.add_subcommand("bos", "Write the task-space BoS polygon for one stance");
  bos_cmd->add_option("--d", bos.d, "eCoP separation D (m)");
  bos_cmd->add_option("--theta-lf", bos.theta_lf, "Left foot angle to the eCoP line (degrees)");
  bos_cmd->add_option("--theta-rf", bos.theta_rf, "Right foot angle to the eCoP line (degrees)");
  bos_cmd->add_option("--foot-length", bos.foot_length, "Foot length D_F (m)");
  bos_cmd->add_option("--foot-width", bos.foot_width, "Foot width D_L (m)");
  bos_cmd->add_option("--posture-file", bos.posture_file, "Posture JSON instead of inline flags")
      ->check(CLI::ExistingFile);
  bos_cmd->add_option("--out", bos.out, "Polygon output path (.csv or .json)")->required();
  bos_cmd->add_option("--format", bos.format, "csv, json or auto (from extension)");
  bos_cmd->add_option("--frame-out", bos.frame_out, "Also write frame parameters JSON here");
  bos_cmd->add_option("--samples", config.samples, "Number of polygon vertices");
  bos_cmd->add_option("--mode", config.mode, "Boundary mode: continuous or strict");

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "Inclusion metrics for a marker trial");
  analyze_cmd->add_option("--markers", analyze_args.markers, "Trial CSV")->required();
  analyze_cmd->add_option("--feet", analyze_args.feet, "from-markers (first complete frame)");
  analyze_cmd->add_option("--posture-file", analyze_args.posture_file, "Fixed posture JSON")
      ->check(CLI::ExistingFile);
  analyze_cmd->add_flag("--anchor", analyze_args.anchor,
                        "Place the fixed posture on the trial's own Saddle frame");
  analyze_cmd->add_option("--out", analyze_args.out, "Report JSON path (stdout if omitted)");
  analyze_cmd->add_option("--polygon-out", analyze_args.polygon_out, "Also write the BoS polygon");
  analyze_cmd->add_option("--saddle-samples-out", analyze_args.saddle_out,
                          "Also write CoM samples in Saddle coordinates (CSV)");
  analyze_cmd->add_option("--samples", config.samples, "Polygon vertices for --polygon-out");
  add_analysis_flags(analyze_cmd, config);

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Polygons and metrics over the posture catalog");
  sweep_cmd->add_option("--out", sweep.out, "Output directory")->required();
  sweep_cmd->add_option("--markers", sweep.markers, "Optional trial CSV for per-posture metrics");
  sweep_cmd->add_option("--format", sweep.format, "Polygon format: csv or json");
  sweep_cmd->add_option("--samples", config.samples, "Number of polygon vertices");
  add_analysis_flags(sweep_cmd, config);

  ValidateArgs validate;
  auto* validate_cmd = app.add_subcommand("validate", "Run the reference-oracle checks");
  validate_cmd->add_option("--seed", validate.seed, "Seed for random postures and points");
  validate_cmd->add_option("--random-postures", validate.random_postures,
                           "Random postures in addition to the catalog");
  validate_cmd->add_option("--oracle-points", validate.oracle_points,
                           "Random points per posture for the containment cross-check");
  validate_cmd->add_option("--posture-file", validate.posture_files, "Extra posture JSON (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    std::cout << sb_version() << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitInput;
  }

  try {
    finalize_config(config);
    if (*bos_cmd) return run_bos(bos, config);
    if (*analyze_cmd) return run_analyze(analyze_args, config);
    if (*sweep_cmd) return run_sweep(sweep, config);
    if (*validate_cmd) return run_validate(validate);
  } catch (const CommandError& e) {
    std::cerr << "error: " << e.message << '\n';
    if (e.exit_code == kExitInput && *bos_cmd && e.message.rfind("missing", 0) == 0) {
      std::cerr << '\n' << bos_cmd->help();
    }
    return e.exit_code;
  }
  return kExitInput;
}
