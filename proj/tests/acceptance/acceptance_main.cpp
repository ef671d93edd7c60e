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

// Acceptance suite. One PASS/FAIL line per criterion, details indented
// below it. Exit status is non-zero when any criterion fails.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "saddlebos/analysis.hpp"
#include "saddlebos/error.hpp"
#include "saddlebos/geometry.hpp"
#include "saddlebos/markers.hpp"
#include "saddlebos/metrics.hpp"
#include "saddlebos/oracle.hpp"
#include "saddlebos/trial_io.hpp"

namespace {

using namespace saddle;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

const fs::path kData = SADDLEBOS_TEST_DATA_DIR;
const std::string kCli = SADDLE_BOS_CLI;

// Seed fixed before any run; it is also the `validate` default.
constexpr std::uint64_t kSeed = 42;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

class Criterion {
 public:
  explicit Criterion(std::string title) : title_(std::move(title)) {}

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass_ = false;
      notes_.push_back("failed: " + what);
    }
  }
  void note(const std::string& text) { notes_.push_back(text); }

  bool report() const {
    std::printf("%s  %s\n", pass_ ? "PASS" : "FAIL", title_.c_str());
    for (const std::string& n : notes_) std::printf("      %s\n", n.c_str());
    std::fflush(stdout);
    return pass_;
  }

 private:
  std::string title_;
  bool pass_ = true;
  std::vector<std::string> notes_;
};

std::string fmt(const char* pattern, double v) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

bool guarded(Criterion& c, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    c.check(false, std::string("exception: ") + e.what());
  }
  return c.report();
}

std::vector<PostureSpec> random_postures(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<PostureSpec> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(oracle::random_posture(rng));
  return out;
}

// 1. Parallel posture worked example.
bool worked_example() {
  Criterion c("1 worked example: parallel posture parameters and extremes");
  return guarded(c, [&] {
    const auto t0 = Clock::now();
    const FootPose left = make_foot_pose(Side::kLeft, {0, 0.15}, kPi / 2, 0.25, 0.10);
    const FootPose right = make_foot_pose(Side::kRight, {0, -0.15}, kPi / 2, 0.25, 0.10);
    const SaddleFrame frame = saddle_frame_from_ecops(right.ecop, left.ecop);
    const BosParams p = derive_bos_params(frame, left, right);
    const BosBoundary b(p, frame);
    const std::array<Point2, 4> got{boundary_point(b, kPi / 2), boundary_point(b, 3 * kPi / 2),
                                    boundary_point(b, 0), boundary_point(b, kPi)};
    const double elapsed = seconds_since(t0);

    const auto near = [](double a, double b, double tol) { return std::abs(a - b) <= tol; };
    c.check(near(p.d_Ly, 0.20, 1e-12), "d_Ly = 0.20");
    c.check(near(p.d_Ry, -0.20, 1e-12), "d_Ry = -0.20");
    c.check(near(p.d_Lx, 0.125, 1e-12), "d_Lx = 0.125");
    c.check(near(p.d_Rx, 0.125, 1e-12), "d_Rx = 0.125");
    c.check(near(p.m_Bk, 0.0, 1e-12), "m_Bk = 0");
    c.check(near(p.m_Fw, 0.0, 1e-12), "m_Fw = 0");
    const std::array<Point2, 4> want{{{0, 0.20}, {0, -0.20}, {0.125, 0}, {-0.125, 0}}};
    double worst = 0;
    for (std::size_t i = 0; i < 4; ++i) worst = std::max(worst, distance(got[i], want[i]));
    c.check(worst <= 1e-9, "extremes within 1e-9 m");
    c.check(elapsed < 1e-3, "runtime < 1 ms");
    c.note(fmt("worst extreme error %.3g m", worst) + fmt(", runtime %.3g ms", elapsed * 1e3));
  });
}

// 2. to_saddle(to_task(p)) = p.
bool round_trip() {
  Criterion c("2 transform round trip: 10^4 random frame/point pairs within 1e-12 m");
  return guarded(c, [&] {
    std::mt19937_64 rng(kSeed);
    std::uniform_real_distribution<double> pos(-5, 5);
    std::uniform_real_distribution<double> ang(-kPi, kPi);
    double worst = 0;
    for (int i = 0; i < 10000; ++i) {
      const SaddleFrame f = saddle_frame_from_ecops({pos(rng), pos(rng)}, {pos(rng), pos(rng)});
      const SaddleFrame g{f.origin, ang(rng), f.d};
      const Point2 p{pos(rng), pos(rng)};
      worst = std::max(worst, distance(to_saddle_space(g, to_task_space(g, p)), p));
    }
    c.check(worst <= 1e-12, "round trip within 1e-12 m");
    c.note(fmt("worst round-trip error %.3g m", worst));
  });
}

// 3. bos_polygon_task_space(g.left, g.right) = g.bos_polygon_task_space(left, right).
bool equivariance() {
  Criterion c("3 rigid-motion equivariance: 100 postures x 10 motions, n=360, 1e-9 m, < 5 s");
  return guarded(c, [&] {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(kSeed);
    double worst = 0;
    for (int i = 0; i < 100; ++i) {
      const PostureSpec s = oracle::random_posture(rng);
      for (int j = 0; j < 10; ++j) {
        worst = std::max(worst, oracle::equivariance_error(s.left, s.right,
                                                           oracle::random_motion(rng), 360));
      }
    }
    const double elapsed = seconds_since(t0);
    c.check(worst <= 1e-9, "vertex-wise match within 1e-9 m");
    c.check(elapsed < 5.0, "runtime < 5 s");
    c.note(fmt("worst vertex error %.3g m", worst) + fmt(", runtime %.3g s", elapsed));
  });
}

// 4. Radial contains() vs even-odd on the 3600-gon. The draw is repeated
// for several consecutive seeds: a single lucky draw can miss the corner
// slivers where the 3600-gon cuts the arc/chord junctions.
constexpr std::size_t kAgreementReplicates = 10;

bool oracle_agreement() {
  Criterion c("4 containment oracle: 10^5 points per catalog posture, >= 99.8% agreement, "
              "disagreements within 1e-6 m, < 10 s");
  return guarded(c, [&] {
    const auto catalog = posture_catalog();
    double worst_rate = 1.0;
    double worst_distance = 0.0;
    double first_elapsed = 0.0;
    std::size_t clean_replicates = 0;
    for (std::size_t rep = 0; rep < kAgreementReplicates; ++rep) {
      const auto t0 = Clock::now();
      double rep_distance = 0.0;
      std::size_t disagreements = 0;
      for (std::size_t i = 0; i < catalog.size(); ++i) {
        const PostureSpec& s = catalog[i];
        const oracle::AgreementReport r = oracle::containment_agreement(
            make_boundary(s.left, s.right), 100000, kSeed + rep * catalog.size() + i, 3600);
        worst_rate = std::min(worst_rate, r.agreement());
        rep_distance = std::max(rep_distance, r.max_disagreement_distance);
        disagreements += r.points - r.agreements;
        if (rep == 0) {
          c.note(s.name + fmt(": agreement %.5f%%", 100 * r.agreement()) +
                 fmt(", max disagreement distance %.3g m", r.max_disagreement_distance));
        }
      }
      if (rep == 0) first_elapsed = seconds_since(t0);
      if (rep_distance <= 1e-6) ++clean_replicates;
      worst_distance = std::max(worst_distance, rep_distance);
      c.note(fmt("replicate %.0f", static_cast<double>(rep)) +
             fmt(": disagreements %.0f", static_cast<double>(disagreements)) +
             fmt(", max distance %.3g m", rep_distance));
    }
    c.check(worst_rate >= 0.998, "agreement >= 99.8% for every posture");
    c.check(worst_distance <= 1e-6, "every disagreement within 1e-6 m of the boundary");
    c.check(first_elapsed < 10.0, "runtime < 10 s");
    c.note(fmt("replicates within 1e-6 m: %.0f", static_cast<double>(clean_replicates)) +
           fmt(" of %.0f", static_cast<double>(kAgreementReplicates)) +
           fmt(", worst agreement %.5f%%", 100 * worst_rate) +
           fmt(", runtime %.3g s per replicate", first_elapsed));
  });
}

// 5. Star shape and convexity over catalog + 100 random postures.
bool star_and_convex() {
  Criterion c("5 star-shape and convexity: catalog + 100 seeded random postures, zero violations");
  return guarded(c, [&] {
    std::vector<PostureSpec> all = posture_catalog();
    for (PostureSpec& p : random_postures(100, kSeed)) all.push_back(std::move(p));
    std::size_t star_violations = 0;
    std::size_t non_convex = 0;
    for (const PostureSpec& s : all) {
      const BosBoundary b = make_boundary(s.left, s.right);
      star_violations += oracle::check_star_shape(b, 3600).violations.size();
      if (!oracle::check_convexity(sample_boundary(b, 3600))) ++non_convex;
    }
    c.check(star_violations == 0, "no star-shape violations");
    c.check(non_convex == 0, "every polygon convex");
    c.note(fmt("%.0f postures checked", static_cast<double>(all.size())) +
           fmt(", %.0f star violations", static_cast<double>(star_violations)) +
           fmt(", %.0f non-convex", static_cast<double>(non_convex)));
  });
}

// 6. Trials inside 0.9 x boundary give 100, on a 1.1 x ring give 0.
bool metric_sanity() {
  Criterion c("6 metric sanity: 0.9-scaled trials give 100.0, 1.1-scaled rings give 0.0");
  return guarded(c, [&] {
    std::vector<PostureSpec> all = posture_catalog();
    for (PostureSpec& p : random_postures(20, kSeed + 1)) all.push_back(std::move(p));
    std::mt19937_64 rng(kSeed);
    std::uniform_real_distribution<double> angle(0, kTwoPi);
    std::uniform_real_distribution<double> depth(0.0, 0.9);
    std::size_t bad = 0;
    for (const PostureSpec& s : all) {
      const BosBoundary b = make_boundary(s.left, s.right);
      std::vector<ComSample> inside, ring;
      for (int k = 0; k < 3000; ++k) {
        const double phi = angle(rng);
        const Point2 dir{std::cos(phi), std::sin(phi)};
        const double r = b.radius(phi);
        const double f = k % 10 == 0 ? 0.9 : depth(rng);
        inside.push_back({0.01 * k, to_task_space(b.frame(), (f * r) * dir)});
        ring.push_back({0.01 * k, to_task_space(b.frame(), (1.1 * r) * dir)});
      }
      const ComTrajectory in(std::move(inside));
      const ComTrajectory out(std::move(ring));
      if (poi(in, b) != 100.0 || poi360(in, b) != 100.0) ++bad;
      if (poi(out, b) != 0.0 || poi360(out, b) != 0.0) ++bad;
    }
    c.check(bad == 0, "exact 100.0 / 0.0 for every generated trial");

    // Same property through marker files and the full pipeline.
    const AnalysisResult in = analyze_trial(parse_trial_csv(kData / "inside_trial.csv"), {});
    const AnalysisResult out = analyze_trial(parse_trial_csv(kData / "ring_trial.csv"), {});
    c.check(in.report.poi == 100.0 && in.report.poi360 == 100.0, "inside_trial.csv gives 100.0");
    c.check(out.report.poi == 0.0 && out.report.poi360 == 0.0, "ring_trial.csv gives 0.0");
    c.note(fmt("%.0f postures x 2 generated trials", static_cast<double>(all.size())) +
           ", plus 2 marker fixtures");
  });
}

// 7. Foot swap with mirrored angles mirrors the polygon across x_Saddle.
bool mirror_symmetry() {
  Criterion c("7 mirror symmetry: foot-swapped mirrored postures, polygons within 1e-9 m");
  return guarded(c, [&] {
    std::vector<PostureSpec> all = posture_catalog();
    std::mt19937_64 rng(kSeed);
    std::uniform_real_distribution<double> d(0.18, 0.45);
    std::uniform_int_distribution<int> pick(0, 3);
    const double cardinal[] = {kPi / 2, kPi / 2, 0.0, kPi};
    while (all.size() < 6 + 50) {
      PostureSpec s = make_posture("cardinal", d(rng), cardinal[pick(rng)], cardinal[pick(rng)],
                                   0.25, 0.10);
      const RigidMotion g = oracle::random_motion(rng);
      s.left = apply(g, s.left);
      s.right = apply(g, s.right);
      try {
        (void)make_boundary(s.left, s.right);
        all.push_back(s);
      } catch (const Error&) {
      }
    }
    const std::size_t n = 360;
    double worst = 0;
    for (const PostureSpec& s : all) {
      const FootPair m = oracle::mirror_posture(s.left, s.right);
      const BosBoundary a = make_boundary(s.left, s.right);
      const BosBoundary b = make_boundary(m.left, m.right);
      const Polygon2 pa = bos_polygon_task_space(s.left, s.right, n);
      const Polygon2 pb = bos_polygon_task_space(m.left, m.right, n);
      for (std::size_t k = 0; k < n; ++k) {
        // Reflect vertex k of the original across x_Saddle; it is vertex n-k of the mirror.
        const Point2 local = to_saddle_space(a.frame(), pa[k]);
        const Point2 reflected = to_task_space(a.frame(), {local.x, -local.y});
        worst = std::max(worst, distance(reflected, pb[(n - k) % n]));
      }
      (void)b;
    }
    c.check(worst <= 1e-9, "mirrored polygons within 1e-9 m");
    c.note(fmt("%.0f postures (catalog + cardinal-angle random)", static_cast<double>(all.size())) +
           fmt(", worst error %.3g m", worst));
  });
}

struct Run {
  int code = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  Run r;
  const std::string cmd = "'" + kCli + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// 8. CLI analyze on the bundled 30 s trial.
bool end_to_end() {
  Criterion c("8 end-to-end CLI: analyze 3000-frame trial < 2 s, PoI/PoI360 to 4 decimals, "
              "byte-identical repeats");
  return guarded(c, [&] {
    const std::string trial = (kData / "synthetic_trial.csv").string();
    std::ifstream ef(kData / "synthetic_trial.expected.json");
    const auto expected = nlohmann::json::parse(ef);
    const auto t0 = Clock::now();
    const Run first = run_cli("analyze --markers '" + trial + "'");
    const double elapsed = seconds_since(t0);
    const Run second = run_cli("analyze --markers '" + trial + "'");
    c.check(first.code == 0, "exit code 0");
    const auto report = nlohmann::json::parse(first.out);
    const auto round4 = [](double v) { return std::round(v * 1e4) / 1e4; };
    const double poi_got = report.at("poi").get<double>();
    const double poi360_got = report.at("poi360").get<double>();
    const double poi_want = expected.at("poi").get<double>();
    const double poi360_want = expected.at("poi360").get<double>();
    c.check(round4(poi_got) == round4(poi_want), "PoI matches fixture to 4 decimals");
    c.check(round4(poi360_got) == round4(poi360_want), "PoI360 matches fixture to 4 decimals");
    c.check(report.at("n_samples") == 3000, "3000 samples analysed");
    c.check(first.out == second.out && !first.out.empty(), "repeat run byte-identical");
    c.check(elapsed < 2.0, "runtime < 2 s");
    c.note(fmt("PoI %.4f", poi_got) + fmt(" (fixture %.4f)", poi_want) +
           fmt(", PoI360 %.4f", poi360_got) + fmt(" (fixture %.4f)", poi360_want) +
           fmt(", runtime %.3g s", elapsed));
  });
}

// 9. Hand-placed marker fixtures.
bool appendix_pipeline() {
  Criterion c("9 marker pipeline: hand-placed feet give d_f=0.25, d_l=0.10 and expected theta_F");
  return guarded(c, [&] {
    double worst = 0;
    const auto check_fixture = [&](const char* file, double theta_lf, double theta_rf) {
      const auto frames = parse_trial_csv(kData / file);
      const FootGeometry gl = foot_geometry(frames.front(), Side::kLeft);
      const FootGeometry gr = foot_geometry(frames.front(), Side::kRight);
      const FootPair feet = foot_poses(frames.front());
      const double errs[] = {
          std::abs(gl.d_f - 0.25), std::abs(gl.d_l - 0.10),
          std::abs(gr.d_f - 0.25), std::abs(gr.d_l - 0.10),
          std::abs(wrap_pi(feet.left.theta_f - theta_lf)),
          std::abs(wrap_pi(feet.right.theta_f - theta_rf)),
      };
      double local = 0;
      for (double e : errs) local = std::max(local, e);
      worst = std::max(worst, local);
      c.check(local <= 1e-9, std::string(file) + " within 1e-9");
      c.note(std::string(file) + fmt(": theta_LF %.9f", feet.left.theta_f) +
             fmt(", theta_RF %.9f", feet.right.theta_f) + fmt(", d_f %.9f", gl.d_f) +
             fmt(", d_l %.9f", gl.d_l));
    };
    check_fixture("static_parallel.csv", kPi / 2, kPi / 2);
    check_fixture("static_orthogonal.csv", kPi / 2, 0.0);
    c.note(fmt("worst deviation %.3g", worst));
  });
}

}  // namespace

int main() {
  std::printf("saddlebos acceptance suite (seed %llu)\n", static_cast<unsigned long long>(kSeed));
  const bool results[] = {worked_example(), round_trip(),      equivariance(),
                          oracle_agreement(), star_and_convex(), metric_sanity(),
                          mirror_symmetry(), end_to_end(),      appendix_pipeline()};
  int failed = 0;
  for (bool ok : results) failed += ok ? 0 : 1;
  std::printf("%d of 9 criteria passed\n", 9 - failed);
  return failed == 0 ? 0 : 1;
}
