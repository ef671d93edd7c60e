#!/usr/bin/env python3
# Copyright 2026 The saddlebos Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates the marker fixtures in tests/data.

The expected PoI/PoI360 of the 30 s trial come from a separate model of the
boundary: a dense parametric trace of the arc-and-chord curve (corners
included) turned into a shapely polygon, with even-odd containment. Samples
are kept away from the boundary and from the angular bin edges so that the
C++ radial test and this model cannot disagree.

    python3 tools/gen_fixtures.py tests/data
"""

import argparse
import json
import math
import pathlib

import numpy as np
from shapely.geometry import LineString, Point, Polygon

MARKERS = ["LASI", "RASI", "LPSI", "RPSI", "LHEE", "RHEE", "LMT1", "LMT5", "RMT1", "RMT5"]
BOUNDARY_MARGIN = 2e-4   # m
BIN_EDGE_MARGIN = 1e-5   # rad
N_BINS = 360


def header():
    cols = ["time"]
    for m in MARKERS:
        cols += [f"{m}_x", f"{m}_y", f"{m}_z"]
    return ",".join(cols)


def fmt(v):
    s = f"{v:.12g}"
    return "0" if s in ("-0", "0") else s


def rot(a, p):
    c, s = math.cos(a), math.sin(a)
    return np.array([c * p[0] - s * p[1], s * p[0] + c * p[1]])


class Scene:
    """Static feet described in their own Saddle frame, placed in task space."""

    def __init__(self, d, theta_lf, theta_rf, length, width, frame_theta, origin):
        self.d, self.L, self.W = d, length, width
        self.theta_lf, self.theta_rf = theta_lf, theta_rf
        self.frame_theta = frame_theta
        self.origin = np.asarray(origin, dtype=float)

    def to_task(self, p):
        return rot(self.frame_theta, p) + self.origin

    def to_saddle(self, p):
        return rot(-self.frame_theta, np.asarray(p) - self.origin)

    def foot_markers(self, side):
        # theta_f is measured from the left-to-right eCoP direction, which is
        # -y in the Saddle frame.
        if side == "L":
            ecop, theta = np.array([0.0, self.d / 2]), self.theta_lf
        else:
            ecop, theta = np.array([0.0, -self.d / 2]), self.theta_rf
        heading = theta - math.pi / 2
        axis = np.array([math.cos(heading), math.sin(heading)])
        normal = np.array([-axis[1], axis[0]])
        heel = ecop - 0.5 * self.L * axis
        mt_mid = ecop + 0.5 * self.L * axis
        return {
            "HEE": self.to_task(heel),
            "MT1": self.to_task(mt_mid + 0.5 * self.W * normal),
            "MT5": self.to_task(mt_mid - 0.5 * self.W * normal),
        }

    def params(self):
        d, DF, DL = self.d, self.L, self.W
        u = self.theta_lf - math.pi / 2
        w = self.theta_rf - math.pi / 2
        d_ly = (DF * math.sin(u) + DL * math.cos(u)) / 2
        d_Lx = (DF * math.cos(u) - DL * math.sin(u)) / 2
        d_ry = (DF * math.sin(w) - DL * math.cos(w)) / 2
        d_Rx = (DF * math.cos(w) - DL * math.sin(w)) / 2
        return {"d_Ly": d / 2 + d_ly, "d_Ry": -d / 2 + d_ry, "d_Lx": d_Lx, "d_Rx": d_Rx}

    def boundary_polygon(self, n_arc=20000):
        p = self.params()
        rl, rr = p["d_Ly"], -p["d_Ry"]
        a, b = abs(p["d_Lx"]), abs(p["d_Rx"])
        al, ar = math.acos(a / rl), math.acos(b / rr)
        pts = []
        # Left arc from (a, yl) counterclockwise to (-a, yl), both ends exact.
        for t in np.linspace(al, math.pi - al, n_arc):
            pts.append((rl * math.cos(t), rl * math.sin(t)))
        # Right arc from (-b, -yr) to (b, -yr).
        for t in np.linspace(math.pi + ar, 2 * math.pi - ar, n_arc):
            pts.append((rr * math.cos(t), rr * math.sin(t)))
        return Polygon(pts)


def frame_row(t, markers):
    cells = [fmt(t)]
    for m in MARKERS:
        p = markers.get(m)
        cells += ["", "", ""] if p is None else [fmt(p[0]), fmt(p[1]), fmt(p[2])]
    return ",".join(cells)


def feet_markers(scene):
    out = {}
    for side in ("L", "R"):
        for k, v in scene.foot_markers(side).items():
            out[f"{side}{k}"] = (v[0], v[1], 0.02)
    return out


PELVIS = {"LASI": (0.12, 0.10), "RASI": (0.12, -0.10), "LPSI": (-0.08, 0.05), "RPSI": (-0.08, -0.05)}


def pelvis_markers(com_task, yaw, z):
    # Centroid of the four offsets is (0.02, 0); subtract it so the centroid is the CoM.
    out = {}
    for name, off in PELVIS.items():
        o = rot(yaw, (off[0] - 0.02, off[1]))
        out[name] = (com_task[0] + o[0], com_task[1] + o[1], z)
    return out


def write_csv(path, rows):
    path.write_text(header() + "\n" + "\n".join(rows) + "\n")


def read_com_and_time(path):
    """Re-reads a fixture and computes the CoM exactly as written to disk."""
    lines = path.read_text().splitlines()[1:]
    out = []
    for line in lines:
        c = line.split(",")
        vals = {}
        for i, m in enumerate(MARKERS):
            cell = c[1 + 3 * i: 4 + 3 * i]
            vals[m] = None if cell[0] == "" else tuple(float(x) for x in cell)
        if any(v is None for v in vals.values()):
            continue
        com = np.mean([vals[m][:2] for m in ("LASI", "RASI", "LPSI", "RPSI")], axis=0)
        out.append((float(c[0]), com))
    return out


def poi_metrics(scene, saddle_points):
    poly = scene.boundary_polygon()
    inside = [poly.covers(Point(p[0], p[1])) for p in saddle_points]
    best = {}
    width = 2 * math.pi / N_BINS
    for i, p in enumerate(saddle_points):
        ang = math.atan2(p[1], p[0]) % (2 * math.pi)
        k = min(int(ang / width), N_BINS - 1)
        r = math.hypot(p[0], p[1])
        if k not in best or r > best[k][0]:
            best[k] = (r, i)
    outer = [i for _, i in best.values()]
    return {
        "poi": 100.0 * sum(inside) / len(inside),
        "poi360": 100.0 * sum(inside[i] for i in outer) / len(outer),
        "n_samples": len(saddle_points),
        "n_outer": len(outer),
    }


def ray_radius(poly, phi):
    far = LineString([(0, 0), (math.cos(phi), math.sin(phi))])
    hit = far.intersection(poly.exterior)
    pts = [hit] if hit.geom_type == "Point" else list(hit.geoms)
    return max(math.hypot(q.x, q.y) for q in pts)


def synthetic_trial(out_dir):
    # Orthogonal right foot, frame rotated 20 deg and shifted off the lab origin.
    scene = Scene(0.30, math.pi / 2, 0.0, 0.25, 0.10, math.radians(20), (0.4, 1.1))
    poly = scene.boundary_polygon()
    feet = feet_markers(scene)
    rng = np.random.default_rng(20260611)
    width = 2 * math.pi / N_BINS
    rows = []
    for k in range(3000):
        t = k / 100.0
        phi = 2 * math.pi * t / 7.3 + 0.4 * math.sin(2 * math.pi * t / 2.9) + rng.normal(0, 0.01)
        phi %= 2 * math.pi
        edge = round(phi / width) * width
        if abs(phi - edge) < BIN_EDGE_MARGIN:
            phi = edge + 2 * BIN_EDGE_MARGIN
        f = 0.82 + 0.30 * math.sin(2 * math.pi * t / 4.1) + rng.normal(0, 0.01)
        rb = ray_radius(poly, phi)
        r = f * rb
        if abs(r - rb) < BOUNDARY_MARGIN:
            r = rb + (BOUNDARY_MARGIN if r >= rb else -BOUNDARY_MARGIN) * 2
        com = scene.to_task((r * math.cos(phi), r * math.sin(phi)))
        m = dict(feet)
        m.update(pelvis_markers(com, scene.frame_theta + rng.normal(0, 0.05), 0.95 + rng.normal(0, 0.003)))
        rows.append(frame_row(t, m))
    path = out_dir / "synthetic_trial.csv"
    write_csv(path, rows)

    samples = [scene.to_saddle(c) for _, c in read_com_and_time(path)]
    for p in samples:
        d = poly.exterior.distance(Point(p[0], p[1]))
        assert d > BOUNDARY_MARGIN / 2, d
        ang = math.atan2(p[1], p[0]) % (2 * math.pi)
        assert abs(ang / width - round(ang / width)) * width > BIN_EDGE_MARGIN / 2
    expected = poi_metrics(scene, samples)
    (out_dir / "synthetic_trial.expected.json").write_text(json.dumps(expected, indent=2) + "\n")
    return expected


def scaled_trial(out_dir, name, scale):
    # Parallel posture in the lab frame; CoM on a wandering path at `scale`
    # times the boundary radius (scale < 1: inside, scale > 1: on a ring outside).
    scene = Scene(0.30, math.pi / 2, math.pi / 2, 0.25, 0.10, 0.0, (0.0, 0.0))
    poly = scene.boundary_polygon()
    feet = feet_markers(scene)
    rows = []
    for k in range(500):
        t = k / 100.0
        phi = (2 * math.pi * t / 1.7) % (2 * math.pi)
        f = scale if scale > 1 else scale * (0.5 + 0.5 * abs(math.sin(3 * t)))
        com = scene.to_task(f * ray_radius(poly, phi) * np.array([math.cos(phi), math.sin(phi)]))
        m = dict(feet)
        m.update(pelvis_markers(com, 0.0, 0.95))
        rows.append(frame_row(t, m))
    write_csv(out_dir / name, rows)


def static_trial(out_dir, name, theta_lf, theta_rf, n=5, com=(0.0, 0.0), incomplete=()):
    scene = Scene(0.30, theta_lf, theta_rf, 0.25, 0.10, 0.0, (0.0, 0.0))
    feet = feet_markers(scene)
    rows = []
    for k in range(n):
        m = dict(feet)
        m.update(pelvis_markers(np.asarray(com), 0.0, 0.95))
        if k in incomplete:
            del m["RPSI"]
        rows.append(frame_row(k / 100.0, m))
    write_csv(out_dir / name, rows)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("out_dir", type=pathlib.Path)
    args = ap.parse_args()
    out = args.out_dir
    out.mkdir(parents=True, exist_ok=True)

    expected = synthetic_trial(out)
    scaled_trial(out, "inside_trial.csv", 0.9)
    scaled_trial(out, "ring_trial.csv", 1.1)
    # Hand-placed feet: heels at (-0.125, +-0.15), MT1/MT5 at x = 0.125.
    static_trial(out, "static_parallel.csv", math.pi / 2, math.pi / 2)
    static_trial(out, "static_orthogonal.csv", math.pi / 2, 0.0)
    static_trial(out, "incomplete_trial.csv", math.pi / 2, math.pi / 2, n=20, incomplete=(3, 7, 11))
    static_trial(out, "mostly_complete_trial.csv", math.pi / 2, math.pi / 2, n=20, incomplete=(5, 15))

    lines = (out / "static_parallel.csv").read_text().splitlines()
    cells = lines[3].split(",")
    cells[5] = "0.1x"
    lines[3] = ",".join(cells)
    (out / "corrupt_trial.csv").write_text("\n".join(lines) + "\n")

    print(json.dumps(expected))


if __name__ == "__main__":
    main()
