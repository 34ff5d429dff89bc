import json
import random
from fractions import Fraction

import pytest

import flatdepth

SQUARE = [(0, 0), (1, 0), (0, 1), (1, 1)]


def primal_tukey(points, q):
    # Minimum over closed halfplanes through q, scanning directions between
    # consecutive critical angles with exact cross products.
    best = len(points)
    offsets = [(x - q[0], y - q[1]) for x, y in points]
    normals = [(-y, x) for x, y in offsets if (x, y) != (0, 0)]
    normals += [(-a, -b) for a, b in normals]
    normals += [o for o in offsets if o != (0, 0)] + [(-x, -y) for x, y in offsets if (x, y) != (0, 0)]
    candidates = normals + [(a + c, b + d) for (a, b) in normals for (c, d) in normals]
    candidates = [c for c in candidates if c != (0, 0)] or [(1, 0)]
    for a, b in candidates:
        best = min(best, sum(1 for x, y in offsets if a * x + b * y >= 0))
    return best


def test_tukey_square():
    assert flatdepth.tukey_depth2(SQUARE, (Fraction(1, 2), "1/2"))["distance"] == 2
    assert flatdepth.tukey_depth2(SQUARE, (0, 0))["distance"] == 1
    assert flatdepth.tukey_depth2(SQUARE, (5, 5))["distance"] == 0


def test_tukey_matches_primal_scan():
    rng = random.Random(11)
    for _ in range(40):
        pts = [(rng.randint(-4, 4), rng.randint(-4, 4)) for _ in range(rng.randint(1, 9))]
        q = (rng.randint(-3, 3), rng.randint(-3, 3))
        assert flatdepth.tukey_depth2(pts, q)["distance"] == primal_tukey(pts, q)


def test_result_shape_and_fractions():
    r = flatdepth.tukey_depth2(SQUARE, (0.5, 0.5))
    assert r["distance"] == r["strict_min"] + r["incident_count"]
    assert all(isinstance(c, Fraction) for c in r["witness"]["u1"])
    assert set(r["primal"]) == {"first", "second", "count"}
    assert r["primal"]["count"] == r["strict_min"]


def test_regression_depth_2d():
    pts = [(0, 0), (1, 1), (2, 2), (3, 3)]
    assert flatdepth.regression_depth_line2(pts, [(0, 0), (1, 1)])["distance"] == 4
    # A line with all points strictly above it is a regression failure.
    assert flatdepth.regression_depth_line2(pts, [(0, -10), (1, -10)])["distance"] == 0


def test_regression_depth_3d_bruteforce_agrees():
    rng = random.Random(5)
    for _ in range(20):
        pts = [tuple(rng.randint(-5, 5) for _ in range(3)) for _ in range(8)]
        line = [tuple(rng.randint(-5, 5) for _ in range(3)) for _ in range(2)]
        if line[0] == line[1]:
            continue
        r = flatdepth.regression_depth_line3(pts, line)
        assert 0 <= r["strict_min"] <= r["n_active"]
        assert r["distance"] == r["strict_min"] + r["incident_count"]


def test_crossing_distance_matches_bruteforce():
    rng = random.Random(3)
    checked = 0
    while checked < 20:
        hs = [([rng.randint(-3, 3) for _ in range(3)], rng.randint(-3, 3)) for _ in range(7)]
        hs = [h for h in hs if any(h[0])]
        a = [tuple(rng.randint(-4, 4) for _ in range(3)) for _ in range(2)]
        b = [tuple(rng.randint(-4, 4) for _ in range(3)) for _ in range(2)]
        if a[0] == a[1] or b[0] == b[1]:
            continue
        fast = flatdepth.crossing_distance(hs, a, b)
        slow = flatdepth.crossing_distance_bruteforce(hs, a, b)
        assert fast["distance"] == slow["distance"]
        checked += 1


def test_intersecting_flats_have_distance_zero():
    hs = [([1, 0], 3), ([0, 1], -2)]
    r = flatdepth.crossing_distance(hs, [(0, 0), (1, 1)], [(0, 1), (1, 0)])
    assert r["distance"] == 0 and r["witness"]["degenerate"]


def test_json_round_trip_verifies():
    inst = json.dumps({"dimension": 2, "points": [["0", "0"], [1, 0], [0, 1], [1, 1]],
                       "query": {"kind": "tukey2", "point": ["1/2", "1/2"]}})
    out = flatdepth.run_instance(inst)
    assert json.loads(out)["distance"] == 2
    assert flatdepth.verify_result(inst, out) == []
    assert json.loads(flatdepth.run_instance(inst, oracle=True))["distance"] == 2


def test_errors():
    with pytest.raises(ValueError):
        flatdepth.tukey_depth2(SQUARE, ("1/0", 0))
    with pytest.raises(TypeError):
        flatdepth.tukey_depth2(SQUARE, (True, 0))
    with pytest.raises(ValueError):
        flatdepth.regression_depth_line2(SQUARE, [(1, 1), (1, 1)])
    with pytest.raises(flatdepth.InputError):
        flatdepth.run_instance("{\"dimension\": 2}")
