import math

import numpy as np
import pytest

from kis.classical import ClassicalPoint, classical_kick, jacobian
from kis.errors import DomainError
from kis.params import MapParams
from kis.stability import (Stability, bifurcation_curves, classify_trace,
                           default_r_sq_max, find_period1_orbits, label_region,
                           origin_stability)

MU = 0.01 * math.pi
THETA = 2.0 * math.pi


def genuine_radii(params, r_sq_max):
    # closed-form oracle: nontrivial fixed points need
    # cos(theta + mu R^2) = 1/cosh(r), i.e.
    # R^2 = (+-arccos(1/cosh r) + 2 pi k - theta) / mu
    a0 = math.acos(1.0 / math.cosh(params.r))
    out = []
    for k in range(-50, 51):
        for sign, parity in ((1.0, "even"), (-1.0, "odd")):
            s = (sign * a0 + 2.0 * math.pi * k - params.theta) / params.mu
            if 0.0 < s <= r_sq_max:
                out.append((s, parity))
    return sorted(out)


def eigen_class(j, band=1e-9):
    eigs = np.linalg.eigvals(j)
    tr = float(np.trace(j))
    if abs(abs(tr) - 2.0) <= band:
        return Stability.PARABOLIC
    if np.max(np.abs(np.imag(eigs))) > 1e-12:
        return Stability.ELLIPTIC
    return Stability.HYPERBOLIC if np.max(np.abs(eigs)) > 1.0 else Stability.ELLIPTIC


def test_classify_trace():
    assert classify_trace(1.5) is Stability.ELLIPTIC
    assert classify_trace(-1.99) is Stability.ELLIPTIC
    assert classify_trace(2.5) is Stability.HYPERBOLIC
    assert classify_trace(-3.0) is Stability.HYPERBOLIC
    assert classify_trace(2.0 + 5e-10) is Stability.PARABOLIC


def test_origin_examples():
    assert origin_stability(MapParams(THETA, MU, 0.3)) is Stability.HYPERBOLIC
    assert origin_stability(MapParams(math.pi / 2.0, 0.0, 0.0)) is Stability.ELLIPTIC
    r = 0.5
    boundary = MapParams(math.acos(1.0 / math.cosh(r)), 0.0, r)
    assert origin_stability(boundary) is Stability.PARABOLIC


def test_origin_criterion_matches_eigenvalues():
    rng = np.random.default_rng(41)
    checked = 0
    for _ in range(2000):
        params = MapParams(theta=rng.uniform(-2 * math.pi, 2 * math.pi),
                           mu=rng.uniform(-0.2, 0.2),
                           r=rng.uniform(0.0, 2.0))
        trace = 2.0 * math.cosh(params.r) * math.cos(params.theta)
        if abs(abs(trace) - 2.0) <= 1e-9:
            continue
        j = jacobian(ClassicalPoint(0.0, 0.0), params)
        assert origin_stability(params) is eigen_class(j)
        checked += 1
    assert checked > 1900


def test_default_r_sq_max_covers_three_branches():
    params = MapParams.from_g(THETA, MU, 1.5)
    top = default_r_sq_max(params)
    # tangent singularities for these values sit at R^2 = 50, 150, 250
    assert abs(top - 250.0) < 1e-9


@pytest.mark.parametrize("g", [1.2, 1.5])
def test_find_period1_orbits(g):
    params = MapParams.from_g(THETA, MU, g)
    records = find_period1_orbits(params)
    assert records, "expected orbits for these parameters"
    oracle = genuine_radii(params, default_r_sq_max(params))
    assert len(records) == 2 * len(oracle)

    slope = math.exp(-params.r)
    by_radius = {}
    for rec in records:
        # map residual
        nxt = classical_kick(rec.point, params)
        resid = max(abs(nxt.x1 - rec.point.x1), abs(nxt.x2 - rec.point.x2))
        assert resid < 1e-10
        assert rec.residual < 1e-10
        # line constraint: x2 = -+ e^{-r} x1
        line = min(abs(rec.point.x2 - slope * rec.point.x1),
                   abs(rec.point.x2 + slope * rec.point.x1))
        assert line < 1e-8 * max(1.0, abs(rec.point.x1))
        # eigenvalue product is the determinant
        e1, e2 = rec.eigenvalues
        assert abs(e1 * e2 - 1.0) < 1e-8
        # radial criterion agrees with the eigenvalue classification
        j = jacobian(rec.point, params)
        assert eigen_class(j) is rec.stability
        if rec.stability is Stability.ELLIPTIC:
            assert 0.0 < rec.radial_criterion < 1.0
        else:
            assert not (0.0 < rec.radial_criterion < 1.0)
        if rec.quadrant in (1, 3):
            assert rec.stability is Stability.HYPERBOLIC
        by_radius.setdefault(round(rec.radius_sq, 6), []).append(rec)

    # radii match the closed form, with the expected parity of quadrants
    assert len(by_radius) == len(oracle)
    for (r_sq, parity), (_, recs) in zip(oracle, sorted(by_radius.items())):
        assert abs(recs[0].radius_sq - r_sq) < 1e-8 * max(1.0, r_sq)
        quads = sorted(rec.quadrant for rec in recs)
        assert quads == ([2, 4] if parity == "even" else [1, 3])


def test_find_period1_requires_nonzero_mu():
    with pytest.raises(ValueError):
        find_period1_orbits(MapParams(THETA, 0.0, 0.4))


def test_orbits_move_inward_as_theta_grows():
    g = 1.5
    smallest = []
    for theta in (1.9 * math.pi, 2.0 * math.pi, 2.1 * math.pi):
        records = find_period1_orbits(MapParams.from_g(theta, MU, g),
                                      r_sq_max=260.0)
        even = [r.radius_sq for r in records if r.quadrant in (2, 4)]
        smallest.append(min(even))
    assert smallest[0] > smallest[1] > smallest[2]


def test_bifurcation_solid_limits():
    curves = bifurcation_curves(1e-6, 2.0, n_values=(0, 1),
                                families=("solid",))
    for c in curves:
        assert c.family == "solid"
        # r -> 0: theta -> n pi
        assert abs(c.theta[0] - c.n * math.pi) < 1e-2
    r1 = [c for c in curves if c.n == 0 and c.sign == 1][0]
    assert abs(r1.theta[-1] - math.acos(1.0 / math.cosh(2.0))) < 1e-12


def test_bifurcation_dashed_values_and_domain():
    curves = bifurcation_curves(0.5, 2.0, n_values=(0,), families=("dashed",))
    c = curves[0]
    expected = math.atan(math.sinh(0.5)) - 1.0 / math.sinh(0.5)
    assert abs(c.theta[0] - expected) < 1e-12
    with pytest.raises(DomainError):
        bifurcation_curves(0.0, 2.0, families=("dashed",))


def test_origin_class_changes_only_across_solid_curves():
    # scan theta at fixed r: every class flip must bracket a solid-curve value
    for r in (0.3, 0.8, 1.5):
        a0 = math.acos(1.0 / math.cosh(r))
        solid = sorted(sign * a0 + n * math.pi
                       for n in range(-1, 3) for sign in (1, -1))
        thetas = np.linspace(0.01, 2.0 * math.pi - 0.01, 800)
        classes = [origin_stability(MapParams(t, 0.05, r)) for t in thetas]
        for t0, t1, c0, c1 in zip(thetas, thetas[1:], classes, classes[1:]):
            if c0 is not c1:
                assert any(t0 <= s <= t1 for s in solid), (r, t0, t1)


def test_label_region():
    assert label_region(MapParams.from_g(THETA, MU, 1.5)).letters == "HEH"
    assert label_region(MapParams.from_g(THETA, MU, 1.2)).letters == "HEH"
    # below the first root radius only the origin letter remains
    assert label_region(MapParams.from_g(THETA, MU, 1.5), r_sq_max=5.0).letters == "H"
    label = label_region(MapParams.from_g(THETA, MU, 1.5))
    assert len(label.letters) == 1 + len(label.pair_radii)


def test_label_region_elliptic_origin():
    # small rotation away from the resonance keeps the origin elliptic
    params = MapParams.from_g(0.3, MU, 1.02)
    assert label_region(params, r_sq_max=40.0).letters[0] == "E"
