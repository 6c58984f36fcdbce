"""Fixed-point and bifurcation analysis of the classical kick map.

Nontrivial period-1 orbits exist where the radius-dependent rotation angle
A = theta + mu*R^2 satisfies tan(A) = +-sinh(r).  The tangent equation
alone also has alias solutions shifted by pi where cos(A) has the wrong
sign; those do not solve the full fixed-point system (which requires
cos(A) = 1/cosh(r) > 0) and are filtered out by polishing candidates on
the full map and keeping only the ones that converge in place.

Genuine orbits lie on straight lines through the origin: on the branch
with sin(A) > 0 the slope is -e^(-r) (quadrants 2 and 4), on the branch
with sin(A) < 0 it is +e^(-r) (quadrants 1 and 3).
"""

import enum
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .classical import ClassicalPoint, classical_kick, jacobian
from .errors import DomainError, NoConvergence
from .params import MapParams

# |trace| within this of 2 classifies as parabolic
PARABOLIC_BAND = 1e-9

# records this close to |trace| = 2 carry a boundary warning flag
BOUNDARY_BAND = 1e-6

NEWTON_TOL = 1e-12
NEWTON_MAX_ITER = 60


class Stability(enum.Enum):
    ELLIPTIC = "elliptic"
    HYPERBOLIC = "hyperbolic"
    PARABOLIC = "parabolic"


def classify_trace(trace: float, band: float = PARABOLIC_BAND) -> Stability:
    """Stability class of an area-preserving 2x2 linearization from its trace."""
    edge = abs(trace) - 2.0
    if abs(edge) <= band:
        return Stability.PARABOLIC
    return Stability.ELLIPTIC if edge < 0 else Stability.HYPERBOLIC


def origin_stability(params: MapParams) -> Stability:
    """Classify the origin: elliptic iff |cosh(r) cos(theta)| < 1.

    The Jacobian at the origin has trace 2 cosh(r) cos(theta) and unit
    determinant, so this is the usual |trace| < 2 condition.
    """
    trace = 2.0 * math.cosh(params.r) * math.cos(params.theta)
    return classify_trace(trace)


@dataclass(frozen=True)
class FixedPointRecord:
    """A polished period-1 orbit point with its local stability data."""

    point: ClassicalPoint
    radius_sq: float
    quadrant: int
    eigenvalues: tuple
    trace: float
    stability: Stability
    radial_criterion: float
    boundary: bool
    residual: float


def _tan_singularities(params: MapParams, r_sq_max: float) -> list[float]:
    """R^2 values in (0, r_sq_max) where tan(theta + mu*R^2) blows up."""
    mu = params.mu
    a_lo = params.theta
    a_hi = params.theta + mu * r_sq_max
    lo, hi = min(a_lo, a_hi), max(a_lo, a_hi)
    j_min = math.ceil((lo - math.pi / 2) / math.pi)
    j_max = math.floor((hi - math.pi / 2) / math.pi)
    out = []
    for j in range(j_min, j_max + 1):
        s = (math.pi / 2 + j * math.pi - params.theta) / mu
        if 0.0 < s < r_sq_max:
            out.append(s)
    return sorted(out)


def default_r_sq_max(params: MapParams, branches: int = 3) -> float:
    """R^2 reach covering the first `branches` branches of the tangent."""
    if params.mu == 0.0:
        raise ValueError("period-1 orbit radii are undefined for mu = 0")
    mu = abs(params.mu)
    # singularities are spaced pi/|mu|; walk out until `branches` lie inside
    span = math.pi / mu
    guess = span * (branches + 1)
    while len(_tan_singularities(params, guess)) < branches:
        guess += span
    return _tan_singularities(params, guess)[branches - 1]


def _newton_polish(x1: float, x2: float, params: MapParams):
    """Drive the full-map residual below NEWTON_TOL; None if it will not."""
    p = np.array([x1, x2])
    for _ in range(NEWTON_MAX_ITER):
        cp = ClassicalPoint(p[0], p[1])
        nxt = classical_kick(cp, params)
        f = np.array([nxt.x1 - cp.x1, nxt.x2 - cp.x2])
        if np.max(np.abs(f)) < NEWTON_TOL:
            return cp
        j = jacobian(cp, params) - np.eye(2)
        try:
            step = np.linalg.solve(j, f)
        except np.linalg.LinAlgError:
            return None
        if not np.all(np.isfinite(step)):
            return None
        p = p - step
    return None


def find_period1_orbits(params: MapParams,
                        r_sq_max: float | None = None) -> list[FixedPointRecord]:
    """Locate all period-1 orbits with R^2 in (0, r_sq_max].

    Brackets each branch of tan(theta + mu*R^2) between consecutive
    singularities, solves tan(A) = +-sinh(r) by bisection (brentq), builds
    the four line candidates per radius root, and Newton-polishes each on
    the full map.  Candidates that converge somewhere else (the pi-shifted
    tangent aliases, or the wrong slope line) are dropped; a radius whose
    phase check cos(A) = 1/cosh(r) > 0 marks it as a true orbit radius but
    whose candidates all fail to polish raises NoConvergence.

    Raises
    ------
    ValueError
        If mu = 0 (radii undefined) or r_sq_max <= 0.
    NoConvergence
        See above; never raised for alias roots, which are expected to
        fail and are simply filtered.
    """
    if params.mu == 0.0:
        raise ValueError("period-1 orbit radii are undefined for mu = 0")
    if r_sq_max is None:
        r_sq_max = default_r_sq_max(params)
    if r_sq_max <= 0:
        raise ValueError(f"r_sq_max must be positive, got {r_sq_max}")

    sinh_r = math.sinh(params.r)
    slope_mag = math.exp(-params.r)
    edges = [0.0] + _tan_singularities(params, r_sq_max) + [r_sq_max]

    def h(r_sq, target):
        return math.tan(params.theta + params.mu * r_sq) - target

    roots = []
    for lo, hi in zip(edges[:-1], edges[1:]):
        width = hi - lo
        if width <= 0:
            continue
        pad = max(width * 1e-9, 1e-13)
        a, b = lo + pad, hi - pad
        if a >= b:
            continue
        for target in (sinh_r, -sinh_r):
            ha, hb = h(a, target), h(b, target)
            if ha == 0.0:
                roots.append((a, lo, hi))
                continue
            if hb == 0.0:
                roots.append((b, lo, hi))
                continue
            if ha * hb > 0:
                continue
            s = brentq(h, a, b, args=(target,), xtol=1e-13, rtol=8.9e-16)
            roots.append((s, lo, hi))
            if sinh_r == 0.0:
                break  # both targets coincide at r = 0

    accepted = []
    for s0, lo, hi in roots:
        genuine = math.cos(params.theta + params.mu * s0) > 0.0
        converged_here = []
        for slope in (slope_mag, -slope_mag):
            x1_mag = math.sqrt(s0 / (1.0 + slope * slope))
            for sgn in (1.0, -1.0):
                cand = _newton_polish(sgn * x1_mag, sgn * slope * x1_mag, params)
                if cand is None:
                    continue
                r_sq = cand.r_sq
                # reject polish runs that slid to a different orbit or the origin
                if abs(r_sq - s0) > 1e-6 * max(1.0, s0):
                    continue
                converged_here.append(cand)
        if genuine and not converged_here:
            raise NoConvergence(
                f"radius root R^2 = {s0:.6g} passes the phase check but no "
                f"line candidate polished (theta={params.theta:.6g}, "
                f"mu={params.mu:.6g}, r={params.r:.6g})")
        accepted.extend(converged_here)

    # dedupe points that multiple candidates landed on
    unique: list[ClassicalPoint] = []
    for cand in accepted:
        if any(abs(cand.x1 - u.x1) < 1e-9 * max(1.0, abs(u.x1)) and
               abs(cand.x2 - u.x2) < 1e-9 * max(1.0, abs(u.x2))
               for u in unique):
            continue
        unique.append(cand)

    records = []
    for pt in unique:
        j = jacobian(pt, params)
        trace = float(j[0, 0] + j[1, 1])
        eigs = np.linalg.eigvals(j)
        nxt = classical_kick(pt, params)
        residual = max(abs(nxt.x1 - pt.x1), abs(nxt.x2 - pt.x2))
        r_sq = pt.r_sq
        angle = params.theta + params.mu * r_sq
        records.append(FixedPointRecord(
            point=pt,
            radius_sq=r_sq,
            quadrant=_quadrant(pt),
            eigenvalues=(complex(eigs[0]), complex(eigs[1])),
            trace=trace,
            stability=classify_trace(trace),
            radial_criterion=params.mu * r_sq * math.tan(angle),
            boundary=abs(abs(trace) - 2.0) < BOUNDARY_BAND,
            residual=float(residual),
        ))
    records.sort(key=lambda rec: (rec.radius_sq, rec.quadrant))
    return records


def _quadrant(p: ClassicalPoint) -> int:
    if p.x1 >= 0:
        return 1 if p.x2 >= 0 else 4
    return 2 if p.x2 >= 0 else 3


@dataclass(frozen=True)
class BifurcationCurve:
    """One sampled curve theta(r); family is "solid" (origin changes class
    across it) or "dashed" (a period-1 orbit pair changes class)."""

    family: str
    n: int
    sign: int
    r: np.ndarray
    theta: np.ndarray


def bifurcation_curves(r_min: float, r_max: float,
                       n_values: tuple = (-1, 0, 1),
                       samples: int = 200,
                       families: tuple = ("solid", "dashed")) -> list[BifurcationCurve]:
    """Sample both bifurcation-curve families over [r_min, r_max].

    Solid: theta = +-arccos(1/cosh r) + n*pi.
    Dashed: theta = arctan(sinh r) - 1/sinh r + n*pi (singular at r = 0).

    Raises
    ------
    DomainError
        If the dashed family is requested on a range touching r <= 0.
    """
    if r_max <= r_min:
        raise ValueError(f"need r_max > r_min, got [{r_min}, {r_max}]")
    if "dashed" in families and r_min <= 0.0:
        raise DomainError("dashed curve family is singular at r = 0; "
                          "use a strictly positive r range")
    r = np.linspace(r_min, r_max, samples)
    curves = []
    for fam in families:
        if fam == "solid":
            base = np.arccos(1.0 / np.cosh(r))
            for n in n_values:
                for sign in (1, -1):
                    curves.append(BifurcationCurve(
                        family="solid", n=n, sign=sign, r=r,
                        theta=sign * base + n * math.pi))
        elif fam == "dashed":
            base = np.arctan(np.sinh(r)) - 1.0 / np.sinh(r)
            for n in n_values:
                curves.append(BifurcationCurve(
                    family="dashed", n=n, sign=0, r=r,
                    theta=base + n * math.pi))
        else:
            raise ValueError(f"unknown curve family {fam!r}")
    return curves


@dataclass(frozen=True)
class RegionLabel:
    """Stability fingerprint of a parameter point.

    First letter: origin class.  Subsequent letters: classes of the
    even-quadrant orbit pairs, ordered outward by radius.
    """

    letters: str
    pair_radii: tuple


def label_region(params: MapParams,
                 r_sq_max: float | None = None) -> RegionLabel:
    """Letter sequence over {E, H} for the origin and even-quadrant pairs."""
    if params.mu == 0.0:
        raise ValueError("region labels are undefined for mu = 0")
    letter = {Stability.ELLIPTIC: "E", Stability.HYPERBOLIC: "H"}
    origin = origin_stability(params)
    if origin not in letter:
        raise DomainError("origin sits on a bifurcation boundary; "
                          "labels are defined for open regions only")
    records = [rec for rec in find_period1_orbits(params, r_sq_max)
               if rec.quadrant in (2, 4)]
    radii: list[float] = []
    letters = [letter[origin]]
    for rec in records:
        if radii and abs(rec.radius_sq - radii[-1]) < 1e-6 * max(1.0, radii[-1]):
            continue  # second point of the same pair
        if rec.stability not in letter:
            raise DomainError(
                f"orbit pair at R^2 = {rec.radius_sq:.6g} sits on a "
                "bifurcation boundary; labels are defined for open regions")
        radii.append(rec.radius_sq)
        letters.append(letter[rec.stability])
    return RegionLabel(letters="".join(letters), pair_radii=tuple(radii))
