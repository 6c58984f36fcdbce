"""Classical stroboscopic map, Poincare sections, and Monte-Carlo ensembles.

One kick rotates a phase-plane point by the radius-dependent angle
theta + mu*R^2 (R^2 taken before the kick) and then scales the quadratures
by g and 1/g.  The map is area-preserving: the two scalings cancel in the
Jacobian determinant.
"""

import numpy as np
from dataclasses import dataclass, field

from . import _kernels
from .params import MapParams


@dataclass(frozen=True)
class ClassicalPoint:
    x1: float
    x2: float

    @property
    def r_sq(self) -> float:
        return self.x1 * self.x1 + self.x2 * self.x2


@dataclass(frozen=True)
class Ensemble:
    """Sample cloud stored as coordinate arrays (one row per point)."""

    x1: np.ndarray
    x2: np.ndarray
    rng_seed: int

    def __post_init__(self):
        if self.x1.size < 1 or self.x1.shape != self.x2.shape:
            raise ValueError("ensemble needs >= 1 point and matching arrays")

    @property
    def size(self) -> int:
        return int(self.x1.size)


def classical_kick(p: ClassicalPoint, params: MapParams) -> ClassicalPoint:
    """Apply one kick. The rotation angle uses the pre-kick R^2."""
    angle = params.theta + params.mu * p.r_sq
    c = np.cos(angle)
    s = np.sin(angle)
    g = params.g
    return ClassicalPoint(g * (c * p.x1 + s * p.x2),
                          (c * p.x2 - s * p.x1) / g)


def jacobian(p: ClassicalPoint, params: MapParams) -> np.ndarray:
    """Analytic Jacobian of the kick at p, including the mu chain-rule term.

    With u = c*x1 + s*x2 and v = c*x2 - s*x1 the determinant collapses to
    c^2 + s^2 = 1 exactly, so the map is area-preserving at every point.
    """
    angle = params.theta + params.mu * p.r_sq
    c = float(np.cos(angle))
    s = float(np.sin(angle))
    g = params.g
    two_mu_x1 = 2.0 * params.mu * p.x1
    two_mu_x2 = 2.0 * params.mu * p.x2
    u = c * p.x1 + s * p.x2
    v = c * p.x2 - s * p.x1
    return np.array([
        [g * (c + two_mu_x1 * v), g * (s + two_mu_x2 * v)],
        [-(s + two_mu_x1 * u) / g, (c - two_mu_x2 * u) / g],
    ])


def gaussian_ensemble(center: ClassicalPoint, n: int, seed: int) -> Ensemble:
    """i.i.d. Gaussian cloud matching coherent-state moments.

    Mean = center, Var(X1) = Var(X2) = 1/4, no cross covariance.  Sampling
    is a single seeded stream drawn up front; the kick dynamics afterwards
    use no randomness, so parallel and serial runs agree.
    """
    if n < 1:
        raise ValueError(f"ensemble size must be >= 1, got {n}")
    rng = np.random.default_rng(seed)
    samples = rng.normal(loc=(center.x1, center.x2), scale=0.5, size=(n, 2))
    return Ensemble(x1=np.ascontiguousarray(samples[:, 0]),
                    x2=np.ascontiguousarray(samples[:, 1]),
                    rng_seed=seed)


@dataclass(frozen=True)
class EnergyTrace:
    """Per-kick ensemble energy E_k = <R^2> - 1/2 and the readout cos^2(phi_tau*E_k).

    The -1/2 offset removes the half-quantum of the Gaussian ground-state
    moments so E is directly comparable to the quantum <n>.
    """

    energies: np.ndarray
    cos_sq: np.ndarray
    phi_tau: float


def ensemble_energy_trace(ens: Ensemble, params: MapParams, n_kicks: int,
                          phi_tau: float) -> EnergyTrace:
    """Propagate the ensemble and record E_k at kicks 0 ... n_kicks.

    The per-kick mean is taken in numpy in fixed array order, so the trace
    is bitwise reproducible for a given seed and backend.
    """
    x1 = ens.x1.astype(np.float64).copy()
    x2 = ens.x2.astype(np.float64).copy()
    energies = np.empty(n_kicks + 1)
    energies[0] = np.mean(x1 * x1 + x2 * x2) - 0.5
    for k in range(1, n_kicks + 1):
        _kernels.ensemble_kick(x1, x2, params.theta, params.mu, params.g)
        energies[k] = np.mean(x1 * x1 + x2 * x2) - 0.5
    cos_sq = np.cos(phi_tau * energies) ** 2
    return EnergyTrace(energies=energies, cos_sq=cos_sq, phi_tau=phi_tau)


@dataclass(frozen=True)
class PoincareSection:
    """Stroboscopic orbits per seed point.

    orbits[i, k] is (x1, x2) of seed i at kick k, NaN after an escape;
    escape_kick[i] is the kick at which orbit i first left the escape
    radius, -1 if it stayed inside.
    """

    orbits: np.ndarray = field(repr=False)
    escape_kick: np.ndarray
    escape_r_sq: float

    @property
    def n_seeds(self) -> int:
        return int(self.orbits.shape[0])

    def orbit_length(self, i: int) -> int:
        """Number of valid rows for seed i (escape point included)."""
        e = int(self.escape_kick[i])
        return self.orbits.shape[1] if e < 0 else e + 1


def poincare_section(initial_points: np.ndarray, params: MapParams,
                     n_kicks: int, escape_r_sq: float = 1e4) -> PoincareSection:
    """Iterate every seed n_kicks times, truncating orbits that escape.

    initial_points: array of shape (n, 2).  Escape is bookkeeping, not an
    error: with g > 1 and the origin unstable, part of any seed grid can
    run away, and those orbits are flagged instead of overflowing.
    """
    pts = np.asarray(initial_points, dtype=np.float64)
    if pts.ndim != 2 or pts.shape[1] != 2 or pts.shape[0] < 1:
        raise ValueError(f"initial_points must have shape (n, 2), got {pts.shape}")
    if n_kicks < 1:
        raise ValueError(f"n_kicks must be >= 1, got {n_kicks}")
    orbits, escape_kick = _kernels.poincare_orbits(
        pts[:, 0], pts[:, 1], params.theta, params.mu, params.g,
        n_kicks, escape_r_sq)
    return PoincareSection(orbits=orbits, escape_kick=escape_kick,
                           escape_r_sq=escape_r_sq)


def grid_points(n: int, lo: float, hi: float) -> np.ndarray:
    """Uniform n x n seed grid over [lo, hi]^2, row-major order."""
    axis = np.linspace(lo, hi, n)
    g1, g2 = np.meshgrid(axis, axis, indexing="ij")
    return np.column_stack([g1.ravel(), g2.ravel()])
