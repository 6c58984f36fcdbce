"""Hot loops for the classical map, with a numba path and a numpy fallback.

Backend selection happens once at import time: KIS_NUMBA=0 (or "false",
"off", "numpy") forces the pure-numpy implementations, anything else uses
numba when it is importable.  KIS_THREADS caps the numba thread pool.

Determinism contract: kernels only ever write disjoint per-point slots and
never reduce across points, so results do not depend on thread count or
scheduling.  All cross-point reductions (means, sums) happen in numpy in a
fixed order in the calling code.
"""

import os

import numpy as np

_flag = os.environ.get("KIS_NUMBA", "1").strip().lower()
_want_numba = _flag not in ("0", "false", "off", "no", "numpy")

HAVE_NUMBA = False
if _want_numba:
    try:
        import warnings

        import numba
        from numba import njit, prange
        # stale-TBB probe notice is harmless; the omp/workqueue layers serve
        warnings.filterwarnings("ignore", category=numba.errors.NumbaWarning,
                                message=".*TBB.*")
        HAVE_NUMBA = True
    except ImportError:
        HAVE_NUMBA = False

if HAVE_NUMBA:
    _threads = os.environ.get("KIS_THREADS", "").strip()
    if _threads:
        try:
            numba.set_num_threads(max(1, min(int(_threads), numba.config.NUMBA_NUM_THREADS)))
        except ValueError:
            pass

BACKEND = "numba" if HAVE_NUMBA else "numpy"


def ensemble_kick_numpy(x1: np.ndarray, x2: np.ndarray,
                        theta: float, mu: float, g: float) -> None:
    """Advance every point one kick, in place. Angle uses the pre-kick R^2."""
    angle = theta + mu * (x1 * x1 + x2 * x2)
    c = np.cos(angle)
    s = np.sin(angle)
    new_x1 = g * (c * x1 + s * x2)
    new_x2 = (c * x2 - s * x1) / g
    x1[:] = new_x1
    x2[:] = new_x2


def poincare_orbits_numpy(x1_0: np.ndarray, x2_0: np.ndarray,
                          theta: float, mu: float, g: float,
                          n_kicks: int, escape_r_sq: float):
    """Full stroboscopic orbits for each seed.

    Returns (orbits, escape_kick): orbits has shape (n, n_kicks+1, 2) with
    NaN rows after an escape; escape_kick[i] is the kick at which orbit i
    first exceeded escape_r_sq, or -1 if it never did.
    """
    n = x1_0.size
    orbits = np.full((n, n_kicks + 1, 2), np.nan)
    escape_kick = np.full(n, -1, dtype=np.int64)
    x1 = x1_0.astype(np.float64).copy()
    x2 = x2_0.astype(np.float64).copy()
    orbits[:, 0, 0] = x1
    orbits[:, 0, 1] = x2
    active = x1 * x1 + x2 * x2 <= escape_r_sq
    escape_kick[~active] = 0
    for k in range(1, n_kicks + 1):
        if not np.any(active):
            break
        a1 = x1[active]
        a2 = x2[active]
        angle = theta + mu * (a1 * a1 + a2 * a2)
        c = np.cos(angle)
        s = np.sin(angle)
        n1 = g * (c * a1 + s * a2)
        n2 = (c * a2 - s * a1) / g
        x1[active] = n1
        x2[active] = n2
        idx = np.flatnonzero(active)
        orbits[idx, k, 0] = n1
        orbits[idx, k, 1] = n2
        escaped_now = n1 * n1 + n2 * n2 > escape_r_sq
        escape_kick[idx[escaped_now]] = k
        active[idx[escaped_now]] = False
    return orbits, escape_kick


if HAVE_NUMBA:

    @njit(cache=True, parallel=True)
    def _ensemble_kick_nb(x1, x2, theta, mu, g):
        for i in prange(x1.size):
            a = theta + mu * (x1[i] * x1[i] + x2[i] * x2[i])
            c = np.cos(a)
            s = np.sin(a)
            n1 = g * (c * x1[i] + s * x2[i])
            n2 = (c * x2[i] - s * x1[i]) / g
            x1[i] = n1
            x2[i] = n2

    @njit(cache=True, parallel=True)
    def _poincare_orbits_nb(x1_0, x2_0, theta, mu, g, n_kicks, escape_r_sq):
        n = x1_0.size
        orbits = np.full((n, n_kicks + 1, 2), np.nan)
        escape_kick = np.full(n, -1, dtype=np.int64)
        for i in prange(n):
            p1 = x1_0[i]
            p2 = x2_0[i]
            orbits[i, 0, 0] = p1
            orbits[i, 0, 1] = p2
            if p1 * p1 + p2 * p2 > escape_r_sq:
                escape_kick[i] = 0
                continue
            for k in range(1, n_kicks + 1):
                a = theta + mu * (p1 * p1 + p2 * p2)
                c = np.cos(a)
                s = np.sin(a)
                n1 = g * (c * p1 + s * p2)
                n2 = (c * p2 - s * p1) / g
                p1 = n1
                p2 = n2
                orbits[i, k, 0] = p1
                orbits[i, k, 1] = p2
                if p1 * p1 + p2 * p2 > escape_r_sq:
                    escape_kick[i] = k
                    break
        return orbits, escape_kick

    def ensemble_kick(x1, x2, theta, mu, g):
        _ensemble_kick_nb(x1, x2, theta, mu, g)

    def poincare_orbits(x1_0, x2_0, theta, mu, g, n_kicks, escape_r_sq):
        return _poincare_orbits_nb(
            np.ascontiguousarray(x1_0, dtype=np.float64),
            np.ascontiguousarray(x2_0, dtype=np.float64),
            theta, mu, g, n_kicks, escape_r_sq)

else:
    ensemble_kick = ensemble_kick_numpy
    poincare_orbits = poincare_orbits_numpy
