"""Quantum dynamics of the kicked oscillator.

One kick applies U_pa (squeeze by gain g = e^r) followed by U_nl (number-
dependent phase rotation theta*n + (mu/2)*n*(n-1)).  The composed one-kick
operator plays the role of a Floquet operator; its eigenvectors are the
quasi-energy eigenstates used for the participation-ratio diagnostic.
"""

import numpy as np
from dataclasses import dataclass, field

from scipy.linalg import schur

from .errors import EigensolverFailure, TruncationOverflow
from .fock import (
    FockBasis,
    Operator,
    QuantumState,
    UNITARITY_BOUND,
    expm_unitary,
    squeeze_generator,
    unitarity_defect,
)
from .params import MapParams

# norm drift above this per kick indicates the truncation is failing
NORM_DRIFT_BOUND = 1e-10


@dataclass(frozen=True)
class KickPropagator:
    """One-kick operators: u_nl (diagonal), u_pa (squeeze), u_kick = u_nl u_pa."""

    params: MapParams
    basis: FockBasis
    u_nl: Operator
    u_pa: Operator
    u_kick: Operator


def build_kick(params: MapParams, basis: FockBasis) -> KickPropagator:
    """Construct the one-kick propagator on the given basis.

    u_nl has diagonal entries exp(-i(theta*n + (mu/2) n (n-1))); u_pa is the
    exponentiated squeeze generator; the product applies the squeeze first.

    Raises
    ------
    TruncationOverflow
        If the composed operator fails the unitarity bound on the retained
        (non-guard) levels, meaning the basis is too small for these
        parameters.
    """
    n = np.arange(basis.dim, dtype=np.float64)
    phases = np.exp(-1j * (params.theta * n + 0.5 * params.mu * n * (n - 1.0)))
    u_nl = Operator(basis, np.diag(phases))
    u_pa = expm_unitary(squeeze_generator(basis, params.r))
    # diagonal times dense: scale rows
    u_kick = Operator(basis, phases[:, None] * u_pa.matrix)
    defect = unitarity_defect(u_kick, exclude_guard=True)
    if defect > UNITARITY_BOUND:
        raise TruncationOverflow(
            f"kick operator unitarity defect {defect:.3e} on retained levels "
            f"exceeds {UNITARITY_BOUND:.1e}; increase dim"
        )
    return KickPropagator(params=params, basis=basis, u_nl=u_nl, u_pa=u_pa,
                          u_kick=u_kick)


@dataclass(frozen=True)
class Trajectory:
    """States at kick 0 ... n_kicks with per-step truncation bookkeeping."""

    states: list
    tail_mass: np.ndarray
    norm_drifts: np.ndarray

    def __len__(self) -> int:
        return len(self.states)


def evolve(state: QuantumState, prop: KickPropagator, n_kicks: int) -> Trajectory:
    """Iterate the kick map, returning every intermediate state.

    Each step renormalizes (drift must stay below 1e-10, anything larger
    means the truncated operator lost probability) and measures the guard-
    band population.

    Raises
    ------
    TruncationOverflow
        When guard population exceeds basis.eps_tail or the norm drifts
        beyond 1e-10 in one step.  The exception carries the kick index
        and the partial trajectory computed so far.
    """
    if state.basis != prop.basis:
        raise ValueError("state and propagator live on different bases")
    if n_kicks < 0:
        raise ValueError(f"n_kicks must be >= 0, got {n_kicks}")
    basis = state.basis
    u = prop.u_kick.matrix
    gs = basis.guard_start

    states = [state]
    tails = [state.guard_mass()]
    drifts = [0.0]
    psi = state.amps.copy()
    for k in range(1, n_kicks + 1):
        psi = u @ psi
        norm = np.linalg.norm(psi)
        drift = abs(norm - 1.0)
        psi /= norm
        tail = float(np.sum(np.abs(psi[gs:]) ** 2))
        if tail > basis.eps_tail or drift > NORM_DRIFT_BOUND:
            partial = Trajectory(states=states,
                                 tail_mass=np.array(tails),
                                 norm_drifts=np.array(drifts))
            reason = (f"guard population {tail:.3e} > eps_tail {basis.eps_tail:.1e}"
                      if tail > basis.eps_tail
                      else f"norm drift {drift:.3e} > {NORM_DRIFT_BOUND:.1e}")
            raise TruncationOverflow(
                f"truncation overflow at kick {k}: {reason}",
                kick=k, partial=partial)
        states.append(QuantumState(basis=basis, amps=psi.copy(), tail_mass=tail))
        tails.append(tail)
        drifts.append(drift)
    return Trajectory(states=states,
                      tail_mass=np.array(tails),
                      norm_drifts=np.array(drifts))


def mean_number(state: QuantumState) -> float:
    """<n> = sum n |amps[n]|^2."""
    p = np.abs(state.amps) ** 2
    return float(np.sum(np.arange(state.basis.dim) * p))


def number_distribution(state: QuantumState) -> np.ndarray:
    """P(n) = |amps[n]|^2."""
    return np.abs(state.amps) ** 2


def mean_quadratures(state: QuantumState) -> tuple[float, float]:
    """(<X1>, <X2>) under the convention a = X1 + i X2."""
    amps = state.amps
    n = np.arange(1, state.basis.dim, dtype=np.float64)
    a_expect = np.sum(np.conj(amps[:-1]) * np.sqrt(n) * amps[1:])
    return float(np.real(a_expect)), float(np.imag(a_expect))


def ground_state_probability(p: np.ndarray, phi_tau: float) -> float:
    """Readout signal sum_n P(n) cos^2(phi_tau * n).

    p must be a normalized number distribution.
    """
    p = np.asarray(p, dtype=np.float64)
    total = float(np.sum(p))
    if abs(total - 1.0) > 1e-8:
        raise ValueError(f"distribution not normalized: sum = {total!r}")
    n = np.arange(p.size, dtype=np.float64)
    return float(np.sum(p * np.cos(phi_tau * n) ** 2))


@dataclass(frozen=True)
class FloquetSpectrum:
    """Eigenphases and eigenvectors of the one-kick operator."""

    eigenphases: np.ndarray
    eigenvectors: np.ndarray = field(repr=False)

    def overlaps(self, state: QuantumState) -> np.ndarray:
        """|<eigenvector_k | state>|^2 for every k."""
        proj = self.eigenvectors.conj().T @ state.amps
        return np.abs(proj) ** 2


def floquet_analysis(prop: KickPropagator,
                     state: QuantumState) -> tuple[FloquetSpectrum, float]:
    """Eigendecomposition of the kick operator plus a participation ratio.

    The Schur form of a unitary matrix is diagonal with an exactly unitary
    transform, which keeps the overlap sum rule clean at large dim where a
    general eigensolver would lose orthogonality.  participation is the
    inverse participation ratio 1 / sum_k p_k^2 of the state over the
    eigenbasis: roughly the number of quasi-energy eigenstates supporting
    the state.

    Raises
    ------
    EigensolverFailure
        If the Schur form is not numerically diagonal.
    """
    t, q = schur(prop.u_kick.matrix, output="complex")
    off = t - np.diag(np.diag(t))
    max_off = float(np.max(np.abs(off)))
    if max_off > 1e-8:
        raise EigensolverFailure(
            f"Schur form off-diagonal residue {max_off:.3e}; kick operator "
            "is too far from unitary to diagonalize reliably")
    phases = np.angle(np.diag(t))
    spectrum = FloquetSpectrum(eigenphases=phases, eigenvectors=q)
    p = spectrum.overlaps(state)
    participation = float(1.0 / np.sum(p ** 2))
    return spectrum, participation
