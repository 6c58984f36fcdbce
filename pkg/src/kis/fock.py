"""Truncated Fock-basis states and operators.

States live on the number basis |0>, ..., |dim-1>.  The top levels of the
basis form a guard band: population found there means the truncation is no
longer trustworthy, and propagation routines raise TruncationOverflow when
the guard holds more than the configured eps_tail.

Quadrature convention: a = X1 + i*X2, so [X1, X2] = i/2, the ground state
has Var(X1) = Var(X2) = 1/4, and a coherent state with amplitude alpha is
centered at (Re alpha, Im alpha) in the classical phase plane.
"""

import numpy as np
from dataclasses import dataclass, field

from scipy.linalg import expm
from scipy.special import gammainc

from .errors import BasisTooSmall, ConvergenceFailure

DEFAULT_EPS_TAIL = 1e-8

# a-posteriori bound on ||U^dag U - I||_max for a freshly exponentiated
# anti-Hermitian generator; failure means the exponential itself is suspect
EXPM_DEFECT_BOUND = 1e-10

# unitarity bound on the retained (non-guard) sub-block for composed operators
UNITARITY_BOUND = 1e-8

ANTIHERM_TOL = 1e-12


@dataclass(frozen=True)
class FockBasis:
    """Truncated number basis with a guard band on the top levels.

    Parameters
    ----------
    dim : int
        Number of retained levels, n = 0 ... dim-1. Must be >= 2.
    eps_tail : float
        Maximum population tolerated in the guard band after a
        propagation step.
    """

    dim: int
    eps_tail: float = DEFAULT_EPS_TAIL

    def __post_init__(self):
        if self.dim < 2:
            raise ValueError(f"dim must be >= 2, got {self.dim}")
        if self.eps_tail <= 0:
            raise ValueError(f"eps_tail must be positive, got {self.eps_tail}")

    @property
    def guard_levels(self) -> int:
        """Number of guard levels: the top 10% of the basis.

        Never fewer than two: the squeeze couples n to n +- 2, so a
        single-level guard would be blind to states of one parity.
        """
        return max(2, self.dim // 10)

    @property
    def guard_start(self) -> int:
        """Index of the first guard level."""
        return self.dim - self.guard_levels


@dataclass(frozen=True)
class QuantumState:
    """Normalized state vector on a truncated basis.

    tail_mass records population the truncation cannot represent: for
    analytically constructed states it is the weight discarded outside the
    basis, for propagated states it is the population of the guard band.
    """

    basis: FockBasis
    amps: np.ndarray
    tail_mass: float = 0.0

    def __post_init__(self):
        amps = np.asarray(self.amps, dtype=np.complex128)
        if amps.shape != (self.basis.dim,):
            raise ValueError(
                f"amps shape {amps.shape} does not match basis dim {self.basis.dim}"
            )
        amps.setflags(write=False)
        object.__setattr__(self, "amps", amps)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))

    def guard_mass(self) -> float:
        """Population currently sitting in the guard band."""
        g = self.amps[self.basis.guard_start:]
        return float(np.real(np.vdot(g, g)))


@dataclass(frozen=True)
class Operator:
    """Dense matrix on a truncated basis."""

    basis: FockBasis
    matrix: np.ndarray = field(repr=False)

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=np.complex128)
        if m.shape != (self.basis.dim, self.basis.dim):
            raise ValueError(
                f"matrix shape {m.shape} does not match basis dim {self.basis.dim}"
            )
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    def apply(self, state: QuantumState) -> np.ndarray:
        """Raw matrix-vector product; callers handle renormalization."""
        if state.basis != self.basis:
            raise ValueError("state and operator live on different bases")
        return self.matrix @ state.amps


def unitarity_defect(op: Operator, exclude_guard: bool = True) -> float:
    """Max-norm of U^dag U - I, optionally restricted to non-guard levels.

    The guard rows of a truncated propagator are distorted by the missing
    levels above; the retained sub-block is what the dynamics actually
    uses, so that is where unitarity is enforced.
    """
    u = op.matrix
    prod = u.conj().T @ u
    defect = prod - np.eye(op.basis.dim)
    if exclude_guard:
        k = op.basis.guard_start
        defect = defect[:k, :k]
    return float(np.max(np.abs(defect)))


def coherent_state(basis: FockBasis, alpha: complex) -> QuantumState:
    """Coherent state |alpha> on the truncated basis.

    Amplitudes follow alpha^n / sqrt(n!), normalized over the retained
    levels.  tail_mass is the Poisson weight analytically discarded above
    the truncation; the construction refuses bases too small to hold the
    state (mean + 6 sigma + margin heuristic, plus an explicit check that
    the discarded weight stays below eps_tail).

    Raises
    ------
    BasisTooSmall
        If the support heuristic fails or the discarded weight exceeds
        basis.eps_tail.
    """
    alpha = complex(alpha)
    a2 = abs(alpha) ** 2
    if a2 + 6.0 * abs(alpha) + 10.0 >= basis.dim:
        raise BasisTooSmall(
            f"coherent state |alpha|={abs(alpha):.4g} needs more than "
            f"{basis.dim} levels (support bound |a|^2+6|a|+10)"
        )
    # regularized lower incomplete gamma = upper Poisson tail weight:
    # 1 - CDF_Poisson(dim-1; |alpha|^2)
    discarded = float(gammainc(basis.dim, a2))
    if discarded > basis.eps_tail:
        raise BasisTooSmall(
            f"discarded coherent-state weight {discarded:.3e} exceeds "
            f"eps_tail {basis.eps_tail:.3e} at dim {basis.dim}"
        )
    # recurrence keeps intermediate values in range for any sane alpha
    amps = np.zeros(basis.dim, dtype=np.complex128)
    amps[0] = 1.0
    for k in range(1, basis.dim):
        amps[k] = amps[k - 1] * alpha / np.sqrt(k)
    amps /= np.linalg.norm(amps)
    return QuantumState(basis=basis, amps=amps, tail_mass=discarded)


def number_operator(basis: FockBasis) -> Operator:
    """Diagonal operator with entries n (the number operator)."""
    return Operator(basis, np.diag(np.arange(basis.dim, dtype=np.complex128)))


def nonlinear_operator(basis: FockBasis) -> Operator:
    """Diagonal operator with entries n(n-1), the normal-ordered quartic."""
    n = np.arange(basis.dim, dtype=np.float64)
    return Operator(basis, np.diag((n * (n - 1.0)).astype(np.complex128)))


def squeeze_generator(basis: FockBasis, r: float) -> Operator:
    """Anti-Hermitian generator (r/2)((a^dag)^2 - a^2) on the truncated basis.

    Matrix elements: +(r/2) sqrt((n+1)(n+2)) on the n -> n+2 band and the
    negated value on the transpose band, so K = -K^dag holds exactly.
    """
    k = np.zeros((basis.dim, basis.dim), dtype=np.complex128)
    if basis.dim >= 3:
        n = np.arange(basis.dim - 2, dtype=np.float64)
        band = 0.5 * r * np.sqrt((n + 1.0) * (n + 2.0))
        idx = np.arange(basis.dim - 2)
        k[idx + 2, idx] = band
        k[idx, idx + 2] = -band
    return Operator(basis, k)


def expm_unitary(k: Operator) -> Operator:
    """Exponential of an anti-Hermitian generator, checked a posteriori.

    Uses scaling-and-squaring with Pade approximants underneath; instead of
    trusting an a-priori error bound, the result is checked directly:
    ||U^dag U - I||_max over the full matrix must stay below 1e-10
    (the generator being exactly anti-Hermitian, the exact exponential is
    exactly unitary, so any defect is the method's own error).

    Raises
    ------
    ValueError
        If k is not anti-Hermitian within 1e-12.
    ConvergenceFailure
        If the a-posteriori unitarity defect exceeds 1e-10.
    """
    m = k.matrix
    skew = float(np.max(np.abs(m + m.conj().T)))
    if skew > ANTIHERM_TOL:
        raise ValueError(f"generator not anti-Hermitian: max |K+K^dag| = {skew:.3e}")
    u = expm(m)
    defect = float(np.max(np.abs(u.conj().T @ u - np.eye(k.basis.dim))))
    if defect > EXPM_DEFECT_BOUND:
        raise ConvergenceFailure(
            f"matrix exponential unitarity defect {defect:.3e} exceeds "
            f"{EXPM_DEFECT_BOUND:.1e}"
        )
    return Operator(k.basis, u)
