"""Conversion between trapped-ion drive parameters and map parameters.

A carrier pulse of duration t_carrier at Rabi frequency omega with
Lamb-Dicke parameter eta realizes the nonlinear rotation; a pair of Raman
sideband drives realizes the parametric kick.  All angular quantities are
radians, durations seconds, frequencies rad/s.
"""

import math
from dataclasses import dataclass
from typing import NamedTuple


@dataclass(frozen=True)
class IonParams:
    """Experimental drive parameters.

    delta1 - delta2 = 2*nu (twice the trap frequency) is the caller's
    responsibility; nu itself is not needed by the conversions and is not
    stored.
    """

    omega: float = 0.0       # carrier Rabi frequency (rad/s)
    eta: float = 0.0         # carrier Lamb-Dicke parameter
    t_carrier: float = 0.0   # carrier pulse duration (s)
    omega1: float = 0.0      # Raman Rabi frequencies (rad/s)
    omega2: float = 0.0
    eta_r: float = 0.0       # Raman Lamb-Dicke parameter (delta_k * x0)
    delta1: float = 0.0      # Raman detunings (rad/s)
    delta2: float = 0.0
    t_raman: float = 0.0     # Raman pulse duration (s)


class CarrierMap(NamedTuple):
    theta: float
    mu: float
    phi: float


class RamanMap(NamedTuple):
    kappa: float
    g: float


def carrier_to_map(ion: IonParams) -> CarrierMap:
    """Map a carrier pulse to the rotation parameters.

    theta = T * omega * eta^2, mu = T * omega * eta^4 / 2, and the readout
    phase rate phi = omega * eta^2 / 2.  Note mu / theta = eta^2 / 2 for
    any inputs.
    """
    eta_sq = ion.eta * ion.eta
    theta = ion.t_carrier * ion.omega * eta_sq
    mu = 0.5 * ion.t_carrier * ion.omega * eta_sq * eta_sq
    phi = 0.5 * ion.omega * eta_sq
    return CarrierMap(theta=theta, mu=mu, phi=phi)


def raman_to_map(ion: IonParams) -> RamanMap:
    """Map the Raman pair to the squeeze strength.

    kappa = omega1 * omega2 * eta_r^2 / (8 * delta1 * delta2) and the
    per-kick gain is g = exp(kappa * t_raman).

    Raises
    ------
    ZeroDivisionError
        If either detuning is zero.
    """
    if ion.delta1 == 0.0 or ion.delta2 == 0.0:
        raise ZeroDivisionError("Raman detunings must be nonzero")
    kappa = ion.omega1 * ion.omega2 * ion.eta_r ** 2 / (8.0 * ion.delta1 * ion.delta2)
    return RamanMap(kappa=kappa, g=math.exp(kappa * ion.t_raman))


def required_carrier_time(theta: float, ion: IonParams) -> float:
    """Carrier duration producing a given theta; inverse of carrier_to_map."""
    denom = ion.omega * ion.eta * ion.eta
    if denom == 0.0:
        raise ZeroDivisionError("omega and eta must be nonzero to invert theta")
    return theta / denom


DISCREPANCY_NOTE = (
    "note: theta and mu above follow the first-order pulse-area formulas\n"
    "theta = T*Omega*eta^2 and mu = T*Omega*eta^4/2. For the operating point\n"
    "Omega = 1e6 rad/s, eta = 0.2, T = 10 us these give theta = 0.4 and\n"
    "mu = 0.008, not the rounder theta ~ 1.0 / mu ~ 0.02 sometimes quoted\n"
    "for the same values; the formulas are authoritative here."
)


def report(ion: IonParams) -> str:
    """Human-readable conversion report for the CLI."""
    lines = []
    if ion.omega or ion.eta or ion.t_carrier:
        c = carrier_to_map(ion)
        lines.append("carrier pulse:")
        lines.append(f"  omega     = {ion.omega:.6g} rad/s")
        lines.append(f"  eta       = {ion.eta:.6g}")
        lines.append(f"  t_carrier = {ion.t_carrier:.6g} s")
        lines.append(f"  theta     = {c.theta:.12g} rad")
        lines.append(f"  mu        = {c.mu:.12g} rad")
        lines.append(f"  phi       = {c.phi:.12g} rad/s (readout phase rate)")
    if ion.omega1 or ion.omega2 or ion.t_raman:
        rm = raman_to_map(ion)
        lines.append("raman pair:")
        lines.append(f"  omega1  = {ion.omega1:.6g} rad/s")
        lines.append(f"  omega2  = {ion.omega2:.6g} rad/s")
        lines.append(f"  eta_r   = {ion.eta_r:.6g}")
        lines.append(f"  delta1  = {ion.delta1:.6g} rad/s")
        lines.append(f"  delta2  = {ion.delta2:.6g} rad/s")
        lines.append(f"  t_raman = {ion.t_raman:.6g} s")
        lines.append(f"  kappa   = {rm.kappa:.12g} 1/s")
        lines.append(f"  g       = {rm.g:.12g}")
        lines.append(f"  r=ln g  = {math.log(rm.g):.12g}")
    if not lines:
        lines.append("no drive parameters given")
    lines.append("")
    lines.append(DISCREPANCY_NOTE)
    return "\n".join(lines)
