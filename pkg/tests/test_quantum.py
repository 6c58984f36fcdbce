import math

import numpy as np
import pytest

from kis.errors import TruncationOverflow
from kis.fock import FockBasis, QuantumState, coherent_state, unitarity_defect
from kis.params import MapParams
from kis.quantum import (build_kick, evolve, floquet_analysis,
                         ground_state_probability, mean_number,
                         mean_quadratures, number_distribution)

FIG3 = MapParams.from_g(2.0 * math.pi, 0.01 * math.pi, 1.2)


def fock_state(basis, n):
    amps = np.zeros(basis.dim, dtype=complex)
    amps[n] = 1.0
    return QuantumState(basis, amps)


def test_build_kick_identity_limits():
    b = FockBasis(32)
    u = build_kick(MapParams(0.0, 0.0, 0.0), b).u_kick.matrix
    assert np.max(np.abs(u - np.eye(32))) < 1e-12
    # integer phase winding: e^{-i 2 pi n} = 1
    u = build_kick(MapParams(2.0 * math.pi, 0.0, 0.0), b).u_kick.matrix
    assert np.max(np.abs(u - np.eye(32))) < 1e-12


def test_build_kick_unitarity_fig3():
    prop = build_kick(FIG3, FockBasis(128))
    assert unitarity_defect(prop.u_kick, exclude_guard=True) <= 1e-8


def test_u_nl_diagonal_entries():
    b = FockBasis(16)
    prop = build_kick(MapParams(0.3, 0.05, 0.1), b)
    n = np.arange(16)
    expected = np.exp(-1j * (0.3 * n + 0.025 * n * (n - 1)))
    assert np.max(np.abs(np.diag(prop.u_nl.matrix) - expected)) < 1e-14
    off = prop.u_nl.matrix - np.diag(np.diag(prop.u_nl.matrix))
    assert np.count_nonzero(off) == 0


def test_kick_order_squeeze_first():
    # one kick of vacuum: the rotation is diagonal, so <n> must equal the
    # squeezed-vacuum value regardless of theta and mu
    b = FockBasis(96)
    for g in (1.2, 1.5):
        prop = build_kick(MapParams.from_g(1.1, 0.02, g), b)
        traj = evolve(coherent_state(b, 0.0), prop, 1)
        assert abs(mean_number(traj.states[1]) - math.sinh(math.log(g)) ** 2) < 1e-8


def test_evolve_vacuum_invariant_without_squeeze():
    b = FockBasis(32)
    prop = build_kick(MapParams(0.7, 0.3, 0.0), b)
    traj = evolve(coherent_state(b, 0.0), prop, 10)
    for s in traj.states:
        assert abs(abs(s.amps[0]) - 1.0) < 1e-14


def test_evolve_diagonal_preserves_distribution():
    b = FockBasis(64)
    prop = build_kick(MapParams(0.9, 0.04, 0.0), b)
    state = coherent_state(b, 1.0)
    traj = evolve(state, prop, 100)
    p0 = number_distribution(traj.states[0])
    for s in traj.states[1:]:
        assert np.max(np.abs(number_distribution(s) - p0)) < 1e-12
        assert abs(mean_number(s) - 1.0) < 1e-10


def test_evolve_norm_drift_and_tail_bookkeeping():
    b = FockBasis(128)
    traj = evolve(coherent_state(b, 0.0), build_kick(FIG3, b), 100)
    assert len(traj.states) == 101
    assert np.max(traj.norm_drifts) < 1e-10
    assert np.max(traj.tail_mass) <= b.eps_tail
    for s in traj.states:
        assert abs(s.norm() - 1.0) < 1e-12


def test_evolve_truncation_overflow():
    b = FockBasis(16)
    prop = build_kick(MapParams.from_g(2.0 * math.pi, 0.01 * math.pi, 2.0), b)
    with pytest.raises(TruncationOverflow) as err:
        evolve(coherent_state(b, 0.0), prop, 50)
    assert err.value.kick is not None and err.value.kick >= 1
    assert err.value.partial is not None
    assert len(err.value.partial.states) == err.value.kick


def test_evolve_rejects_basis_mismatch():
    prop = build_kick(FIG3, FockBasis(32))
    state = coherent_state(FockBasis(64), 0.0)
    with pytest.raises(ValueError):
        evolve(state, prop, 1)


def test_mean_number_trivials():
    b = FockBasis(64)
    assert mean_number(coherent_state(b, 0.0)) == 0.0
    assert mean_number(fock_state(b, 3)) == 3.0
    assert abs(mean_number(coherent_state(b, 1.0)) - 1.0) < 1e-10


def test_number_distribution_normalized():
    p = number_distribution(coherent_state(FockBasis(64), 1.2 + 0.5j))
    assert abs(p.sum() - 1.0) < 1e-10


def test_mean_quadratures_centering():
    s = coherent_state(FockBasis(64), 0.5 + 0.3j)
    x1, x2 = mean_quadratures(s)
    assert abs(x1 - 0.5) < 1e-10
    assert abs(x2 - 0.3) < 1e-10


def test_ground_state_probability():
    b = FockBasis(64)
    assert ground_state_probability(number_distribution(coherent_state(b, 0.0)),
                                    0.37) == 1.0
    p = number_distribution(fock_state(b, 1))
    assert ground_state_probability(p, math.pi / 2.0) < 1e-20
    # coherent alpha=1: direct factorial-sum oracle
    alpha_sq = 1.0
    oracle = sum(math.exp(-alpha_sq) * alpha_sq ** n / math.factorial(n)
                 * math.cos(0.01 * n) ** 2 for n in range(64))
    got = ground_state_probability(number_distribution(coherent_state(b, 1.0)),
                                   0.01)
    assert abs(got - oracle) < 1e-12


def test_ground_state_probability_rejects_unnormalized():
    with pytest.raises(ValueError):
        ground_state_probability(np.array([0.5, 0.2]), 0.01)


def test_floquet_diagonal_case():
    b = FockBasis(32)
    prop = build_kick(MapParams(0.7, 0.0, 0.0), b)
    spectrum, participation = floquet_analysis(prop, fock_state(b, 3))
    assert abs(participation - 1.0) < 1e-9
    assert np.all(spectrum.eigenphases > -math.pi)
    assert np.all(spectrum.eigenphases <= math.pi)


def test_floquet_spectrum_properties():
    b = FockBasis(64)
    prop = build_kick(FIG3, b)
    state = coherent_state(b, 0.5)
    spectrum, participation = floquet_analysis(prop, state)
    q = spectrum.eigenvectors
    assert np.max(np.abs(q.conj().T @ q - np.eye(64))) < 1e-8
    overlaps = spectrum.overlaps(state)
    assert abs(overlaps.sum() - 1.0) < 1e-8
    assert participation >= 1.0
