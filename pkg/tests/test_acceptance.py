"""Acceptance suite: one test (or group of tests) per criterion, each run at
its stated tolerance. A summary line per criterion is printed at the end of
the pytest run."""

import math

import numpy as np
import pytest

from ensembles import random_product_state, random_unitary, random_x_state
from spincorr import oracle
from spincorr.families import (
    cavity_decay,
    ex5_initial_oracles,
    ghz,
    jc_pair,
    quasi_bell,
    rank2,
    sde_death_time,
    werner,
)
from spincorr.measures import (
    concurrence,
    concurrence_spin_flip,
    concurrence_x_state,
    spin_correlation_matrix,
    werner_mu,
)
from spincorr.reconcile import reconcile
from spincorr.states import DensityMatrix, from_matrix, from_pure, reduce, sample_random

criterion = pytest.mark.criterion


@criterion(1, "Werner grid: I = |x|, C and mu closed forms")
def test_c01_werner_grid():
    for x in np.linspace(-1 / 3, 1, 201):
        rho = werner(x)
        scm = spin_correlation_matrix(rho)
        assert abs(scm.indicator - abs(x)) <= 1e-10, x
        assert abs(concurrence(rho) - max(0.0, 1.5 * (x - 1 / 3))) <= 1e-10, x
        mu = 1.0 if x <= 1 / 3 else 1.5 * (1 - x)
        assert abs(werner_mu(x) - mu) <= 1e-10, x


QB_GRID = np.linspace(0, math.pi / 2, 101)


@criterion(2, "quasi-Bell grid: I = (sin^2 2t + 2|sin 2t|)/3 and C = sin^2 2t")
def test_c02_quasi_bell_indicator():
    for theta in QB_GRID:
        s = math.sin(2 * theta)
        got = spin_correlation_matrix(quasi_bell(theta)).indicator
        assert abs(got - (s * s + 2 * abs(s)) / 3) <= 1e-10, theta


@criterion(2, "quasi-Bell grid: I = (sin^2 2t + 2|sin 2t|)/3 and C = sin^2 2t")
def test_c02_quasi_bell_concurrence():
    # Expected to fail: the concurrence of cos t|ee> + sin t|gg> is |sin 2t|,
    # which differs from sin^2 2t everywhere except sin 2t in {0, 1}.
    worst = max(abs(concurrence(quasi_bell(t)) - math.sin(2 * t) ** 2) for t in QB_GRID)
    assert worst <= 1e-10, f"max |C - sin^2 2t| = {worst:.3g}"


@criterion(3, "GHZ pair: C = 0, I = 1 with N = 1")
def test_c03_ghz_pair():
    rho = reduce(from_pure(ghz(3)), [1, 2])
    scm = spin_correlation_matrix(rho)
    assert abs(concurrence(rho)) <= 1e-12
    assert abs(scm.indicator - 1) <= 1e-12
    assert scm.n_nonzero == 1


@criterion(4, "rank-2 spot checks")
def test_c04_rank2():
    rho = rank2(1 - 1e-9, math.acos(0.5))
    assert abs(concurrence(rho) - 0.5) <= 1e-6
    assert abs(spin_correlation_matrix(rho).indicator - 5 / 12) <= 1e-6
    for x in (-0.6, 0.0, 0.3, 0.9):
        rho = rank2(x, math.pi / 2)
        assert abs(spin_correlation_matrix(rho).indicator) <= 1e-10
        assert abs(concurrence(rho)) <= 1e-10


JC_GRID = np.linspace(0, 2 * math.pi, 500)


@criterion(5, "double JC at theta = pi/4: C = cos^4 T, I = (2 + cos^2 T) cos^2 T / 3")
def test_c05_jc_quarter_pi():
    for T in JC_GRID:
        rho = jc_pair(math.pi / 4, T)
        c2 = math.cos(T) ** 2
        assert abs(concurrence(rho) - c2 * c2) <= 1e-9, T
        assert abs(spin_correlation_matrix(rho).indicator - (2 + c2) * c2 / 3) <= 1e-9, T


@criterion(6, "double JC at theta = pi/6: sudden-death window, I stays positive")
def test_c06_jc_death_window():
    theta = math.pi / 6
    spacing = JC_GRID[1] - JC_GRID[0]
    dead = 0
    for T in JC_GRID:
        rho = jc_pair(theta, T)
        c = concurrence(rho)
        if math.sin(T) ** 2 >= math.tan(theta):
            assert c == 0.0, T
            dead += 1
        else:
            assert c > 0.0, T
        if abs(T - math.pi / 2) >= spacing:
            assert spin_correlation_matrix(rho).indicator > 0.0, T
    assert dead > 0


@criterion(7, "cavity decay a = 1: death time, C = 0 after it, I > 0 and decaying")
def test_c07_cavity_decay():
    t_death = sde_death_time(1.0)
    assert abs(t_death - math.log((2 + math.sqrt(2)) / 2)) <= 1e-8
    grid = np.linspace(0, 50, 2001)
    values, counts = [], []
    for T in grid:
        rho = cavity_decay(1.0, T)
        scm = spin_correlation_matrix(rho)
        if T > t_death:
            assert concurrence(rho) == 0.0, T
        assert scm.indicator > 0.0, T
        values.append(scm.indicator)
        counts.append(scm.n_nonzero)
    # past the last local minimum (the last change of N) I decays monotonically
    tail = max(k for k in range(1, len(counts)) if counts[k] != counts[k - 1])
    assert all(b < a for a, b in zip(values[tail:], values[tail + 1 :]))
    assert grid[tail] < 50
    assert values[-1] < 1e-6


@criterion(8, "initial cavity state: C = (2/3)(1 - sqrt(a(1-a)))")
def test_c08_initial_concurrence():
    for a in (0.0, 0.25, 0.5, 0.75, 1.0):
        expected = 2 / 3 * (1 - math.sqrt(a * (1 - a)))
        assert abs(concurrence(cavity_decay(a, 0.0)) - expected) <= 1e-10
        assert abs(ex5_initial_oracles(a).concurrence - expected) <= 1e-15


@criterion(9, "concurrence: X-state closed form and local-unitary invariance")
def test_c09_x_state_oracle():
    rng = np.random.default_rng(9001)
    for _ in range(1000):
        rho = random_x_state(rng)
        ref = concurrence_x_state(rho)
        assert abs(concurrence(rho) - ref) <= 1e-9
        assert abs(concurrence_spin_flip(rho) - ref) <= 1e-9


@criterion(9, "concurrence: X-state closed form and local-unitary invariance")
def test_c09_local_unitary_invariance():
    rng = np.random.default_rng(9002)
    for k in range(1000):
        rho = sample_random(2, k % 4 + 1, [9002, k])
        u = np.kron(random_unitary(rng), random_unitary(rng))
        rotated = DensityMatrix(2, u @ rho.mat @ u.conj().T)
        assert abs(concurrence(rotated) - concurrence(rho)) <= 1e-8


@criterion(10, "random ensemble: ranges, product states, C > 0 implies I > 0")
def test_c10_random_ensemble():
    for k in range(10_000):
        rho = sample_random(2, k % 4 + 1, [10, k])
        i = spin_correlation_matrix(rho).indicator
        c = concurrence(rho)
        assert 0.0 <= i <= 1.0
        assert 0.0 <= c <= 1.0
        assert not (c > 1e-6 and i <= 1e-6), k


@criterion(10, "random ensemble: ranges, product states, C > 0 implies I > 0")
def test_c10_product_states():
    rng = np.random.default_rng(10)
    for _ in range(10_000):
        rho = random_product_state(rng)
        assert spin_correlation_matrix(rho).indicator <= 1e-10
        assert concurrence(rho) <= 1e-10


@criterion(11, "reconciliation: W state and initial cavity indicator")
def test_c11_reconcile():
    w = reconcile("w_state")
    assert w.value("published") == 5 / 9
    assert abs(w.value("definitional") - w.value("oracle")) <= 1e-10
    assert abs(w.value("definitional") - 14 / 27) <= 1e-10
    ex5 = reconcile("ex5_indicator", a=1.0, T=0.0)
    assert abs(ex5.value("definitional") - 14 / 27) <= 1e-10
    assert abs(ex5.value("oracle") - 14 / 27) <= 1e-10


@criterion(12, "negative entry: raw I_zx = -1/4 for (|ee><ee| + |++><++|)/2")
def test_c12_negative_entry():
    rho = from_matrix(0.5 * np.diag([1.0, 0, 0, 0]) + 0.5 * np.full((4, 4), 0.25))
    scm = spin_correlation_matrix(rho)
    ref = oracle.pair_matrix(oracle.moment, rho.mat, 1, 2)
    assert abs(ref[2, 0] + 0.25) <= 1e-12
    assert abs(scm.entry("z", "x") + 0.25) <= 1e-12
    assert scm.negative_count >= 1
