"""State families, closed-form two-atom dynamics and their analytic formulas.

Times are dimensionless: ``T = lambda t`` for the double Jaynes-Cummings
evolution and ``T = Gamma t`` for decay into two identical vacuum cavities.
The ``*_oracle`` functions and :func:`ex5_oracles` evaluate published closed
forms verbatim; they are reference values, not the definitional path.
"""

import math
from typing import NamedTuple

import numpy as np
from scipy.optimize import bisect

from .errors import CapacityError, DomainError
from .linalg import kron
from .measures import rank2_mu, werner_mu
from .pauli import pauli_matrix
from .states import DensityMatrix, PureState, from_pure

SDE_HORIZON = 50.0
SDE_XTOL = 1e-10

__all__ = [
    "quasi_bell_ket",
    "quasi_bell",
    "ghz",
    "w3",
    "werner",
    "rank2",
    "jc_pair",
    "jc_concurrence_oracle",
    "jc_indicator_oracle",
    "cavity_elements",
    "cavity_decay",
    "ex5_oracles",
    "ex5_initial_oracles",
    "sde_death_time",
    "FAMILY_PARAMS",
    "family_state",
    "family_mu",
]


def quasi_bell_ket(theta):
    """``cos(theta)|ee> + sin(theta)|gg>``."""
    return PureState(2, [math.cos(theta), 0.0, 0.0, math.sin(theta)])


def quasi_bell(theta):
    return from_pure(quasi_bell_ket(theta))


def ghz(n=3):
    """``(|e...e> + |g...g>)/sqrt(2)`` on ``n`` qubits, ``2 <= n <= 4``."""
    if n < 2:
        raise DomainError(f"GHZ state needs at least 2 qubits, got {n}")
    if n > 4:
        raise CapacityError(f"GHZ state on {n} qubits exceeds the supported size")
    amps = np.zeros(2**n)
    amps[0] = amps[-1] = 1.0 / math.sqrt(2.0)
    return PureState(n, amps)


def w3():
    """Three-qubit W state, equal superposition of the single-excitation kets."""
    amps = np.zeros(8)
    # |egg>, |geg>, |gge>
    amps[[0b011, 0b101, 0b110]] = 1.0 / math.sqrt(3.0)
    return PureState(3, amps)


def werner(x):
    """``(1 - x) I/4 + x |psi-><psi-|`` with the singlet
    ``|psi-> = (|eg> - |ge>)/sqrt(2)``, whose correlation tensor is
    ``-x`` times the identity. Positive only for ``-1/3 <= x <= 1``."""
    singlet = np.array([0.0, 1.0, -1.0, 0.0]) / math.sqrt(2.0)
    m = (1.0 - x) * np.eye(4) / 4.0 + x * np.outer(singlet, singlet)
    return DensityMatrix(2, m)


def rank2(x, theta):
    """Rank-2 family
    ``(1/4)[1 + (s3 + x t3) sin(theta) + (s1 t1 - x s2 t2) cos(theta) + x s3 t3]``
    where ``s`` acts on qubit 1 and ``t`` on qubit 2."""
    if not abs(x) < 1:
        raise DomainError(f"rank-2 family needs |x| < 1, got {x}")
    one = np.eye(2)
    sx, sy, sz = (pauli_matrix(a) for a in "xyz")
    s, c = math.sin(theta), math.cos(theta)
    m = (
        kron(one, one)
        + s * (kron(sz, one) + x * kron(one, sz))
        + c * (kron(sx, sx) - x * kron(sy, sy))
        + x * kron(sz, sz)
    ) / 4.0
    return DensityMatrix(2, m)


def jc_pair(theta, T):
    """Two atoms, each resonant with its own vacuum mode, starting from
    :func:`quasi_bell`. X-shaped with the coherence ``b23`` identically zero."""
    c2 = math.cos(theta) ** 2
    cT, sT = math.cos(T), math.sin(T)
    m = np.zeros((4, 4))
    m[0, 0] = c2 * cT**4
    m[1, 1] = m[2, 2] = 0.25 * c2 * math.sin(2 * T) ** 2
    m[3, 3] = c2 * sT**4 + math.sin(theta) ** 2
    m[0, 3] = m[3, 0] = 0.5 * math.sin(2 * theta) * cT**2
    return DensityMatrix(2, m)


def jc_concurrence_oracle(theta, T):
    """``2 cos^2 T cos^2 theta max(0, |tan theta| - sin^2 T)``."""
    c2 = math.cos(theta) ** 2
    if c2 == 0.0:
        return 0.0
    return 2.0 * math.cos(T) ** 2 * c2 * max(0.0, abs(math.tan(theta)) - math.sin(T) ** 2)


def jc_indicator_oracle(theta, T):
    """Published closed form for the indicator along :func:`jc_pair`."""
    c2 = math.cos(theta) ** 2
    s2 = math.sin(theta) ** 2
    sin2T2 = math.sin(2 * T) ** 2
    coh = math.sin(2 * theta) * math.cos(T) ** 2
    return (
        1.0
        - sin2T2 * c2
        - (math.cos(2 * T) * c2 - s2) ** 2
        + abs(coh + 0.5 * c2 * sin2T2)
        + abs(coh - 0.5 * c2 * sin2T2)
    ) / 3.0


def _check_cavity(a, T):
    if not 0.0 <= a <= 1.0:
        raise DomainError(f"initial weight a must lie in [0, 1], got {a}")
    if T < 0:
        raise DomainError(f"scaled time must be non-negative, got {T}")


def cavity_elements(a, T):
    """Non-zero elements ``(b11, b22, b33, b44, b23)`` for identical cavities."""
    _check_cavity(a, T)
    g2 = math.exp(-T)  # gamma^2
    o2 = -math.expm1(-T)  # Omega^2 = 1 - gamma^2
    b11 = g2 * g2 * a / 3.0
    b22 = (g2 + g2 * o2 * a) / 3.0
    b44 = (1.0 - a + 2.0 * o2 + o2 * o2 * a) / 3.0
    b23 = g2 / 3.0
    return b11, b22, b22, b44, b23


def cavity_decay(a, T):
    """Two atoms decaying into separate identical vacuum cavities from the
    mixed state with ``b11 = a/3``, ``b22 = b33 = b23 = 1/3``, ``b44 = (1-a)/3``."""
    b11, b22, b33, b44, b23 = cavity_elements(a, T)
    m = np.diag([b11, b22, b33, b44]).astype(float)
    m[1, 2] = m[2, 1] = b23
    return DensityMatrix(2, m)


class Ex5Oracles(NamedTuple):
    concurrence: float
    indicator: float


def ex5_oracles(a, T):
    """Published closed forms along :func:`cavity_decay`, as printed.

    ``concurrence`` is ``max(0, |b23| - sqrt(b11 b44))`` (no factor 2) and
    ``indicator`` is
    ``(4/3) b23 + (1/3)(1 - 4 b22) - (1/3)(1 - 2 b11 - 2 b22)^2``.
    """
    b11, b22, _, b44, b23 = cavity_elements(a, T)
    c = max(0.0, abs(b23) - math.sqrt(b11 * b44))
    i = 4.0 / 3.0 * b23 + (1.0 - 4.0 * b22) / 3.0 - (1.0 - 2.0 * b11 - 2.0 * b22) ** 2 / 3.0
    return Ex5Oracles(c, i)


def ex5_initial_oracles(a):
    """Published initial values: ``C(0) = (2/3)(1 - sqrt(a(1-a)))`` and
    ``I(0) = (2/27)(2a - 4a^2 + 7)``."""
    _check_cavity(a, 0.0)
    return Ex5Oracles(2.0 / 3.0 * (1.0 - math.sqrt(a * (1.0 - a))), 2.0 / 27.0 * (2 * a - 4 * a * a + 7))


def _cavity_gap(a, T):
    b11, _, _, b44, b23 = cavity_elements(a, T)
    return abs(b23) - math.sqrt(b11 * b44)


def sde_death_time(a, horizon=SDE_HORIZON, xtol=SDE_XTOL):
    """First time the cavity-decay concurrence reaches zero.

    Scans ``(0, horizon]`` for the first sign change of
    ``|b23| - sqrt(b11 b44)`` and bisects it to ``xtol``. Returns ``None``
    when the concurrence stays positive up to ``horizon``.
    """
    _check_cavity(a, 0.0)
    if _cavity_gap(a, 0.0) <= 0.0:
        return 0.0
    grid = np.linspace(0.0, horizon, 2001)
    gaps = [_cavity_gap(a, t) for t in grid]
    for k in range(1, len(grid)):
        if gaps[k] <= 0.0:
            if gaps[k] == 0.0:
                return float(grid[k])
            return float(bisect(lambda t: _cavity_gap(a, t), grid[k - 1], grid[k], xtol=xtol))
    return None


FAMILY_PARAMS = {
    "werner": ("x",),
    "quasi_bell": ("theta",),
    "rank2": ("x", "theta"),
    "jc": ("theta", "T"),
    "cavity": ("a", "T"),
}

_BUILDERS = {
    "werner": werner,
    "quasi_bell": quasi_bell,
    "rank2": rank2,
    "jc": jc_pair,
    "cavity": cavity_decay,
}


def _params(family, params):
    try:
        names = FAMILY_PARAMS[family]
    except KeyError:
        raise DomainError(f"unknown family {family!r}; choose from {sorted(FAMILY_PARAMS)}") from None
    missing = [p for p in names if params.get(p) is None]
    if missing:
        raise DomainError(f"family {family!r} needs parameter(s) {', '.join(missing)}")
    return [float(params[p]) for p in names]


def family_state(family, **params):
    """Build a named family member, e.g. ``family_state('werner', x=0.5)``."""
    values = _params(family, params)
    return _BUILDERS[family](*values)


def family_mu(family, **params):
    """Closed-form separability degree where one is known, else ``None``."""
    values = _params(family, params)
    if family == "werner":
        return werner_mu(*values)
    if family == "rank2":
        return rank2_mu(*values)
    return None
