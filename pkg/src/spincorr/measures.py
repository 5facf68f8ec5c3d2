"""Correlation indicator, spin-correlation matrix, concurrence and the
closed-form separability degrees.

The spin-correlation matrix of qubits ``a`` and ``b`` has entries

    I_ij = |<s_i^(a) s_j^(b)>| - |<s_i^(a)> <s_j^(b)>|,   i, j in {x, y, z}

and the correlation indicator is the mean of its non-zero entries (zero when
every entry vanishes). Entries can come out negative for some mixed states;
they are clamped to zero for the average and counted in
``SpinCorrelationMatrix.negative_count``.
"""

import enum
import functools
import itertools
import math
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

import numpy as np

from . import linalg
from .errors import DomainError, NumericalError
from .pauli import AXES, expectation, pauli_matrix, site_operator
from .states import density, reduce

EPS_N = 1e-9
ENTANGLEMENT_THRESHOLD = 1.0 / 3.0
# an entry is "non-zero" when it exceeds this many ulps of the moments it is built from
ZERO_ULPS = 64
X_STATE_TOL = 1e-10

_EPS = np.finfo(float).eps
_SIGMA_YY = np.kron(pauli_matrix("y"), pauli_matrix("y"))

__all__ = [
    "EPS_N",
    "Classification",
    "SpinCorrelationMatrix",
    "MeasureReport",
    "PairwiseIndicator",
    "spin_correlation_matrix",
    "indicator",
    "concurrence",
    "spin_flip_eigenvalues",
    "concurrence_spin_flip",
    "concurrence_x_state",
    "is_x_state",
    "werner_mu",
    "rank2_mu",
    "multipartite_indicator",
    "classify",
    "analyze",
]


class Classification(enum.Enum):
    UNCORRELATED = "uncorrelated"
    CORRELATED_UNDETERMINED = "correlated_undetermined"
    ENTANGLED_BY_THRESHOLD = "entangled_by_threshold"


@dataclass(frozen=True, eq=False)
class SpinCorrelationMatrix:
    """Spin-correlation matrix of one qubit pair.

    Attributes
    ----------
    raw : ndarray, shape (3, 3)
        ``I_ij`` before clamping; rows index the axis on the first site.
    clamped : ndarray, shape (3, 3)
        ``max(raw, 0)``.
    zero_floor : ndarray, shape (3, 3)
        Round-off bound below which an entry counts as zero.
    n_nonzero : int
        Number of clamped entries above their floor.
    indicator : float
        Mean of the non-zero clamped entries, or 0.
    negative_count : int
        Raw entries below minus their floor.
    """

    raw: np.ndarray
    clamped: np.ndarray
    zero_floor: np.ndarray
    n_nonzero: int
    indicator: float
    negative_count: int

    def entry(self, i, j):
        """Raw entry for axis labels, e.g. ``entry('z', 'x')``."""
        return float(self.raw["xyz".index(i), "xyz".index(j)])


def _abs_bound(rho, op):
    # sum of |terms| in tr(rho @ op); bounds the rounding error of the trace
    return float(np.sum(np.abs(rho.mat) * np.abs(op.T)))


@functools.lru_cache(maxsize=64)
def _pair_operators(n, site_a, site_b):
    # (site_a ops, site_b ops, 3x3 joint ops), shared read-only arrays
    def frozen(factors):
        op = site_operator(n, factors)
        op.setflags(write=False)
        return op

    ops_a = tuple(frozen({site_a: pauli_matrix(ax)}) for ax in AXES)
    ops_b = tuple(frozen({site_b: pauli_matrix(ax)}) for ax in AXES)
    joint = tuple(
        tuple(frozen({site_a: pauli_matrix(ai), site_b: pauli_matrix(aj)}) for aj in AXES) for ai in AXES
    )
    return ops_a, ops_b, joint


def spin_correlation_matrix(rho, site_a=1, site_b=2):
    """Spin-correlation matrix for qubits ``site_a`` and ``site_b`` of ``rho``."""
    rho = density(rho)
    if site_a == site_b:
        raise DomainError("spin-correlation matrix needs two distinct sites")
    ops_a, ops_b, joint = _pair_operators(rho.n_qubits, int(site_a), int(site_b))
    mean_a = [expectation(rho, op) for op in ops_a]
    mean_b = [expectation(rho, op) for op in ops_b]
    bound_a = [_abs_bound(rho, op) for op in ops_a]
    bound_b = [_abs_bound(rho, op) for op in ops_b]

    raw = np.empty((3, 3))
    floor = np.empty((3, 3))
    for i, j in itertools.product(range(3), repeat=2):
        op = joint[i][j]
        raw[i, j] = abs(expectation(rho, op)) - abs(mean_a[i] * mean_b[j])
        floor[i, j] = ZERO_ULPS * _EPS * (_abs_bound(rho, op) + bound_a[i] * bound_b[j])

    clamped = np.maximum(raw, 0.0)
    nonzero = clamped > floor
    n_nonzero = int(nonzero.sum())
    value = float(clamped[nonzero].sum() / n_nonzero) if n_nonzero else 0.0
    return SpinCorrelationMatrix(
        raw=raw,
        clamped=clamped,
        zero_floor=floor,
        n_nonzero=n_nonzero,
        indicator=value,
        negative_count=int((raw < -floor).sum()),
    )


def indicator(rho, site_a=1, site_b=2):
    """Correlation indicator ``I`` of a qubit pair, in ``[0, 1]``."""
    return spin_correlation_matrix(rho, site_a, site_b).indicator


def _two_qubit(rho):
    rho = density(rho)
    if rho.n_qubits != 2:
        raise DomainError(f"expected a two-qubit state, got {rho.n_qubits} qubit(s)")
    return rho


def _spin_flip_roots(rho):
    # sqrt of the eigenvalues of rho (yy) rho* (yy), as the singular values of
    # A^H (yy) A*, where rho = A A^H; stays accurate for rank-deficient rho
    p, v = np.linalg.eigh(rho.mat)
    a = v * np.sqrt(np.clip(p, 0.0, None))
    tau = a.conj().T @ _SIGMA_YY @ a.conj()
    return np.linalg.svd(tau, compute_uv=False)


def concurrence(rho):
    """Concurrence ``max(0, l1 - l2 - l3 - l4)`` of a two-qubit state.

    ``l_k`` are the square roots, in decreasing order, of the eigenvalues of
    ``rho (sy x sy) rho* (sy x sy)``. They are obtained as singular values of
    the spin-flip overlap matrix of the eigen-ensemble of ``rho``, which keeps
    pure and low-rank states accurate to round-off.
    """
    rho = _two_qubit(rho)
    lam = _spin_flip_roots(rho)
    return max(0.0, float(lam[0] - lam[1:].sum()))


def spin_flip_eigenvalues(rho):
    """Eigenvalues of ``rho (sy x sy) rho* (sy x sy)``, decreasing.

    Computed with :func:`spincorr.linalg.eigvals_general` on the product
    matrix itself. Small negative values in ``[-1e-10, 0)`` are set to zero.

    Raises
    ------
    NumericalError
        If an eigenvalue has ``|Im| >= 1e-8`` or real part below ``-1e-8``.
    """
    rho = _two_qubit(rho)
    xi = rho.mat @ _SIGMA_YY @ rho.mat.conj() @ _SIGMA_YY
    out = []
    for z in linalg.eigvals_general(xi):
        if abs(z.imag) >= 1e-8 or z.real < -1e-8:
            raise NumericalError(f"spin-flip eigenvalue {z:.3g} is not a non-negative real", residual=abs(z))
        out.append(max(z.real, 0.0) if z.real >= -1e-10 else z.real)
    return sorted(out, reverse=True)


def concurrence_spin_flip(rho):
    """Concurrence from the square roots of :func:`spin_flip_eigenvalues`.

    Loses about half the working precision when eigenvalues vanish; kept as
    a cross-check of :func:`concurrence`.
    """
    nu = np.sqrt(np.clip(spin_flip_eigenvalues(rho), 0.0, None))
    return max(0.0, float(nu[0] - nu[1:].sum()))


def is_x_state(rho, tol=X_STATE_TOL):
    """True when only diagonal and anti-diagonal entries are non-zero."""
    m = density(rho).mat
    if m.shape != (4, 4):
        return False
    mask = np.eye(4, dtype=bool) | np.fliplr(np.eye(4, dtype=bool))
    return bool(np.all(np.abs(m[~mask]) < tol))


def concurrence_x_state(rho):
    """Closed-form concurrence of an X-shaped two-qubit state,
    ``2 max(0, |b23| - sqrt(b11 b44), |b14| - sqrt(b22 b33))``."""
    rho = _two_qubit(rho)
    if not is_x_state(rho):
        raise DomainError("state is not X-shaped")
    b = rho.mat
    d = np.clip(np.diag(b).real, 0.0, None)
    return 2.0 * max(
        0.0,
        abs(b[1, 2]) - math.sqrt(d[0] * d[3]),
        abs(b[0, 3]) - math.sqrt(d[1] * d[2]),
    )


def werner_mu(x):
    """Degree of separability of the Werner state with mixing ``x``.

    1 for ``-1/3 <= x <= 1/3`` and ``3(1 - x)/2`` for ``1/3 < x <= 1``.
    Werner states do not exist below ``x = -1/3``.
    """
    if abs(x) > 1:
        raise DomainError(f"Werner mixing must satisfy |x| <= 1, got {x}")
    if x < -1.0 / 3.0:
        raise DomainError(f"no Werner state for x = {x} < -1/3")
    return 1.0 if x <= 1.0 / 3.0 else 1.5 * (1.0 - x)


def rank2_mu(x, theta):
    """Degree of separability of the rank-2 family: 1 when ``cos(theta) == 0``
    (to 1e-12), otherwise ``1 - |x|``."""
    if abs(x) > 1:
        raise DomainError(f"|x| must be at most 1, got {x}")
    return 1.0 if abs(math.cos(theta)) < 1e-12 else 1.0 - abs(x)


class PairwiseIndicator(NamedTuple):
    average: float
    per_pair: dict
    fully_correlated: bool


def multipartite_indicator(rho):
    """Pairwise extension of the indicator to three or more qubits.

    Every unordered pair ``(i, j)`` is reduced by partial trace and scored
    with :func:`indicator`; the result is the plain average together with the
    per-pair values. ``fully_correlated`` requires every pair to carry
    correlation.
    """
    rho = density(rho)
    n = rho.n_qubits
    if n < 3:
        raise DomainError("use indicator() for two-qubit states")
    per_pair = {
        (i, j): indicator(reduce(rho, [i, j])) for i, j in itertools.combinations(range(1, n + 1), 2)
    }
    values = list(per_pair.values())
    return PairwiseIndicator(
        average=float(np.mean(values)),
        per_pair=per_pair,
        fully_correlated=all(v > EPS_N for v in values),
    )


def classify(value):
    if value <= EPS_N:
        return Classification.UNCORRELATED
    if value > ENTANGLEMENT_THRESHOLD:
        return Classification.ENTANGLED_BY_THRESHOLD
    return Classification.CORRELATED_UNDETERMINED


@dataclass(frozen=True, eq=False)
class MeasureReport:
    """Indicator, concurrence and optional separability degree of one state.

    ``ENTANGLED_BY_THRESHOLD`` only means ``I > 1/3``: a heuristic label,
    not a proof of entanglement.
    """

    indicator: float
    concurrence: float
    mu: Optional[float]
    classification: Classification
    scm: SpinCorrelationMatrix = field(repr=False)

    def as_dict(self):
        return {
            "indicator": self.indicator,
            "n_nonzero": self.scm.n_nonzero,
            "raw": self.scm.raw.tolist(),
            "negative_count": self.scm.negative_count,
            "concurrence": self.concurrence,
            "mu": self.mu,
            "classification": self.classification.value,
        }


def analyze(rho, mu=None):
    """Full report for a two-qubit state.

    ``mu`` is passed through unchanged; supply it when the state is known to
    belong to a family with a closed-form separability degree.
    """
    rho = _two_qubit(rho)
    scm = spin_correlation_matrix(rho, 1, 2)
    return MeasureReport(
        indicator=scm.indicator,
        concurrence=concurrence(rho),
        mu=mu,
        classification=classify(scm.indicator),
        scm=scm,
    )
