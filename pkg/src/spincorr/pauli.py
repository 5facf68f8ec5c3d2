"""Pauli operators and their expectation values on qubit states."""

import enum
from functools import reduce as _fold

import numpy as np

from . import linalg
from .errors import DomainError, NumericalError
from .states import density

IMAG_TOL = 1e-6

__all__ = ["PauliAxis", "AXES", "pauli_matrix", "site_operator", "correlator", "marginal"]


class PauliAxis(enum.Enum):
    X = "x"
    Y = "y"
    Z = "z"


AXES = (PauliAxis.X, PauliAxis.Y, PauliAxis.Z)

_PAULI = {
    PauliAxis.X: ((0, 1), (1, 0)),
    PauliAxis.Y: ((0, -1j), (1j, 0)),
    PauliAxis.Z: ((1, 0), (0, -1)),
}


def _axis(axis):
    if isinstance(axis, PauliAxis):
        return axis
    try:
        return PauliAxis(str(axis).lower())
    except ValueError:
        raise DomainError(f"unknown Pauli axis {axis!r}") from None


def pauli_matrix(axis):
    """2x2 Pauli matrix for ``axis`` (``PauliAxis`` or ``'x'``/``'y'``/``'z'``)."""
    return np.array(_PAULI[_axis(axis)], dtype=np.complex128)


def site_operator(n_qubits, factors):
    """Kronecker product with ``factors[site]`` on the given 1-based sites and
    the identity everywhere else."""
    for site in factors:
        if not 1 <= site <= n_qubits:
            raise DomainError(f"site {site} outside [1, {n_qubits}]")
    eye = np.eye(2, dtype=np.complex128)
    return _fold(linalg.kron, [factors.get(q, eye) for q in range(1, n_qubits + 1)])


def expectation(rho, op):
    """Real part of ``tr(rho @ op)``; fails when the imaginary part exceeds 1e-6."""
    value = np.sum(rho.mat * op.T)
    if abs(value.imag) > IMAG_TOL:
        raise NumericalError(
            f"expectation value has imaginary part {value.imag:.3g}; state is not Hermitian",
            residual=abs(value.imag),
        )
    return float(value.real)


def correlator(rho, site_a, axis_i, site_b, axis_j):
    """Two-site moment ``<sigma_i^(a) sigma_j^(b)>``."""
    rho = density(rho)
    if site_a == site_b:
        raise DomainError("correlator needs two distinct sites")
    op = site_operator(rho.n_qubits, {site_a: pauli_matrix(axis_i), site_b: pauli_matrix(axis_j)})
    return expectation(rho, op)


def marginal(rho, site, axis):
    """Single-site moment ``<sigma_axis^(site)>``."""
    rho = density(rho)
    op = site_operator(rho.n_qubits, {site: pauli_matrix(axis)})
    return expectation(rho, op)
