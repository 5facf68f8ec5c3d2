"""Validated qubit states and the JSON state-file format.

Basis convention: basis index ``i`` enumerates kets with qubit 1 as the most
significant bit, bit 0 meaning the excited state ``|e>`` and bit 1 the ground
state ``|g>``. For two qubits the order is ``|ee>, |eg>, |ge>, |gg>``.
``|e>`` is the +1 eigenstate of sigma_z.
"""

import json
from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import DomainError, ShapeError, ValidationError

TOL = 1e-9

__all__ = [
    "DensityMatrix",
    "PureState",
    "from_matrix",
    "from_pure",
    "density",
    "purity",
    "reduce",
    "sample_random",
    "parse_state",
    "load_state",
    "dump_state",
]


def _check_side(dim, n_qubits):
    if n_qubits < 1 or dim != 2**n_qubits:
        raise ShapeError(f"side {dim} does not match {n_qubits} qubit(s)")
    if dim > linalg.MAX_DIM:
        raise linalg.CapacityError(f"{n_qubits} qubits exceed the supported size")


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """An ``n_qubits`` density matrix, validated on construction.

    ``mat`` is stored as a read-only ``complex128`` copy.
    """

    n_qubits: int
    mat: np.ndarray

    def __post_init__(self):
        m = linalg.as_matrix(self.mat)
        _check_side(m.shape[0], self.n_qubits)
        herm = linalg.hermiticity_error(m)
        if herm > TOL:
            raise ValidationError("hermitian", herm)
        tr = np.trace(m).real
        if abs(tr - 1.0) > TOL:
            raise ValidationError("trace", abs(tr - 1.0), f"trace is {tr:.12g}, expected 1")
        lo = linalg.eigvals_hermitian(m)[0]
        if lo < -TOL:
            raise ValidationError("psd", -lo, f"negative eigenvalue {lo:.6g}")
        m.setflags(write=False)
        object.__setattr__(self, "mat", m)

    @property
    def dim(self):
        return self.mat.shape[0]

    def __array__(self, dtype=None, copy=None):
        return np.array(self.mat, dtype=dtype)

    def __repr__(self):
        return f"DensityMatrix(n_qubits={self.n_qubits}, mat=\n{np.array2string(self.mat, precision=6)})"


@dataclass(frozen=True, eq=False)
class PureState:
    """Normalized state vector on ``n_qubits`` qubits."""

    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        v = np.array(self.amplitudes, dtype=np.complex128).reshape(-1)
        _check_side(v.shape[0], self.n_qubits)
        norm = float(np.vdot(v, v).real)
        if abs(norm - 1.0) > TOL:
            raise ValidationError("norm", abs(norm - 1.0), f"squared norm is {norm:.12g}, expected 1")
        v.setflags(write=False)
        object.__setattr__(self, "amplitudes", v)

    @classmethod
    def normalized(cls, amplitudes):
        """Build a state from unnormalized amplitudes."""
        v = np.asarray(amplitudes, dtype=np.complex128).reshape(-1)
        nrm = np.linalg.norm(v)
        if nrm == 0:
            raise DomainError("zero vector cannot be normalized")
        n = v.shape[0].bit_length() - 1
        return cls(n, v / nrm)


def from_matrix(raw, n_qubits=None):
    """Validate ``raw`` as a density matrix.

    ``n_qubits`` defaults to log2 of the side. Raises
    :class:`~spincorr.errors.ValidationError` naming the failed invariant.
    """
    m = linalg.as_matrix(raw)
    if n_qubits is None:
        n_qubits = m.shape[0].bit_length() - 1
    return DensityMatrix(n_qubits, m)


def from_pure(psi):
    """Projector onto a pure state."""
    v = psi.amplitudes
    return DensityMatrix(psi.n_qubits, np.outer(v, v.conj()))


def density(state):
    """Coerce a DensityMatrix, PureState or square array to a DensityMatrix."""
    if isinstance(state, DensityMatrix):
        return state
    if isinstance(state, PureState):
        return from_pure(state)
    return from_matrix(state)


def purity(rho):
    """``tr(rho^2)``."""
    m = density(rho).mat
    # tr(m @ m) for Hermitian m is the squared Frobenius norm
    return float(np.sum(np.abs(m) ** 2))


def reduce(rho, keep):
    """Reduced state on the qubits ``keep`` (1-based, in the given order)."""
    rho = density(rho)
    return DensityMatrix(len(keep), linalg.partial_trace(rho.mat, rho.n_qubits, keep))


def sample_random(n_qubits, rank, seed):
    """Random density matrix of the given rank.

    A convex mixture of ``rank`` normalized complex-Gaussian vectors with
    weights drawn uniformly from the probability simplex. The same
    ``(n_qubits, rank, seed)`` always gives the same matrix.
    """
    dim = 2**n_qubits
    if n_qubits < 1 or dim > linalg.MAX_DIM:
        raise DomainError(f"n_qubits must be in [1, 4], got {n_qubits}")
    if not 1 <= rank <= dim:
        raise DomainError(f"rank must be in [1, {dim}], got {rank}")
    rng = np.random.default_rng(seed)
    vecs = rng.standard_normal((dim, rank)) + 1j * rng.standard_normal((dim, rank))
    vecs /= np.linalg.norm(vecs, axis=0)
    weights = rng.dirichlet(np.ones(rank))
    m = (vecs * weights) @ vecs.conj().T
    m = 0.5 * (m + m.conj().T)
    return DensityMatrix(n_qubits, m / np.trace(m).real)


# -- state files -------------------------------------------------------------


class StateFileError(ShapeError):
    """A state document is malformed."""


def parse_state(text):
    """Parse a JSON state document.

    The document is an object with an integer ``qubits`` and a ``matrix``
    given as a list of rows, each entry a ``[re, im]`` pair, in the basis
    order described in the module docstring::

        {"qubits": 1, "matrix": [[[1, 0], [0, 0]], [[0, 0], [0, 0]]]}

    Malformed documents raise :class:`StateFileError`; well-formed matrices
    that are not density matrices raise ``ValidationError``.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StateFileError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict) or "qubits" not in doc or "matrix" not in doc:
        raise StateFileError("state document needs 'qubits' and 'matrix' fields")
    n = doc["qubits"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise StateFileError(f"'qubits' must be a positive integer, got {n!r}")
    dim = 2**n
    if dim > linalg.MAX_DIM:
        raise StateFileError(f"{n} qubits exceed the supported size")
    rows = doc["matrix"]
    if not isinstance(rows, list) or len(rows) != dim:
        raise StateFileError(f"expected {dim} rows for {n} qubit(s)")
    m = np.empty((dim, dim), dtype=np.complex128)
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != dim:
            raise StateFileError(f"row {i} should have {dim} entries")
        for j, entry in enumerate(row):
            if (
                not isinstance(entry, list)
                or len(entry) != 2
                or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in entry)
            ):
                raise StateFileError(f"entry [{i}][{j}] should be a [re, im] pair of numbers")
            m[i, j] = complex(entry[0], entry[1])
    if not np.all(np.isfinite(m)):
        raise StateFileError("matrix has non-finite entries")
    return DensityMatrix(n, m)


def load_state(path):
    with open(path, encoding="utf-8") as fh:
        return parse_state(fh.read())


def dump_state(rho, indent=None):
    """Serialize a state (or raw square matrix) to the JSON document format."""
    if isinstance(rho, DensityMatrix):
        m, n = rho.mat, rho.n_qubits
    else:
        m = linalg.as_matrix(rho)
        n = m.shape[0].bit_length() - 1
    doc = {
        "qubits": n,
        "matrix": [[[float(z.real), float(z.imag)] for z in row] for row in m],
    }
    return json.dumps(doc, indent=indent)
