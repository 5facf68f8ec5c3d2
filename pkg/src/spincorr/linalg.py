"""Small dense complex linear algebra: tensor products, partial traces and
eigenvalues for matrices of side at most 16.

Matrices are plain ``numpy`` arrays of dtype ``complex128``. Every function
returns a fresh array and never modifies its arguments.
"""

import numpy as np

from .errors import CapacityError, DomainError, NumericalError, ShapeError, ValidationError

MAX_DIM = 16
HERMITIAN_TOL = 1e-9

# QR iteration controls
DEFLATION_TOL = 1e-12
MAX_SWEEPS = 100

__all__ = [
    "MAX_DIM",
    "as_matrix",
    "kron",
    "partial_trace",
    "hermiticity_error",
    "eigvals_hermitian",
    "hessenberg",
    "eigvals_general",
]


def as_matrix(m):
    """Return ``m`` as a new square, finite ``complex128`` array.

    Raises
    ------
    ShapeError
        If ``m`` is not a non-empty square 2-d array.
    ValueError
        If any entry is NaN or infinite.
    """
    a = np.array(m, dtype=np.complex128, copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise ShapeError(f"expected a non-empty square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    return a


def kron(a, b):
    """Tensor product of two square matrices.

    ``result[i*db + k, j*db + l] == a[i, j] * b[k, l]`` where ``db`` is the
    side of ``b``.
    """
    a = as_matrix(a)
    b = as_matrix(b)
    dim = a.shape[0] * b.shape[0]
    if dim > MAX_DIM:
        raise CapacityError(f"tensor product of side {dim} exceeds the maximum {MAX_DIM}")
    return np.kron(a, b)


def partial_trace(rho, n_qubits, keep):
    """Reduce an ``n_qubits`` operator to the qubits listed in ``keep``.

    Qubits are numbered from 1, with qubit 1 the most significant bit of the
    basis index. The reduced operator is expressed on the kept qubits in the
    order given by ``keep``, so ``keep=[2, 1]`` also swaps the two factors.

    Parameters
    ----------
    rho : array_like, shape (2**n_qubits, 2**n_qubits)
    n_qubits : int
    keep : sequence of int
        Distinct qubit indices in ``[1, n_qubits]``.

    Returns
    -------
    ndarray, shape (2**len(keep), 2**len(keep))
    """
    rho = as_matrix(rho)
    if n_qubits < 1 or rho.shape[0] != 2**n_qubits:
        raise ShapeError(f"side {rho.shape[0]} does not match {n_qubits} qubits")
    keep = [int(q) for q in keep]
    if len(set(keep)) != len(keep):
        raise DomainError(f"repeated qubit index in {keep}")
    for q in keep:
        if not 1 <= q <= n_qubits:
            raise DomainError(f"qubit index {q} outside [1, {n_qubits}]")

    kept = [q - 1 for q in keep]
    traced = [q for q in range(n_qubits) if q not in kept]
    perm = kept + traced + [n_qubits + q for q in kept] + [n_qubits + q for q in traced]
    dk = 2 ** len(kept)
    dt = 2 ** len(traced)
    t = rho.reshape((2,) * (2 * n_qubits)).transpose(perm).reshape(dk, dt, dk, dt)
    return np.einsum("ajbj->ab", t)


def hermiticity_error(m):
    """Largest ``|m[i, j] - conj(m[j, i])|``."""
    m = np.asarray(m)
    return float(np.max(np.abs(m - m.conj().T)))


def eigvals_hermitian(m):
    """Real eigenvalues of a Hermitian matrix, ascending."""
    m = as_matrix(m)
    err = hermiticity_error(m)
    if err > HERMITIAN_TOL:
        raise ValidationError("hermitian", err)
    # symmetrise so the result does not depend on which triangle LAPACK reads
    return np.linalg.eigvalsh(0.5 * (m + m.conj().T))


def hessenberg(m):
    """Upper Hessenberg form of ``m`` by Householder reflections.

    The result is unitarily similar to ``m``; entries below the first
    subdiagonal are exactly zero.
    """
    h = as_matrix(m)
    n = h.shape[0]
    for k in range(n - 2):
        x = h[k + 1 :, k].copy()
        alpha = np.linalg.norm(x)
        if alpha == 0.0:
            continue
        phase = x[0] / abs(x[0]) if x[0] != 0 else 1.0
        v = x
        v[0] += phase * alpha
        v /= np.linalg.norm(v)
        h[k + 1 :, :] -= 2.0 * np.outer(v, v.conj() @ h[k + 1 :, :])
        h[:, k + 1 :] -= 2.0 * np.outer(h[:, k + 1 :] @ v, v.conj())
        h[k + 2 :, k] = 0.0
    return h


def _givens(a, b):
    r = np.hypot(abs(a), abs(b))
    if r == 0.0:
        return np.eye(2, dtype=np.complex128)
    return np.array([[np.conj(a), np.conj(b)], [-b, a]]) / r


def _eig2(a, b, c, d):
    # eigenvalues of [[a, b], [c, d]]; the smaller one via det/large to avoid cancellation
    mean = 0.5 * (a + d)
    disc = np.sqrt(0.25 * (a - d) ** 2 + b * c)
    big = mean + disc if abs(mean + disc) >= abs(mean - disc) else mean - disc
    if big == 0:
        return 0j, 0j
    return big, (a * d - b * c) / big


def _wilkinson_shift(blk):
    a, b, c, d = blk[-2, -2], blk[-2, -1], blk[-1, -2], blk[-1, -1]
    l1, l2 = _eig2(a, b, c, d)
    return l1 if abs(l1 - d) <= abs(l2 - d) else l2


def _qr_step(blk, shift):
    # one shifted QR sweep on a Hessenberg block, in place
    n = blk.shape[0]
    blk[np.diag_indices(n)] -= shift
    rots = []
    for k in range(n - 1):
        g = _givens(blk[k, k], blk[k + 1, k])
        blk[k : k + 2, k:] = g @ blk[k : k + 2, k:]
        blk[k + 1, k] = 0.0
        rots.append(g)
    for k, g in enumerate(rots):
        hi = min(k + 3, n)
        blk[:hi, k : k + 2] = blk[:hi, k : k + 2] @ g.conj().T
    blk[np.diag_indices(n)] += shift


def _sort_key(z):
    # real parts equal to ~10 digits compare equal so conjugate pairs order by imag
    return (-round(z.real, 10), -z.imag)


def eigvals_general(m):
    """All eigenvalues of a general complex matrix of side at most 8.

    Hessenberg reduction followed by single-shift QR iteration with
    Wilkinson shifts. A subdiagonal entry is treated as zero once it falls
    below ``1e-12`` times its neighbouring diagonal magnitudes (or below
    machine precision relative to the whole matrix when those vanish).

    Returns
    -------
    list of complex
        Eigenvalues with algebraic multiplicity, sorted by descending real
        part, then descending imaginary part.

    Raises
    ------
    NumericalError
        If an eigenvalue fails to converge within 100 sweeps. ``residual``
        is the last subdiagonal magnitude.
    """
    m = as_matrix(m)
    n = m.shape[0]
    if n > 8:
        raise CapacityError(f"eigvals_general supports side <= 8, got {n}")
    h = hessenberg(m)
    floor = np.finfo(float).eps * max(np.linalg.norm(h), np.finfo(float).tiny)
    eig = []
    hi = n - 1
    sweeps = 0
    while hi >= 0:
        if hi == 0:
            eig.append(h[0, 0])
            break
        lo = hi
        while lo > 0:
            sub = abs(h[lo, lo - 1])
            if sub <= DEFLATION_TOL * (abs(h[lo, lo]) + abs(h[lo - 1, lo - 1])) or sub <= floor:
                h[lo, lo - 1] = 0.0
                break
            lo -= 1
        if lo == hi:
            eig.append(h[hi, hi])
            hi -= 1
            sweeps = 0
            continue
        if lo == hi - 1:
            eig.extend(_eig2(h[lo, lo], h[lo, hi], h[hi, lo], h[hi, hi]))
            hi -= 2
            sweeps = 0
            continue
        if sweeps >= MAX_SWEEPS:
            raise NumericalError(
                f"QR iteration did not converge after {MAX_SWEEPS} sweeps",
                residual=float(abs(h[hi, hi - 1])),
            )
        sweeps += 1
        blk = h[lo : hi + 1, lo : hi + 1]
        if sweeps % 10 == 0:
            # exceptional shift to break cycles
            shift = blk[-1, -1] + 0.75 * abs(blk[-1, -2])
        else:
            shift = _wilkinson_shift(blk)
        _qr_step(blk, shift)
    return sorted((complex(z) for z in eig), key=_sort_key)
