"""Brute-force Pauli moments by explicit action on basis kets.

Deliberately shares no code with :mod:`spincorr.pauli` or
:mod:`spincorr.linalg`: operators are never assembled, each Pauli string is
applied bit by bit. Used to cross-check the main computation path.
"""

import itertools

import numpy as np

# Pauli acting on bit b (0 = |e>, 1 = |g>) -> (new bit, amplitude)
_ACTION = {
    "x": lambda b: (1 - b, 1),
    "y": lambda b: (1 - b, 1j if b == 0 else -1j),
    "z": lambda b: (b, 1 if b == 0 else -1),
}


def _apply(string, n, k):
    # Pauli string {site: axis} applied to basis ket k
    amp = 1
    for site, axis in string.items():
        shift = n - site
        bit = (k >> shift) & 1
        new, c = _ACTION[axis](bit)
        k = (k & ~(1 << shift)) | (new << shift)
        amp *= c
    return k, amp


def moment(rho, string):
    """``tr(rho P)`` for the Pauli string ``P`` given as ``{site: 'x'|'y'|'z'}``.

    ``rho`` is a ``2**n`` square array.
    """
    rho = np.asarray(rho, dtype=complex)
    n = rho.shape[0].bit_length() - 1
    total = 0j
    for k in range(rho.shape[0]):
        l, amp = _apply(string, n, k)
        total += rho[k, l] * amp
    return total.real


def moment_pure(psi, string):
    """``<psi|P|psi>`` straight from amplitudes, without forming a matrix."""
    psi = np.asarray(psi, dtype=complex)
    n = psi.shape[0].bit_length() - 1
    total = 0j
    for k, a in enumerate(psi):
        l, amp = _apply(string, n, k)
        total += np.conj(psi[l]) * amp * a
    return total.real


def pair_matrix(moment_fn, state, a, b):
    """Raw 3x3 matrix ``|<s_i s_j>| - |<s_i><s_j>|`` using ``moment_fn``."""
    raw = np.empty((3, 3))
    for (i, ai), (j, aj) in itertools.product(enumerate("xyz"), repeat=2):
        joint = moment_fn(state, {a: ai, b: aj})
        raw[i, j] = abs(joint) - abs(moment_fn(state, {a: ai}) * moment_fn(state, {b: aj}))
    return raw


def pair_indicator(raw, zero_tol=1e-12):
    clamped = np.maximum(raw, 0.0)
    nonzero = clamped > zero_tol
    return float(clamped[nonzero].mean()) if nonzero.any() else 0.0


def indicator(rho, a=1, b=2, zero_tol=1e-12):
    return pair_indicator(pair_matrix(moment, rho, a, b), zero_tol)


def pairwise_average_pure(psi, zero_tol=1e-12):
    """Average pair indicator of a pure multi-qubit state, no partial traces."""
    psi = np.asarray(psi, dtype=complex)
    n = psi.shape[0].bit_length() - 1
    values = [
        pair_indicator(pair_matrix(moment_pure, psi, a, b), zero_tol)
        for a, b in itertools.combinations(range(1, n + 1), 2)
    ]
    return float(np.mean(values))
