"""Unitary and weighing matrices and the digraphs of their zero patterns.

Matrices are plain complex128 numpy arrays, returned read-only.
"""

from __future__ import annotations

import numpy as np

from .errors import CapacityError
from .graph import MAX_VERTICES, Digraph, is_strong

DEFAULT_TOL = 1e-9

WEIGHING_4_3 = np.array(
    [[0, 1, 1, 1],
     [1, 0, 1, -1],
     [1, -1, 0, 1],
     [1, 1, -1, 0]],
    dtype=float,
)


def _frozen(m):
    m = np.array(m, dtype=np.complex128)
    m.flags.writeable = False
    return m


def _square(m):
    m = np.asarray(m, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] > MAX_VERTICES:
        raise CapacityError(f"order {m.shape[0]} exceeds {MAX_VERTICES}")
    return m


def is_unitary(m, tol: float = DEFAULT_TOL) -> bool:
    """max |(U U^dagger - I)_ij| <= tol."""
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    m = _square(m)
    gap = m @ m.conj().T - np.eye(m.shape[0])
    return float(np.max(np.abs(gap), initial=0.0)) <= tol


def digraph_of_matrix(m, tol: float = DEFAULT_TOL) -> Digraph:
    """Arc i -> j exactly when |m[i, j]| > tol (diagonal entries give loops)."""
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    m = _square(m)
    nz = np.abs(m) > tol
    rows = [sum(1 << int(j) for j in np.flatnonzero(row)) for row in nz]
    return Digraph(m.shape[0], rows)


def is_irreducible(m, tol: float = DEFAULT_TOL) -> bool:
    """Irreducibility read off the pattern: the digraph of ``m`` is strong."""
    return is_strong(digraph_of_matrix(m, tol))


def dft(n: int):
    """Unitary DFT matrix, entry (j, k) = exp(2 pi i jk / n) / sqrt(n)."""
    if not 1 <= n <= MAX_VERTICES:
        raise ValueError(f"dft order must be in 1..{MAX_VERTICES}")
    jk = np.outer(np.arange(n), np.arange(n)) % n
    return _frozen(np.exp(2j * np.pi * jk / n) / np.sqrt(n))


def sylvester(k: int):
    """Normalized Sylvester-Hadamard matrix of order 2**k."""
    if k < 0 or (1 << k) > MAX_VERTICES:
        raise ValueError(f"sylvester needs 0 <= k with 2**k <= {MAX_VERTICES}")
    h = np.array([[1.0]])
    for _ in range(k):
        h = np.block([[h, h], [h, -h]])
    return _frozen(h / np.sqrt(h.shape[0]))


def weighing43():
    """The conference-type weighing matrix W(4, 3), scaled by 1/sqrt(3)."""
    return _frozen(WEIGHING_4_3 / np.sqrt(3))


def permutation(p):
    """Matrix with a 1 at (i, p[i])."""
    p = list(p)
    n = len(p)
    if sorted(p) != list(range(n)) or not 1 <= n <= MAX_VERTICES:
        raise ValueError(f"{p} is not a permutation of 0..n-1 with n <= {MAX_VERTICES}")
    m = np.zeros((n, n))
    m[np.arange(n), p] = 1.0
    return _frozen(m)


def gen_matrix(kind: str, *args):
    """Catalog dispatcher: ``gen_matrix("dft", 3)``, ``gen_matrix("sylvester", 2)``,
    ``gen_matrix("weighing43")``, ``gen_matrix("permutation", [1, 2, 0])``."""
    table = {"dft": dft, "sylvester": sylvester, "weighing43": weighing43, "permutation": permutation}
    if kind not in table:
        raise ValueError(f"unknown matrix kind {kind!r}; choose from {sorted(table)}")
    return table[kind](*args)


def random_unitary(n: int, seed: int):
    """Haar-distributed unitary from a seeded PCG64 stream.

    An n x n matrix of complex standard Gaussians (numpy's ziggurat normals,
    real parts drawn before imaginary parts) is orthonormalized by QR, and
    the columns are rephased so that R has a positive diagonal.
    """
    if not 1 <= n <= MAX_VERTICES:
        raise ValueError(f"order must be in 1..{MAX_VERTICES}")
    rng = np.random.Generator(np.random.PCG64(seed))
    re = rng.standard_normal((n, n))
    im = rng.standard_normal((n, n))
    z = (re + 1j * im) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    q = q * (d / np.abs(d))
    return _frozen(q)


def kronecker_matrix(a, b):
    a, b = np.asarray(a), np.asarray(b)
    if a.shape[0] * b.shape[0] > MAX_VERTICES:
        raise CapacityError(f"product order {a.shape[0] * b.shape[0]} exceeds {MAX_VERTICES}")
    return _frozen(np.kron(_square(a), _square(b)))
