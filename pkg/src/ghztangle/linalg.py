"""Dense complex linear algebra for few-qubit density matrices.

All operators are numpy complex128 arrays. Qubit ordering convention used
throughout the package: qubit 0 is the most significant tensor factor, so
the computational basis state |abc> of three qubits sits at index 4a+2b+c.

The Hermitian eigensolver embeds a d x d Hermitian matrix as the 2d x 2d
real symmetric matrix [[Re, -Im], [Im, Re]] and runs cyclic Jacobi sweeps
(see ``_kernels``). Each eigenvalue of the original matrix shows up twice
in the embedded spectrum; after sorting, consecutive entries are paired and
averaged.
"""

from __future__ import annotations

import numpy as np

from . import _kernels

HERMITICITY_TOL = 1e-10
OFF_DIAGONAL_TOL = 1e-13
MAX_SWEEPS = 100
PAIR_TOL = 1e-8


def as_matrix(m) -> np.ndarray:
    """Coerce to a square complex128 matrix, rejecting non-finite entries."""
    out = np.asarray(m, dtype=np.complex128)
    if out.ndim != 2 or out.shape[0] != out.shape[1]:
        raise ValueError("matrix must be square")
    if not np.isfinite(out.real).all() or not np.isfinite(out.imag).all():
        raise ValueError("matrix entries must be finite")
    return out


def matmul(a, b) -> np.ndarray:
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise ValueError("incompatible dimensions")
    return a @ b


def dagger(a) -> np.ndarray:
    """Conjugate transpose."""
    return as_matrix(a).conj().T.copy()


def kron(a, b) -> np.ndarray:
    return np.kron(as_matrix(a), as_matrix(b))


def trace(a) -> complex:
    return complex(np.trace(as_matrix(a)))


def _infer_qubits(dim: int) -> int:
    n = dim.bit_length() - 1
    if dim <= 0 or 2**n != dim:
        raise ValueError("matrix dimension is not a power of two")
    return n


def partial_trace(rho, keep, n_qubits: int | None = None) -> np.ndarray:
    """Reduced density matrix over the qubits in ``keep`` (ascending indices)."""
    rho = as_matrix(rho)
    n = _infer_qubits(rho.shape[0]) if n_qubits is None else n_qubits
    keep = tuple(keep)
    if len(keep) == 0:
        raise ValueError("empty keep set")
    if len(set(keep)) != len(keep) or list(keep) != sorted(keep):
        raise ValueError("keep set must be strictly increasing")
    if keep[0] < 0 or keep[-1] >= n:
        raise ValueError("subsystem index out of range")
    t = rho.reshape((2,) * (2 * n))
    live = n
    for q in range(n - 1, -1, -1):
        if q in keep:
            continue
        t = np.trace(t, axis1=q, axis2=q + live)
        live -= 1
    d = 2 ** len(keep)
    return t.reshape(d, d)


def partial_transpose(rho, subsystem: int, n_qubits: int | None = None) -> np.ndarray:
    """Transpose one qubit's indices, leaving the rest untouched."""
    rho = as_matrix(rho)
    n = _infer_qubits(rho.shape[0]) if n_qubits is None else n_qubits
    if subsystem < 0 or subsystem >= n:
        raise ValueError("subsystem index out of range")
    t = rho.reshape((2,) * (2 * n))
    t = np.swapaxes(t, subsystem, subsystem + n)
    d = rho.shape[0]
    return t.reshape(d, d).copy()


def _checked_hermitian(m) -> np.ndarray:
    m = as_matrix(m)
    if np.abs(m - m.conj().T).max() > HERMITICITY_TOL:
        raise ValueError("hermiticity violated")
    return (m + m.conj().T) / 2.0


def _embed_real(h: np.ndarray) -> np.ndarray:
    # [[Re, -Im], [Im, Re]] is symmetric when h is Hermitian.
    return np.block([[h.real, -h.imag], [h.imag, h.real]])


def _run_jacobi(s: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    a = np.ascontiguousarray(s, dtype=np.float64)
    v = np.eye(a.shape[0], dtype=np.float64)
    sweeps = _kernels.jacobi_sweeps(a, v, OFF_DIAGONAL_TOL, MAX_SWEEPS)
    if sweeps < 0:
        raise RuntimeError("eigensolver did not converge")
    return np.diag(a).copy(), v


def _paired(w_doubled: np.ndarray) -> np.ndarray:
    w = np.sort(w_doubled)
    lo, hi = w[0::2], w[1::2]
    if np.max(hi - lo) > PAIR_TOL:
        raise RuntimeError("eigenvalue pairing failed")
    return (lo + hi) / 2.0


def hermitian_eigenvalues(m) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix, ascending."""
    h = _checked_hermitian(m)
    w_doubled, _ = _run_jacobi(_embed_real(h))
    return _paired(w_doubled)


def _hermitian_eigensystem(m) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues and orthonormal eigenvectors (columns). Internal use.

    A real embedded eigenvector (x, y) maps back to the complex vector
    x + iy; within a degenerate cluster the complexified candidates are
    Gram-Schmidt filtered, since the two partners of one pair complexify
    to parallel vectors.
    """
    h = _checked_hermitian(m)
    d = h.shape[0]
    w_doubled, v = _run_jacobi(_embed_real(h))
    order = np.argsort(w_doubled, kind="stable")
    w_sorted = w_doubled[order]
    v_sorted = v[:, order]
    values = _paired(w_doubled)

    vectors = np.zeros((d, d), dtype=np.complex128)
    found = 0
    start = 0
    while start < 2 * d:
        stop = start + 1
        while stop < 2 * d and w_sorted[stop] - w_sorted[stop - 1] <= PAIR_TOL:
            stop += 1
        needed = (stop - start) // 2
        kept = 0
        for j in range(start, stop):
            if kept == needed:
                break
            cand = v_sorted[:d, j] + 1j * v_sorted[d:, j]
            for k in range(found):
                cand = cand - (vectors[:, k].conj() @ cand) * vectors[:, k]
            norm = np.linalg.norm(cand)
            if norm > 1e-6:
                vectors[:, found] = cand / norm
                found += 1
                kept += 1
        if kept != needed:
            raise RuntimeError("eigenvector extraction failed")
        start = stop
    return values, vectors


def trace_norm(m) -> float:
    """Sum of absolute eigenvalues of a Hermitian matrix."""
    return float(np.abs(hermitian_eigenvalues(m)).sum())
