"""Single-qubit dephasing channels and their three-qubit lifts.

Kraus operators act by rho -> sum_k E_k rho E_k^dag. A lift couples each
qubit to its own copy of a channel with its own parameter; setting a
parameter to zero leaves that qubit untouched.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import as_matrix, dagger

PHASE_DAMPING = "phase_damping"
PHASE_FLIP = "phase_flip"
CHANNEL_KINDS = (PHASE_DAMPING, PHASE_FLIP)

COMPLETENESS_TOL = 1e-12


def _check_p(p: float) -> float:
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must be in [0, 1]")
    return p


@dataclass(frozen=True, eq=False)
class SingleQubitKraus:
    kind: str
    p: float
    ops: tuple[np.ndarray, np.ndarray]


def phase_damping(p: float) -> SingleQubitKraus:
    """E0 = diag(1, sqrt(1-p)), E1 = diag(0, sqrt(p)).

    E1 must have the zero in its upper-left entry; anything else breaks the
    completeness relation sum(E_k^dag E_k) = I.
    """
    p = _check_p(p)
    e0 = np.diag([1.0, np.sqrt(1.0 - p)]).astype(np.complex128)
    e1 = np.diag([0.0, np.sqrt(p)]).astype(np.complex128)
    return SingleQubitKraus(PHASE_DAMPING, p, (e0, e1))


def phase_flip(p: float) -> SingleQubitKraus:
    """E0 = sqrt(1-p) I, E1 = sqrt(p) sigma_z."""
    p = _check_p(p)
    e0 = np.sqrt(1.0 - p) * np.eye(2, dtype=np.complex128)
    e1 = np.sqrt(p) * np.diag([1.0, -1.0]).astype(np.complex128)
    return SingleQubitKraus(PHASE_FLIP, p, (e0, e1))


_MAKERS = {PHASE_DAMPING: phase_damping, PHASE_FLIP: phase_flip}


def _check_kind(kind: str) -> str:
    if kind not in _MAKERS:
        raise ValueError(f"unknown channel kind {kind!r}")
    return kind


@dataclass(frozen=True)
class CouplingConfig:
    """Which channel acts on which qubit, and how strongly.

    ``label`` names the coupling pattern for reporting; the tangles and the
    output rows depend only on (kind, p0, p1, p2).
    """

    kind: str
    p0: float
    p1: float
    p2: float
    label: str = "custom"

    def __post_init__(self):
        _check_kind(self.kind)
        for p in (self.p0, self.p1, self.p2):
            _check_p(p)

    @classmethod
    def collective(cls, kind: str, p: float) -> "CouplingConfig":
        return cls(kind, p, p, p, label="collective")

    @classmethod
    def local_alice(cls, kind: str, p: float) -> "CouplingConfig":
        return cls(kind, p, 0.0, 0.0, label="local_alice")

    @property
    def params(self) -> tuple[float, float, float]:
        return (self.p0, self.p1, self.p2)


def lift(cfg: CouplingConfig) -> tuple[np.ndarray, ...]:
    """All 2^3 tensor products E_i x E_j x E_k, index i varying slowest.

    The ordering is fixed so output rows and tests can refer to operators
    by position. With every parameter zero the only nonzero operator is
    the 8x8 identity (each channel's E1 vanishes at p = 0).
    """
    maker = _MAKERS[_check_kind(cfg.kind)]
    singles = [maker(p).ops for p in cfg.params]
    ops = []
    for e0 in singles[0]:
        for e1 in singles[1]:
            for e2 in singles[2]:
                ops.append(np.kron(np.kron(e0, e1), e2))
    return tuple(ops)


def apply_channel(ops, rho) -> np.ndarray:
    """Apply a Kraus family to a density matrix, checking completeness first."""
    rho = as_matrix(rho)
    d = rho.shape[0]
    total = np.zeros((d, d), dtype=np.complex128)
    for e in ops:
        e = as_matrix(e)
        if e.shape[0] != d:
            raise ValueError("incompatible dimensions")
        total += dagger(e) @ e
    if np.abs(total - np.eye(d)).max() > COMPLETENESS_TOL:
        raise ValueError("Kraus completeness violated")
    out = np.zeros((d, d), dtype=np.complex128)
    for e in ops:
        e = np.asarray(e, dtype=np.complex128)
        out += e @ rho @ e.conj().T
    return (out + out.conj().T) / 2.0
