"""Negativity-based entanglement measures for the three-qubit family.

One-tangles are negativities across one-vs-rest cuts, two-tangles are
negativities of the two-qubit reduced states, and the residual combines
them in the monogamy form N_one^2 - N_pair^2 - N_pair^2. The pi-tangle is
the average of the three residuals.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import closedform
from .channels import PHASE_DAMPING, CouplingConfig, apply_channel, lift
from .linalg import hermitian_eigenvalues, partial_trace, partial_transpose
from .rindler import ghz_rindler_density

CROSS_CHECK_TOL = 1e-10
# Negativities this far below zero are numerical noise and clamp to 0.
NEGATIVITY_FLOOR = 1e-10


def negativity(rho, subsystem: int, n_qubits: int | None = None) -> float:
    """Trace norm of the partial transpose, minus one.

    The same spectrum is reduced along two routes, sum(|w|) - 1 and
    2 * sum(|negative w|); they agree only if the transposed matrix kept
    unit trace, so the comparison runs on every call.
    """
    pt = partial_transpose(rho, subsystem, n_qubits)
    w = hermitian_eigenvalues(pt)
    from_norm = float(np.abs(w).sum()) - 1.0
    from_negatives = 2.0 * float(-w[w < 0.0].sum())
    if abs(from_norm - from_negatives) > CROSS_CHECK_TOL:
        raise RuntimeError("negativity cross-check failed")
    return from_norm


def two_tangle(rho, pair: tuple[int, int], n_qubits: int | None = None) -> float:
    """Negativity between the two qubits of a reduced pair state."""
    reduced = partial_trace(rho, pair, n_qubits)
    return negativity(reduced, 0, 2)


def residual(n_one: float, n_pair_x: float, n_pair_y: float) -> float:
    """Monogamy residual; reported unclamped."""
    return n_one * n_one - n_pair_x * n_pair_x - n_pair_y * n_pair_y


def pi_tangle(res_a: float, res_b: float, res_c: float) -> float:
    return (res_a + res_b + res_c) / 3.0


def _clamp(x: float) -> float:
    if x < -NEGATIVITY_FLOOR:
        raise RuntimeError("negativity below tolerance floor")
    return 0.0 if x < 0.0 else x


@dataclass(frozen=True)
class TangleReport:
    """Every tangle at one (r, coupling) point, numeric and closed-form.

    Field order matches the output column order exactly.
    """

    channel: str
    coupling: str
    p0: float
    p1: float
    p2: float
    r: float
    n_A_BC: float
    n_B_AC: float
    n_C_AB: float
    n_AB: float
    n_AC: float
    n_BC: float
    pi_A: float
    pi_B: float
    pi_C: float
    pi_tangle: float
    cf_n_A_BC: float
    cf_n_BC_AC: float
    cf_pi: float
    dev_A: float
    dev_BC: float
    dev_pi: float


def full_report(r: float, cfg: CouplingConfig) -> TangleReport:
    """Run the whole pipeline at one point: state, channel, all tangles."""
    rho = apply_channel(lift(cfg), ghz_rindler_density(r, r))

    n_a = _clamp(negativity(rho, 0, 3))
    n_b = _clamp(negativity(rho, 1, 3))
    n_c = _clamp(negativity(rho, 2, 3))
    n_ab = _clamp(two_tangle(rho, (0, 1), 3))
    n_ac = _clamp(two_tangle(rho, (0, 2), 3))
    n_bc = _clamp(two_tangle(rho, (1, 2), 3))

    pi_a = residual(n_a, n_ab, n_ac)
    pi_b = residual(n_b, n_ab, n_bc)
    pi_c = residual(n_c, n_ac, n_bc)
    pi = pi_tangle(pi_a, pi_b, pi_c)

    if cfg.kind == PHASE_DAMPING:
        cf_a = closedform.pd_one_tangle_A(r, *cfg.params)
        cf_bc = closedform.pd_one_tangle_BC(r, *cfg.params)
        cf_pi = closedform.pd_pi_tangle(r, *cfg.params)
    else:
        cf_a = closedform.pf_one_tangle_A(r, *cfg.params)
        cf_bc = closedform.pf_one_tangle_BC(r, *cfg.params)
        cf_pi = closedform.pf_pi_tangle(r, *cfg.params)

    return TangleReport(
        channel=cfg.kind,
        coupling=cfg.label,
        p0=cfg.p0,
        p1=cfg.p1,
        p2=cfg.p2,
        r=r,
        n_A_BC=n_a,
        n_B_AC=n_b,
        n_C_AB=n_c,
        n_AB=n_ab,
        n_AC=n_ac,
        n_BC=n_bc,
        pi_A=pi_a,
        pi_B=pi_b,
        pi_C=pi_c,
        pi_tangle=pi,
        cf_n_A_BC=cf_a,
        cf_n_BC_AC=cf_bc,
        cf_pi=cf_pi,
        dev_A=abs(n_a - cf_a),
        dev_BC=abs(n_b - cf_bc),
        dev_pi=abs(pi - cf_pi),
    )
