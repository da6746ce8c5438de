"""GHZ state shared with two uniformly accelerated observers.

The inertial observer holds qubit 0; the other two observers each watch a
field mode through a uniform-acceleration horizon, which turns their share
of (|000> + |111>)/sqrt(2) into a mixed three-qubit state parametrized by
the acceleration angles rb and rc. r = 0 is no acceleration, r = pi/4 the
infinite-acceleration limit.
"""

from __future__ import annotations

import math

import numpy as np

R_MAX = math.pi / 4
# Admits inputs like 0.7854 that round pi/4 to a few decimals.
R_SLACK = 1e-3


def check_accel_param(r: float) -> float:
    r = float(r)
    if not math.isfinite(r) or r < 0.0 or r > R_MAX + R_SLACK:
        raise ValueError("r out of range [0, pi/4]")
    return r


def accel_to_r(a: float, omega_c: float = 1.0) -> float:
    """Acceleration angle for proper acceleration ``a`` at mode frequency omega*c.

    cos r = (exp(-2*pi*omega*c/a) + 1)^(-1/2); a -> infinity gives r -> pi/4.
    """
    a = float(a)
    omega_c = float(omega_c)
    if not math.isfinite(a) or a <= 0.0:
        raise ValueError("acceleration must be positive")
    if not math.isfinite(omega_c) or omega_c <= 0.0:
        raise ValueError("omega_c must be positive")
    return math.acos((math.exp(-2.0 * math.pi * omega_c / a) + 1.0) ** -0.5)


def ghz_rindler_density(rb: float, rc: float) -> np.ndarray:
    """Three-qubit density matrix after tracing out the hidden horizon modes.

    Only five diagonal entries and one coherence survive:

        rho = 1/2 [ cb^2 cc^2 |000><000| + cb^2 sc^2 |001><001|
                    + sb^2 cc^2 |010><010| + sb^2 sc^2 |011><011|
                    + cb cc (|000><111| + |111><000|) + |111><111| ]

    with cb = cos(rb) etc. The 1/2 prefactor makes the trace exactly one.
    """
    rb = check_accel_param(rb)
    rc = check_accel_param(rc)
    cb, sb = math.cos(rb), math.sin(rb)
    cc, sc = math.cos(rc), math.sin(rc)
    rho = np.zeros((8, 8), dtype=np.complex128)
    rho[0, 0] = cb * cb * cc * cc
    rho[1, 1] = cb * cb * sc * sc
    rho[2, 2] = sb * sb * cc * cc
    rho[3, 3] = sb * sb * sc * sc
    rho[7, 7] = 1.0
    rho[0, 7] = rho[7, 0] = cb * cc
    return rho / 2.0
