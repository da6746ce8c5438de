import subprocess
import sys

import numpy as np
import pytest

from ghztangle import _kernels

from oracles import random_hermitian


def _embed(h):
    return np.block([[h.real, -h.imag], [h.imag, h.real]])


def _run(kernel, s, max_sweeps=100):
    a = np.array(s, dtype=np.float64)
    v = np.eye(a.shape[0])
    sweeps = kernel(a, v, 1e-13, max_sweeps)
    return a, v, sweeps


KERNELS = [_kernels.jacobi_sweeps_numpy]
if _kernels.HAS_NUMBA:
    KERNELS.append(_kernels.jacobi_sweeps_numba)


@pytest.mark.parametrize("kernel", KERNELS)
def test_diagonal_input_is_fixed_point(kernel):
    a, v, sweeps = _run(kernel, np.diag([3.0, 1.0, 2.0]))
    assert sweeps == 0
    assert np.array_equal(a, np.diag([3.0, 1.0, 2.0]))
    assert np.array_equal(v, np.eye(3))


@pytest.mark.parametrize("kernel", KERNELS)
def test_two_by_two_exact(kernel):
    a, v, sweeps = _run(kernel, np.array([[0.0, 1.0], [1.0, 0.0]]))
    assert sweeps >= 1
    assert np.abs(np.sort(np.diag(a)) - np.array([-1.0, 1.0])).max() <= 1e-14
    assert np.abs(v @ v.T - np.eye(2)).max() <= 1e-14


@pytest.mark.parametrize("kernel", KERNELS)
def test_matches_numpy_eigvalsh(kernel):
    rng = np.random.default_rng(101)
    for _ in range(20):
        s = _embed(random_hermitian(rng, 8))
        a, v, sweeps = _run(kernel, s)
        assert sweeps > 0
        w = np.sort(np.diag(a))
        assert np.abs(w - np.linalg.eigvalsh(s)).max() <= 1e-11
        # v must hold the accumulated rotations: v.T s v is diagonal.
        d = v.T @ s @ v
        assert np.abs(d - np.diag(np.diag(d))).max() <= 1e-10
        assert np.abs(v @ v.T - np.eye(16)).max() <= 1e-12


@pytest.mark.skipif(not _kernels.HAS_NUMBA, reason="numba not installed")
def test_kernels_agree_bitwise():
    # Same rotation sequence, so both kernels should agree to the last digit.
    rng = np.random.default_rng(103)
    for _ in range(10):
        s = _embed(random_hermitian(rng, 8))
        a1, v1, n1 = _run(_kernels.jacobi_sweeps_numpy, s)
        a2, v2, n2 = _run(_kernels.jacobi_sweeps_numba, s)
        assert n1 == n2
        assert np.abs(a1 - a2).max() <= 1e-13
        assert np.abs(v1 - v2).max() <= 1e-13


@pytest.mark.parametrize("kernel", KERNELS)
def test_budget_exhausted_returns_minus_one(kernel):
    rng = np.random.default_rng(107)
    s = _embed(random_hermitian(rng, 8))
    _, _, sweeps = _run(kernel, s, max_sweeps=0)
    assert sweeps == -1


def _probe_backend(env_value):
    code = (
        "import os, sys\n"
        f"os.environ['GHZTANGLE_BACKEND'] = {env_value!r}\n"
        "try:\n"
        "    from ghztangle import _kernels\n"
        "except RuntimeError as exc:\n"
        "    print('error:', exc)\n"
        "    sys.exit(9)\n"
        "print(_kernels.backend_name())\n"
    )
    return subprocess.run([sys.executable, "-c", code], capture_output=True, text=True)


def test_env_flag_selects_numpy():
    out = _probe_backend("numpy")
    assert out.returncode == 0
    assert out.stdout.strip() == "numpy"


@pytest.mark.skipif(not _kernels.HAS_NUMBA, reason="numba not installed")
def test_env_flag_selects_numba():
    out = _probe_backend("numba")
    assert out.returncode == 0
    assert out.stdout.strip() == "numba"


def test_env_flag_rejects_unknown():
    out = _probe_backend("cuda")
    assert out.returncode == 9
    assert "GHZTANGLE_BACKEND" in out.stdout


def test_numpy_backend_gives_same_eigenvalues():
    # End-to-end check that the fallback path computes identical spectra.
    code = (
        "import os\n"
        "os.environ['GHZTANGLE_BACKEND'] = 'numpy'\n"
        "import numpy as np\n"
        "from ghztangle.linalg import hermitian_eigenvalues\n"
        "rng = np.random.default_rng(109)\n"
        "x = rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8))\n"
        "m = (x + x.conj().T) / 2\n"
        "w = hermitian_eigenvalues(m)\n"
        "print(' '.join(format(v, '.17g') for v in w))\n"
    )
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True)
    assert out.returncode == 0
    got = np.array([float(tok) for tok in out.stdout.split()])

    rng = np.random.default_rng(109)
    x = rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8))
    m = (x + x.conj().T) / 2
    assert np.abs(got - np.linalg.eigvalsh(m)).max() <= 1e-11
