"""Timing comparison of the two Jacobi kernels.

Runs the numba and pure-numpy kernels over the same batch of embedded
Hermitian matrices and reports per-solve times. The first numba call pays
JIT compilation, so both kernels get a warmup pass before timing.

    python3 benchmarks/bench_backends.py --size 8 --count 300
"""

import argparse
import statistics
import time

import numpy as np

from ghztangle import _kernels

OFF_TOL = 1e-13
MAX_SWEEPS = 100


def make_batch(rng, size, count):
    batch = []
    for _ in range(count):
        x = rng.normal(size=(size, size)) + 1j * rng.normal(size=(size, size))
        h = (x + x.conj().T) / 2.0
        batch.append(np.block([[h.real, -h.imag], [h.imag, h.real]]))
    return batch


def time_kernel(kernel, batch):
    times = []
    spectra = []
    for s in batch:
        a = s.copy()
        v = np.eye(a.shape[0])
        start = time.perf_counter()
        sweeps = kernel(a, v, OFF_TOL, MAX_SWEEPS)
        times.append(time.perf_counter() - start)
        if sweeps < 0:
            raise RuntimeError("kernel did not converge during benchmark")
        spectra.append(np.sort(np.diag(a)))
    return times, spectra


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--size", type=int, default=8, help="Hermitian matrix dimension before embedding")
    parser.add_argument("--count", type=int, default=300, help="matrices per kernel")
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    batch = make_batch(rng, args.size, args.count)
    embedded = batch[0].shape[0]
    print(f"{args.count} matrices, {args.size}x{args.size} Hermitian ({embedded}x{embedded} embedded)")

    kernels = [("numpy", _kernels.jacobi_sweeps_numpy)]
    if _kernels.HAS_NUMBA:
        kernels.append(("numba", _kernels.jacobi_sweeps_numba))
    else:
        print("numba not importable; timing the numpy kernel only")

    results = {}
    for name, kernel in kernels:
        time_kernel(kernel, batch[:3])  # warmup (JIT compile for numba)
        times, spectra = time_kernel(kernel, batch)
        results[name] = (times, spectra)
        total = sum(times)
        print(
            f"{name:>6s}: total {total * 1e3:8.2f} ms   "
            f"mean {statistics.mean(times) * 1e6:8.1f} us   "
            f"median {statistics.median(times) * 1e6:8.1f} us"
        )

    if len(results) == 2:
        gap = max(
            float(np.abs(a - b).max())
            for a, b in zip(results["numpy"][1], results["numba"][1])
        )
        ratio = statistics.median(results["numpy"][0]) / statistics.median(results["numba"][0])
        print(f"spectra agree to {gap:.3e}; numba is {ratio:.1f}x faster (median per solve)")


if __name__ == "__main__":
    main()
