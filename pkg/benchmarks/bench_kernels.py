"""Time the compiled kernels against the numpy fallback.

Run from the repository root after building the extension::

    python3 benchmarks/bench_kernels.py [--repeat 5]

Each kernel is checked for agreement before it is timed.
"""
from __future__ import annotations

import argparse
import timeit

import numpy as np

from boundent import _kernels_py, kernels
from boundent.bell import BellSpectrum, LineParams, bell_diagonal, line_spectrum
from boundent.concurrence import chi_vector
from boundent.scan import ScanConfig, run_scan
from boundent.state import PureState, hermitian_spectrum

try:
    from boundent import _kernels as compiled
except ImportError:
    compiled = None


def _cases(rng):
    rho = bell_diagonal(line_spectrum(LineParams(-0.092, 0.04, 0.2148)))
    spec = hermitian_spectrum(rho.mat)
    chi, _ = chi_vector(PureState(3, 3, spec.eigenvectors[:, 0]))
    x = rng.standard_normal(81) + 1j * rng.standard_normal(81)
    lam = BellSpectrum(rng.dirichlet(np.ones(9)).reshape(3, 3)).lam
    mat = np.ascontiguousarray(rho.mat)
    return {
        "partial_transpose": (mat, 3, 3),
        "apply_a": (x, 3, 3),
        "t_matrix": (np.ascontiguousarray(spec.eigenvalues), np.ascontiguousarray(spec.eigenvectors), chi),
        "bell_singulars": (np.ascontiguousarray(lam), 0, 0),
    }


def _best(fn, number, repeat):
    return min(timeit.repeat(fn, number=number, repeat=repeat)) / number


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--number", type=int, default=2000)
    args = p.parse_args(argv)

    print(f"active backend: {kernels.BACKEND}")
    if compiled is None:
        print("compiled extension not built; only the fallback is timed")
    rng = np.random.default_rng(0)
    print(f"{'kernel':<20}{'python us':>12}{'cython us':>12}{'speedup':>10}")
    for name, call_args in _cases(rng).items():
        py = getattr(_kernels_py, name)
        t_py = _best(lambda: py(*call_args), args.number, args.repeat) * 1e6
        if compiled is None:
            print(f"{name:<20}{t_py:>12.2f}{'-':>12}{'-':>10}")
            continue
        cy = getattr(compiled, name)
        np.testing.assert_allclose(cy(*call_args), py(*call_args), atol=1e-12)
        t_cy = _best(lambda: cy(*call_args), args.number, args.repeat) * 1e6
        print(f"{name:<20}{t_py:>12.2f}{t_cy:>12.2f}{t_py / t_cy:>10.1f}")

    # end-to-end scan through whichever backend is active, then with the fallback forced
    cfg = ScanConfig("Line", 0.0, (0.0, 0.3, 0.01), (-0.2, 0.4, 0.01), path="generic")
    t_active = _best(lambda: run_scan(cfg), 1, args.repeat)
    saved = kernels._impl
    kernels._impl = _kernels_py
    try:
        t_fallback = _best(lambda: run_scan(cfg), 1, args.repeat)
    finally:
        kernels._impl = saved
    n = len(cfg.alphas) * len(cfg.betas)
    print(f"generic scan, {n} cells: {kernels.BACKEND} {t_active:.3f}s, python {t_fallback:.3f}s")


if __name__ == "__main__":
    main()
