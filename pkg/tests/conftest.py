import numpy as np
import pytest

from boundent.state import BipartiteDensity, PureState

# criterion name -> (passed, detail); filled by test_acceptance
ACCEPTANCE = {}


def random_pure(rng, da, db):
    v = rng.standard_normal(da * db) + 1j * rng.standard_normal(da * db)
    return PureState(da, db, v / np.linalg.norm(v))


def random_hermitian(rng, n):
    m = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return (m + m.conj().T) / 2


def random_density(rng, da, db):
    n = da * db
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    m = g @ g.conj().T
    return BipartiteDensity(da, db, m / np.trace(m).real)


def reduced_purity_oracle(psi: PureState) -> float:
    """2 (1 - Tr rho_A^2) via an SVD of the coefficient matrix."""
    s = np.linalg.svd(psi.amplitudes.reshape(psi.dim_a, psi.dim_b), compute_uv=False)
    return 2.0 * (1.0 - np.sum(s**4))


def brute_partial_transpose(mat, da, db):
    out = np.empty_like(mat)
    for i in range(da):
        for k in range(db):
            for j in range(da):
                for l in range(db):
                    out[i * db + k, j * db + l] = mat[i * db + l, j * db + k]
    return out


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE, key=lambda n: int(n[1:].split()[0])):
        ok, detail = ACCEPTANCE[name]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
