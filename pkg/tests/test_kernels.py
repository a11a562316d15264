"""Checks that the two kernel lanes are interchangeable.

The pure lane is written to follow the compiled lane operation for
operation, so everything here compares for *bit* equality, not closeness.
"""

import math
import os
import subprocess
import sys

import numpy as np
import pytest

import tritab
from tritab._kernels import _py

_cy = pytest.importorskip("tritab._kernels._cy")

PIVMIN = 1e-280


def both(fn_name, *args):
    return getattr(_py, fn_name)(*args), getattr(_cy, fn_name)(*args)


def random_bands(rng, n):
    diag_eff = rng.uniform(-4.0, 4.0, n)
    offprod = rng.uniform(-4.0, 4.0, n - 1)
    return diag_eff, offprod


def test_backend_constant():
    assert tritab.KERNEL_BACKEND in ("pure", "compiled")


# ---------------------------------------------------------------------------
# lane parity (bit-exact)
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("n", [1, 2, 3, 17, 200, 800])
def test_det_eval_parity(n):
    rng = np.random.default_rng(n)
    for _ in range(10):
        diag_eff, offprod = random_bands(rng, n)
        r_py, r_cy = both("det_eval", diag_eff, offprod)
        assert r_py == r_cy or (math.isnan(r_py) and math.isnan(r_cy))


@pytest.mark.parametrize("n", [1, 3, 50, 800, 2000])
def test_det_eval_slog_parity(n):
    rng = np.random.default_rng(1000 + n)
    for _ in range(10):
        diag_eff, offprod = random_bands(rng, n)
        r_py, r_cy = both("det_eval_slog", diag_eff, offprod)
        assert r_py == r_cy


@pytest.mark.parametrize("n", [1, 2, 30, 300])
def test_sturm_count_parity(n):
    rng = np.random.default_rng(2000 + n)
    diag = rng.uniform(-3.0, 3.0, n)
    offsq = rng.uniform(0.0, 4.0, max(n - 1, 0))
    for x in rng.uniform(-8.0, 8.0, 25):
        c_py, c_cy = both("sturm_count", diag, offsq, float(x), PIVMIN)
        assert c_py == c_cy


@pytest.mark.parametrize("n", [1, 2, 5, 40, 150])
def test_bisect_spectrum_parity(n):
    rng = np.random.default_rng(3000 + n)
    diag = rng.uniform(-3.0, 3.0, n)
    offsq = rng.uniform(0.01, 4.0, max(n - 1, 0))
    radius = float(np.abs(diag).max() + 2 * np.sqrt(offsq).sum() + 1)
    e_py, e_cy = both(
        "bisect_spectrum", diag, offsq, -radius, radius, 1e-12, 200, PIVMIN
    )
    assert np.array_equal(e_py, e_cy)


@pytest.mark.parametrize("n", [3, 4, 17, 200, 800])
def test_plu_last_row_parity(n):
    rng = np.random.default_rng(4000 + n)
    for _ in range(5):
        sub = rng.uniform(0.1, 5.0, n - 1) * rng.choice([-1.0, 1.0], n - 1)
        diag = rng.uniform(-5.0, 5.0, n)
        sup = rng.uniform(-5.0, 5.0, n - 1)
        (l_py, u_py), (l_cy, u_cy) = both("plu_last_row", sub, diag, sup)
        assert np.array_equal(l_py, l_cy, equal_nan=True)
        assert u_py == u_cy or (math.isnan(u_py) and math.isnan(u_cy))


# ---------------------------------------------------------------------------
# semantic checks on whatever lane is active
# ---------------------------------------------------------------------------

def test_slog_consistent_with_plain_det():
    rng = np.random.default_rng(11)
    from tritab._kernels import det_eval, det_eval_slog

    for n in (1, 2, 9, 40):
        diag_eff, offprod = random_bands(rng, n)
        det = det_eval(diag_eff, offprod)
        sign, logabs = det_eval_slog(diag_eff, offprod)
        assert sign == math.copysign(1.0, det) or det == 0.0
        if det != 0.0:
            assert logabs == pytest.approx(math.log(abs(det)), rel=1e-13)


def test_slog_zero_determinant():
    from tritab._kernels import det_eval_slog

    # [[1, 1], [1, 1]] is exactly singular
    sign, logabs = det_eval_slog(np.array([1.0, 1.0]), np.array([1.0]))
    assert sign == 0.0 and logabs == -math.inf


def test_slog_survives_overflow_and_underflow():
    from tritab._kernels import det_eval_slog

    sign, logabs = det_eval_slog(np.full(1200, 3.0), np.zeros(1199))
    assert sign == 1.0
    assert logabs == pytest.approx(1200 * math.log(3.0), rel=1e-12)
    sign, logabs = det_eval_slog(np.full(1200, 0.25), np.zeros(1199))
    assert sign == 1.0
    assert logabs == pytest.approx(1200 * math.log(0.25), rel=1e-12)


def test_sturm_count_is_an_eigenvalue_counter():
    from tritab._kernels import sturm_count

    rng = np.random.default_rng(21)
    n = 24
    diag = rng.uniform(-2.0, 2.0, n)
    off = rng.uniform(0.1, 1.5, n - 1)
    dense = np.diag(diag) + np.diag(off, 1) + np.diag(off, -1)
    eigs = np.linalg.eigvalsh(dense)
    counts = []
    for x in np.linspace(-6, 6, 41):
        c = sturm_count(diag, off**2, float(x), PIVMIN)
        counts.append(c)
        assert c == int(np.sum(eigs <= x + 1e-9))
    assert counts == sorted(counts)  # monotone in x
    assert counts[0] == 0 and counts[-1] == n


def test_bisect_spectrum_matches_lapack():
    from tritab._kernels import bisect_spectrum

    rng = np.random.default_rng(31)
    n = 60
    diag = rng.uniform(-2.0, 2.0, n)
    off = rng.uniform(0.1, 1.5, n - 1)
    dense = np.diag(diag) + np.diag(off, 1) + np.diag(off, -1)
    radius = float(np.abs(dense).sum(axis=1).max() + 1)
    got = bisect_spectrum(diag, off**2, -radius, radius, 1e-12, 200, PIVMIN)
    want = np.linalg.eigvalsh(dense)
    assert np.max(np.abs(np.asarray(got) - want)) <= 1e-10


# ---------------------------------------------------------------------------
# lane selection via environment
# ---------------------------------------------------------------------------

def _run_with_env(value):
    env = dict(os.environ)
    env["TRITAB_KERNEL"] = value
    return subprocess.run(
        [sys.executable, "-c", "import tritab._kernels as k; print(k.BACKEND)"],
        capture_output=True,
        text=True,
        env=env,
    )


def test_env_forces_pure_lane():
    proc = _run_with_env("pure")
    assert proc.returncode == 0
    assert proc.stdout.strip() == "pure"


def test_env_forces_compiled_lane():
    proc = _run_with_env("compiled")
    assert proc.returncode == 0
    assert proc.stdout.strip() == "compiled"


def test_env_rejects_unknown_lane():
    proc = _run_with_env("bogus")
    assert proc.returncode != 0
    assert "TRITAB_KERNEL" in proc.stderr
