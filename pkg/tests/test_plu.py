import math

import numpy as np
import pytest

from tritab import (
    DimensionMismatchError,
    NonPositiveParameterError,
    NotAnEigenvalueError,
    TableAlgebraSpec,
    TridiagonalMatrix,
    ZeroSubdiagonalError,
    b1_charpoly_via_plu,
    charpoly_eval,
    class_i_eigs,
    class_i_spec,
    class_ii_eigs,
    class_ii_spec,
    det_recurrence,
    det_via_plu,
    eigs_a,
    left_eigenvector,
    make_a,
    make_p,
    make_q,
    plu_factor,
    reconstruction_residual,
    right_eigenvector,
    slogdet_recurrence,
    slogdet_via_plu,
)

ANCHOR = TridiagonalMatrix(sub=(3.0, 6.0), diag=(1.0, 4.0, 7.0), sup=(2.0, 5.0))


def rel_err(a, b):
    return abs(a - b) / (1.0 + max(abs(a), abs(b)))


def random_matrix(rng, n):
    sub = rng.uniform(0.1, 5.0, n - 1) * rng.choice([-1.0, 1.0], n - 1)
    return TridiagonalMatrix(
        sub=sub, diag=rng.uniform(-5.0, 5.0, n), sup=rng.uniform(-5.0, 5.0, n - 1)
    )


def b1_prime(spec, k):
    return TridiagonalMatrix(
        sub=(k,) + spec.b[1:],
        diag=(0.0,) + spec.a[1:],
        sup=(1.0,) + spec.c[1:],
    )


# ---------------------------------------------------------------------------
# factorization
# ---------------------------------------------------------------------------

def test_anchor_factorization_exact():
    f = plu_factor(ANCHOR)
    assert f.lrow[0] == pytest.approx(1.0 / 3.0, rel=1e-15)
    assert f.lrow[1] == pytest.approx(1.0 / 9.0, rel=1e-15)
    assert f.ucorner == pytest.approx(-22.0 / 9.0, rel=1e-15)
    assert det_via_plu(ANCHOR) == pytest.approx(-44.0, rel=1e-14)
    assert f.perm == (2, 0, 1)


def test_anchor_dense_product():
    f = plu_factor(ANCHOR)
    assert np.max(np.abs(f.p_dense() @ f.l_dense() @ f.u_dense() - ANCHOR.to_dense())) <= 1e-14
    assert np.max(np.abs(f.reconstruct_dense() - ANCHOR.to_dense())) <= 1e-14


@pytest.mark.parametrize("n", [3, 4, 5, 8, 13])
def test_dense_product_random(n):
    rng = np.random.default_rng(100 + n)
    m = random_matrix(rng, n)
    f = plu_factor(m)
    dense = m.to_dense()
    recon = f.p_dense() @ f.l_dense() @ f.u_dense()
    assert np.max(np.abs(recon - dense)) <= 1e-10 * (1 + np.max(np.abs(dense)))
    # the banded route and the dense matmul associate sums differently, so
    # allow rounding at the scale of the L entries they both pass through
    growth = 1.0 + max(float(np.max(np.abs(f.lrow))), abs(f.ucorner))
    assert np.max(np.abs(f.reconstruct_dense() - recon)) <= 1e-13 * growth


def test_factor_shapes_and_structure():
    rng = np.random.default_rng(7)
    m = random_matrix(rng, 9)
    f = plu_factor(m)
    p, lo, up = f.p_dense(), f.l_dense(), f.u_dense()
    n = 9
    # P is the n-cycle sending row i+1 of M to row i of U
    assert np.array_equal(p, np.eye(n)[list(f.perm)])
    # L is unit lower triangular with fill only in the last row
    assert np.array_equal(np.diag(lo), np.ones(n))
    body = lo.copy()
    body[-1, :] = 0.0
    np.fill_diagonal(body, 0.0)
    assert np.count_nonzero(body) == 0
    # U carries M's rows 1..n-1 shifted up, so three bands plus the corner
    assert np.array_equal(np.diag(up), np.append(m.sub, f.ucorner))
    assert np.array_equal(np.diag(up, 1), m.diag[1:])
    assert np.array_equal(np.diag(up, 2), m.sup[1:])
    assert np.count_nonzero(np.tril(up, -1)) == 0


def test_determinant_split_across_factors():
    rng = np.random.default_rng(11)
    for n in (3, 4, 7, 10):
        m = random_matrix(rng, n)
        f = plu_factor(m)
        assert np.linalg.det(f.p_dense()) == pytest.approx((-1.0) ** (n - 1))
        assert np.linalg.det(f.l_dense()) == pytest.approx(1.0)
        det_u = float(np.prod(m.sub)) * f.ucorner
        assert np.linalg.det(f.u_dense()) == pytest.approx(det_u, rel=1e-10)


def test_first_row_matches_dense_route():
    rng = np.random.default_rng(21)
    for n in (3, 4, 6, 12, 40):
        m = random_matrix(rng, n)
        f = plu_factor(m)
        dense_row = (f.l_dense() @ f.u_dense())[-1]
        growth = 1.0 + max(float(np.max(np.abs(f.lrow))), abs(f.ucorner))
        assert np.max(np.abs(f.first_row() - dense_row)) <= 1e-13 * growth * (
            1 + np.max(np.abs(dense_row))
        )


def test_reconstruction_residual_small_orders():
    rng = np.random.default_rng(31)
    for n in range(3, 16):
        m = random_matrix(rng, n)
        res = reconstruction_residual(m, plu_factor(m))
        sup_norm = float(np.abs(m.to_dense()).sum(axis=1).max())
        assert res <= 1e-12 * (1 + sup_norm)


def test_q_family_reconstruction():
    m = make_q(5, 1.0, 2.0, 3.0)
    res = reconstruction_residual(m, plu_factor(m))
    assert res <= 1e-12


def test_lrow_zero_when_corner_entry_vanishes():
    m = TridiagonalMatrix(sub=(3.0, 6.0), diag=(0.0, 4.0, 7.0), sup=(2.0, 5.0))
    f = plu_factor(m)
    assert f.lrow[0] == 0.0


def test_lrow_equals_signed_minor_ratio():
    # lrow[i-1] = (-1)^{i+1} det(M[:i, :i]) / (sub_1 ... sub_i)
    rng = np.random.default_rng(41)
    m = random_matrix(rng, 8)
    dense = m.to_dense()
    f = plu_factor(m)
    for i in range(1, 8):
        minor = float(np.linalg.det(dense[:i, :i]))
        expected = (-1.0) ** (i + 1) * minor / float(np.prod(m.sub[:i]))
        assert f.lrow[i - 1] == pytest.approx(expected, rel=1e-9, abs=1e-12)


def test_rejects_small_and_singular_subdiagonal():
    with pytest.raises(DimensionMismatchError):
        plu_factor(TridiagonalMatrix(sub=(), diag=(2.0,), sup=()))
    with pytest.raises(DimensionMismatchError):
        plu_factor(TridiagonalMatrix(sub=(1.0,), diag=(2.0, 2.0), sup=(1.0,)))
    with pytest.raises(ZeroSubdiagonalError) as exc:
        plu_factor(TridiagonalMatrix(sub=(1.0, 0.0, 1.0), diag=(1.0,) * 4, sup=(1.0,) * 3))
    assert exc.value.index == 2
    assert "row 3" in str(exc.value)


def test_factors_are_read_only():
    f = plu_factor(ANCHOR)
    with pytest.raises(ValueError):
        f.lrow[0] = 9.9


# ---------------------------------------------------------------------------
# determinants
# ---------------------------------------------------------------------------

def test_det_via_plu_matches_recurrence():
    rng = np.random.default_rng(51)
    for _ in range(60):
        n = int(rng.integers(3, 200))
        m = random_matrix(rng, n)
        d_plu, d_rec = det_via_plu(m), det_recurrence(m)
        assert math.copysign(1.0, d_plu) == math.copysign(1.0, d_rec)
        assert rel_err(d_plu, d_rec) <= 1e-9


def test_det_via_plu_tiny_orders_direct():
    m1 = TridiagonalMatrix(sub=(), diag=(-3.5,), sup=())
    assert det_via_plu(m1) == -3.5
    m2 = TridiagonalMatrix(sub=(4.0,), diag=(1.0, 2.0), sup=(3.0,))
    assert det_via_plu(m2) == pytest.approx(2.0 - 12.0)


def test_det_via_plu_on_p_family():
    m = make_p(4, 2.0)
    assert rel_err(det_via_plu(m), det_recurrence(m)) <= 1e-12


def test_det_vanishes_at_an_eigenvalue():
    # shift A_3 by its own largest eigenvalue: det(xI - A) must collapse
    x = float(eigs_a(3)[0])
    a3 = make_a(3)
    shifted = TridiagonalMatrix(
        sub=-a3.sub, diag=x - a3.diag, sup=-a3.sup
    )
    assert abs(det_via_plu(shifted)) <= 1e-9


def test_slogdet_via_plu_matches_recurrence():
    rng = np.random.default_rng(61)
    for n in (3, 10, 50, 400, 1000):
        m = random_matrix(rng, n)
        s_plu, l_plu = slogdet_via_plu(m)
        s_rec, l_rec = slogdet_recurrence(m)
        assert s_plu == s_rec
        assert rel_err(l_plu, l_rec) <= 1e-9


def test_slogdet_large_order_stays_finite():
    rng = np.random.default_rng(71)
    m = random_matrix(rng, 900)
    assert not math.isfinite(det_via_plu(m)) or abs(det_via_plu(m)) > 1e300
    sign, logdet = slogdet_via_plu(m)
    assert sign in (-1.0, 1.0)
    assert math.isfinite(logdet)


def test_slogdet_exactly_singular():
    # ucorner = 0 happens when det(M) = 0; build one by shifting at a root
    x = float(eigs_a(4)[1])
    a4 = make_a(4)
    shifted = TridiagonalMatrix(sub=-a4.sub, diag=x - a4.diag, sup=-a4.sup)
    sign, logdet = slogdet_via_plu(shifted)
    if sign == 0.0:
        assert logdet == -math.inf
    else:
        assert logdet < -20.0  # numerically singular is acceptable here


# ---------------------------------------------------------------------------
# charpoly of the bordered table-algebra matrix
# ---------------------------------------------------------------------------

def test_b1_charpoly_hand_values():
    # class I, d = 2, alpha = 1: x = 2 is the Frobenius eigenvalue
    spec_i = class_i_spec(2, 1.0)
    assert b1_charpoly_via_plu(spec_i, spec_i.b[0], 2.0) == pytest.approx(0.0, abs=1e-12)
    # class II, d = 2, alpha = gamma = 1 at x = 1: det(I - B1) = -3
    spec_ii = class_ii_spec(2, 1.0, 1.0)
    assert b1_charpoly_via_plu(spec_ii, spec_ii.b[0], 1.0) == pytest.approx(-3.0, rel=1e-12)


def test_b1_charpoly_is_monic_at_large_argument():
    spec = class_ii_spec(5, 1.5, 0.8)
    x = 1e6
    ratio = b1_charpoly_via_plu(spec, spec.b[0], x) / x ** 6
    assert ratio == pytest.approx(1.0, rel=1e-4)


def test_b1_charpoly_matches_band_recurrence():
    rng = np.random.default_rng(81)
    for _ in range(12):
        d = int(rng.integers(3, 21))
        spec = TableAlgebraSpec(
            b=tuple(rng.uniform(0.2, 3.0, d)),
            a=tuple(rng.uniform(0.0, 2.0, d + 1)),
            c=tuple(rng.uniform(0.2, 3.0, d)),
        )
        k = float(rng.uniform(0.5, 4.0))
        m = b1_prime(spec, k)
        for x in rng.uniform(-6.0, 6.0, 50):
            assert rel_err(
                b1_charpoly_via_plu(spec, k, float(x)), charpoly_eval(m, float(x))
            ) <= 1e-9


def test_b1_charpoly_rejects_bad_pivot():
    spec = class_i_spec(3, 1.0)
    with pytest.raises(NonPositiveParameterError):
        b1_charpoly_via_plu(spec, 0.0, 1.0)
    with pytest.raises(NonPositiveParameterError):
        b1_charpoly_via_plu(spec, -2.0, 1.0)


# ---------------------------------------------------------------------------
# eigenvectors of the bordered matrix
# ---------------------------------------------------------------------------

def test_eigenvector_hand_values_class_ii():
    spec = class_ii_spec(2, 1.0, 1.0)
    k = spec.b[0]
    eta = right_eigenvector(spec, k, 2.0)
    psi = left_eigenvector(spec, k, 2.0)
    assert np.max(np.abs(eta - [0.5, 1.0, 1.0])) <= 1e-12
    assert np.max(np.abs(psi - [1.0, 1.0, 0.5])) <= 1e-12
    eta0 = right_eigenvector(spec, k, 0.0)
    psi0 = left_eigenvector(spec, k, 0.0)
    assert np.max(np.abs(eta0 - [0.5, 0.0, -1.0])) <= 1e-12
    assert np.max(np.abs(psi0 - [1.0, 0.0, -0.5])) <= 1e-12


def test_eigenvector_normalization_convention():
    spec = class_i_spec(6, 1.2)
    k = spec.b[0]
    for x in class_i_eigs(6, 1.2):
        for vec in (right_eigenvector(spec, k, float(x)),
                    left_eigenvector(spec, k, float(x))):
            assert np.max(np.abs(vec)) == pytest.approx(1.0)
            lead = vec[np.abs(vec) > 1e-12][0]
            assert lead > 0


@pytest.mark.parametrize("d", [2, 3, 5, 8, 12])
def test_eigenvector_residuals_class_i(d):
    spec = class_i_spec(d, 2.0)
    k = spec.b[0]
    m = b1_prime(spec, k).to_dense()
    for x in class_i_eigs(d, 2.0):
        eta = right_eigenvector(spec, k, float(x))
        psi = left_eigenvector(spec, k, float(x))
        assert np.max(np.abs(m @ eta - x * eta)) <= 1e-8 * (1 + abs(x))
        assert np.max(np.abs(psi @ m - x * psi)) <= 1e-8 * (1 + abs(x))


@pytest.mark.parametrize("d", [2, 4, 7, 12])
def test_left_right_biorthogonality(d):
    spec = class_ii_spec(d, 1.0, 0.5)
    k = spec.b[0]
    eigs = class_ii_eigs(d, 1.0, 0.5)
    etas = [right_eigenvector(spec, k, float(x)) for x in eigs]
    psis = [left_eigenvector(spec, k, float(x)) for x in eigs]
    for i, psi in enumerate(psis):
        for j, eta in enumerate(etas):
            if i == j:
                continue
            bound = 1e-8 * np.linalg.norm(psi) * np.linalg.norm(eta)
            assert abs(float(psi @ eta)) <= bound


def test_eigenvector_rejects_non_eigenvalue():
    spec = class_ii_spec(2, 1.0, 1.0)
    with pytest.raises(NotAnEigenvalueError):
        right_eigenvector(spec, spec.b[0], 0.5)
    with pytest.raises(NotAnEigenvalueError):
        left_eigenvector(spec, spec.b[0], 0.5)


def test_eigenvector_rejects_bad_pivot():
    spec = class_ii_spec(3, 1.0, 1.0)
    with pytest.raises(NonPositiveParameterError):
        right_eigenvector(spec, -1.0, 2.0)
