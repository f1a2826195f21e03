import math

import numpy as np
import pytest
from numpy.polynomial.hermite import hermgauss
from scipy import special

from conftest import rel
from edgeduality import orthopoly as op
from edgeduality.errors import BranchCutError, NearSupportError

# mpmath quadrature of exp(-x^2/2)/(x - 2i) / (2 pi i)
CAUCHY_G1_K0_2I = 0.168102001223170606427149114029


def _quad_soft(w, m=200):
    """Gauss-Hermite nodes for ``exp(-n x^2 / 2)`` in physical units."""
    t, wt = hermgauss(m)
    s = math.sqrt(2.0 / w.n)
    return s * t, s * wt


def _quad_hard(w, m=200):
    x, wt = special.roots_genlaguerre(m, w.nu)
    return x / w.n, wt / w.n ** (w.nu + 1)


def test_weight_validation():
    with pytest.raises(ValueError):
        op.WeightSpec("soft", (0, 0, 0, 1), 3)
    with pytest.raises(ValueError):
        op.WeightSpec("soft", (0, 0, -1), 3)
    with pytest.raises(ValueError):
        op.WeightSpec("hard", (0, 1), 3, nu=-1.5)
    with pytest.raises(ValueError):
        op.WeightSpec("hard", (0, 1), 0)


def test_gaussian_closed_form_coefficients():
    t = op.recurrence_coeffs(op.gaussian_weight(10), 20)
    k = np.arange(1, 21)
    assert np.all(t.alpha == 0)
    assert np.allclose(t.beta[1:], k / 10, rtol=1e-14)
    assert rel(t.beta[0], math.sqrt(2 * math.pi / 10)) < 1e-14


def test_laguerre_closed_form_coefficients():
    nu, n = 0.5, 8
    t = op.recurrence_coeffs(op.laguerre_weight(n, nu), 20)
    k = np.arange(21)
    assert np.allclose(t.alpha, (2 * k + nu + 1) / n, rtol=1e-14)
    assert np.allclose(t.beta[1:], k[1:] * (k[1:] + nu) / 64, rtol=1e-14)


def test_stieltjes_reproduces_closed_form():
    # a tiny quartic coefficient forces the discretized route
    w = op.WeightSpec("soft", (0, 0, 0.5, 0, 1e-14), 10)
    assert not w.closed_form
    t = op.recurrence_coeffs(w, 30)
    ref = op.recurrence_coeffs(op.gaussian_weight(10), 30)
    assert np.allclose(t.beta[1:], ref.beta[1:], rtol=1e-9)
    assert np.max(np.abs(t.alpha)) < 1e-12


def test_quartic_h_matches_quadrature():
    w = op.quartic_weight(6)
    t = op.recurrence_coeffs(w, 12)
    x = np.linspace(-4, 4, 40001)
    mu = w.weight(x)
    for k in range(13):
        pk = op.eval_p(t, k, x).real
        assert rel(np.trapezoid(pk * pk * mu, x), t.h[k]) < 1e-9


def test_orthogonality_by_quadrature():
    for w in (op.gaussian_weight(3), op.laguerre_weight(4, 0.5)):
        t = op.recurrence_coeffs(w, 12)
        x, g = _quad_soft(w) if w.edge_kind == "soft" else _quad_hard(w)
        P = np.array([op.eval_p(t, k, x).real for k in range(13)])
        G = (P * g) @ P.T
        for j in range(13):
            assert rel(G[j, j], t.h[j]) < 1e-9
            for k in range(j):
                assert abs(G[j, k]) < 1e-9 * math.sqrt(t.h[j] * t.h[k])


def test_maxdeg_cap():
    with pytest.raises(ValueError):
        op.recurrence_coeffs(op.gaussian_weight(4), 600)


def test_eval_p_basic():
    t = op.recurrence_coeffs(op.gaussian_weight(1), 6)
    assert op.eval_p(t, 0, 0.3) == 1
    assert op.eval_p(t, 1, 0.3 + 0.2j) == 0.3 + 0.2j
    # Gram-Schmidt on a Gauss-Hermite rule gives x^4 - 6 x^2 + 3
    assert abs(op.eval_p(t, 4, 1.0) - (-2.0)) < 1e-11
    with pytest.raises(ValueError):
        op.eval_p(t, 7, 0.0)


def test_cauchy_transform_reference_value():
    w = op.gaussian_weight(1)
    t = op.recurrence_coeffs(w, 4)
    assert rel(op.cauchy_transform(w, t, 0, 2j), CAUCHY_G1_K0_2I) < 1e-10


def test_cauchy_transform_far_field():
    w = op.gaussian_weight(2)
    t = op.recurrence_coeffs(w, 4)
    z = 1e4j
    assert rel(op.cauchy_transform(w, t, 0, z), -t.beta[0] / (2j * math.pi * z)) < 1e-6


def test_cauchy_transform_parity():
    w = op.gaussian_weight(3)
    t = op.recurrence_coeffs(w, 6)
    z = 0.7 + 0.5j
    for k in range(5):
        a = op.cauchy_transform(w, t, k, z)
        b = op.cauchy_transform(w, t, k, -z)
        sign = -1 if k % 2 == 0 else 1
        assert abs(a - sign * b) < 1e-10 * abs(a)


def test_cauchy_transform_near_support_raises():
    w = op.gaussian_weight(3)
    t = op.recurrence_coeffs(w, 6)
    with pytest.raises(NearSupportError):
        op.cauchy_transform(w, t, 2, 0.5 + 1e-5j)
    with pytest.raises(BranchCutError):
        op.cauchy_transform_deformed(w, t, 2, 0.5)


def test_deformed_cauchy_matches_plain():
    for w in (op.gaussian_weight(5), op.laguerre_weight(5, 0.5)):
        t = op.recurrence_coeffs(w, 8)
        z = 0.6 + 0.05j
        assert rel(op.cauchy_transform_deformed(w, t, 4, z), op.cauchy_transform(w, t, 4, z)) < 1e-9


@pytest.mark.parametrize("w", [op.gaussian_weight(4), op.laguerre_weight(4, 0.5),
                               op.quartic_weight(4)])
def test_unit_determinant(w, rng):
    t = op.recurrence_coeffs(w, 8)
    for _ in range(20):
        z = complex(rng.normal() * 1.5, rng.choice([-1, 1]) * (0.05 + rng.random()))
        assert abs(np.linalg.det(op.rh_matrix_Y(w, t, 5, z)) - 1) < 1e-8


def test_Y_normalization_at_infinity():
    w = op.gaussian_weight(4)
    t = op.recurrence_coeffs(w, 8)
    m, z = 5, 1e3 * np.exp(0.3j)
    N = op.rh_matrix_Y(w, t, m, z) @ np.diag([z ** -m, z ** m])
    # first correction is [[0, -h_m / (2 pi i)], [-2 pi i / h_{m-1}, 0]] / z
    Y1 = np.array([[0, -t.h[m] / (2j * np.pi)], [-2j * np.pi / t.h[m - 1], 0]])
    assert np.max(np.abs(N - np.eye(2))) < 0.1
    # what is left is O(1/z^2) with an order-one coefficient
    assert abs(z) ** 2 * np.max(np.abs(N - np.eye(2) - Y1 / z)) < 50


def test_far_field_uses_recurrence_consistently():
    w = op.gaussian_weight(4)
    t = op.recurrence_coeffs(w, 8)
    z = 30 + 2j
    c = op.cauchy_transform(w, t, 5, z)
    # leading moment term
    assert rel(c, -t.h[5] / (2j * np.pi * z ** 6)) < 0.05


def test_Y_jump():
    w = op.gaussian_weight(4)
    t = op.recurrence_coeffs(w, 8)
    x = 0.5
    J = np.array([[1, w.weight(x)], [0, 1]])
    Yp = op.rh_matrix_Y(w, t, 5, x, deform=True, side=1)
    Ym = op.rh_matrix_Y(w, t, 5, x, deform=True, side=-1)
    assert np.max(np.abs(Yp - Ym @ J)) < 1e-9 * np.max(np.abs(Yp))
    # offsets: only the slowly varying first row is checked at this resolution
    eps = 1e-6
    Yp = op.rh_matrix_Y(w, t, 5, x + 1j * eps, deform=True)
    Ym = op.rh_matrix_Y(w, t, 5, x - 1j * eps, deform=True)
    assert np.max(np.abs((Yp - Ym @ J)[0])) < 1e-5


def test_kernel_diagonal_integrates_to_m():
    w = op.gaussian_weight(3)
    t = op.recurrence_coeffs(w, 8)
    x, g = _quad_soft(w)
    kd = np.array([op.cd_kernel(w, t, 6, v, v).real for v in x])
    assert abs(np.sum(kd * g) - 6) < 1e-8


def test_kernel_symmetry_and_closed_form():
    w = op.gaussian_weight(3)
    t = op.recurrence_coeffs(w, 8)
    x, y = 0.3 + 0.2j, -0.4 + 0.1j
    k = op.cd_kernel(w, t, 6, x, y)
    assert abs(k - op.cd_kernel(w, t, 6, y, x)) < 1e-12 * abs(k)
    assert rel(op.cd_kernel_closed(w, t, 6, x, y), k) < 1e-9


def test_kernel_from_Y():
    w = op.gaussian_weight(3)
    t = op.recurrence_coeffs(w, 8)
    x, y = 0.3 + 0.1j, -0.2 + 0.05j
    assert rel(op.cd_kernel_from_Y(w, t, 4, x, y), op.cd_kernel(w, t, 4, x, y)) < 1e-8
    assert rel(op.cd_kernel_from_Y(w, t, 1, x, y), 1 / t.h[0]) < 1e-8


def test_kernel_from_Y_confluent_limit():
    w = op.gaussian_weight(3)
    t = op.recurrence_coeffs(w, 8)
    x = 0.3 + 0.1j
    near = op.cd_kernel_from_Y(w, t, 4, x, x + 1e-6)
    assert rel(near, op.cd_kernel(w, t, 4, x, x)) < 1e-6


def test_large_n_norms_stay_finite():
    w = op.gaussian_weight(256)
    t = op.recurrence_coeffs(w, 300)
    assert np.all(np.isfinite(t.log_h))
    psi = op.orthonormal_functions(w, t, 300, np.array([1.9, 2.1]))
    assert np.all(np.isfinite(psi))
