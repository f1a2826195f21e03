import numpy as np
import pytest
from scipy import special

from conftest import rel
from edgeduality import parametrix as pm
from edgeduality.errors import BranchCutError, IllConditionedError, SingularityError

NUS = [0.0, 0.5, 1.0, 2.5]


def _grid(rng, m=50, scale=3.0):
    return scale * (rng.normal(size=m) + 1j * rng.normal(size=m))


def test_airy_unit_determinant(rng):
    for z in _grid(rng):
        assert abs(np.linalg.det(pm.airy_parametrix(z)) - 1) < 1e-10


@pytest.mark.parametrize("nu", NUS)
def test_bessel_unit_determinant(nu, rng):
    for z in _grid(rng):
        assert abs(np.linalg.det(pm.bessel_parametrix(nu, z)) - 1) < 1e-10


def test_airy_jump_on_real_axis():
    J = np.array([[1, 1], [0, 1]])
    for x in np.linspace(-6, 4, 50):
        Ap, Am = pm.airy_parametrix(x, 1), pm.airy_parametrix(x, -1)
        assert np.max(np.abs(Ap - Am @ J)) < 1e-10 * max(1, np.max(np.abs(Ap)))


@pytest.mark.parametrize("nu", NUS)
def test_bessel_jump_on_positive_axis(nu):
    e = np.exp(1j * np.pi * nu)
    J = np.array([[1 / e, 1 / e], [0, e]])
    for x in np.linspace(0.05, 8, 50):
        Bp, Bm = pm.bessel_parametrix(nu, x, 1), pm.bessel_parametrix(nu, x, -1)
        assert np.max(np.abs(Bp - Bm @ J)) < 1e-6 * max(1, np.max(np.abs(Bp)))
        # from just off the axis
        Bu = pm.bessel_parametrix(nu, x + 1e-9j)
        assert np.max(np.abs(Bu - Bp)) < 1e-6 * max(1, np.max(np.abs(Bp)))


def test_real_axis_needs_side():
    with pytest.raises(BranchCutError):
        pm.airy_parametrix(1.0)
    with pytest.raises(BranchCutError):
        pm.bessel_parametrix(0.5, 1.0)
    with pytest.raises(SingularityError):
        pm.bessel_parametrix(0.5, 0)
    # the negative axis is not a cut for the Bessel model
    up = pm.bessel_parametrix(0.5, -1.0 + 1e-12j)
    assert np.allclose(pm.bessel_parametrix(0.5, -1.0), up, atol=1e-9)


def test_airy_kernel_continuity_and_formula():
    xs = np.linspace(-5, 3, 50)
    for x, y in zip(xs, xs[::-1] + 0.013):
        kp = pm.kernel_entry("airy", x, y, 1)
        km = pm.kernel_entry("airy", x, y, -1)
        assert abs(kp - km) < 1e-10 * max(1, abs(kp))
        ax, axp, _, _ = special.airy(x)
        ay, ayp, _, _ = special.airy(y)
        explicit = (ax * ayp - axp * ay) / (x - y)
        assert abs(kp / (-2j * np.pi) - explicit) < 1e-10 * max(1, abs(explicit))
        assert abs(pm.airy_kernel(x, y) - explicit) < 1e-12 * max(1, abs(explicit))


def test_airy_kernel_diagonal():
    x = 0.7
    ai, aip, _, _ = special.airy(x)
    assert rel(pm.airy_kernel(x, x), aip ** 2 - x * ai ** 2) < 1e-13
    assert rel(pm.airy_kernel(x, x + 1e-7), pm.airy_kernel(x, x)) < 1e-6


@pytest.mark.parametrize("nu", [0.0, 0.5, 2.5])
def test_bessel_kernel_formula(nu):
    for x, y in [(0.3, 1.7), (2.0, 0.9), (0.3 + 0.2j, 1.2 - 0.1j)]:
        kb = pm.bessel_kernel(nu, x, y, side=1)
        assert rel(pm.kernel_entry(("bessel", nu), x, y, 1) / (-2j * np.pi), kb) < 1e-10
    # on the upper side of the cut the kernel is the real textbook one
    x, y = 0.3, 1.7
    sx, sy = np.sqrt(x), np.sqrt(y)
    ref = (special.jv(nu, 2 * sx) * sy * special.jvp(nu, 2 * sy)
           - special.jv(nu, 2 * sy) * sx * special.jvp(nu, 2 * sx)) / (x - y)
    assert rel(pm.bessel_kernel(nu, x, y, side=1), ref) < 1e-12


def test_bessel_kernel_diagonal():
    nu, x = 0.5, 1.3
    assert rel(pm.bessel_kernel(nu, x, x, 1), pm.bessel_kernel(nu, x, x + 1e-7, 1)) < 1e-6


@pytest.mark.parametrize("case", ["I", "II", "III"])
@pytest.mark.parametrize("kind", ["airy", ("bessel", 0.5), ("bessel", 2.0)])
def test_limit_rhs_matches_block_form(case, kind, rng):
    for S in (1, 2, 3):
        g = rng.normal(size=S) + 1j * (0.2 + rng.random(S))
        b = rng.normal(size=S) - 1j * (0.2 + rng.random(S))
        v1 = pm.limit_rhs(case, kind, g, b)
        v2 = pm.block_det_form(case, kind, g, b)
        assert abs(v1 - v2) < 1e-9 * abs(v1)


def test_limit_rhs_I_single_point_is_kernel():
    assert rel(pm.limit_rhs("I", "airy", [0.4 + 0.1j], [1.1 - 0.2j]),
               pm.airy_kernel(0.4 + 0.1j, 1.1 - 0.2j)) < 1e-11


def test_limit_rhs_II_identity_limit():
    g = np.array([0.3 + 0.5j, -0.6 + 0.4j])
    assert abs(pm.limit_rhs("II", "airy", g, g + 1e-6) - 1) < 1e-4


def test_block_form_scaling():
    g = np.array([0.3 + 0.5j, -0.6 + 0.4j])
    b = np.array([1.1 - 0.2j, 0.2 - 0.7j])
    lam = 1.7 - 0.4j
    for case in ("I", "II", "III"):
        v = pm.block_det_form(case, "airy", g, b)
        scaled = pm.block_det_form(case, None, g, b, P=lambda z: lam * pm.airy_parametrix(z))
        assert rel(scaled, lam ** 4 * v) < 1e-12


def test_detid_random_instances(rng):
    for _ in range(200):
        S = int(rng.integers(1, 5))
        a, b, c, d = (rng.normal(size=S) + 1j * rng.normal(size=S) for _ in range(4))
        x = rng.normal(size=S) + 1j * rng.normal(size=S)
        y = rng.normal(size=S) + 1j * rng.normal(size=S) + 3
        lhs, rhs = pm.detid_check(a, b, c, d, x, y)
        assert abs(lhs - rhs) < 1e-10 * max(abs(lhs), 1e-12)


def test_detid_degenerate_rows(rng):
    S = 3
    a, b, c, d = (rng.normal(size=S) + 1j * rng.normal(size=S) for _ in range(4))
    a[1] = 0
    x, y = rng.normal(size=S), rng.normal(size=S) + 4
    lhs, rhs = pm.detid_check(a, b, c, d, x, y)
    assert abs(lhs - rhs) < 1e-10 * abs(lhs)


def test_coincident_points_rejected():
    with pytest.raises(IllConditionedError):
        pm.limit_rhs("I", "airy", [0.5j, 1j], [0.5j, 2j])
    with pytest.raises(ValueError):
        pm.limit_rhs("IV", "airy", [1j], [2j])
    with pytest.raises(ValueError):
        pm.ParametrixKind("bessel", -1.5)


@pytest.mark.parametrize("nu", [0.0, 0.5, 2.0])
def test_bessel_row_constants_are_one(nu):
    for z in (0.7 + 0.3j, -1 + 0.3j, 2.0 - 1.0j, 1.5):
        r1, r2 = pm.bessel_row_constants(nu, z)
        assert abs(r1 - 1) < 1e-9
        assert abs(r2 - 1) < 1e-9
