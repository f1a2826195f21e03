import numpy as np
import pytest

from conftest import rel
from edgeduality import correlators as cr
from edgeduality import kontsevich as kz
from edgeduality import oracles as orc
from edgeduality import orthopoly as op
from edgeduality import parametrix as pm
from edgeduality.equilibrium import edge_zoom, solve_one_cut
from edgeduality.errors import IllConditionedError

CORR = {"I": cr.corr_I, "II": cr.corr_II, "III": cr.corr_III}


def _offaxis(rng, S):
    return tuple(rng.normal(size=S) + 1j * rng.choice([-1, 1], S) * (0.3 + rng.random(S)))


def test_case_I_small_example():
    w = op.gaussian_weight(2)
    pts = cr.PointSet(0.5, 0.7, "I")
    assert rel(cr.corr_I(w, None, pts), orc.brute_finite_n(w, pts)) < 1e-6


def test_case_II_small_example():
    w = op.gaussian_weight(2)
    pts = cr.PointSet(0.4, 0.6 + 0.5j, "II")
    assert rel(cr.corr_II(w, None, pts), orc.brute_finite_n(w, pts)) < 1e-5


def test_case_III_small_example():
    w = op.gaussian_weight(2)
    pts = cr.PointSet(0.3 + 0.4j, -0.2 + 0.6j, "III")
    assert rel(cr.corr_III(w, None, pts), orc.brute_finite_n(w, pts)) < 1e-5


@pytest.mark.parametrize("case", ["I", "II", "III"])
@pytest.mark.parametrize("w", [op.gaussian_weight(3), op.laguerre_weight(2, 0.5),
                               op.quartic_weight(3)])
def test_all_cases_against_eigenvalue_oracle(case, w, rng):
    t = op.recurrence_coeffs(w, 10)
    for S in (1, 2):
        for _ in range(3):
            pts = cr.PointSet(_offaxis(rng, S), _offaxis(rng, S), case)
            assert rel(CORR[case](w, t, pts), orc.brute_finite_n(w, pts)) < 1e-5


def test_case_I_single_point_is_kernel():
    w = op.gaussian_weight(5)
    t = op.recurrence_coeffs(w, 10)
    b, c = 0.3 + 0.2j, -0.5 + 0.1j
    ref = t.h[5] * op.cd_kernel(w, t, 6, c, b)
    assert rel(cr.corr_I(w, t, cr.PointSet(b, c)), ref) < 1e-9


def test_case_I_swap_symmetry(rng):
    w = op.gaussian_weight(6)
    b, c = _offaxis(rng, 3), _offaxis(rng, 3)
    v1 = cr.corr_I(w, None, cr.PointSet(b, c))
    v2 = cr.corr_I(w, None, cr.PointSet(c, b))
    assert abs(v1 - v2) < 1e-10 * abs(v1)


def test_case_II_identity_limit():
    w = op.gaussian_weight(4)
    c = (0.3 + 0.5j, -0.6 + 0.4j)
    b = tuple(v + 1e-4 for v in c)
    assert abs(cr.corr_II(w, None, cr.PointSet(b, c, "II")) - 1) < 1e-3


def test_case_III_permutation_invariance():
    w = op.laguerre_weight(5, 0.5)
    b = (0.3 + 0.4j, 1.2 - 0.3j)
    c = (-0.2 + 0.6j, 0.8 + 0.5j)
    v1 = cr.corr_III(w, None, cr.PointSet(b, c, "III"))
    v2 = cr.corr_III(w, None, cr.PointSet(b, c[::-1], "III"))
    v3 = cr.corr_III(w, None, cr.PointSet(b[::-1], c[::-1], "III"))
    assert abs(v1 - v2) < 1e-12 * abs(v1)
    assert abs(v1 - v3) < 1e-12 * abs(v1)


def test_pointset_validation():
    with pytest.raises(ValueError):
        cr.PointSet((1, 2), (3,))
    with pytest.raises(ValueError):
        cr.PointSet(1, 2, "IV")
    with pytest.raises(IllConditionedError):
        cr.PointSet((1, 1 + 1e-10), (2, 3))
    with pytest.raises(ValueError):
        cr.corr_III(op.gaussian_weight(1), None, cr.PointSet((1j, 2j), (3j, 4j), "III"))
    with pytest.raises(ValueError):
        cr.ScaledPointSet((1.0, -0.5), "soft")
    with pytest.raises(ValueError):
        cr.ScaledPointSet((1.0, -0.5), "hard-III")
    with pytest.raises(ValueError):
        cr.ScaledPointSet((1.0, 2.0, 3.0), "hard")


def test_soft_split_invariance():
    w = op.gaussian_weight(40)
    sp = cr.ScaledPointSet((0.9, 1.1, 1.3, 0.7), "soft")
    v = cr.scaled_soft_lhs(w, None, sp)
    for split in [(1, 0, 3, 2), (2, 3, 0, 1), (0, 2, 1, 3), (3, 1, 2, 0)]:
        assert abs(cr.scaled_soft_lhs(w, None, sp, split=split) - v) < 1e-10 * abs(v)


def test_soft_regularization_factor():
    w = op.gaussian_weight(30)
    sp = cr.ScaledPointSet((0.9, 1.1), "soft")
    eq = solve_one_cut(w.potential, "soft")
    xi = sp.xi(eq, w.n)
    v = cr.scaled_soft_lhs(w, None, sp, eq)
    raw = cr.scaled_soft_lhs(w, None, sp, eq, regularize=False)
    assert rel(v, raw * np.prod(np.exp(-w.n * eq.V(xi) / 2))) < 1e-12


def test_soft_error_decreases():
    sp = cr.ScaledPointSet((0.9, 1.1), "soft")
    rhs = kz.thm_soft_rhs(sp.y)
    errs = [rel(cr.scaled_soft_lhs(op.gaussian_weight(n), None, sp), rhs) for n in (20, 40, 80)]
    assert errs[0] > errs[1] > errs[2]


@pytest.mark.parametrize("nu", [0.0, 0.5])
def test_hard_convergence(nu):
    sp = cr.ScaledPointSet((1.0, 2.0), "hard")
    rhs = kz.thm_hard_rhs(nu, sp.y)
    errs = [rel(cr.scaled_hard_lhs(op.laguerre_weight(n, nu), None, sp), rhs) for n in (20, 40, 80)]
    assert errs[0] > errs[1] > errs[2]
    assert errs[2] < 5e-2


def test_hard_lower_half_plane_branch():
    # powers of xi use the same cut as the Bessel model
    y = (1 + 1j, 2 - 0.5j)
    w = op.laguerre_weight(160, 0.5)
    sp = cr.ScaledPointSet(y, "hard")
    assert rel(cr.scaled_hard_lhs(w, None, sp), kz.thm_hard_rhs(0.5, y)) < 2e-2
    ref = pm.limit_rhs("II", ("bessel", 0.5), y[1:], y[:1])
    assert rel(cr.scaled_hard_lhs(w, None, sp, case="II"), ref) < 2e-2


def test_hard_III_real_and_converging():
    sp = cr.ScaledPointSet((1.5, 2.5), "hard-III")
    rhs = kz.thm_hard_rhs(0.5, sp.y, "III")
    errs = []
    for n in (20, 40, 80):
        v = cr.scaled_hard_lhs(op.laguerre_weight(n, 0.5), None, sp)
        assert abs(v.imag) < 1e-9 * abs(v)
        errs.append(rel(v, rhs))
    assert errs[0] > errs[1] > errs[2]


def test_hard_III_nu_zero_is_factor_free():
    w = op.laguerre_weight(30, 0.0)
    sp = cr.ScaledPointSet((1.5, 2.5), "hard-III")
    eq = solve_one_cut(w.potential, "hard")
    xi = sp.xi(eq, w.n)
    b, c = xi[:1], xi[1:]
    E = cr.weighted_entries_III(w, None, w.n - 1, b, c, deform=True)
    plain = (edge_zoom(eq).C * w.n ** 2) ** -1 * (-2j * np.pi) * E[0, 0]
    assert rel(cr.scaled_hard_lhs(w, None, sp, eq), plain) < 1e-14


def test_scaled_regime_checks():
    with pytest.raises(ValueError):
        cr.scaled_soft_lhs(op.gaussian_weight(4), None, cr.ScaledPointSet((1, 2), "hard"))
    with pytest.raises(ValueError):
        cr.scaled_hard_lhs(op.laguerre_weight(4, 0), None, cr.ScaledPointSet((1, 2), "soft"))
