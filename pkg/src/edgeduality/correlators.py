"""Averages of products and ratios of characteristic polynomials over
unitary ensembles of size n, and their edge-scaled versions.

Case I    < prod_j det(b_j - M) det(c_j - M) >
          = prod_{l=n}^{n+S-1} h_l / (D(c) D(b)) * det[K_{n+S}(c_l, b_j)]
Case II   < prod_j det(b_j - M) / det(c_j - M) >
          = (-1)^(S(S-1)/2) prod_{j,l}(c_l - b_j) / (D(c) D(b)) * det[(Y_n(c_l)^-1 Y_n(b_j))_11 / (c_l - b_j)]
Case III  < prod_j 1 / (det(b_j - M) det(c_j - M)) >
          = (-2 pi i)^S prod_{l=n-S}^{n-1} h_l^-1 / (D(c) D(b))
            * det[(Y_{n-S}(c_l)^-1 Y_{n-S}(b_j))_12 / (c_l - b_j)]

with ``D(x) = prod_{j<k} (x_k - x_j)``.  Every entry is evaluated with the
sqrt-weight factors folded in and the norms handled as logarithms, so the
same code serves n = 2 and n = 256.
"""
from dataclasses import dataclass

import numpy as np

from . import orthopoly as op
from .equilibrium import edge_zoom, solve_one_cut
from .errors import IllConditionedError


def vandermonde(x):
    """``prod_{j<k} (x_k - x_j)``."""
    x = np.asarray(x, dtype=complex)
    d = 1.0 + 0j
    for k in range(len(x)):
        for j in range(k):
            d *= x[k] - x[j]
    return d


def _check_separated(x, name, tol=1e-8):
    x = np.asarray(x, dtype=complex)
    for k in range(len(x)):
        for j in range(k):
            if abs(x[k] - x[j]) < tol:
                raise IllConditionedError(f"points in {name} closer than {tol:g}")


@dataclass(frozen=True)
class PointSet:
    """Arguments ``b`` and ``c`` (length S each) of a case I/II/III average."""

    b: tuple
    c: tuple
    case: str = "I"

    def __post_init__(self):
        b = tuple(complex(v) for v in np.atleast_1d(self.b))
        c = tuple(complex(v) for v in np.atleast_1d(self.c))
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        if len(b) != len(c) or not b:
            raise ValueError("b and c must have the same positive length")
        if self.case not in ("I", "II", "III"):
            raise ValueError("case must be I, II or III")
        _check_separated(b, "b")
        _check_separated(c, "c")

    @property
    def S(self):
        return len(self.b)


@dataclass(frozen=True)
class ScaledPointSet:
    """2S edge-scaled points.

    regime ``soft``:    xi = edge + y**2 / (C n**(2/3))
    regime ``hard``:    xi = y / (C n**2)
    regime ``hard-III``: xi = -y / (C n**2)
    The first S points play the role of b, the last S of c.
    """

    y: tuple
    regime: str = "soft"

    def __post_init__(self):
        y = tuple(complex(v) for v in np.atleast_1d(self.y))
        object.__setattr__(self, "y", y)
        if len(y) % 2:
            raise ValueError("need an even number of points")
        if self.regime not in ("soft", "hard", "hard-III"):
            raise ValueError("regime must be soft, hard or hard-III")
        if self.regime == "soft" and any(v.real <= 0 for v in y):
            raise ValueError("soft regime needs Re y > 0")
        if self.regime == "hard-III" and any(v.imag == 0 and v.real <= 0 for v in y):
            raise ValueError("hard-III regime needs y off the negative axis")
        _check_separated(y, "y")

    @property
    def S(self):
        return len(self.y) // 2

    def zeta(self):
        y = np.asarray(self.y)
        return y * y if self.regime == "soft" else y

    def xi(self, eq, n):
        zm = edge_zoom(eq)
        z = self.zeta()
        return zm.xi(-z if self.regime == "hard-III" else z, n)


def _lsw(w, x):
    return op.log_sqrt_weight(w, np.asarray(x, dtype=complex))


def _psi_matrix(w, t, m, x):
    """``psi_k(x_j)`` for ``k < m``; shape (m, len(x))."""
    return op.orthonormal_functions(w, t, m - 1, np.asarray(x, dtype=complex))


def _det_over_vdm(E, c, b):
    dv = vandermonde(c) * vandermonde(b)
    if dv == 0 or not np.isfinite(dv):
        raise IllConditionedError("Vandermonde product vanished or overflowed")
    return np.linalg.det(E) / dv


def _cross_sign(c, b):
    """``(-1)^(S(S-1)/2) prod_{j,l} (c_l - b_j)``; the sign makes b = c give 1."""
    S = len(b)
    return (-1) ** (S * (S - 1) // 2) * np.prod(c[:, None] - b[None, :])


def _table_for(w, t, deg):
    if t is None or t.maxdeg < deg:
        return op.recurrence_coeffs(w, max(deg, 8))
    return t


def weighted_entries_I(w, t, n, b, c):
    """``sqrt(mu(c_l) mu(b_j)) K_{n+S}(c_l, b_j)``."""
    S = len(b)
    t = _table_for(w, t, n + S)
    return _psi_matrix(w, t, n + S, c).T @ _psi_matrix(w, t, n + S, b)


def _yhat_all(w, t, m, pts, deform, side):
    return [op.rh_matrix_Y_hat(w, t, m, z, deform, side) for z in pts]


def weighted_entries_II(w, t, n, b, c, deform=False, side=None):
    """``(Y_n(c)^-1 Y_n(b))_11 / (c - b)`` times ``sqrt(mu(b)/mu(c))``."""
    t = _table_for(w, t, n + 1)
    yc = _yhat_all(w, t, n, c, deform, side)
    P_ = op.orthonormal_functions(w, t, n, np.asarray(b, dtype=complex))
    det = np.exp(-0.5 * t.log_h[0]) if n == 0 else 1.0 / np.sqrt(t.beta[n])
    lc = _lsw(w, c)
    E = np.empty((len(c), len(b)), dtype=complex)
    for l, (cl, Y) in enumerate(zip(c, yc)):
        for j, bj in enumerate(b):
            yb11 = P_[n, j]
            yb21 = -2j * np.pi * P_[n - 1, j] if n else 0.0
            # P_ already carries sqrt(mu(b)); the Cauchy column carries sqrt(mu) inside
            e11 = (Y[1, 1] * yb11 - Y[0, 1] * yb21) / det
            E[l, j] = e11 * np.exp(-lc[l]) / (cl - bj)
    return E


def weighted_entries_III(w, t, m, b, c, deform=False, side=None):
    """``(Y_m(c)^-1 Y_m(b))_12 / (c - b)`` times ``1/sqrt(mu(b) mu(c))``."""
    t = _table_for(w, t, m + 1)
    yc = _yhat_all(w, t, m, c, deform, side)
    yb = _yhat_all(w, t, m, b, deform, side)
    det = np.exp(-0.5 * t.log_h[0]) if m == 0 else 1.0 / np.sqrt(t.beta[m])
    lc, lb = _lsw(w, c), _lsw(w, b)
    E = np.empty((len(c), len(b)), dtype=complex)
    for l, (cl, Yc) in enumerate(zip(c, yc)):
        for j, (bj, Yb) in enumerate(zip(b, yb)):
            e12 = (Yc[1, 1] * Yb[0, 1] - Yc[0, 1] * Yb[1, 1]) / det
            E[l, j] = e12 * np.exp(-lc[l] - lb[j]) / (cl - bj)
    return E


def corr_I(w, t, pts, n=None):
    """Case I average for matrices of size ``n`` (default ``w.n``)."""
    n = w.n if n is None else n
    b, c = np.asarray(pts.b), np.asarray(pts.c)
    S = len(b)
    t = _table_for(w, t, n + S)
    E = weighted_entries_I(w, t, n, b, c)
    logpre = np.sum(t.log_h[n:n + S]) - np.sum(_lsw(w, c)) - np.sum(_lsw(w, b))
    return complex(np.exp(logpre) * _det_over_vdm(E, c, b))


def corr_II(w, t, pts, n=None, deform=False):
    """Case II average; the ``c`` points must lie off J."""
    n = w.n if n is None else n
    b, c = np.asarray(pts.b), np.asarray(pts.c)
    E = weighted_entries_II(w, t, n, b, c, deform)
    logpre = np.sum(_lsw(w, c)) - np.sum(_lsw(w, b))
    return complex(np.exp(logpre) * _cross_sign(c, b) * _det_over_vdm(E, c, b))


def corr_III(w, t, pts, n=None, deform=False):
    """Case III average; all points off J and ``n >= S``."""
    n = w.n if n is None else n
    b, c = np.asarray(pts.b), np.asarray(pts.c)
    S = len(b)
    if n < S:
        raise ValueError("case III needs n >= S")
    t = _table_for(w, t, n)
    E = weighted_entries_III(w, t, n - S, b, c, deform)
    logpre = (-np.sum(t.log_h[n - S:n]) + np.sum(_lsw(w, c)) + np.sum(_lsw(w, b)))
    return complex((-2j * np.pi) ** S * np.exp(logpre) * _det_over_vdm(E, c, b))


def _split(sp, xi):
    S = sp.S
    return xi[:S], xi[S:]


def scaled_soft_lhs(w, t, sp, eq=None, case="I", regularize=True, split=None):
    """Edge-scaled soft-edge average at ``xi = a + zeta/(C n**(2/3))``.

    case I:   (C n^(2/3))^(-S^2) / prod_{l=n}^{n+S-1} h_l
              * < prod_j e^{-n V(xi_j)/2} det(xi_j - M) >
    case II:  < prod_j e^{-n V(b_j)/2 + n V(c_j)/2} det(b_j - M) / det(c_j - M) >
    case III: (C n^(2/3))^(-S^2) prod_{l=n-S}^{n-1} h_l
              * < prod_j e^{n V(xi_j)/2} / (det(b_j - M) det(c_j - M)) >

    ``split`` optionally permutes the 2S points before they are divided
    into (b, c).  ``regularize=False`` drops the ``e^{-nV/2}`` factors.
    """
    if sp.regime != "soft":
        raise ValueError("scaled_soft_lhs needs a soft ScaledPointSet")
    eq = eq or solve_one_cut(w.potential, "soft")
    return _scaled(w, t, sp, eq, case, regularize, split, 2.0 / 3.0)


def scaled_hard_lhs(w, t, sp, eq=None, case=None, regularize=True, split=None):
    """Edge-scaled hard-edge average.

    regime ``hard`` (case I, or II):
        (C n^2)^(-S^2) / prod h * < prod_j xi_j^(nu/2) e^{-n V/2} det(xi_j - M) >
    regime ``hard-III``:
        (C n^2)^(-S^2) prod h * < prod_j (e^{i pi} xi_j)^(-nu/2) e^{n V/2}
                                   / (det(b_j - M) det(c_j - M)) >
    In the ``hard`` regime ``xi^(nu/2)`` takes ``arg xi`` in ``[0, 2 pi)``; in
    ``hard-III`` ``e^{i pi} xi_j = y_j/(C n^2)`` with principal powers.
    """
    if sp.regime not in ("hard", "hard-III"):
        raise ValueError("scaled_hard_lhs needs a hard ScaledPointSet")
    eq = eq or solve_one_cut(w.potential, "hard")
    if case is None:
        case = "III" if sp.regime == "hard-III" else "I"
    return _scaled(w, t, sp, eq, case, regularize, split, 2.0)


def _cut_shift(w, sp, x, sign):
    """Turn the principal ``x^(sign nu/2)`` carried by the entries into the
    power with ``arg x`` in ``[0, 2 pi)``, the cut of the Bessel model."""
    if w.edge_kind != "hard" or sp.regime != "hard" or w.nu == 0:
        return 1.0
    k = np.count_nonzero(np.asarray(x).imag < 0)
    return np.exp(1j * np.pi * w.nu * sign * k)


def _scaled(w, t, sp, eq, case, regularize, split, expo):
    n = w.n
    S = sp.S
    xi = sp.xi(eq, n)
    zeta = np.asarray(sp.zeta())
    if split is not None:
        xi, zeta = xi[list(split)], zeta[list(split)]
    b, c = _split(sp, xi)
    C = edge_zoom(eq).C
    scale = (C * n ** expo) ** (-S * S)
    t = _table_for(w, t, n + S)
    if case == "I":
        E = weighted_entries_I(w, t, n, b, c)
        val = scale * _det_over_vdm(E, c, b) * _cut_shift(w, sp, b, 1) * _cut_shift(w, sp, c, 1)
        if not regularize:
            val *= np.exp(-np.sum(_lsw(w, xi)))
        return complex(val)
    if case == "II":
        E = weighted_entries_II(w, t, n, b, c, deform=True)
        val = (_cross_sign(c, b) * _det_over_vdm(E, c, b)
               * _cut_shift(w, sp, b, 1) * _cut_shift(w, sp, c, -1))
        if not regularize:
            val *= np.exp(np.sum(_lsw(w, c)) - np.sum(_lsw(w, b)))
        return complex(val)
    if case == "III":
        E = weighted_entries_III(w, t, n - S, b, c, deform=True)
        val = scale * (-2j * np.pi) ** S * _det_over_vdm(E, c, b)
        if w.edge_kind == "hard" and sp.regime == "hard-III" and w.nu != 0:
            # E carries mu^(-1/2) = xi^(-nu/2) e^{nV/2} with arg xi = pi;
            # switch to (e^{i pi} xi)^(-nu/2) = (y / (C n^2))^(-nu/2)
            u = zeta / (C * n ** expo)
            val *= np.exp(np.sum(0.5 * w.nu * np.log(xi.astype(complex))
                                 - 0.5 * w.nu * np.log(u)))
        if not regularize:
            val *= np.exp(np.sum(_lsw(w, xi)))
        return complex(val)
    raise ValueError("case must be I, II or III")
