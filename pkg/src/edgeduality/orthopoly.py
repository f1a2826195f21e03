"""Monic orthogonal polynomials for the weights

    soft:  mu(x) = exp(-n V(x))            on the real line
    hard:  mu(x) = x**nu exp(-n V(x))      on (0, inf)

together with their Cauchy transforms, the 2x2 Riemann-Hilbert matrix

    Y_m(z) = [[ p_m(z),                    C[p_m mu](z)                 ],
              [ -2 pi i p_{m-1}(z)/h_{m-1}, -2 pi i C[p_{m-1} mu](z)/h_{m-1} ]]

with ``C[f](z) = 1/(2 pi i) int f(x)/(x - z) dx``, and the Christoffel-Darboux
kernel.

Norms ``h_k`` are kept as logarithms.  Internally everything is evaluated
through the orthonormal functions ``psi_k = p_k sqrt(mu) / sqrt(h_k)``, which
stay O(1) on and near the support for any ``n``.
"""
from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial import polynomial as P
from scipy import special

from .errors import (BranchCutError, ConvergenceError, InstabilityError,
                     NearSupportError)


@dataclass(frozen=True)
class WeightSpec:
    """Ensemble weight ``exp(-n V)`` (soft) or ``x**nu exp(-n V)`` (hard).

    ``potential`` holds the coefficients of V in increasing degree.
    """

    edge_kind: str
    potential: tuple
    n: int
    nu: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "potential",
                           tuple(float(c) for c in np.trim_zeros(
                               np.asarray(self.potential, dtype=float), "b")))
        deg = len(self.potential) - 1
        if self.edge_kind == "soft":
            if deg < 2 or deg % 2 or self.potential[-1] <= 0:
                raise ValueError("soft weights need even degree >= 2 and a "
                                 "positive leading coefficient")
            if self.nu != 0:
                raise ValueError("nu is only meaningful for hard weights")
        elif self.edge_kind == "hard":
            if deg < 1 or self.potential[-1] <= 0:
                raise ValueError("hard weights need degree >= 1 and a "
                                 "positive leading coefficient")
            if not self.nu > -1:
                raise ValueError("nu must exceed -1")
        else:
            raise ValueError(f"unknown edge kind {self.edge_kind!r}")
        if int(self.n) != self.n or self.n < 1:
            raise ValueError("n must be a positive integer")

    def V(self, x):
        return P.polyval(x, self.potential)

    def dV(self, x):
        return P.polyval(x, P.polyder(self.potential))

    def log_weight(self, x):
        """``log mu(x)`` (principal logarithm for complex hard-edge x)."""
        x = np.asarray(x)
        lw = -self.n * self.V(x)
        if self.edge_kind == "hard" and self.nu != 0:
            lw = lw + self.nu * np.log(x.astype(complex) if np.iscomplexobj(x)
                                       or np.any(x.real <= 0) else x)
        return lw

    def weight(self, x):
        return np.exp(self.log_weight(x))

    def dist_to_support(self, z):
        z = complex(z)
        if self.edge_kind == "soft":
            return abs(z.imag)
        if z.real >= 0:
            return abs(z.imag)
        return abs(z)

    @property
    def closed_form(self):
        deg = len(self.potential) - 1
        return (self.edge_kind == "soft" and deg == 2) or \
            (self.edge_kind == "hard" and deg == 1)


def gaussian_weight(n):
    """``exp(-n x**2 / 2)``."""
    return WeightSpec("soft", (0.0, 0.0, 0.5), n)


def laguerre_weight(n, nu):
    """``x**nu exp(-n x)`` on the positive axis."""
    return WeightSpec("hard", (0.0, 1.0), n, nu)


def quartic_weight(n):
    """``exp(-n x**4 / 4)``."""
    return WeightSpec("soft", (0.0, 0.0, 0.0, 0.0, 0.25), n)


@dataclass(frozen=True)
class RecurrenceTable:
    """``x p_k = p_{k+1} + alpha_k p_k + beta_k p_{k-1}``, ``beta_0 = int mu``.

    ``log_h[k] = log(beta_0 beta_1 ... beta_k)``.
    """

    alpha: np.ndarray
    beta: np.ndarray
    log_h: np.ndarray = field(repr=False)

    @property
    def maxdeg(self):
        return len(self.alpha) - 1

    @property
    def h(self):
        return np.exp(self.log_h)


def _table(alpha, beta, log_beta0):
    alpha = np.asarray(alpha, dtype=float)
    beta = np.asarray(beta, dtype=float)
    lb = np.log(beta)
    lb[0] = log_beta0
    for a in (alpha, beta):
        a.setflags(write=False)
    log_h = np.cumsum(lb)
    log_h.setflags(write=False)
    return RecurrenceTable(alpha, beta, log_h)


def _support_radius(w, m):
    """Half-width outside which ``p_k**2 mu`` (k <= m) is below 1e-35 of its peak."""
    xs = np.linspace(1e-6, 1.0, 2001)
    scale = 1.0
    while True:
        x = xs * scale
        f = w.n * w.V(x) - 2.0 * m * np.log(np.maximum(x, 1e-300)) - w.nu * np.log(x)
        if w.edge_kind == "soft":
            fl = w.n * w.V(-x) - 2.0 * m * np.log(np.maximum(x, 1e-300))
            f = np.minimum(f, fl)
        if f[-1] - f.min() > 80.0 and f.argmin() < 0.9 * len(x):
            return float(scale)
        scale *= 1.5


def _stieltjes(w, maxdeg, nodes=4096):
    L = _support_radius(w, maxdeg + 1)
    if w.edge_kind == "soft":
        u, gw = special.roots_legendre(nodes)
        x = L * u
        lw = np.log(gw * L) - w.n * w.V(x)
    else:
        u, gw = special.roots_jacobi(nodes, 0.0, w.nu)
        x = 0.5 * L * (1.0 + u)
        lw = np.log(gw) + (w.nu + 1.0) * np.log(0.5 * L) - w.n * w.V(x)
    top = lw.max()
    wt = np.exp(lw - top)
    log_beta0 = top + np.log(wt.sum())
    wt /= wt.sum()
    alpha = np.zeros(maxdeg + 1)
    beta = np.zeros(maxdeg + 1)
    beta[0] = np.exp(log_beta0)
    q_prev = np.zeros_like(x)
    q = np.ones_like(x)
    for k in range(maxdeg + 1):
        alpha[k] = np.sum(wt * x * q * q)
        if k == maxdeg:
            break
        r = (x - alpha[k]) * q - (np.sqrt(beta[k]) * q_prev if k else 0.0)
        # one pass of re-orthogonalization against the last two vectors
        r -= np.sum(wt * r * q) * q
        if k:
            r -= np.sum(wt * r * q_prev) * q_prev
        b = np.sum(wt * r * r)
        if not b > 0:
            raise InstabilityError(f"Stieltjes procedure lost positivity at k={k + 1}")
        beta[k + 1] = b
        q_prev, q = q, r / np.sqrt(b)
    return alpha, beta, log_beta0


def recurrence_coeffs(w, maxdeg):
    """Recurrence table of the monic orthogonal polynomials up to ``maxdeg``."""
    if maxdeg > 512:
        raise ValueError("maxdeg is capped at 512")
    k = np.arange(maxdeg + 1, dtype=float)
    if w.closed_form and w.edge_kind == "soft":
        c0, c1, c2 = w.potential
        lam = 2.0 * w.n * c2
        alpha = np.full(maxdeg + 1, -c1 / (2.0 * c2))
        beta = k / lam
        lb0 = 0.5 * np.log(2.0 * np.pi / lam) - w.n * (c0 - c1 * c1 / (4.0 * c2))
        beta[0] = np.exp(lb0)
        return _table(alpha, beta, lb0)
    if w.closed_form:
        c0, c1 = w.potential
        lam = w.n * c1
        alpha = (2.0 * k + w.nu + 1.0) / lam
        beta = k * (k + w.nu) / lam ** 2
        lb0 = special.gammaln(w.nu + 1.0) - (w.nu + 1.0) * np.log(lam) - w.n * c0
        beta[0] = np.exp(lb0)
        return _table(alpha, beta, lb0)
    alpha, beta, lb0 = _stieltjes(w, maxdeg)
    if w.edge_kind == "soft" and all(c == 0 for c in w.potential[1::2]):
        alpha[:] = 0.0
    return _table(alpha, beta, lb0)


def eval_p(t, k, z):
    """Monic ``p_k(z)`` by forward recurrence."""
    if k > t.maxdeg:
        raise ValueError("degree exceeds the recurrence table")
    z = np.asarray(z, dtype=complex)
    prev = np.zeros_like(z)
    cur = np.ones_like(z)
    for j in range(k):
        cur, prev = (z - t.alpha[j]) * cur - t.beta[j] * prev * (j > 0), cur
    return complex(cur) if cur.ndim == 0 else cur


def log_sqrt_weight(w, z):
    """``log sqrt(mu(z))`` on the principal branch."""
    z = np.asarray(z, dtype=complex)
    out = -0.5 * w.n * w.V(z)
    if w.edge_kind == "hard" and w.nu != 0:
        out = out + 0.5 * w.nu * np.log(z)
    return out


def orthonormal_functions(w, t, m, z, weighted=True, lsw=None):
    """``psi_k(z)`` for ``k = 0..m``; shape ``(m + 1,) + z.shape``.

    With ``weighted=False`` returns ``p_k(z)/sqrt(h_k)`` instead.  A running
    per-point exponent prevents overflow of the intermediate values.
    """
    if m > t.maxdeg:
        raise ValueError("degree exceeds the recurrence table")
    z = np.asarray(z, dtype=complex)
    if weighted:
        e = log_sqrt_weight(w, z) if lsw is None else np.asarray(lsw, dtype=complex)
    else:
        e = np.zeros(z.shape, dtype=complex)
    e = e - 0.5 * t.log_h[0]
    sb = np.sqrt(t.beta)
    out = np.empty((m + 1,) + z.shape, dtype=complex)
    prev = np.zeros_like(z)
    cur = np.ones_like(z)
    out[0] = np.exp(e)
    for k in range(m):
        nxt = ((z - t.alpha[k]) * cur - (sb[k] * prev if k else 0.0)) / sb[k + 1]
        prev, cur = cur, nxt
        big = np.abs(cur) > 1e100
        if np.any(big):
            s = np.where(big, np.abs(cur), 1.0)
            cur = cur / s
            prev = prev / s
            e = e + np.log(s)
        with np.errstate(over="ignore", under="ignore", invalid="ignore"):
            out[k + 1] = cur * np.exp(e)
    return out


# --- Cauchy transforms ---------------------------------------------------

_GL = {q: special.roots_legendre(q) for q in (16, 32)}


def _panels(breaks, q):
    u, gw = _GL[q]
    a, b = breaks[:-1, None], breaks[1:, None]
    x = 0.5 * (a + b) + 0.5 * (b - a) * u
    return x.ravel(), (0.5 * (b - a) * gw).ravel()


def _graded_breaks(lo, hi, x0, scale, hmax):
    """Breakpoints on [lo, hi], geometric towards ``x0`` down to ``scale``."""
    pts = [lo, hi]
    if lo < x0 < hi:
        pts.append(x0)
        r = scale
        while r < hi - lo:
            pts.extend([x0 - r, x0 + r])
            r *= 2.0
    pts = np.unique(np.clip(pts, lo, hi))
    out = [pts[0]]
    for a, b in zip(pts[:-1], pts[1:]):
        k = max(1, int(np.ceil((b - a) / hmax)))
        out.extend(np.linspace(a, b, k + 1)[1:])
    return np.asarray(out)


def _path(w, m, z, deform, q, side=None):
    """Nodes ``x_i`` and complex weights ``dx_i`` for the Cauchy integral."""
    L = _support_radius(w, m + 1)
    nn = max(w.n, m + 1)
    if w.edge_kind == "soft":
        x0 = float(np.clip(z.real, -L, L))
        if deform:
            delta = min(1.0, 2.0 / nn)
            breaks = _graded_breaks(-L, L, x0, 0.5 * delta, min(0.5, 6.0 / nn))
            t, gw = _panels(breaks, q)
            sig = np.sign(z.imag) if z.imag != 0 else side
            wd = 4.0 * delta
            b = np.exp(-((t - x0) / wd) ** 2)
            x = t - 1j * sig * delta * b
            dx = (1.0 + 1j * sig * delta * 2.0 * (t - x0) / wd ** 2 * b) * gw
            return x, dx
        breaks = _graded_breaks(-L, L, x0, 0.5 * abs(z.imag), min(0.5, 6.0 / nn))
        x, gw = _panels(breaks, q)
        return x.astype(complex), gw.astype(complex)
    # hard edge: integrate in s = log x
    smin = min(np.log(abs(z)), 0.0) - 45.0 / (w.nu + 1.0)
    smax = np.log(L)
    s0 = float(np.clip(np.log(abs(z)), smin, smax))
    argz = np.angle(z)
    nrm = m + 1

    def hmax_at(s):
        return np.minimum(0.5, 6.0 / (nrm * np.sqrt(np.exp(s)) + 1.0))

    # build a mesh whose panel width follows the local oscillation rate
    edges = [smin]
    while edges[-1] < smax:
        edges.append(min(smax, edges[-1] + float(hmax_at(edges[-1]))))
    base = np.asarray(edges)
    if deform and abs(argz) < 0.3:
        delta = float(min(0.5, 2.0 / (nrm * np.sqrt(abs(z)) + 1.0)))
        extra = _graded_breaks(smin, smax, s0, 0.5 * delta, np.inf)
        breaks = np.unique(np.concatenate([base, extra]))
        t, gw = _panels(breaks, q)
        sig = np.sign(argz) if argz != 0 else side
        wd = 4.0 * delta
        b = np.exp(-((t - s0) / wd) ** 2)
        s = t - 1j * sig * delta * b
        ds = (1.0 + 1j * sig * delta * 2.0 * (t - s0) / wd ** 2 * b) * gw
    else:
        extra = _graded_breaks(smin, smax, s0, 0.5 * max(abs(argz), 1e-12), np.inf)
        breaks = np.unique(np.concatenate([base, extra]))
        s, ds = _panels(breaks, q)
        s = s.astype(complex)
    x = np.exp(s)
    return x, x * ds


def _cauchy_hat(w, t, ks, z, deform=False, side=None, rtol=1e-11):
    """``int psi_k(x) sqrt(mu(x)) / (x - z) dx`` for each k in ``ks``.

    For z on J itself, ``deform=True`` with ``side=+1/-1`` gives the
    boundary value from above/below.
    """
    z = complex(z)
    ks = np.atleast_1d(ks)
    on_j = z.imag == 0 and (w.edge_kind == "soft" or z.real > 0)
    if not deform and w.dist_to_support(z) < 1e-3:
        raise NearSupportError(
            f"z={z} is within 1e-3 of the support; use the deformed variant")
    if on_j and side not in (1, -1):
        raise BranchCutError("boundary value on the support needs side=+1 or -1")
    m = int(ks.max())
    vals = []
    for q in (16, 32):
        x, dx = _path(w, m, z, deform, q, side)
        lsw = log_sqrt_weight(w, x)
        psi = orthonormal_functions(w, t, m, x, lsw=lsw)[ks]
        with np.errstate(over="ignore", under="ignore", invalid="ignore"):
            f = psi * np.exp(lsw) * (dx / (x - z))
        f = np.where(np.isfinite(f), f, 0.0)
        vals.append(f.sum(axis=-1))
    a, b = vals
    err = np.abs(a - b)
    scale = np.maximum(np.abs(b), 1e-300)
    if np.any(err > 1e3 * rtol * scale + 1e-280):
        if not on_j:
            # cancellation in the quadrature: fall back to the recurrence
            out = _cauchy_minimal(w, t, ks, z, rtol)
            if out is not None:
                return out
        raise ConvergenceError(
            f"Cauchy transform at z={z} did not converge (rel change {np.max(err / scale):.1e})")
    return b


def _ratios_down(t, z, K):
    """``rho_k = c_k / c_{k-1}``, k = 1..K, of the minimal solution (Miller)."""
    rho = np.zeros(K + 2, dtype=complex)
    for k in range(K, 0, -1):
        rho[k] = t.beta[k] / ((z - t.alpha[k]) - rho[k + 1])
    return rho[1:K + 1]


def _cauchy_minimal(w, t, ks, z, rtol):
    """Cauchy transforms ``c_k = int p_k mu / (x - z)`` as the minimal solution
    of the three-term recurrence, normalized by ``c_0``.

    ``c_{k+1} = (z - alpha_k) c_k - beta_k c_{k-1}`` holds for k >= 1; the
    solution built from ``c_0`` decays in k away from the support, which is
    where direct quadrature of ``p_k mu`` cancels.  Returns None when the
    backward recurrence does not settle within the table size.
    """
    m = int(max(ks))
    c0 = _cauchy_hat(w, t, [0], z, rtol=rtol)[0] * np.exp(0.5 * t.log_h[0])
    if c0 == 0:
        return None
    for K in (m + 40, m + 120, 2 * m + 240):
        K2 = 2 * K
        if K2 + 1 > 512:
            return None
        tt = t if t.maxdeg >= K2 + 1 else recurrence_coeffs(w, K2 + 1)
        r1 = _ratios_down(tt, z, K)[:m]
        r2 = _ratios_down(tt, z, K2)[:m]
        if np.all(np.abs(r1 - r2) <= rtol * np.abs(r2)):
            logc = np.log(c0) + np.concatenate([[0.0], np.cumsum(np.log(r2))])
            ks = np.atleast_1d(ks)
            return np.exp(logc[ks] - 0.5 * t.log_h[ks])
    return None


def cauchy_transform(w, t, k, z):
    """``1/(2 pi i) int p_k(x) mu(x) / (x - z) dx`` for z at least 1e-3 off J."""
    c = _cauchy_hat(w, t, [k], z)[0]
    return complex(np.exp(0.5 * t.log_h[k]) * c / (2j * np.pi))


def cauchy_transform_deformed(w, t, k, z, side=None):
    """Same as :func:`cauchy_transform`, valid arbitrarily close to J.

    The path is pushed off the real axis on the side away from ``z``
    (soft) or rotated in the ``log x`` plane (hard); the value is the
    boundary value from the side ``z`` lies on.  Points on J itself need
    ``side=+1`` (from above) or ``side=-1``.
    """
    c = _cauchy_hat(w, t, [k], z, deform=True, side=side)[0]
    return complex(np.exp(0.5 * t.log_h[k]) * c / (2j * np.pi))


def rh_matrix_Y_hat(w, t, m, z, deform=False, side=None):
    """Normalized ``Yh = diag(h_m**-1/2, h_{m-1}**1/2) Y_m``.

    ``Y^{-1}(c) Y(b) = Yh^{-1}(c) Yh(b)`` so products of this type can be
    formed without the norms.  ``det Yh = beta_m**-1/2``.  For ``m = 0``,
    ``Yh = Y_0 / sqrt(h_0)`` in the first row and ``(0, 1)`` in the second.
    """
    z = complex(z)
    P_ = orthonormal_functions(w, t, m, np.array([z]), weighted=False)[:, 0]
    if m == 0:
        c0 = _cauchy_hat(w, t, [0], z, deform, side)[0]
        return np.array([[P_[0], c0 / (2j * np.pi)], [0.0, 1.0]], dtype=complex)
    c = _cauchy_hat(w, t, [m - 1, m], z, deform, side)
    return np.array([[P_[m], c[1] / (2j * np.pi)],
                     [-2j * np.pi * P_[m - 1], -c[0]]], dtype=complex)


def rh_matrix_Y(w, t, m, z, deform=False, side=None):
    """The matrix ``Y_m(z)``.

    ``deform=True`` allows z close to J; on J the boundary value from
    ``side=+1`` (above) or ``-1`` (below) is returned.
    """
    yh = rh_matrix_Y_hat(w, t, m, z, deform, side)
    if m == 0:
        d = np.array([np.exp(0.5 * t.log_h[0]), 1.0])
        yh = yh.copy()
        yh[0] *= d[0]
        return yh
    d = np.array([np.exp(0.5 * t.log_h[m]), np.exp(-0.5 * t.log_h[m - 1])])
    return d[:, None] * yh


def transfer(w, t, m, c, b, deform=False):
    """``Y_m(c)^{-1} Y_m(b)`` from the normalized matrices."""
    yc = rh_matrix_Y_hat(w, t, m, c, deform)
    yb = rh_matrix_Y_hat(w, t, m, b, deform)
    adj = np.array([[yc[1, 1], -yc[0, 1]], [-yc[1, 0], yc[0, 0]]])
    det = np.exp(-0.5 * t.log_h[0]) if m == 0 else 1.0 / np.sqrt(t.beta[m])
    return adj @ yb / det


def cd_kernel(w, t, m, x, y, weighted=False):
    """``K_m(x, y) = sum_{k<m} p_k(x) p_k(y) / h_k`` (direct sum).

    ``weighted=True`` multiplies by ``sqrt(mu(x) mu(y))``.  The sum has no
    singularity at ``x = y`` and gives the confluent kernel there.
    """
    px = orthonormal_functions(w, t, m - 1, np.array([x]), weighted)[:, 0]
    py = orthonormal_functions(w, t, m - 1, np.array([y]), weighted)[:, 0]
    return complex(np.sum(px * py))


def cd_kernel_closed(w, t, m, x, y):
    """Christoffel-Darboux closed form ``(p_m(x)p_{m-1}(y) - p_{m-1}(x)p_m(y))/(h_{m-1}(x-y))``."""
    if x == y:
        raise ValueError("closed form needs x != y")
    px = orthonormal_functions(w, t, m, np.array([x]), weighted=False)[:, 0]
    py = orthonormal_functions(w, t, m, np.array([y]), weighted=False)[:, 0]
    return complex(np.sqrt(t.beta[m]) * (px[m] * py[m - 1] - px[m - 1] * py[m]) / (x - y))


def cd_kernel_from_Y(w, t, m, x, y, deform=False):
    """``(Y_m(x)^{-1} Y_m(y))_{21} / (-2 pi i (x - y))``, equal to ``K_m(x, y)``."""
    if x == y:
        raise ValueError("use cd_kernel for coincident points")
    Yx = rh_matrix_Y(w, t, m, x, deform)
    Yy = rh_matrix_Y(w, t, m, y, deform)
    M = np.linalg.solve(Yx, Yy)
    return complex(M[1, 0] / (-2j * np.pi * (x - y)))
