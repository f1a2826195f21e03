"""One-cut equilibrium measures and edge zoom coordinates.

For the weight ``exp(-n V)`` the equilibrium density is

    soft:  rho(x) = M(x) sqrt((b - x)(x - a))     on [a, b]
    hard:  rho(x) = M(x) sqrt((b - x) / x)        on [0, b]

with a polynomial M.  Writing ``h = 2 pi M``, the resolvent
``G(z) = int rho(t) / (z - t) dt`` is ``(V'(z) - h(z) R(z)) / 2`` with
``R(z) = sqrt((z-a)(z-b))`` (soft) or ``sqrt((z-b)/z)`` (hard), so h is the
polynomial part of ``V'/R`` at infinity and the endpoints follow from
``G(z) = 1/z + O(z**-2)``.

The effective potential is ``phi(x) = V(x) + l - 2 int log|x-t| rho(t) dt``.
It vanishes on the support and is positive off it.

Edge zoom coordinates (b the right soft endpoint):

    soft:  zeta(z) = (3 pi n / 2 * int_b^z rho)**(2/3) ~ C n**(2/3) (z - b)
    hard:  zeta(z) = (pi n / 2 * int_0^z rho)**2       ~ C n**2 z

where ``rho`` means its analytic continuation ``M sqrt|Q|`` across the edge.
"""
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import Polynomial
from numpy.polynomial import chebyshev as cheb
from scipy import optimize, special

from .errors import MultiCutError


@dataclass(frozen=True)
class EquilibriumData:
    """Support ``[a, b]``, density factor ``M``, Robin constant ``l``."""

    support: tuple
    density_M: Polynomial
    robin_ell: float
    edge_kind: str
    potential: tuple

    @property
    def edge(self):
        return 0.0 if self.edge_kind == "hard" else self.support[1]

    def V(self, x):
        return Polynomial(self.potential)(x)

    def sqrtQ(self, x):
        """``sqrt|Q(x)|`` on the support (real x)."""
        a, b = self.support
        x = np.asarray(x, dtype=float)
        if self.edge_kind == "soft":
            return np.sqrt(np.abs((x - a) * (x - b)))
        return np.sqrt(np.abs((b - x) / x))

    def density(self, x):
        a, b = self.support
        x = np.asarray(x, dtype=float)
        inside = (x > a) & (x < b)
        with np.errstate(divide="ignore", invalid="ignore"):
            r = self.density_M(x) * self.sqrtQ(x)
        return np.where(inside, r, 0.0)

    def _cheb_map(self):
        """``rho(t) dt = g(u) du / sqrt(1 - u**2)`` with ``t = c + r u``."""
        a, b = self.support
        M = self.density_M
        if self.edge_kind == "soft":
            c, r = 0.5 * (a + b), 0.5 * (b - a)
            g = r * r * M(Polynomial([c, r])) * Polynomial([1.0, 0.0, -1.0])
        else:
            c = r = 0.5 * b
            g = r * M(Polynomial([c, r])) * Polynomial([1.0, -1.0])
        return c, r, cheb.poly2cheb(g.coef)

    def mass(self):
        _, _, gk = self._cheb_map()
        return float(np.pi * gk[0])

    def log_potential(self, x):
        """``U(x) = int log|x - t| rho(t) dt`` for real x (exact, no quadrature)."""
        c, r, gk = self._cheb_map()
        x = np.atleast_1d(np.asarray(x, dtype=float))
        xi = (x - c) / r
        k = np.arange(1, len(gk))
        out = np.empty_like(xi)
        for i, s in enumerate(xi):
            if abs(s) <= 1.0:
                tk = np.cos(k * np.arccos(s))
                out[i] = np.log(r / 2) * np.pi * gk[0] - np.pi * np.sum(gk[1:] * tk / k)
            else:
                wv = abs(s) + np.sqrt(s * s - 1.0)
                sg = np.sign(s) ** k
                out[i] = (np.log(r * wv / 2) * np.pi * gk[0]
                          - np.pi * np.sum(gk[1:] * sg * wv ** (-k.astype(float)) / k))
        return out


def _series_inv_sqrt(c, order):
    """Coefficients of ``(1 - c w)**(-1/2)`` in powers of w."""
    i = np.arange(order + 1)
    return special.binom(2 * i, i) / 4.0 ** i * c ** i


def _laurent_hard(dV, b):
    """Coefficients of ``V'(z) (1 - b/z)**(-1/2)``: (polynomial part, z**-1 coeff)."""
    D = len(dV)
    e = _series_inv_sqrt(b, D + 1)
    poly = np.zeros(D)
    for p, d in enumerate(dV):
        for k in range(p + 1):
            poly[p - k] += d * e[k]
    c1 = sum(d * e[p + 1] for p, d in enumerate(dV))
    return poly, c1


def _laurent_soft(dV, a, b):
    """``V'(z)/sqrt((z-a)(z-b))``: polynomial part and the z**-1, z**-2 coefficients."""
    D = len(dV)
    s = np.convolve(_series_inv_sqrt(a, D + 2), _series_inv_sqrt(b, D + 2))[:D + 2]
    # V'(z) z**-1 sum s_k z**-k
    poly = np.zeros(max(D - 1, 1))
    for p, d in enumerate(dV):
        for k in range(p):
            poly[p - 1 - k] += d * s[k]
    c1 = sum(d * s[p] for p, d in enumerate(dV))
    c2 = sum(d * s[p + 1] for p, d in enumerate(dV))
    return poly, c1, c2


def _initial_edge(dV, sign):
    """Root of ``x V'(x) = 4`` on the given side, a rough endpoint guess."""
    xdv = Polynomial(dV) * Polynomial([0.0, 1.0])

    def f(t):
        return xdv(sign * t) - 4.0

    hi = 1.0
    while f(hi) < 0:
        hi *= 1.5
    return sign * optimize.brentq(f, 1e-8, hi)


def solve_one_cut(potential, edge_kind):
    """Equilibrium data for ``V`` (coefficients in increasing degree)."""
    V = Polynomial(potential)
    dV = V.deriv().coef
    if edge_kind == "soft":
        b0 = _initial_edge(dV, 1.0)
        a0 = _initial_edge(dV, -1.0)

        def eqs(p):
            _, c1, c2 = _laurent_soft(dV, p[0], p[1])
            return [c1, c2 - 2.0]

        sol = optimize.root(eqs, [a0, b0], method="hybr", tol=1e-14)
        a, b = sol.x
        if np.max(np.abs(eqs(sol.x))) > 1e-11 or not a < b:
            raise MultiCutError("one-cut endpoint equations have no solution")
        h, _, _ = _laurent_soft(dV, a, b)
    elif edge_kind == "hard":
        a = 0.0

        def eq(b):
            return _laurent_hard(dV, b)[1] - 2.0

        hi = 1.0
        while eq(hi) < 0:
            hi *= 2.0
        b = optimize.brentq(eq, 1e-12, hi, xtol=1e-15)
        h, _ = _laurent_hard(dV, b)
    else:
        raise ValueError(f"unknown edge kind {edge_kind!r}")
    M = Polynomial(h / (2.0 * np.pi))
    xs = np.linspace(a, b, 2001)
    if np.any(M(xs) < 0) or M(b) <= 0 or (edge_kind == "soft" and M(a) <= 0):
        raise MultiCutError("density is negative on the support (not one-cut regular)")
    eq0 = EquilibriumData((float(a), float(b)), M, 0.0, edge_kind, tuple(map(float, potential)))
    ell = 2.0 * eq0.log_potential(b)[0] - V(b)
    return EquilibriumData((float(a), float(b)), M, float(ell), edge_kind,
                           tuple(map(float, potential)))


def effective_potential(eq, x):
    """``phi(x) = V(x) + l - 2 int log|x - t| rho(t) dt``."""
    x = np.asarray(x, dtype=float)
    val = eq.V(x) + eq.robin_ell - 2.0 * eq.log_potential(x).reshape(x.shape)
    return float(val) if val.ndim == 0 else val


_GJ = {}


def _gauss_jacobi01(beta, m=64):
    """Nodes/weights on [0, 1] for the weight ``u**beta``."""
    key = (beta, m)
    if key not in _GJ:
        x, w = special.roots_jacobi(m, 0.0, beta)
        _GJ[key] = (0.5 * (1.0 + x), w * 0.5 ** (beta + 1.0))
    return _GJ[key]


def _zoom_factor(eq, z):
    """Analytic factor F with ``zeta = const * n**p * (z - edge) * F(z)``."""
    a, b = eq.support
    M = eq.density_M
    z = complex(z)
    if eq.edge_kind == "soft":
        u, wt = _gauss_jacobi01(0.5)
        t = b + (z - b) * u
        I = np.sum(wt * M(t) * np.sqrt(t - a))
        return (1.5 * np.pi * I) ** (2.0 / 3.0)
    u, wt = _gauss_jacobi01(-0.5)
    t = z * u
    I = np.sum(wt * M(t) * np.sqrt(b - t))
    return (0.5 * np.pi * I) ** 2


def _check_disk(eq, z):
    a, b = eq.support
    rad = 0.5 * (b - a)
    if abs(complex(z) - eq.edge) >= rad:
        raise ValueError(f"z={z} lies outside the zoom disk of radius {rad:g}")


def zoom_map(eq, z, n):
    """Local coordinate ``zeta(z)`` at the studied edge (conformal in its disk)."""
    _check_disk(eq, z)
    z = complex(z)
    if eq.edge_kind == "soft":
        return complex(n ** (2.0 / 3.0) * (z - eq.edge) * _zoom_factor(eq, z))
    return complex(n ** 2 * z * _zoom_factor(eq, z))


def zoom_constant(eq):
    """``C = lim zeta(z) / (n**p (z - edge))`` (p = 2/3 soft, 2 hard)."""
    return float(_zoom_factor(eq, eq.edge).real)


@dataclass(frozen=True)
class ZoomMap:
    """Linear edge scaling ``xi = edge + zeta / (C n**exponent)``."""

    edge: float
    C: float
    exponent: float

    def xi(self, zeta, n):
        return self.edge + np.asarray(zeta) / (self.C * n ** self.exponent)


def edge_zoom(eq):
    """Linearized zoom data at the studied edge."""
    exponent = 2.0 / 3.0 if eq.edge_kind == "soft" else 2.0
    return ZoomMap(eq.edge, zoom_constant(eq), exponent)
