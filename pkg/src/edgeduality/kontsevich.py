"""Determinant formulas for the universal edge limits.

Soft edge (matrix Airy function, Re y > 0):

    Z(Y) = 2^(2S) pi^S e^{2/3 Tr Y^3} det[Ai^(j-1)(y_k^2)] prod sqrt(y_j) / prod_{j<k} (y_j - y_k)

and the limit of the scaled soft-edge average is

    e^{-2/3 Tr Y^3} Z(Y) / (2^(2S) pi^S prod sqrt(y_j) prod_{j<k} (y_j + y_k))
        = det[Ai^(j-1)(x_k)] / prod_{j<k} (x_j - x_k),      x = y^2.

Hard edge, with ``f_nu``, ``g_nu`` the loop and ray integrals of
:mod:`specialfn` and powers taken with ``arg`` in ``[0, 2 pi)``:

    case I:   prod y^(nu/2) det[f_(nu-l+1)(y_j)] / prod_{j<k} (y_j - y_k)
    case III: e^{i pi nu S} (2 pi)^(2S) prod z^(nu/2) det[g_(nu-l+1)(z_j)]
              / prod_{j<k} (z_j - z_k),        z = e^{i pi} y.
"""
from dataclasses import dataclass

import numpy as np

from .errors import IllConditionedError, SectorMismatchError
from .specialfn import OMEGA, airy_derivatives, f_orders, g_orders, zeta_arg


def _vdm_rev(y):
    """``prod_{j<k} (y_j - y_k)``."""
    y = np.asarray(y, dtype=complex)
    d = 1.0 + 0j
    for j in range(len(y)):
        for k in range(j + 1, len(y)):
            d *= y[j] - y[k]
    return d


def sector_of(y):
    """0: |arg y| < pi/3, 1: arg y in [pi/3, pi], 2: arg y in (-pi, -pi/3]."""
    a = np.angle(complex(y))
    if abs(a) < np.pi / 3:
        return 0
    return 1 if a > 0 else 2


@dataclass(frozen=True)
class YSpec:
    """Points ``y`` (length 2S), optional sector labels, shift ``x``."""

    y: tuple
    sectors: tuple = None
    x_shift: float = 0.0

    def __post_init__(self):
        y = tuple(complex(v) for v in np.atleast_1d(self.y))
        object.__setattr__(self, "y", y)
        if not y:
            raise ValueError("need at least one point")
        for k in range(len(y)):
            for j in range(k):
                if abs(y[k] - y[j]) < 1e-8:
                    raise IllConditionedError("y points closer than 1e-8")
        if self.sectors is not None:
            s = tuple(int(v) for v in self.sectors)
            if len(s) != len(y) or any(v not in (0, 1, 2) for v in s):
                raise ValueError("sectors must be one label in {0,1,2} per point")
            object.__setattr__(self, "sectors", s)

    @property
    def n(self):
        return len(self.y)

    def sector_labels(self):
        labels = tuple(sector_of(v) for v in self.y)
        if self.sectors is not None and self.sectors != labels:
            raise SectorMismatchError(
                f"sector labels {self.sectors} disagree with point positions {labels}")
        return labels


def _as_yspec(ys):
    return ys if isinstance(ys, YSpec) else YSpec(tuple(np.atleast_1d(ys)))


def _min_sep(y):
    y = np.asarray(y)
    return min(abs(y[k] - y[j]) for k in range(len(y)) for j in range(k)) if len(y) > 1 else np.inf


def _richardson(fn, y, h=2e-3):
    """Spread clustered points apart by ``h * k`` and extrapolate ``h -> 0``."""
    y = np.asarray(y, dtype=complex)
    k = np.arange(len(y))
    v1 = fn(y + h * k)
    v2 = fn(y + 0.5 * h * k)
    return 2 * v2 - v1


def _z_kont(y):
    N = len(y)
    # columns carry e^{2/3 y^3}, which is the airye scaling since (y^2)^(3/2) = y^3
    D = airy_derivatives(y * y, N - 1, scaled=True)
    sq = np.sqrt(y)
    return complex(2.0 ** N * np.pi ** (N / 2) * np.linalg.det(D) * np.prod(sq) / _vdm_rev(y))


def z_kont(ys):
    """Matrix Airy function ``Z(Y)`` from the Airy-derivative Wronskian."""
    y = np.asarray(_as_yspec(ys).y, dtype=complex)
    if np.any(y.real <= 0):
        raise ValueError("z_kont needs Re y > 0")
    if len(y) > 1 and _min_sep(y) < 1e-3:
        return complex(_richardson(_z_kont, y))
    return _z_kont(y)


def _gen_matrix(y, labels, x, order):
    """Rows ``e^{2/3 y^3 + x y} d^k/dz^k Ai(w^s z)`` at ``z = y^2 + x``, k = 0..order."""
    M = np.empty((len(y), order + 1), dtype=complex)
    for j, (yj, s) in enumerate(zip(y, labels)):
        z = yj * yj + x
        u = (OMEGA ** s if s else 1.0) * z
        d = airy_derivatives(np.array([z]), order, j=s, scaled=True)[:, 0]
        # airye scaled by exp(2/3 u^(3/2)); swap it for exp(2/3 y^3 + x y)
        M[j] = d * np.exp(2.0 / 3.0 * yj ** 3 + x * yj - 2.0 / 3.0 * u ** 1.5)
    return M


def z_kont_generalized(ys, n_total=None):
    """Generalized matrix Airy function with rotated-Airy rows per sector.

    (-w)^(n1 - n2) (2 sqrt pi)^n e^{2/3 Tr Y^3 + x Tr Y} prod sqrt(y_j) / prod_{j<k}(y_j - y_k)
        * det[Ai_s^(k-1)(y_j^2 + x)]
    """
    ys = _as_yspec(ys)
    y = np.asarray(ys.y, dtype=complex)
    n = len(y) if n_total is None else n_total
    if n != len(y):
        raise ValueError("n_total must equal the number of points")
    labels = ys.sector_labels()
    n1, n2 = labels.count(1), labels.count(2)
    M = _gen_matrix(y, labels, ys.x_shift, n - 1)
    pref = (-OMEGA) ** (n1 - n2) * (2 * np.sqrt(np.pi)) ** n
    return complex(pref * np.linalg.det(M) * np.prod(np.sqrt(y)) / _vdm_rev(y))


def dlogZ_dx(ys):
    """``d/dx log Z`` of the generalized model at ``x = ys.x_shift`` (analytic)."""
    ys = _as_yspec(ys)
    y = np.asarray(ys.y, dtype=complex)
    n = len(y)
    labels = ys.sector_labels()
    M = _gen_matrix(y, labels, ys.x_shift, n)
    # each row shifts its derivative order by one; the x y exponent adds y_j
    A, dA = M[:, :n], M[:, 1:]
    return complex(np.sum(y) + np.trace(np.linalg.solve(A, dA)))


def matrix_bessel_det(nu, z, variant="f", contour=None):
    """``det[f_(nu-l+1)(z_j)]`` (or with ``g``), l, j = 1..N.

    Rows come from the downward recurrence seeded by two contour integrals.
    """
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    N = len(z)
    fn = {"f": f_orders, "g": g_orders}.get(variant)
    if fn is None:
        raise ValueError("variant must be f or g")
    cols = [fn(nu, zj, N, contour) for zj in z]
    return complex(np.linalg.det(np.array(cols).T))


def _zpow(z, p):
    z = complex(z)
    return abs(z) ** p * np.exp(1j * p * zeta_arg(z))


def thm_soft_rhs(ys):
    """Soft-edge limit ``e^{-2/3 Tr Y^3} Z / (2^(2S) pi^S prod sqrt(y) prod_{j<k}(y_j + y_k))``."""
    y = np.asarray(_as_yspec(ys).y, dtype=complex)
    N = len(y)
    plus = 1.0 + 0j
    for j in range(N):
        for k in range(j + 1, N):
            plus *= y[j] + y[k]
    # e^{-2/3 Tr Y^3} Z, without forming the exponentials separately
    ez = z_kont(y) * np.exp(-2.0 / 3.0 * np.sum(y ** 3))
    return complex(ez / (2.0 ** N * np.pi ** (N / 2) * np.prod(np.sqrt(y)) * plus))


def thm_hard_rhs(nu, ys, case="I", contour=None):
    """Hard-edge limit by the f-determinant (case I) or g-determinant (III)."""
    y = np.asarray(_as_yspec(ys).y, dtype=complex)
    N = len(y)
    if N % 2:
        raise ValueError("need an even number of points")
    S = N // 2
    if case == "I":
        pw = np.prod([_zpow(v, nu / 2) for v in y])
        return complex(pw * matrix_bessel_det(nu, y, "f", contour) / _vdm_rev(y))
    if case == "III":
        if np.any((y.imag == 0) & (y.real <= 0)):
            raise ValueError("case III needs y off the negative axis")
        z = -y
        pw = np.prod([abs(v) ** (nu / 2) * np.exp(0.5j * nu * (np.angle(v) + np.pi)) for v in y])
        det = matrix_bessel_det(nu, z, "g", contour)
        return complex(np.exp(1j * np.pi * nu * S) * (2 * np.pi) ** N * pw * det / _vdm_rev(z))
    raise ValueError("case must be I or III")
