"""Airy and Bessel model matrices, their kernels, and the edge-limit
determinants built from them.

Airy (cut on the real axis):

    A(z) = sqrt(2 pi) e^{-i pi/12} [[Ai, Ai_2], [Ai', Ai_2']] e^{-i pi s3/6}     Im z > 0
    A(z) = sqrt(2 pi) e^{-i pi/12} [[Ai, -w^2 Ai_1], [Ai', -w^2 Ai_1']] e^{-i pi s3/6}  Im z < 0

with ``Ai_j(z) = Ai(w^j z)`` and primes meaning d/dz (chain rule included).

Bessel (cut on the positive axis, ``arg z`` in ``[0, 2 pi)``):

    B(z) = [[J(2 sqrt z), H1(2 sqrt z)/2],
            [-2 pi i sqrt z J'(2 sqrt z), -i pi sqrt z H1'(2 sqrt z)]]

Both have unit determinant.  For ``P`` either of them the edge limits are

    I    det[(P^-1(g_l) P(b_j))_21 / (g_l - b_j)] / ((-2 i pi)^S D(g) D(b))
    II   (-1)^(S(S-1)/2) prod(g_l - b_j) / (D(g) D(b)) det[(P^-1 P)_11 / (g_l - b_j)]
    III  (-2 i pi)^S / (D(g) D(b)) det[(P^-1 P)_12 / (g_l - b_j)]

with ``D(x) = prod_{j<k} (x_k - x_j)``.
"""
from dataclasses import dataclass

import numpy as np

from .errors import BranchCutError, IllConditionedError, SingularityError
from .specialfn import OMEGA, airy, airy_rotated, bessel_j, f_nu, g_nu, hankel1, zeta_arg

_APREF = np.sqrt(2 * np.pi) * np.exp(-1j * np.pi / 12)
_ARIGHT = np.diag([np.exp(-1j * np.pi / 6), np.exp(1j * np.pi / 6)])


@dataclass(frozen=True)
class ParametrixKind:
    """``airy`` or ``bessel`` with order ``nu > -1``."""

    kind: str = "airy"
    nu: float = 0.0

    def __post_init__(self):
        if self.kind not in ("airy", "bessel"):
            raise ValueError("kind must be airy or bessel")
        if self.kind == "bessel" and not self.nu > -1:
            raise ValueError("Bessel order must exceed -1")

    def matrix(self, z, side=None):
        if self.kind == "airy":
            return airy_parametrix(z, side)
        return bessel_parametrix(self.nu, z, side)


AIRY = ParametrixKind("airy")


def _as_kind(kind):
    if isinstance(kind, ParametrixKind):
        return kind
    if kind == "airy":
        return AIRY
    if isinstance(kind, tuple) and kind[0] == "bessel":
        return ParametrixKind("bessel", float(kind[1]))
    raise ValueError(f"unknown parametrix kind {kind!r}")


def airy_parametrix(z, side=None):
    """Airy model matrix; real ``z`` needs ``side=+1`` (upper) or ``-1``."""
    z = complex(z)
    up = z.imag > 0
    if z.imag == 0:
        if side not in (1, -1):
            raise BranchCutError("Airy parametrix on the real axis needs side=+1 or -1")
        up = side == 1
    a0, a0p = airy(z)
    if up:
        b, bp = airy_rotated(2, z)
    else:
        b, bp = airy_rotated(1, z)
        b, bp = -OMEGA ** 2 * b, -OMEGA ** 2 * bp
    M = np.array([[a0, b], [a0p, bp]], dtype=complex)
    return _APREF * M @ _ARIGHT


def _sqrt_cut_pos(z, side):
    """``sqrt z`` with ``arg z`` in ``[0, 2 pi)`` and a flag telling whether
    ``2 sqrt z`` sits on the negative axis (``side=-1`` on (0, inf), arg 2 pi)."""
    if z.imag == 0 and z.real > 0:
        if side not in (1, -1):
            raise BranchCutError("Bessel parametrix on the positive axis needs side=+1 or -1")
        r = np.sqrt(z.real)
        return (r, False) if side == 1 else (-r, True)
    th = zeta_arg(z)
    return np.sqrt(abs(z)) * np.exp(0.5j * th), False


def bessel_parametrix(nu, z, side=None):
    """Bessel model matrix with the cut along the positive axis."""
    z = complex(z)
    if z == 0:
        raise SingularityError("Bessel parametrix is singular at 0")
    s, on_cut = _sqrt_cut_pos(z, side)
    w = 2 * s
    if not on_cut:
        j, jp = bessel_j(nu, w)
        h, hp = hankel1(nu, w)
    else:
        # argument on the negative axis, reached from the upper half plane
        j, jp = bessel_j(nu, complex(w), side=1)
        h, hp = hankel1(nu, complex(w), side=1)
    return np.array([[j, 0.5 * h],
                     [-2j * np.pi * s * jp, -1j * np.pi * s * hp]], dtype=complex)


def _inv_times(P1, P2):
    """``P1^-1 P2`` for a unit-determinant ``P1``."""
    adj = np.array([[P1[1, 1], -P1[0, 1]], [-P1[1, 0], P1[0, 0]]])
    return adj @ P2


def airy_kernel(x, y):
    """``K_Ai(x, y) = (Ai(x) Ai'(y) - Ai'(x) Ai(y)) / (x - y)``; confluent
    value ``Ai'(x)**2 - x Ai(x)**2``."""
    x, y = complex(x), complex(y)
    ax, axp = airy(x)
    if x == y:
        return complex(axp * axp - x * ax * ax)
    ay, ayp = airy(y)
    return complex((ax * ayp - axp * ay) / (x - y))


def _bessel_fg(nu, z, side):
    """``F = J(2 sqrt z)``, ``G = sqrt z J'(2 sqrt z)`` and ``F'``, ``G'``."""
    s, on_cut = _sqrt_cut_pos(complex(z), side)
    w = 2 * s
    j, jp = bessel_j(nu, complex(w), side=1) if on_cut else bessel_j(nu, w)
    F, G = j, s * jp
    # J'' from the Bessel equation
    jpp = -jp / w - (1 - nu * nu / (w * w)) * j
    return F, G, jp / s, 0.5 * jp / s + jpp


def bessel_kernel(nu, x, y, side=None):
    """``K_B(x, y) = (F(x) G(y) - F(y) G(x)) / (x - y)`` with
    ``F = J_nu(2 sqrt z)``, ``G = sqrt z J_nu'(2 sqrt z)`` (arg in [0, 2 pi))."""
    x, y = complex(x), complex(y)
    if x == 0 or y == 0:
        raise SingularityError("kernel formula needs nonzero points")
    Fx, Gx, Fpx, Gpx = _bessel_fg(nu, x, side)
    if x == y:
        return complex(Fpx * Gx - Fx * Gpx)
    Fy, Gy, _, _ = _bessel_fg(nu, y, side)
    return complex((Fx * Gy - Fy * Gx) / (x - y))


def kernel_entry(kind, z1, z2, side=None):
    """``(P^-1(z1) P(z2))_21 / (z1 - z2)`` from the matrices."""
    k = _as_kind(kind)
    M = _inv_times(k.matrix(z1, side), k.matrix(z2, side))
    return complex(M[1, 0] / (complex(z1) - complex(z2)))


def _vdm(x):
    x = np.asarray(x, dtype=complex)
    d = 1.0 + 0j
    for k in range(len(x)):
        for j in range(k):
            d *= x[k] - x[j]
    return d


def _check_points(g, b, tol=1e-10):
    pts = np.concatenate([g, b])
    for k in range(len(pts)):
        for j in range(k):
            if abs(pts[k] - pts[j]) < tol:
                raise IllConditionedError("limit determinants need distinct points")


_ENTRY = {"I": (1, 0), "II": (0, 0), "III": (0, 1)}


def limit_rhs(case, kind, gamma, beta, side=None):
    """Universal right-hand side for case I/II/III built from ``P^-1 P``."""
    k = _as_kind(kind)
    g = np.atleast_1d(np.asarray(gamma, dtype=complex))
    b = np.atleast_1d(np.asarray(beta, dtype=complex))
    if case not in _ENTRY:
        raise ValueError("case must be I, II or III")
    _check_points(g, b)
    S = len(g)
    Pg = [k.matrix(v, side) for v in g]
    Pb = [k.matrix(v, side) for v in b]
    r, c = _ENTRY[case]
    E = np.array([[_inv_times(Pg[l], Pb[j])[r, c] / (g[l] - b[j]) for j in range(S)]
                  for l in range(S)])
    dv = _vdm(g) * _vdm(b)
    det = np.linalg.det(E)
    if case == "I":
        return complex(det / ((-2j * np.pi) ** S * dv))
    if case == "II":
        sign = (-1) ** (S * (S - 1) // 2)
        return complex(sign * np.prod(g[:, None] - b[None, :]) * det / dv)
    return complex((-2j * np.pi) ** S * det / dv)


_ROWS = {
    # (a, b) from gamma and (c, d) from beta, as matrix indices
    "I": ((0, 0), (1, 0), (0, 0), (1, 0)),
    "II": ((1, 1), (0, 1), (1, 0), (0, 0)),
    "III": ((1, 1), (0, 1), (1, 1), (0, 1)),
}


def block_matrix(a, b, c, d, x, y):
    """``[[x_j^(l-1) a_j | x_j^(l-1) b_j], [y_j^(l-1) c_j | y_j^(l-1) d_j]]``."""
    x, y = np.asarray(x, dtype=complex), np.asarray(y, dtype=complex)
    S = len(x)
    px = x[:, None] ** np.arange(S)[None, :]
    py = y[:, None] ** np.arange(S)[None, :]
    top = np.hstack([px * np.asarray(a)[:, None], px * np.asarray(b)[:, None]])
    bot = np.hstack([py * np.asarray(c)[:, None], py * np.asarray(d)[:, None]])
    return np.vstack([top, bot])


def block_det_form(case, kind, gamma, beta, side=None, P=None):
    """The same limits as :func:`limit_rhs`, via one 2S x 2S block determinant.

    ``P`` optionally replaces the model matrix by any callable ``z -> 2x2``.
    """
    g = np.atleast_1d(np.asarray(gamma, dtype=complex))
    b = np.atleast_1d(np.asarray(beta, dtype=complex))
    if case not in _ROWS:
        raise ValueError("case must be I, II or III")
    _check_points(g, b)
    if P is None:
        k = _as_kind(kind)
        P = lambda z: k.matrix(z, side)  # noqa: E731
    S = len(g)
    Pg = [P(v) for v in g]
    Pb = [P(v) for v in b]
    ia, ib, ic, id_ = _ROWS[case]
    B = block_matrix([m[ia] for m in Pg], [m[ib] for m in Pg],
                     [m[ic] for m in Pb], [m[id_] for m in Pb], g, b)
    sign = (-1) ** (S * (S - 1) // 2)
    det = np.linalg.det(B)
    dv = _vdm(g) * _vdm(b)
    cross = np.prod(g[:, None] - b[None, :])
    if case == "I":
        return complex(sign * det / ((-2j * np.pi) ** S * dv * cross))
    if case == "II":
        return complex(det / dv)
    return complex((-2j * np.pi) ** S * sign * det / (dv * cross))


def detid_check(a, b, c, d, x, y):
    """Both sides of the block-determinant identity

        det[(a_j d_k - b_j c_k) / (x_j - y_k)]
            = (-1)^(S(S-1)/2) det(block) / prod_{j,k} (x_j - y_k).
    """
    a, b, c, d = (np.asarray(v, dtype=complex) for v in (a, b, c, d))
    x, y = np.asarray(x, dtype=complex), np.asarray(y, dtype=complex)
    S = len(x)
    H = (a[:, None] * d[None, :] - b[:, None] * c[None, :]) / (x[:, None] - y[None, :])
    lhs = np.linalg.det(H)
    sign = (-1) ** (S * (S - 1) // 2)
    rhs = sign * np.linalg.det(block_matrix(a, b, c, d, x, y)) / np.prod(x[:, None] - y[None, :])
    return complex(lhs), complex(rhs)


def bessel_row_constants(nu, z):
    """Ratios of ``z^(nu/2) f_nu`` and ``z^(nu/2) g_nu`` to the first row of B.

    Returns ``(B_11 / (z^(nu/2) f_nu), B_12 / (z^(nu/2) g_nu))``; both are
    z-independent constants.
    """
    z = complex(z)
    B = bessel_parametrix(nu, z, side=1 if z.imag == 0 else None)
    zp = np.abs(z) ** (nu / 2) * np.exp(0.5j * nu * zeta_arg(z))
    return complex(B[0, 0] / (zp * f_nu(nu, z))), complex(B[0, 1] / (zp * g_nu(nu, z)))

