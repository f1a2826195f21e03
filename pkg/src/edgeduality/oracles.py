"""Brute-force reference values.

Everything here is computed by direct quadrature of the defining
integrals (eigenvalue integrals for small n, 2x2 matrix integrals reduced
by the unitary-group integral).  None of it goes through orthogonal
polynomials, Cauchy transforms, parametrices or the determinant formulas,
so agreement with those routes is a genuine check.
"""
import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import Polynomial
from numpy.polynomial.hermite import hermgauss
from numpy.polynomial.legendre import leggauss

from .errors import BudgetExceededError, ConvergenceError


@dataclass(frozen=True)
class QuadratureBudget:
    """Node and domain limits for the oracles.

    nodes_per_dim:
        base node count per dimension (the refinement check doubles it).
    rotation_angle:
        tilt of the rays used for cubic-phase integrals.
    domain_cutoff:
        truncation of unbounded variables (radius, or a log-weight drop).
    """

    nodes_per_dim: int = 200
    rotation_angle: float = np.pi / 6
    domain_cutoff: float = 7.0

    def __post_init__(self):
        if self.nodes_per_dim < 64:
            raise ValueError("nodes_per_dim must be at least 64")


def _phi1(d):
    """``expm1(d)/d`` for complex arrays, exact at 0."""
    d = np.asarray(d, dtype=complex)
    small = np.abs(d) < 1e-5
    safe = np.where(small, 1.0, d)
    return np.where(small, 1.0 + d / 2 + d * d / 6, np.expm1(safe) / safe)


def _hciz_stable(a, b):
    """Haar-normalized 2x2 unitary integral, arrays allowed, confluent-safe."""
    a1, a2 = a
    b1, b2 = b
    d = (a1 - a2) * (b1 - b2)
    e_same = a1 * b1 + a2 * b2
    e_swap = a1 * b2 + a2 * b1
    big = np.abs(d) > 1.0
    dd = np.where(big, d, 1.0)
    direct = (np.exp(e_same) - np.exp(e_swap)) / dd
    return np.where(big, direct, np.exp(e_swap) * _phi1(np.where(big, 0.0, d)))


def hciz_2x2(a, b, normalization="haar"):
    """``int_{U(2)} exp(Tr(A U B U^+)) dU`` for ``A = diag(a)``, ``B = diag(b)``.

    ``haar``: probability Haar measure,
        (e^{a1 b1 + a2 b2} - e^{a1 b2 + a2 b1}) / ((a1 - a2)(b1 - b2)).
    ``lebesgue``: the normalization in which ``dM = dU Delta(t)**2 dt`` on
    2x2 Hermitian matrices; it carries the extra factor ``K_2 = pi/2``.
    """
    a1, a2 = map(complex, a)
    b1, b2 = map(complex, b)
    if a1 == a2 or b1 == b2:
        raise ValueError("hciz_2x2 needs distinct eigenvalues (confluent input)")
    val = complex(_hciz_stable((a1, a2), (b1, b2)))
    if normalization == "haar":
        return val
    if normalization == "lebesgue":
        return val * np.pi / 2
    raise ValueError("normalization must be 'haar' or 'lebesgue'")


def hciz_confluent(a, b1):
    """Confluent limit ``b2 -> b1`` of :func:`hciz_2x2` (Haar): ``e^{(a1 + a2) b1}``."""
    a1, a2 = map(complex, a)
    return complex(np.exp((a1 + a2) * complex(b1)))


def unitary_group_quadrature(a, b, m=64):
    """Haar integral over U(2) by quadrature in three Euler angles.

    ``U = [[cos t e^{i p}, sin t e^{i q}], [-sin t e^{-i q}, cos t e^{-i p}]]``
    with density ``2 sin t cos t`` on ``t in [0, pi/2]`` and uniform phases.
    The global U(1) phase drops out of the conjugation.
    """
    x, wx = leggauss(m)
    th = 0.25 * np.pi * (x + 1.0)
    wt = 0.25 * np.pi * wx * 2.0 * np.sin(th) * np.cos(th)
    k = 8
    ph = 2 * np.pi * np.arange(k) / k
    T, P, Q = np.meshgrid(th, ph, ph, indexing="ij")
    W = np.broadcast_to(wt[:, None, None], T.shape) / k ** 2
    c, s = np.cos(T), np.sin(T)
    U = np.empty(T.shape + (2, 2), dtype=complex)
    U[..., 0, 0] = c * np.exp(1j * P)
    U[..., 0, 1] = s * np.exp(1j * Q)
    U[..., 1, 0] = -s * np.exp(-1j * Q)
    U[..., 1, 1] = c * np.exp(-1j * P)
    A = np.diag(np.asarray(a, dtype=complex))
    B = np.diag(np.asarray(b, dtype=complex))
    M = A @ U @ B @ np.conj(np.swapaxes(U, -1, -2))
    tr = np.trace(M, axis1=-2, axis2=-1)
    return complex(np.sum(W * np.exp(tr)))


def _vdm(x):
    d = 1.0
    for k in range(len(x)):
        for j in range(k):
            d = d * (x[k] - x[j])
    return d


def gaussian_hermitian_integral(lam, m=40):
    """``int_{H_2} exp(-Tr(M**2/2 - M Lam)) dM`` by 4-D tensor Gauss-Hermite.

    Coordinates ``M = [[x1, u + i v], [u - i v, x2]]``; the trace is taken
    from the assembled matrices, not from a factorized formula.
    """
    lam = np.asarray(lam, dtype=float)
    if lam.shape != (2,):
        raise ValueError("direct Hermitian quadrature is implemented for n = 2")
    t, w = hermgauss(m)
    # weight exp(-s**2): use it for u, v directly and s = x / sqrt 2 for x1, x2
    xd, wd = np.sqrt(2.0) * t, np.sqrt(2.0) * w
    X1, X2, Uu, Vv = np.meshgrid(xd, xd, t, t, indexing="ij")
    W = wd[:, None, None, None] * wd[None, :, None, None] * w[None, None, :, None] * w[None, None, None, :]
    M = np.empty(X1.shape + (2, 2), dtype=complex)
    M[..., 0, 0], M[..., 1, 1] = X1, X2
    M[..., 0, 1], M[..., 1, 0] = Uu + 1j * Vv, Uu - 1j * Vv
    L = np.diag(lam)
    tr2 = np.trace(M @ M, axis1=-2, axis2=-1).real
    trl = np.trace(M @ L, axis1=-2, axis2=-1).real
    # the Gauss-Hermite weights already contain exp(-x1^2/2 - x2^2/2 - u^2 - v^2)
    base = 0.5 * (X1 ** 2 + X2 ** 2) + Uu ** 2 + Vv ** 2
    return float(np.sum(W * np.exp(-0.5 * tr2 + trl + base)))


def _gaussian_lhs(lam, m=60):
    """Gaussian Hermitian integral, one 1-D quadrature per matrix coordinate."""
    t, w = hermgauss(m)
    x, wx = np.sqrt(2.0) * t, np.sqrt(2.0) * w
    val = 1.0
    for l in lam:
        val *= np.sum(wx * np.exp(l * x))
    n = len(lam)
    off = np.sum(w) ** 2
    return val * off ** (n * (n - 1) // 2)


def _eigen_side(lam, m=40):
    """``int_{R^n} Delta(x) det[e^{x_j lam_k}] prod e^{-x_j**2/2} dx``."""
    n = len(lam)
    t, w = hermgauss(m)
    x, wx = np.sqrt(2.0) * t, np.sqrt(2.0) * w
    grids = np.meshgrid(*([x] * n), indexing="ij")
    wts = np.ones_like(grids[0])
    for g in np.meshgrid(*([wx] * n), indexing="ij"):
        wts = wts * g
    X = np.stack([g.ravel() for g in grids], axis=1)
    E = np.exp(X[:, :, None] * np.asarray(lam)[None, None, :])
    return float(np.sum(wts.ravel() * _vdm(X.T) * np.linalg.det(E)))


def hc_constant(n, lam=None):
    """``K_n`` in ``int_{H_n} e^{-Tr(V(M) - M Lam)} dM
    = K_n / Delta(Lam) * int Delta(x) det[e^{x_j lam_k}] prod e^{-V(x_j)} dx``,
    obtained from the Gaussian ``V = x**2/2`` with both sides by quadrature.
    """
    if n not in (1, 2, 3):
        raise ValueError("hc_constant is implemented for n <= 3")
    lam = np.asarray(lam if lam is not None else (0.3, -0.2, 0.5)[:n], dtype=float)
    return _gaussian_lhs(lam) * _vdm(lam) / _eigen_side(lam)


# ----------------------------------------------------------------------
# eigenvalue integrals for small n


def _seg_dist(p, x0, x1):
    xr = min(max(p.real, x0), x1)
    return abs(complex(xr, 0.0) - p)


def _composite(lo, hi, poles, q, hmax, limit):
    """Composite Gauss-Legendre rule, panels bisected until each is
    shorter than half its distance to every pole."""
    x, w = leggauss(q)
    todo = list(np.linspace(lo, hi, max(2, int(np.ceil((hi - lo) / hmax)) + 1)))
    stack = list(zip(todo[:-1], todo[1:]))
    panels = []
    while stack:
        a, b = stack.pop()
        if poles and any(b - a > 0.5 * _seg_dist(p, a, b) for p in poles) and b - a > 1e-9:
            m = 0.5 * (a + b)
            stack += [(a, m), (m, b)]
        else:
            panels.append((a, b))
        if len(panels) * q > limit:
            raise BudgetExceededError("eigenvalue quadrature exceeds the node budget")
    panels.sort()
    nodes = np.concatenate([0.5 * (a + b) + 0.5 * (b - a) * x for a, b in panels])
    weights = np.concatenate([0.5 * (b - a) * w for a, b in panels])
    return nodes, weights


def _rule_1d(edge_kind, V, n, nu, poles, q, cutoff, limit):
    """Nodes and weights (weight function folded in) on the eigenvalue axis."""
    if edge_kind == "soft":
        xs = np.linspace(-60, 60, 24001)
        lv = n * V(xs)
        keep = xs[lv - lv.min() < cutoff]
        nodes, wts = _composite(keep[0], keep[-1], list(poles), q, 0.5, limit)
        return nodes, wts * np.exp(-n * V(nodes))
    # hard edge: x = e^s
    s = np.linspace(-200, 6, 40001)
    x = np.exp(s)
    lw = (nu + 1) * s - n * V(x)
    keep = s[lw > lw.max() - cutoff]
    lpoles = [np.log(complex(p)) for p in poles]
    sn, sw = _composite(keep[0], keep[-1], lpoles, q, 0.5, limit)
    x = np.exp(sn)
    return x, sw * np.exp((nu + 1) * sn - n * V(x))


def _tensor_sum(x, g, n, method="moments"):
    """``sum g(x_i1)...g(x_in) Delta(x_i)**2`` over the full tensor grid.

    ``direct`` forms the n-fold sum explicitly.  ``moments`` evaluates the
    same finite sum as ``n! det[sum_i g_i x_i**(j+k)]`` (Andreief applied to
    the discrete measure), which is exact algebra, not an approximation.
    """
    if n > 3:
        raise BudgetExceededError("tensor eigenvalue quadrature supports n <= 3")
    if method == "moments":
        mom = np.array([np.sum(g * x ** k) for k in range(2 * n - 1)])
        H = np.array([[mom[j + k] for k in range(n)] for j in range(n)])
        return math.factorial(n) * np.linalg.det(H)
    if n == 1:
        return np.sum(g)
    D = (x[:, None] - x[None, :]) ** 2
    if n == 2:
        return g @ D @ g
    gg = g[:, None] * g[None, :] * D
    total = 0.0
    for i in range(len(x)):
        f = (x[i] - x) ** 2
        total = total + g[i] * np.sum(gg * f[:, None] * f[None, :])
    return total


def _factor_fn(pts, case):
    b = np.asarray(pts.b, dtype=complex)
    c = np.asarray(pts.c, dtype=complex)
    if case == "I":
        return (lambda x: np.prod(b[None, :] - x[:, None], axis=1)
                * np.prod(c[None, :] - x[:, None], axis=1)), []
    if case == "II":
        return (lambda x: np.prod((b[None, :] - x[:, None]) / (c[None, :] - x[:, None]), axis=1)), list(c)
    if case == "III":
        return (lambda x: 1.0 / (np.prod(b[None, :] - x[:, None], axis=1)
                                 * np.prod(c[None, :] - x[:, None], axis=1))), list(b) + list(c)
    raise ValueError("case must be I, II or III")


def brute_finite_n(w, pts=None, case=None, n=None, budget=None, factor=None, poles=(),
                   check=True):
    """``< prod_i F(lambda_i) >`` over n x n matrices (n <= 3) by tensor quadrature.

    ``F`` is built from a PointSet and case (I products, II ratios, III
    inverse products) or passed directly as ``factor`` together with its
    ``poles``.  Only the fields ``edge_kind``, ``potential``, ``n`` and
    ``nu`` of ``w`` are used; ``n`` overrides the matrix size, while the
    weight keeps ``exp(-w.n V)``.
    """
    budget = budget or QuadratureBudget(nodes_per_dim=64, domain_cutoff=50.0)
    size = w.n if n is None else n
    if size > 3:
        raise BudgetExceededError("brute-force eigenvalue integrals need n <= 3")
    if factor is None:
        if pts is None:
            factor, poles = (lambda x: np.ones_like(x, dtype=complex)), []
        else:
            factor, poles = _factor_fn(pts, case or pts.case)
    V = Polynomial(w.potential)
    limit = 64 * budget.nodes_per_dim

    def run(q):
        x, g = _rule_1d(w.edge_kind, V, w.n, getattr(w, "nu", 0.0), poles, q,
                        budget.domain_cutoff, limit)
        shift = np.sum(g * x) / np.sum(g)
        xs = x - shift
        Z = _tensor_sum(xs, g.astype(complex), size)
        num = _tensor_sum(xs, g * factor(x), size)
        return complex(num / Z)

    q = 16
    val = run(q)
    if check:
        fine = run(2 * q)
        if abs(fine - val) > 1e-7 * max(abs(fine), 1e-300):
            raise ConvergenceError(f"eigenvalue quadrature not stable ({abs(fine - val):.2e})")
        val = fine
    return val


# ----------------------------------------------------------------------
# 2x2 matrix integrals


def _rays(budget, m):
    """Two rays ``-r e^{-i a}`` (incoming) and ``r e^{i a}`` (outgoing)."""
    r, w = leggauss(m)
    R = budget.domain_cutoff
    r, w = 0.5 * R * (r + 1.0), 0.5 * R * w
    d1 = np.exp(1j * budget.rotation_angle)
    d2 = -np.exp(-1j * budget.rotation_angle)
    return np.concatenate([r * d2, r * d1]), np.concatenate([-d2 * w, d1 * w])


def _z2_once(y1, y2, budget, m):
    T, W = _rays(budget, m)
    t1, t2 = T[:, None], T[None, :]
    # int_{U(2)} exp(-Tr(Y U T^2 U^+)) dU
    hc = _hciz_stable((-y1, -y2), (t1 ** 2, t2 ** 2))
    f = (t2 - t1) ** 2 * np.exp(1j * (t1 ** 3 + t2 ** 3) / 3) * hc
    num = np.pi / 2 * np.sum(W[:, None] * W[None, :] * f)
    den = np.sqrt(np.pi / y1) * np.sqrt(np.pi / y2) * np.pi / (y1 + y2)
    return complex(num / den)


def brute_z_kont_2(y1, y2, budget=None):
    """2x2 matrix Airy integral

        int e^{i Tr M^3/3 - Tr Y M^2} dM / int e^{-Tr Y M^2} dM

    reduced to eigenvalues ``t`` on two rotated rays; the denominator is the
    closed Gaussian value ``sqrt(pi/y1) sqrt(pi/y2) pi/(y1 + y2)``.
    """
    y1, y2 = complex(y1), complex(y2)
    if y1.real <= 0 or y2.real <= 0:
        raise ValueError("need Re y > 0")
    if y1 == y2:
        raise ValueError("need y1 != y2")
    budget = budget or QuadratureBudget()
    a = budget.rotation_angle
    tail = np.exp(-budget.domain_cutoff ** 3 * np.sin(3 * a) / 3)
    if not 0 < a < np.pi / 3 or tail > 1e-7:
        raise ConvergenceError("rotated-ray truncation error too large")
    m = budget.nodes_per_dim
    v1 = _z2_once(y1, y2, budget, m)
    v2 = _z2_once(y1, y2, budget, 2 * m)
    if abs(v2 - v1) > 1e-7 * abs(v2):
        raise ConvergenceError(f"Z quadrature not stable ({abs(v2 - v1):.2e})")
    return v2


def _power(t, p):
    return np.exp(p * np.log(t))


def _cue_raw(nu, y1, y2, m):
    # loop in t = 1/u with u on a Hankel parabola; orientation of the loop
    # around the negative axis taken counterclockwise in t
    h = 8.0 / m
    tau = np.arange(-m, m + 1) * h
    u = (1 + 1j * tau) ** 2
    du = 2j * (1 + 1j * tau)
    t = 1 / u
    W = du / u ** 2 * h
    lt = -(np.log(np.abs(u)) + 2j * np.arctan(tau))
    t1, t2 = t[:, None], t[None, :]
    l1, l2 = lt[:, None], lt[None, :]
    with np.errstate(over="ignore", invalid="ignore"):
        f = ((t2 - t1) * (1 / t2 - 1 / t1) * np.exp((nu - 1) * (l1 + l2) + 1 / t1 + 1 / t2)
             * np.pi / 2 * _hciz_stable((-y1, -y2), (t1, t2)))
    f = np.where(np.isfinite(f), f, 0.0)
    return complex(np.sum(W[:, None] * W[None, :] * f))


def _circle_raw(nu, y1, y2, m):
    th = 2 * np.pi * np.arange(m) / m
    t = np.exp(1j * th)
    W = 1j * t * 2 * np.pi / m
    k = int(round(nu))
    t1, t2 = t[:, None], t[None, :]
    f = ((t2 - t1) * (1 / t2 - 1 / t1) * t1 ** (k - 1) * t2 ** (k - 1) * np.exp(1 / t1 + 1 / t2)
         * np.pi / 2 * _hciz_stable((-y1, -y2), (t1, t2)))
    return complex(np.sum(W[:, None] * W[None, :] * f))


def _hplus_raw(p, y1, y2, m):
    x, w = leggauss(m)
    lo, hi = -7.0, np.log(80.0 / min(y1.real, y2.real))
    s = 0.5 * (hi - lo) * (x + 1) + lo
    t = np.exp(s)
    W = 0.5 * (hi - lo) * w * t
    t1, t2 = t[:, None], t[None, :]
    f = ((t2 - t1) ** 2 * (t1 * t2) ** p * np.exp(-1 / t1 - 1 / t2)
         * np.pi / 2 * _hciz_stable((-y1, -y2), (t1, t2)))
    return complex(np.sum(W[:, None] * W[None, :] * f))


def brute_bessel_integral_2(nu, y1, y2, case="cue", raw=False, budget=None):
    """2x2 matrix-Bessel integrals and the normalized right-hand sides.

    ``cue``: ``I = int (det H)^{nu-1} e^{Tr(-Y H + H^{-1})} dH`` over normal
    matrices with eigenvalues on a loop around the negative axis, with
    ``dH = dU Delta(t) Delta(1/t) dt``; returns ``(y1 y2)^{nu/2} / pi * I / (2 i pi)^2``.
    ``circle``: the same with the unit circle (integer ``nu`` only).
    ``hplus``: ``I = int (det H)^{nu-2} e^{Tr(-Y H - H^{-1})} dH`` over positive
    definite matrices with Lebesgue ``dH``; returns ``(y1 y2)^{nu/2} / pi * I``.
    Powers of ``y`` are principal.  ``raw=True`` returns ``I`` itself.
    """
    y1, y2 = complex(y1), complex(y2)
    if y1 == y2:
        raise ValueError("need y1 != y2")
    budget = budget or QuadratureBudget(nodes_per_dim=240)
    m = budget.nodes_per_dim
    if case == "cue":
        fn = lambda mm: _cue_raw(nu, y1, y2, mm)
    elif case == "circle":
        if not float(nu).is_integer():
            raise ValueError("unit-circle contour requires integer nu")
        fn = lambda mm: _circle_raw(nu, y1, y2, mm)
    elif case == "hplus":
        if y1.real <= 0 or y2.real <= 0:
            raise ValueError("positive-definite integral needs Re y > 0")
        fn = lambda mm: _hplus_raw(nu - 2, y1, y2, mm)
    else:
        raise ValueError("case must be cue, circle or hplus")
    v1, v2 = fn(m), fn(2 * m)
    if abs(v2 - v1) > 1e-7 * abs(v2):
        raise ConvergenceError(f"matrix-Bessel quadrature not stable ({abs(v2 - v1):.2e})")
    if raw:
        return v2
    pref = np.exp(0.5 * nu * (np.log(y1) + np.log(y2))) / np.pi
    if case == "hplus":
        return complex(pref * v2)
    return complex(pref * v2 / (2j * np.pi) ** 2)


def heine_average(w, xi, n=None):
    """``< det(xi - M) >`` over n x n matrices (equals the monic p_n(xi))."""
    xi = complex(xi)
    return brute_finite_n(w, n=n, factor=lambda x: xi - x, poles=())


__all__ = [
    "QuadratureBudget", "hciz_2x2", "hciz_confluent", "unitary_group_quadrature",
    "gaussian_hermitian_integral", "hc_constant", "brute_finite_n", "brute_z_kont_2",
    "brute_bessel_integral_2", "heine_average",
]
