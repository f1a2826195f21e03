"""Airy, Bessel and Hankel functions of complex argument, and the contour
integrals

    f_nu(z) = 1/(2 pi i) * int_{loop}  exp(-z s + 1/s) s**(nu - 1) ds
    g_nu(z) = 1/(2 pi i) * int_{0^-}^{inf / z} exp(-z s + 1/s) s**(nu - 1) ds

The loop for ``f_nu`` encircles the negative real axis; the path for
``g_nu`` leaves the origin from the left and runs off to infinity in the
direction where ``exp(-z s)`` decays.  Closed forms are

    z**(nu/2) f_nu(z) = J_nu(2 sqrt z),   z**(nu/2) g_nu(z) = H1_nu(2 sqrt z) / 2

with ``arg z`` in ``[0, 2 pi)``.  The quadratures below do not use them;
they are the test oracles.

Airy and Bessel evaluations are delegated to ``scipy.special`` (AMOS).
"""
import warnings
from dataclasses import dataclass

import numpy as np
from scipy import special

from .errors import (BranchCutError, ConvergenceError, RecurrenceInstabilityWarning,
                     SingularityError)

OMEGA = np.exp(2j * np.pi / 3)


def _check_finite(*vals):
    for v in vals:
        if not np.all(np.isfinite(v)):
            raise OverflowError("special function value outside double range")


def airy(z):
    """Return ``(Ai(z), Ai'(z))`` for complex ``z`` (scalar or array)."""
    z = np.asarray(z, dtype=complex)
    ai, aip, _, _ = special.airy(z)
    _check_finite(ai, aip)
    if ai.ndim == 0:
        return complex(ai), complex(aip)
    return ai, aip


def airy_rotated(j, z):
    """``Ai_j(z) = Ai(omega**j z)`` and its derivative ``omega**j Ai'(omega**j z)``."""
    if j not in (0, 1, 2):
        raise ValueError("rotation index must be 0, 1 or 2")
    w = OMEGA ** j if j else 1.0
    ai, aip = airy(w * np.asarray(z, dtype=complex))
    return ai, w * aip


def airy_derivatives(z, order, j=0, scaled=False):
    """Derivatives ``d^m/dz^m Ai(omega**j z)`` for ``m = 0..order``.

    Higher derivatives come from the ODE recursion
    ``Ai^(m+2)(u) = u Ai^(m)(u) + m Ai^(m-1)(u)`` in the rotated variable
    ``u = omega**j z``.  With ``scaled=True`` everything is multiplied by
    ``exp(2/3 u**1.5)`` (principal branch), which keeps large arguments in
    range.

    Returns an array of shape ``(order + 1,) + z.shape``.
    """
    z = np.asarray(z, dtype=complex)
    w = OMEGA ** j if j else 1.0
    u = w * z
    if scaled:
        ai, aip, _, _ = special.airye(u)
    else:
        ai, aip, _, _ = special.airy(u)
    _check_finite(ai, aip)
    d = np.empty((order + 1,) + z.shape, dtype=complex)
    d[0] = ai
    if order >= 1:
        d[1] = aip
    for m in range(order - 1):
        d[m + 2] = u * d[m] + (m * d[m - 1] if m >= 1 else 0.0)
    # chain rule for the rotation
    if j:
        d *= (w ** np.arange(order + 1)).reshape((-1,) + (1,) * z.ndim)
    return d


def _on_negative_axis(z):
    return z.imag == 0 and z.real < 0


def _is_integer(nu):
    return float(nu).is_integer()


def bessel_j(nu, z, side=None):
    """``(J_nu(z), J_nu'(z))`` with the principal branch.

    On the negative real axis a non-integer order needs ``side=+1`` (upper
    boundary value) or ``side=-1``.
    """
    z = complex(z)
    if _on_negative_axis(z) and not _is_integer(nu):
        if side not in (1, -1):
            raise BranchCutError("J_nu on the negative axis needs side=+1 or -1")
        x = -z.real
        ph = np.exp(1j * np.pi * nu * side)
        j0 = special.jv(nu, x)
        jm, jp = special.jv(nu - 1, x), special.jv(nu + 1, x)
        # d/dz at z = x e^{i pi side} equals -d/dx
        return complex(ph * j0), complex(-ph * 0.5 * (jm - jp))
    j0 = special.jv(nu, z)
    jp = special.jvp(nu, z)
    _check_finite(j0, jp)
    return complex(j0), complex(jp)


def hankel1(nu, z, side=None):
    """``(H1_nu(z), H1_nu'(z))``, principal branch; ``z = 0`` is singular."""
    z = complex(z)
    if z == 0:
        raise SingularityError("Hankel function is singular at 0")
    if _on_negative_axis(z):
        if side not in (1, -1):
            raise BranchCutError("H1_nu on the negative axis needs side=+1 or -1")
        x = -z.real
        h1, h2 = special.hankel1(nu, x), special.hankel2(nu, x)
        h1p, h2p = special.h1vp(nu, x), special.h2vp(nu, x)
        if side == 1:
            c1, c2 = 0.0, -np.exp(-1j * np.pi * nu)
        else:
            c1, c2 = 2.0 * np.cos(np.pi * nu), np.exp(-1j * np.pi * nu)
        return complex(c1 * h1 + c2 * h2), complex(-(c1 * h1p + c2 * h2p))
    h = special.hankel1(nu, z)
    hp = special.h1vp(nu, z)
    _check_finite(h, hp)
    return complex(h), complex(hp)


@dataclass(frozen=True)
class ContourSpec:
    """Discretization of an integration path.

    kind:
        ``"hankel"`` - loop around the negative real axis (for ``f_nu``),
        ``"ray"`` - path from ``0^-`` to infinity (for ``g_nu``),
        ``"circle"`` - unit circle (``f_nu`` with integer ``nu`` only).
    rotation:
        tilt of the path in radians; any value with ``|rotation| < pi/2``
        gives the same integral.
    nodes:
        initial number of trapezoid nodes; doubled until stable.
    """

    kind: str = "hankel"
    rotation: float = 0.0
    nodes: int = 256
    rtol: float = 1e-13
    max_doublings: int = 7

    def __post_init__(self):
        if self.kind not in ("hankel", "ray", "circle"):
            raise ValueError(f"unknown contour kind {self.kind!r}")
        if self.nodes < 32:
            raise ValueError("contour needs at least 32 nodes")
        if abs(self.rotation) >= np.pi / 2:
            raise ValueError("rotation must stay below pi/2 in magnitude")


def _trapezoid_refine(sample, lo, hi, spec, accept=1e-10):
    """Trapezoid rule on [lo, hi] with node doubling.

    ``sample(t)`` returns the integrand (already multiplied by dt/dtau)
    at the nodes ``t``.  Stops when consecutive levels agree to
    ``spec.rtol``; raises if they never agree to ``accept``.
    """
    m = spec.nodes
    t = np.linspace(lo, hi, m + 1)
    vals = sample(t)
    h = (hi - lo) / m
    total = h * (vals.sum() - 0.5 * (vals[0] + vals[-1]))
    diff = np.inf
    for _ in range(spec.max_doublings):
        mid = t[:-1] + 0.5 * h
        new = 0.5 * total + 0.5 * h * sample(mid).sum()
        t = np.sort(np.concatenate([t, mid]))
        h *= 0.5
        diff = abs(new - total)
        total = new
        if diff <= spec.rtol * max(abs(total), 1e-300):
            return total
    if diff <= accept * max(abs(total), 1e-300):
        return total
    raise ConvergenceError(
        f"contour quadrature did not stabilize (last change {diff:.2e})")


def _f_hankel(nu, z, spec):
    # s = 1/u maps the loop to a Hankel contour in u:
    # f = 1/(2 pi i) int e^{u - z/u} u^{-nu-1} du on u = mu e^{i th} (1 + i tau)^2
    mu = max(1.0, np.sqrt(abs(z)))
    th = spec.rotation
    tmax = np.sqrt(80.0 / (mu * np.cos(th)) + 1.0) + 1.0
    rot = np.exp(1j * th)

    def sample(tau):
        w = 1.0 + 1j * tau
        u = mu * rot * w * w
        du = 2j * mu * rot * w
        # continuous argument of u along the path, cut moved with the contour
        logu = np.log(np.abs(u)) + 1j * (th + 2.0 * np.arctan(tau))
        return np.exp(u - z / u - (nu + 1.0) * logu) * du

    return _trapezoid_refine(sample, -tmax, tmax, spec) / (2j * np.pi)


def _f_circle(nu, z, spec):
    if not _is_integer(nu):
        raise ValueError("unit-circle contour requires integer order")
    k = int(round(nu))
    m = spec.nodes
    prev = None
    for _ in range(spec.max_doublings + 1):
        th = 2 * np.pi * np.arange(m) / m
        s = np.exp(1j * th)
        val = np.mean(np.exp(-z * s + 1.0 / s) * s ** k)
        if prev is not None and abs(val - prev) <= spec.rtol * max(abs(val), 1e-300):
            return complex(val)
        prev = val
        m *= 2
    return complex(val)


def f_nu(nu, z, contour=None):
    """Contour integral ``f_nu(z)`` (entire in ``z``)."""
    z = complex(z)
    spec = contour or ContourSpec("hankel")
    if spec.kind == "circle":
        return _f_circle(nu, z, spec)
    if spec.kind != "hankel":
        raise ValueError("f_nu needs a hankel or circle contour")
    return complex(_f_hankel(nu, z, spec))


def zeta_arg(z):
    """Argument of ``z`` in ``[0, 2 pi)``."""
    a = np.angle(z)
    return a + 2 * np.pi if a < 0 else a


def g_nu(nu, z, contour=None):
    """Ray integral ``g_nu(z)`` with ``arg z`` taken in ``[0, 2 pi)``.

    The path ``s(t) = r exp(t + i alpha(t))`` starts at the origin along the
    direction ``a0`` and bends to the decay direction ``-arg z``; the
    argument of ``s`` is tracked continuously, which moves the cut of
    ``s**(nu-1)`` together with the path.
    """
    z = complex(z)
    if z == 0:
        raise SingularityError("g_nu needs z != 0")
    spec = contour or ContourSpec("ray")
    if spec.kind != "ray":
        raise ValueError("g_nu needs a ray contour")
    th = zeta_arg(z)
    a1 = -th
    a0 = -th if np.pi / 2 < th < 3 * np.pi / 2 else -np.pi
    if abs(np.cos(a0)) < 1e-3:
        raise BranchCutError("ray start direction does not decay")
    r = 1.0 / np.sqrt(abs(z))
    sq = min(1.0, np.sqrt(abs(z)))
    tmax = np.log(80.0 / sq) + 4.0

    def sample(t):
        al = a0 + (a1 - a0) * 0.5 * (1.0 + np.tanh(t))
        dal = (a1 - a0) * 0.5 / np.cosh(t) ** 2
        logs = np.log(r) + t + 1j * al
        s = np.exp(logs)
        ds = s * (1.0 + 1j * dal)
        return np.exp(-z * s + 1.0 / s + (nu - 1.0) * logs) * ds

    return complex(_trapezoid_refine(sample, -tmax, tmax, spec) / (2j * np.pi))


def f_orders(nu, z, count, contour=None):
    """``[f_nu, f_{nu-1}, ..., f_{nu-count+1}]`` at ``z``.

    Two seeds by quadrature, the rest by ``f_{m-2} = (m-1) f_{m-1} - z f_m``.
    """
    return _downward(f_nu, nu, z, count, contour)


def g_orders(nu, z, count, contour=None):
    """Same as :func:`f_orders` for ``g``."""
    return _downward(g_nu, nu, z, count, contour)


def _downward(fn, nu, z, count, contour):
    out = np.empty(count, dtype=complex)
    out[0] = fn(nu, z, contour)
    if count > 1:
        out[1] = fn(nu - 1, z, contour)
    for k in range(2, count):
        m = nu - k + 2
        a, b = (m - 1) * out[k - 1], z * out[k - 2]
        val = a - b
        if abs(val) < 1e-6 * max(abs(a), abs(b)):
            warnings.warn("downward recurrence cancelled; using quadrature",
                          RecurrenceInstabilityWarning, stacklevel=3)
            val = fn(nu - k, z, contour)
        out[k] = val
    return out
