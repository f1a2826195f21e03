"""Command-line driver: identity suite, convergence sweeps, point evaluations.

    edgeduality verify [--tol R] [--seed N]
    edgeduality soft-converge --n 20,40,80 --points 0.9,1.1 --out soft.csv
    edgeduality hard-converge --nu 0.5 --n 20,40,80 --points 1,2 --case I
    edgeduality kernel --kind airy --points 0,0
    edgeduality kontsevich --points 1,1.5

Every flag may also come from a ``key = value`` config file (``--config``);
command-line values win.  Exit codes: 0 pass, 1 check failure, 2 usage.
"""
import argparse
import csv
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, fields

import numpy as np
from scipy import special

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from . import correlators as cr
from . import equilibrium as eqm
from . import kontsevich as kz
from . import oracles as orc
from . import orthopoly as op
from . import parametrix as pm
from . import specialfn as sf
from .errors import EdgeDualityError

EXPERIMENTS = ("verify", "soft-converge", "hard-converge", "kernel-eval", "kontsevich-eval")
_SUBCOMMANDS = {"verify": "verify", "soft-converge": "soft-converge",
                "hard-converge": "hard-converge", "kernel": "kernel-eval",
                "kontsevich": "kontsevich-eval"}
_DEFAULTS = {
    "soft-converge": {"potential": (0.0, 0.0, 0.5), "points": (0.9, 1.1)},
    "hard-converge": {"potential": (0.0, 1.0), "points": (1.0, 2.0)},
    "kernel-eval": {"points": (0.0, 0.0)},
    "kontsevich-eval": {"points": (1.0, 1.5)},
}


class UsageError(Exception):
    pass


@dataclass
class ExperimentConfig:
    experiment: str = "verify"
    potential: tuple = ()
    nu: float = 0.0
    n_list: tuple = (20, 40, 80)
    points: tuple = ()
    case: str = "I"
    out_path: str = ""
    seed: int = 0
    tol: float = None
    kind: str = "airy"
    side: int = None

    def validate(self):
        if self.experiment not in EXPERIMENTS:
            raise UsageError(f"unknown experiment {self.experiment!r}")
        if self.experiment.endswith("converge"):
            if not self.n_list:
                raise UsageError("n_list is empty")
            if any(n < 1 for n in self.n_list):
                raise UsageError("n values must be positive")
            if list(self.n_list) != sorted(self.n_list):
                raise UsageError("n_list must be ascending")
        if self.case not in ("I", "II", "III"):
            raise UsageError("case must be I, II or III")
        if self.tol is not None and not self.tol > 0:
            raise UsageError("tol must be positive")
        if self.kind not in ("airy", "bessel"):
            raise UsageError("kind must be airy or bessel")


@dataclass
class ConvergenceRecord:
    case: str
    n: int
    S: int
    lhs_re: float
    lhs_im: float
    rhs_re: float
    rhs_im: float
    abs_err: float
    rel_err: float

    @classmethod
    def from_values(cls, case, n, S, lhs, rhs):
        err = abs(lhs - rhs)
        rel = err / abs(rhs) if abs(rhs) > 0 else err
        return cls(case, n, S, lhs.real, lhs.imag, rhs.real, rhs.imag, err, rel)


CSV_HEADER = [f.name for f in fields(ConvergenceRecord)]


# ---------------------------------------------------------------- parsing

def parse_point(text):
    """``"re:im"`` or ``"re"`` to a complex number."""
    text = str(text).strip()
    try:
        if ":" in text:
            re_, im = text.split(":")
            return complex(float(re_), float(im))
        return complex(float(text))
    except ValueError:
        raise UsageError(f"bad point {text!r}; expected re or re:im") from None


def _split_list(value):
    if isinstance(value, (list, tuple)):
        return list(value)
    return [v for v in str(value).split(",") if v.strip()]


def _to_floats(value, what):
    try:
        return tuple(float(v) for v in _split_list(value))
    except ValueError:
        raise UsageError(f"bad {what} list {value!r}") from None


def _to_ints(value, what):
    try:
        return tuple(int(v) for v in _split_list(value))
    except ValueError:
        raise UsageError(f"bad {what} list {value!r}") from None


_KEYS = {
    "potential": lambda v: _to_floats(v, "potential"),
    "nu": float,
    "n": lambda v: _to_ints(v, "n"),
    "n_list": lambda v: _to_ints(v, "n"),
    "points": lambda v: tuple(parse_point(p) for p in _split_list(v)),
    "case": str,
    "out": str,
    "out_path": str,
    "seed": int,
    "tol": float,
    "kind": str,
    "side": int,
    "experiment": str,
}
_RENAME = {"n": "n_list", "out": "out_path"}


def _apply(values, cfg):
    for key, raw in values.items():
        if raw is None:
            continue
        conv = _KEYS.get(key)
        if conv is None:
            raise UsageError(f"unknown config key {key!r}")
        try:
            setattr(cfg, _RENAME.get(key, key), conv(raw))
        except (TypeError, ValueError):
            raise UsageError(f"bad value for {key}: {raw!r}") from None


def load_config_file(path):
    try:
        with open(path, "rb") as fh:
            return tomllib.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from None
    except tomllib.TOMLDecodeError as exc:
        raise UsageError(f"bad config {path}: {exc}") from None


def build_config(args):
    cfg = ExperimentConfig(experiment=_SUBCOMMANDS[args.command])
    if args.config:
        values = load_config_file(args.config)
        if "experiment" in values and values["experiment"] != cfg.experiment:
            raise UsageError("config experiment does not match the subcommand")
        _apply(values, cfg)
    flags = {k: getattr(args, k, None) for k in
             ("potential", "nu", "n", "points", "case", "out", "tol", "seed", "kind", "side")}
    _apply(flags, cfg)
    for key, val in _DEFAULTS.get(cfg.experiment, {}).items():
        if not getattr(cfg, key):
            setattr(cfg, key, val if key != "points" else tuple(complex(v) for v in val))
    cfg.validate()
    return cfg


# ---------------------------------------------------------------- verify

def _rel(a, b):
    a, b = complex(a), complex(b)
    return abs(a - b) / max(abs(b), 1e-300)


def _checks(rng):
    """(name, residual function, default tolerance)."""
    w_soft = op.gaussian_weight(4)
    t_soft = op.recurrence_coeffs(w_soft, 12)
    w_hard = op.laguerre_weight(3, 0.5)
    t_hard = op.recurrence_coeffs(w_hard, 12)
    out = []

    def add(name, tol):
        def deco(fn):
            out.append((name, fn, tol))
            return fn
        return deco

    @add("airy values at 0", 1e-14)
    def _():
        ai, aip = sf.airy(0.0)
        return max(_rel(ai, 0.3550280538878172), _rel(aip, -0.2588194037928068))

    @add("airy connection identity", 1e-11)
    def _():
        z = 1.3 + 0.7j
        s = sum(sf.OMEGA ** j * sf.airy_rotated(j, z)[0] for j in range(3))
        return abs(s) / abs(sf.airy(z)[0])

    @add("airy ode recursion", 1e-12)
    def _():
        z = np.array([2.0 + 1.0j])
        d = sf.airy_derivatives(z, 2)
        return _rel(d[2, 0], z[0] * d[0, 0])

    @add("bessel half-integer closed form", 1e-11)
    def _():
        return _rel(sf.bessel_j(0.5, 2.0)[0], math.sqrt(1 / math.pi) * math.sin(2.0))

    @add("hankel wronskian", 1e-10)
    def _():
        z = 1.7
        j, jp = sf.bessel_j(0.3, z)
        h, hp = sf.hankel1(0.3, z)
        return _rel(j * hp - jp * h, 2j / (math.pi * z))

    @add("f_nu against bessel j", 1e-9)
    def _():
        nu, z = 0.5, 0.8 + 0.3j
        zp = abs(z) ** (nu / 2) * np.exp(0.5j * nu * sf.zeta_arg(z))
        return _rel(zp * sf.f_nu(nu, z), sf.bessel_j(nu, 2 * np.sqrt(z))[0])

    @add("f_nu recurrence", 1e-9)
    def _():
        nu, z = 1.5, 0.8
        r = z * sf.f_nu(nu, z) - (nu - 1) * sf.f_nu(nu - 1, z) + sf.f_nu(nu - 2, z)
        return abs(r) / abs(sf.f_nu(nu, z))

    @add("g_nu recurrence", 1e-9)
    def _():
        nu, z = 2.5, -0.7 + 0.2j
        r = z * sf.g_nu(nu, z) - (nu - 1) * sf.g_nu(nu - 1, z) + sf.g_nu(nu - 2, z)
        return abs(r) / abs(sf.g_nu(nu, z))

    @add("g_nu modified-bessel reduction", 1e-10)
    def _():
        # on the negative axis the ray integral is i K_1(2) / pi
        return _rel(sf.g_nu(1.0, -1.0 + 0j), 1j * special.kv(1, 2.0) / math.pi)

    @add("gaussian recurrence coefficients", 1e-12)
    def _():
        t = op.recurrence_coeffs(op.gaussian_weight(10), 12)
        k = np.arange(1, 12)
        return max(np.max(np.abs(t.alpha[:12])), np.max(np.abs(t.beta[1:12] - k / 10)),
                   abs(t.beta[0] - math.sqrt(2 * math.pi / 10)))

    @add("laguerre recurrence coefficients", 1e-12)
    def _():
        nu, n = 0.5, 8
        t = op.recurrence_coeffs(op.laguerre_weight(n, nu), 12)
        k = np.arange(12)
        return max(np.max(np.abs(t.alpha[:12] - (2 * k + nu + 1) / n)),
                   np.max(np.abs(t.beta[1:12] - k[1:] * (k[1:] + nu) / n ** 2)))

    @add("unit determinant of Y", 1e-8)
    def _():
        zs = rng.normal(size=5) + 1j * (0.3 + rng.random(5))
        return max(abs(np.linalg.det(op.rh_matrix_Y(w_soft, t_soft, 5, z)) - 1) for z in zs)

    @add("kernel from Y equals CD sum", 1e-8)
    def _():
        x, y = 0.3 + 0.1j, -0.2 + 0.05j
        return _rel(op.cd_kernel_from_Y(w_soft, t_soft, 4, x, y), op.cd_kernel(w_soft, t_soft, 4, x, y))

    @add("quartic equilibrium mass", 1e-10)
    def _():
        return abs(eqm.solve_one_cut((0, 0, 0, 0, 0.25), "soft").mass() - 1)

    @add("effective potential vanishes on support", 1e-7)
    def _():
        eq = eqm.solve_one_cut((0, 0, 0.5), "soft")
        return float(np.max(np.abs(eqm.effective_potential(eq, np.linspace(-1.9, 1.9, 21)))))

    @add("zoom constant equals zoom-map slope", 1e-6)
    def _():
        eq = eqm.solve_one_cut((0, 1), "hard")
        h, n = 1e-7, 10
        return _rel(eqm.zoom_map(eq, h, n) / (n ** 2 * h), eqm.zoom_constant(eq))

    @add("airy parametrix determinant", 1e-10)
    def _():
        return abs(np.linalg.det(pm.airy_parametrix(1 + 1j)) - 1)

    for nu in (0.0, 0.5, 1.0, 2.5):
        @add(f"bessel parametrix determinant nu={nu:g}", 1e-10)
        def _(nu=nu):
            zs = [0.3 + 0.2j, -1.5 + 0.4j, 2.0 - 1.0j]
            return max(abs(np.linalg.det(pm.bessel_parametrix(nu, z)) - 1) for z in zs)

    @add("bessel parametrix jump", 1e-6)
    def _():
        nu, x, eps = 0.5, 2.0, 1e-7
        Bp = pm.bessel_parametrix(nu, x + 1j * eps)
        Bm = pm.bessel_parametrix(nu, x - 1j * eps)
        Jmp = np.array([[np.exp(-1j * np.pi * nu), np.exp(-1j * np.pi * nu)],
                        [0, np.exp(1j * np.pi * nu)]])
        return float(np.max(np.abs(Bp - Bm @ Jmp)))

    @add("airy kernel continuity", 1e-10)
    def _():
        up = pm.kernel_entry("airy", 0.5, 1.2, side=1)
        dn = pm.kernel_entry("airy", 0.5, 1.2, side=-1)
        return abs(up - dn) / abs(up)

    @add("airy kernel formula", 1e-10)
    def _():
        return _rel(pm.kernel_entry("airy", 0.5, 1.2, side=1), -2j * np.pi * pm.airy_kernel(0.5, 1.2))

    @add("bessel kernel formula", 1e-10)
    def _():
        z1, z2 = 0.7 + 0.4j, 1.6 - 0.3j
        return _rel(pm.kernel_entry(("bessel", 0.5), z1, z2), -2j * np.pi * pm.bessel_kernel(0.5, z1, z2))

    @add("block determinant identity (50 instances)", 1e-10)
    def _():
        worst = 0.0
        for _ in range(50):
            S = int(rng.integers(1, 5))
            a, b, c, d, x, y = (rng.normal(size=S) + 1j * rng.normal(size=S) for _ in range(6))
            lhs, rhs = pm.detid_check(a, b, c, d, x, y)
            worst = max(worst, _rel(rhs, lhs))
        return worst

    @add("limit determinant equals block form", 1e-9)
    def _():
        g, b = (0.4 + 0.1j, 0.9 - 0.2j), (0.6 + 0.3j, 1.3 + 0.1j)
        return max(_rel(pm.block_det_form(c, "airy", g, b), pm.limit_rhs(c, "airy", g, b))
                   for c in ("I", "II", "III"))

    @add("airy kernel ratio equals Z expression", 1e-7)
    def _():
        worst = 0.0
        for S in (1, 2):
            y = 0.6 + rng.random(2 * S) + 0.2j * rng.normal(size=2 * S)
            x = y * y
            M = np.array([[pm.airy_kernel(a, b) for b in x[S:]] for a in x[:S]])
            lhs = np.linalg.det(M) / (cr.vandermonde(x[:S]) * cr.vandermonde(x[S:]))
            worst = max(worst, _rel(kz.thm_soft_rhs(y), lhs))
        return worst

    @add("z_kont symmetric", 1e-11)
    def _():
        return _rel(kz.z_kont((1.0, 1.5, 2.0, 0.8)), kz.z_kont((2.0, 0.8, 1.5, 1.0)))

    @add("hard-edge limit routes agree", 1e-7)
    def _():
        y = np.array([0.9 + 0.2j, 1.1 - 0.1j, 1.3 + 0.05j, 0.7 + 0.3j])
        r1 = _rel(kz.thm_hard_rhs(0.5, y), pm.limit_rhs("I", ("bessel", 0.5), y[2:], y[:2]))
        r3 = _rel(kz.thm_hard_rhs(0.5, y, "III"),
                  np.exp(2j * np.pi * 0.5) * pm.limit_rhs("III", ("bessel", 0.5), -y[:2], -y[2:]))
        return max(r1, r3)

    @add("unitary-group constant K_2, K_3", 1e-6)
    def _():
        return max(_rel(orc.hc_constant(2), math.pi / 2), _rel(orc.hc_constant(3), math.pi ** 3 / 6))

    @add("2x2 unitary integral against quadrature", 1e-8)
    def _():
        a, b = (1.0, 2.0), (0.5, -0.3)
        return _rel(orc.unitary_group_quadrature(a, b), orc.hciz_2x2(a, b))

    for case, pts in (("I", ((0.5,), (0.7,))), ("II", ((0.4,), (0.6 + 0.5j,))),
                      ("III", ((0.3 + 0.4j,), (-0.2 + 0.6j,)))):
        @add(f"finite-n case {case} against eigenvalue integral", 1e-6)
        def _(case=case, pts=pts):
            w = op.gaussian_weight(2)
            ps = cr.PointSet(pts[0], pts[1], case)
            fn = {"I": cr.corr_I, "II": cr.corr_II, "III": cr.corr_III}[case]
            return _rel(fn(w, None, ps), orc.brute_finite_n(w, ps))

    @add("finite-n hard case I against eigenvalue integral", 1e-6)
    def _():
        ps = cr.PointSet((0.5 + 0.2j,), (1.1,), "I")
        return _rel(cr.corr_I(w_hard, t_hard, ps), orc.brute_finite_n(w_hard, ps))

    @add("z_kont against matrix integral", 1e-5)
    def _():
        return _rel(kz.z_kont((1.0, 1.5)), orc.brute_z_kont_2(1.0, 1.5))

    @add("f-determinant against loop-contour integral", 1e-5)
    def _():
        return _rel(kz.thm_hard_rhs(0.5, (1.0, 2.0)), orc.brute_bessel_integral_2(0.5, 1.0, 2.0, "cue"))

    @add("g-determinant against positive-matrix integral", 1e-5)
    def _():
        return _rel(kz.thm_hard_rhs(0.5, (1.5, 2.5), "III"),
                    orc.brute_bessel_integral_2(0.5, 1.5, 2.5, "hplus"))

    return out


def run_verify(cfg, stream=None):
    stream = stream or sys.stdout
    rng = np.random.default_rng(cfg.seed)
    failures = 0
    checks = _checks(rng)
    for name, fn, tol in checks:
        tol = cfg.tol if cfg.tol is not None else tol
        try:
            res = float(fn())
            ok = res < tol
            msg = f"residual={res:.3e} tol={tol:.1e}"
        except (EdgeDualityError, ValueError, ArithmeticError) as exc:
            ok, msg = False, f"error: {type(exc).__name__}: {exc}"
        failures += not ok
        print(f"{'PASS' if ok else 'FAIL'} {name}: {msg}", file=stream)
    print(f"{len(checks) - failures}/{len(checks)} checks passed", file=stream)
    return 0 if failures == 0 else 1


# ---------------------------------------------------------------- converge

def _converge_one(cfg, n):
    y = np.asarray(cfg.points, dtype=complex)
    S = len(y) // 2
    if cfg.experiment == "soft-converge":
        w = op.WeightSpec("soft", cfg.potential, n)
        lhs = cr.scaled_soft_lhs(w, None, cr.ScaledPointSet(y, "soft"))
        rhs = kz.thm_soft_rhs(y)
    else:
        w = op.WeightSpec("hard", cfg.potential, n, cfg.nu)
        regime = "hard-III" if cfg.case == "III" else "hard"
        lhs = cr.scaled_hard_lhs(w, None, cr.ScaledPointSet(y, regime), case=cfg.case)
        rhs = kz.thm_hard_rhs(cfg.nu, y, cfg.case)
    return ConvergenceRecord.from_values(cfg.case, n, S, complex(lhs), complex(rhs))


def _check_converge(cfg):
    if len(cfg.points) % 2 or not cfg.points:
        raise UsageError("need an even, positive number of points")
    if cfg.experiment == "soft-converge" and cfg.case != "I":
        raise UsageError("soft-converge supports case I only")
    if cfg.experiment == "hard-converge" and cfg.case == "II":
        raise UsageError("hard-converge supports cases I and III")
    try:
        y = np.asarray(cfg.points, dtype=complex)
        if cfg.experiment == "soft-converge":
            op.WeightSpec("soft", cfg.potential, 1)
            cr.ScaledPointSet(y, "soft")
        else:
            op.WeightSpec("hard", cfg.potential, 1, cfg.nu)
            cr.ScaledPointSet(y, "hard-III" if cfg.case == "III" else "hard")
    except (ValueError, EdgeDualityError) as exc:
        raise UsageError(str(exc)) from None


def _nan_record(cfg, n):
    nan = float("nan")
    return ConvergenceRecord(cfg.case, n, len(cfg.points) // 2, nan, nan, nan, nan, nan, nan)


def format_row(rec):
    return [rec.case, str(rec.n), str(rec.S)] + [
        "%.17g" % getattr(rec, k) for k in CSV_HEADER[3:]]


def write_csv(records, path_or_stream):
    own = isinstance(path_or_stream, str)
    fh = open(path_or_stream, "w", newline="", encoding="utf-8") if own else path_or_stream
    try:
        wr = csv.writer(fh, lineterminator="\n")
        wr.writerow(CSV_HEADER)
        for rec in records:
            wr.writerow(format_row(rec))
    finally:
        if own:
            fh.close()


def read_csv(path):
    with open(path, newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    if not rows or rows[0] != CSV_HEADER:
        raise ValueError("missing or wrong CSV header")
    return [ConvergenceRecord(r[0], int(r[1]), int(r[2]), *map(float, r[3:])) for r in rows[1:]]


def trend_line(records):
    errs = [r.rel_err for r in records]
    ns = ", ".join(str(r.n) for r in records)
    if any(math.isnan(e) for e in errs):
        return f"trend: incomplete (failed rows) over n = {ns}"
    if len(errs) < 2:
        return f"trend: single point rel_err={errs[0]:.3e} at n = {ns}"
    dec = all(b < a for a, b in zip(errs, errs[1:]))
    word = "decreasing" if dec else "not decreasing"
    return f"trend: rel_err {word} over n = {ns} ({' -> '.join(f'{e:.3e}' for e in errs)})"


def run_converge(cfg, stream=None, err_stream=None):
    stream, err_stream = stream or sys.stdout, err_stream or sys.stderr
    _check_converge(cfg)

    def job(n):
        try:
            return _converge_one(cfg, n), None
        except (EdgeDualityError, ValueError, ArithmeticError) as exc:
            return _nan_record(cfg, n), f"{type(exc).__name__}: {exc}"

    with ThreadPoolExecutor() as ex:
        results = list(ex.map(job, cfg.n_list))
    records = []
    for n, (rec, err) in zip(cfg.n_list, results):
        if err:
            print(f"error n={n}: {err}", file=err_stream)
        records.append(rec)
    write_csv(records, cfg.out_path or stream)
    print(trend_line(records), file=stream if cfg.out_path else err_stream)
    return 0 if all(err is None for _, err in results) else 1


# ---------------------------------------------------------------- eval

def fmt_complex(z):
    z = complex(z)
    # adding 0.0 turns -0.0 into 0.0
    return f"{z.real + 0.0:.15g},{z.imag + 0.0:.15g}"


def run_eval(cfg, stream=None):
    stream = stream or sys.stdout
    pts = [complex(p) for p in cfg.points]
    if cfg.experiment == "kontsevich-eval":
        print(fmt_complex(kz.z_kont(pts)), file=stream)
        return 0
    if len(pts) != 2:
        raise UsageError("kernel needs exactly two points")
    if cfg.kind == "airy":
        val = pm.airy_kernel(*pts)
    else:
        val = pm.bessel_kernel(cfg.nu, pts[0], pts[1], side=cfg.side)
    print(fmt_complex(val), file=stream)
    return 0


# ---------------------------------------------------------------- entry

def build_parser():
    p = argparse.ArgumentParser(prog="edgeduality", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--config", help="key = value config file")
        sp.add_argument("--seed", type=int)
        sp.add_argument("--tol", type=float)

    sp = sub.add_parser("verify", help="run the identity suite")
    common(sp)
    for name in ("soft-converge", "hard-converge"):
        sp = sub.add_parser(name, help="scaled average against its limit, sweeping n")
        common(sp)
        sp.add_argument("--potential", help="coefficients c0,c1,... of V")
        sp.add_argument("--nu", type=float)
        sp.add_argument("--n", help="comma-separated ascending sizes")
        sp.add_argument("--points", help="re:im,... (2S points)")
        sp.add_argument("--case", choices=("I", "II", "III"))
        sp.add_argument("--out", help="CSV path (default stdout)")
    sp = sub.add_parser("kernel", help="evaluate a limit kernel")
    common(sp)
    sp.add_argument("--kind", choices=("airy", "bessel"))
    sp.add_argument("--nu", type=float)
    sp.add_argument("--points", help="two points re:im,re:im")
    sp.add_argument("--side", type=int, choices=(1, -1))
    sp = sub.add_parser("kontsevich", help="evaluate the matrix Airy function")
    common(sp)
    sp.add_argument("--points", help="re:im,... with Re > 0")
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = build_config(args)
        if cfg.experiment == "verify":
            return run_verify(cfg)
        if cfg.experiment.endswith("converge"):
            return run_converge(cfg)
        return run_eval(cfg)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (EdgeDualityError, ValueError, ArithmeticError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
