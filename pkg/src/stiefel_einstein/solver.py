"""End-to-end Einstein-metric pipeline for 3-block Stiefel decompositions.

build_system derives the polynomial Einstein system from the general Ricci
formula evaluated over symbolic coefficients (a small rational-function
layer over RationalPoly), normalized by x23 = 1.  solve eliminates to a
univariate polynomial in x13, isolates its real roots, back-substitutes by
Newton iteration, and certifies each candidate with exact rational Ricci
residuals.  The x13 = 1 branch is handled in closed form via the classical
equal-off-diagonal quadratic.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import (
    DegenerateSystemError,
    DomainError,
    EliminationOverflowError,
    UnsupportedShapeError,
)
from .fixtures import (
    alpha2_bounds,
    alpha12_bounds,
    alpha13_bounds,
    beta2_bounds,
    beta12_bounds,
    beta13_bounds,
    h1_coeffs,
    h2_coeffs,
    h3_coeffs,
    sqrt_fraction,
)
from .polyalg import (
    RationalPoly,
    alternating_sign_check,
    bisect_to_width,
    buchberger,
    eliminate_resultant,
    isolate_real_roots,
    poly_gcd,
    saturation_generators,
    squarefree_part,
)
from .polyalg.groebner import DEFAULT_PAIR_CAP
from .ricci import InvariantMetric, ricci, ricci_general
from .so_algebra import BlockDecomposition, Diag, ModuleLabel, OffDiag
from .triples import dims, triples_closed_form

PAIR_CAP_ENV = "STIEFEL_EINSTEIN_PAIR_CAP"

CERTIFY_TOL = 1e-10
JENSEN_MATCH_TOL = 1e-8
DEDUPE_TOL = 1e-8
NEWTON_GRID = 16
AUTO_PROBE_CAP = 120  # pair reductions tried before auto falls back to resultants


def _pair_cap(explicit: int | None) -> int:
    if explicit is not None:
        return explicit
    env = os.environ.get(PAIR_CAP_ENV)
    return int(env) if env else DEFAULT_PAIR_CAP


class _RF:
    """Rational function num/den over RationalPoly; just enough arithmetic
    for evaluating the Ricci formula with symbolic metric coefficients."""

    __slots__ = ("num", "den")

    def __init__(self, num: RationalPoly, den: RationalPoly | None = None):
        if den is None:
            den = RationalPoly.const(num.vars, 1)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num = num
        self.den = den

    def _coerce(self, other) -> "_RF | None":
        if isinstance(other, _RF):
            return other
        if isinstance(other, RationalPoly):
            return _RF(other)
        if isinstance(other, (int, Fraction)):
            return _RF(RationalPoly.const(self.num.vars, other))
        return None

    def _simplified(self) -> "_RF":
        if self.num.is_zero():
            return _RF(RationalPoly.zero(self.num.vars))
        g = poly_gcd(self.num, self.den)
        if not g.is_constant():
            return _RF(self.num.exact_div(g), self.den.exact_div(g))
        return self

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _RF(
            self.num * o.den + o.num * self.den, self.den * o.den
        )._simplified()

    __radd__ = __add__

    def __neg__(self):
        return _RF(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _RF(self.num * o.num, self.den * o.den)._simplified()

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return _RF(self.num * o.den, self.den * o.num)._simplified()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        return _RF(self.num**k, self.den**k)


@dataclass(frozen=True)
class EinsteinSystem:
    """Cleared-numerator polynomial form of the Einstein equations."""

    decomp: BlockDecomposition
    normalization: ModuleLabel
    variables: tuple[str, ...]
    polys: list[RationalPoly]


@dataclass(frozen=True)
class EinsteinSolution:
    """A certified positive solution in the gauge x23 = 1."""

    decomp: BlockDecomposition
    coords: dict[ModuleLabel, float]
    lam: float
    residual: float
    intervals: dict[str, tuple[Fraction, Fraction]] = field(default_factory=dict)
    classification: str = "New"  # "Jensen" | "New"
    exact: dict[ModuleLabel, Fraction] | None = None

    @property
    def branch(self) -> str:
        return "jensen" if self.classification == "Jensen" else "h"

    def to_json(self) -> dict:
        rec = {
            "decomp": list(self.decomp.blocks),
            "n": self.decomp.n,
            "branch": self.branch,
            "coords": {f"x{l.name}": c for l, c in sorted(self.coords.items())},
            "lambda": self.lam,
            "residual": self.residual,
            "intervals": {
                v: [
                    [iv[0].numerator, iv[0].denominator],
                    [iv[1].numerator, iv[1].denominator],
                ]
                for v, iv in sorted(self.intervals.items())
            },
            "classification": self.classification,
        }
        return rec


@dataclass(frozen=True)
class Rejection:
    """A candidate that failed certification, with the reason."""

    reason: str


def _free_labels(decomp: BlockDecomposition) -> list[ModuleLabel]:
    k1, k2, _ = decomp.blocks
    labels: list[ModuleLabel] = []
    if k1 >= 2:
        labels.append(Diag(1))
    labels += [Diag(2), OffDiag(1, 2), OffDiag(1, 3)]
    return labels


def _check_shape(decomp: BlockDecomposition) -> None:
    if len(decomp.blocks) != 3:
        raise UnsupportedShapeError("solver needs a 3-block decomposition")
    if decomp.blocks[1] < 2:
        raise UnsupportedShapeError("solver needs k_2 >= 2")


def build_system(decomp: BlockDecomposition) -> EinsteinSystem:
    """Polynomial Einstein system in the free coefficients, x23 = 1.

    The polynomials are the cleared, content-normalized numerators of the
    chained component differences (r1 - r2 when the first diagonal module
    exists, then r2 - r12, r12 - r23, r23 - r13), evaluated symbolically
    through the general Ricci formula.
    """
    _check_shape(decomp)
    norm = OffDiag(2, 3)
    free = _free_labels(decomp)
    variables = tuple(f"x{l.name}" for l in free)
    coeffs: dict[ModuleLabel, _RF] = {
        l: _RF(RationalPoly.var(variables, f"x{l.name}")) for l in free
    }
    coeffs[norm] = _RF(RationalPoly.const(variables, 1))
    metric = InvariantMetric(decomp, coeffs)
    r = ricci(metric).values
    chain: list[tuple[ModuleLabel, ModuleLabel]] = []
    if Diag(1) in coeffs:
        chain.append((Diag(1), Diag(2)))
    chain += [
        (Diag(2), OffDiag(1, 2)),
        (OffDiag(1, 2), norm),
        (norm, OffDiag(1, 3)),
    ]
    polys = [(r[a] - r[b]).num.primitive() for a, b in chain]
    if any(p.is_zero() for p in polys):
        raise DegenerateSystemError("identically satisfied equation in chain")
    return EinsteinSystem(decomp, norm, variables, polys)


def _jensen_scaled(lbl: ModuleLabel) -> bool:
    """Modules inside the so(k1 + k2) block carry the scaled coefficient;
    modules touching the isotropy-adjacent block 3 stay at 1."""
    return 3 not in lbl.blocks


def jensen_quadratic(decomp: BlockDecomposition) -> list[Fraction]:
    """Ascending coefficients of the polynomial whose positive roots are the
    common coefficient x of the classical one-parameter Einstein metrics
    (x on the so(k1+k2)-block modules, 1 on the block-3 modules)."""
    _check_shape(decomp)
    variables = ("x",)
    x = _RF(RationalPoly.var(variables, "x"))
    one = _RF(RationalPoly.const(variables, 1))
    coeffs: dict[ModuleLabel, _RF] = {}
    for lbl in dims(decomp):
        coeffs[lbl] = x if _jensen_scaled(lbl) else one
    metric = InvariantMetric(decomp, coeffs)
    r = ricci(metric).values
    labels = sorted(r)
    g = RationalPoly.zero(variables)
    for a, b in zip(labels, labels[1:]):
        num = (r[a] - r[b]).num.primitive()
        if not num.is_zero():
            g = num if g.is_zero() else poly_gcd(g, num)
    if g.is_zero() or g.is_constant():
        raise DegenerateSystemError("no equal-off-diagonal constraint found")
    return g.primitive().univariate_coeffs("x")


def jensen_points(
    decomp: BlockDecomposition, digits: int = 50
) -> list[dict[ModuleLabel, Fraction]]:
    """High-precision coordinates of the equal-off-diagonal Einstein metrics."""
    quad = jensen_quadratic(decomp)
    roots: list[Fraction] = []
    if len(quad) == 3:
        a, b, c = quad[2], quad[1], quad[0]
        disc = b * b - 4 * a * c
        if disc < 0:
            return []
        s = sqrt_fraction(disc, digits)
        roots = [(-b - s) / (2 * a), (-b + s) / (2 * a)]
    else:
        width = Fraction(1, 10 ** max(digits, 20))
        for iv in isolate_real_roots(quad, lo=Fraction(0)):
            roots.append(bisect_to_width(iv, width).midpoint())
    out = []
    for root in sorted(set(roots)):
        if root <= 0:
            continue
        coords = {
            lbl: (root if _jensen_scaled(lbl) else Fraction(1))
            for lbl in dims(decomp)
        }
        out.append(coords)
    return out


def certify(
    coords: dict[ModuleLabel, float | Fraction],
    decomp: BlockDecomposition,
    tol: float = CERTIFY_TOL,
) -> EinsteinSolution | Rejection:
    """Exact-rational certification of a candidate coordinate vector.

    The Ricci components are evaluated with Fraction arithmetic at the given
    coordinates; the candidate is accepted iff max |r_i - mean| / mean <= tol
    and all coordinates are positive.
    """
    exact = {}
    for lbl, c in coords.items():
        if not c > 0:
            return Rejection(f"nonpositive coordinate x{lbl.name} = {c}")
        exact[lbl] = c if isinstance(c, Fraction) else Fraction(c)
    table = triples_closed_form(decomp)
    comp = ricci_general(table, InvariantMetric(decomp, exact))
    lam = comp.einstein_constant_candidate
    residual = float(comp.residual())
    if not residual <= tol:
        return Rejection(f"Einstein residual {residual:.3e} exceeds {tol:.1e}")
    classification, exact_out = _classify(exact, decomp)
    return EinsteinSolution(
        decomp=decomp,
        coords={l: float(c) for l, c in exact.items()},
        lam=float(lam),
        residual=residual,
        classification=classification,
        exact=exact_out,
    )


def _classify(
    exact: dict[ModuleLabel, Fraction], decomp: BlockDecomposition
) -> tuple[str, dict[ModuleLabel, Fraction] | None]:
    unit = [c for l, c in exact.items() if not _jensen_scaled(l)]
    scaled = [c for l, c in exact.items() if _jensen_scaled(l)]
    if any(abs(c - 1) > JENSEN_MATCH_TOL for c in unit):
        return "New", None
    if max(scaled) - min(scaled) > JENSEN_MATCH_TOL:
        return "New", None
    for point in jensen_points(decomp):
        ref = next(c for l, c in point.items() if _jensen_scaled(l))
        if all(abs(d - ref) <= JENSEN_MATCH_TOL for d in scaled):
            return "Jensen", point
    return "New", None


# -- elimination and back-substitution --------------------------------------

def _coordinate_factors(system: EinsteinSystem) -> list[RationalPoly]:
    return [RationalPoly.var(system.variables, v) for v in system.variables]


def _eliminate(
    system: EinsteinSystem,
    strategy: str,
    cap: int,
) -> tuple[list[Fraction], dict[str, RationalPoly]]:
    """Univariate x13-eliminant of the saturated h-branch system plus any
    shape-position basis elements (one variable linear over Q[x13])."""
    x13 = RationalPoly.var(system.variables, "x13")
    factors = _coordinate_factors(system) + [x13 - 1]
    if strategy in ("groebner", "auto"):
        # auto probes with a small cap: systems that stay tractable finish in
        # well under AUTO_PROBE_CAP reductions, while hard ones blow up in
        # coefficient size long before a large cap would trip
        probe = min(cap, AUTO_PROBE_CAP) if strategy == "auto" else cap
        try:
            basis = buchberger(
                saturation_generators(system.polys, factors),
                max_pair_reductions=probe,
            )
            elim = None
            shape: dict[str, RationalPoly] = {}
            for g in basis:
                used = g.variables_used()
                if used <= {"x13"}:
                    elim = g
                elif "z" not in used and len(used - {"x13"}) == 1:
                    (v,) = used - {"x13"}
                    if g.degree(v) == 1:
                        shape[v] = g
            if elim is None:
                raise DegenerateSystemError("no univariate eliminant in basis")
            return elim.univariate_coeffs("x13"), shape
        except EliminationOverflowError:
            if strategy == "groebner":
                raise
    # resultant fallback: eliminate directly, then split off the x13 = 1 root
    elim = eliminate_resultant(system.polys, "x13")
    coeffs = [Fraction(c) for c in elim.reorder(("x13",)).univariate_coeffs("x13")]
    x_minus_1 = [Fraction(-1), Fraction(1)]
    while True:
        quo, rem = _divmod_univariate(coeffs, x_minus_1)
        if any(rem):
            break
        coeffs = quo
    return coeffs, {}


def _divmod_univariate(
    a: list[Fraction], b: list[Fraction]
) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    db = len(b) - 1
    while len(a) - 1 >= db and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) - 1 < db:
            break
        k = len(a) - 1 - db
        c = a[-1] / b[-1]
        q[k] = c
        for i, bc in enumerate(b):
            a[k + i] -= c * bc
        a.pop()
    return q, a


def _compile(polys: list[RationalPoly]):
    """Precompiled float evaluator and Jacobian for Newton iteration."""
    nv = len(polys[0].vars)
    exps = []
    cofs = []
    for p in polys:
        exps.append(np.array(list(p.terms.keys()), dtype=np.int64))
        cofs.append(np.array([float(c) for c in p.terms.values()]))
    jac_exps = []
    jac_cofs = []
    for p in polys:
        row_e = []
        row_c = []
        for j in range(nv):
            d = p.derivative(p.vars[j])
            if d.is_zero():
                row_e.append(np.zeros((0, nv), dtype=np.int64))
                row_c.append(np.zeros(0))
            else:
                row_e.append(np.array(list(d.terms.keys()), dtype=np.int64))
                row_c.append(np.array([float(c) for c in d.terms.values()]))
        jac_exps.append(row_e)
        jac_cofs.append(row_c)

    def f(v: np.ndarray) -> np.ndarray:
        return np.array(
            [np.sum(c * np.prod(v**e, axis=1)) for e, c in zip(exps, cofs)]
        )

    def jac(v: np.ndarray) -> np.ndarray:
        out = np.zeros((len(polys), nv))
        for i in range(len(polys)):
            for j in range(nv):
                e, c = jac_exps[i][j], jac_cofs[i][j]
                if len(c):
                    out[i, j] = np.sum(c * np.prod(v**e, axis=1))
        return out

    return f, jac


def _newton(f, jac, start: np.ndarray, maxiter: int = 60) -> np.ndarray | None:
    v = start.astype(float).copy()
    for _ in range(maxiter):
        fv = f(v)
        if not np.all(np.isfinite(fv)):
            return None
        J = jac(v)
        try:
            dv = np.linalg.lstsq(J, -fv, rcond=None)[0]
        except np.linalg.LinAlgError:
            return None
        v = v + dv
        if np.max(np.abs(dv)) < 1e-14:
            break
    fv = f(v)
    if np.all(np.isfinite(fv)) and np.max(np.abs(fv)) < 1e-9:
        return v
    return None


def _starts_from_shape(
    shape: dict[str, RationalPoly], variables: tuple[str, ...], r13: float
) -> list[np.ndarray] | None:
    others = [v for v in variables if v != "x13"]
    if not all(v in shape for v in others):
        return None
    start = np.zeros(len(variables))
    start[variables.index("x13")] = r13
    for v in others:
        g = shape[v]
        # g = c(x13) * v - w(x13): solve for v at the root
        cs = g.coeffs_in(v)
        c_val = cs[1].eval_float({"x13": r13})
        w_val = -cs[0].eval_float({"x13": r13})
        if abs(c_val) < 1e-300:
            return None
        start[variables.index(v)] = w_val / c_val
    return [start]


def _grid_starts(variables: tuple[str, ...], r13: float, count: int) -> list[np.ndarray]:
    rng = random.Random(2026)
    others = [v for v in variables if v != "x13"]
    starts = []
    for _ in range(count):
        start = np.zeros(len(variables))
        start[variables.index("x13")] = r13
        for v in others:
            start[variables.index(v)] = 10 ** rng.uniform(-1.5, 0.5)
        starts.append(start)
    return starts


def solve(
    system: EinsteinSystem,
    strategy: str = "auto",
    tol: float = CERTIFY_TOL,
    pair_cap: int | None = None,
    newton_grid: int = NEWTON_GRID,
) -> list[EinsteinSolution]:
    """All certified positive Einstein solutions found, sorted by x13.

    The x13 = 1 branch is produced from the closed-form quadratic; the
    remaining branch comes from the saturated eliminant's isolated real
    roots, back-substituted by Newton iteration and certified exactly.
    An empty h-branch is legal; elimination overflow propagates.
    """
    if strategy not in ("groebner", "resultant", "auto"):
        raise DomainError(f"unknown strategy {strategy!r}")
    decomp = system.decomp
    solutions: list[EinsteinSolution] = []
    seen: list[np.ndarray] = []
    order = sorted(dims(decomp))

    def add(cand: EinsteinSolution) -> None:
        vec = np.array([cand.coords[l] for l in order])
        for s in seen:
            if np.max(np.abs(s - vec)) <= DEDUPE_TOL:
                return
        seen.append(vec)
        solutions.append(cand)

    # x13 = 1 branch, exact closed form
    for point in jensen_points(decomp):
        result = certify(point, decomp, tol)
        if isinstance(result, EinsteinSolution):
            add(result)

    # h-branch
    cap = _pair_cap(pair_cap)
    coeffs, shape = _eliminate(system, strategy, cap)
    sf = squarefree_part(coeffs)
    if len(sf) < 2:
        solutions.sort(key=lambda s: s.coords[OffDiag(1, 3)])
        return solutions
    f, jac = _compile(system.polys)
    variables = system.variables
    width = Fraction(1, 10**15)
    for iv in isolate_real_roots(sf, lo=Fraction(0)):
        refined = bisect_to_width(iv, width)
        r13 = float(refined.midpoint())
        if abs(r13 - 1) <= 1e-12:
            continue
        starts = _starts_from_shape(shape, variables, r13) or []
        starts += _grid_starts(variables, r13, newton_grid)
        for start in starts:
            v = _newton(f, jac, start)
            if v is None:
                continue
            if np.any(v <= 0) or abs(v[variables.index("x13")] - r13) > 1e-6:
                continue
            coords: dict[ModuleLabel, float | Fraction] = {
                system.normalization: Fraction(1)
            }
            for lbl in _free_labels(decomp):
                coords[lbl] = float(v[variables.index(f"x{lbl.name}")])
            result = certify(coords, decomp, tol)
            if isinstance(result, EinsteinSolution):
                add(
                    EinsteinSolution(
                        decomp=result.decomp,
                        coords=result.coords,
                        lam=result.lam,
                        residual=result.residual,
                        intervals={"x13": (refined.lo, refined.hi)},
                        classification=result.classification,
                        exact=result.exact,
                    )
                )
    solutions.sort(key=lambda s: s.coords[OffDiag(1, 3)])
    return solutions


# -- family sweep and positivity report -------------------------------------

@dataclass(frozen=True)
class PositivityRow:
    """Per-n sign and root-bracket facts for the (1, 3, n-4) family."""

    n: int
    h1_at_0: int
    h1_at_1: int
    h1_at_2: int
    h2_alternating: bool
    h3_alternating: bool
    alpha13: tuple[Fraction, Fraction] | None
    beta13: tuple[Fraction, Fraction] | None

    def to_json(self) -> dict:
        def iv(t):
            return None if t is None else [float(t[0]), float(t[1])]

        return {
            "n": self.n,
            "h1_at_0": self.h1_at_0,
            "h1_at_1": self.h1_at_1,
            "h1_at_2": self.h1_at_2,
            "h2_alternating": self.h2_alternating,
            "h3_alternating": self.h3_alternating,
            "alpha13": iv(self.alpha13),
            "beta13": iv(self.beta13),
        }


def positivity_report(n_values: list[int]) -> list[PositivityRow]:
    """Sign checks and x13-root brackets for blocks (1, 3, n-4)."""
    rows = []
    for n in n_values:
        if n < 6:
            raise DomainError("positivity report requires n >= 6")
        h1 = h1_coeffs(n)
        roots = isolate_real_roots(h1, lo=Fraction(0), hi=Fraction(2))
        alpha = next(
            ((iv.lo, iv.hi) for iv in roots if iv.hi <= 1), None
        )
        beta = next(
            ((iv.lo, iv.hi) for iv in roots if iv.lo >= 1), None
        )
        rows.append(
            PositivityRow(
                n=n,
                h1_at_0=int(h1[0]),
                h1_at_1=int(sum(h1)),
                h1_at_2=int(sum(c * Fraction(2) ** i for i, c in enumerate(h1))),
                h2_alternating=alternating_sign_check(h2_coeffs(n)),
                h3_alternating=alternating_sign_check(h3_coeffs(n)),
                alpha13=alpha,
                beta13=beta,
            )
        )
    return rows


def bracket_report(n: int, solutions: list[EinsteinSolution]) -> dict:
    """Check the asymptotic coordinate brackets against solved values.

    Each entry maps a coordinate name to (value, lo, hi, ok); bounds that do
    not apply at this n (or are not certifiable) are None and vacuously ok.
    """
    new = [s for s in solutions if s.classification == "New"]
    out: dict[str, dict] = {}
    if len(new) < 2:
        return out
    new.sort(key=lambda s: s.coords[OffDiag(1, 3)])
    alpha, beta = new[0], new[-1]

    def entry(sol, label, bounds_fn, min_n):
        value = sol.coords[label]
        if n < min_n:
            return {"value": value, "lo": None, "hi": None, "ok": True}
        lo, hi = bounds_fn(n)
        ok = (lo is None or float(lo) < value) and (hi is None or value < float(hi))
        return {
            "value": value,
            "lo": None if lo is None else float(lo),
            "hi": None if hi is None else float(hi),
            "ok": bool(ok),
        }

    out["alpha13"] = entry(alpha, OffDiag(1, 3), alpha13_bounds, 9)
    out["beta13"] = entry(beta, OffDiag(1, 3), beta13_bounds, 9)
    out["alpha12"] = entry(alpha, OffDiag(1, 2), alpha12_bounds, 7)
    out["beta12"] = entry(beta, OffDiag(1, 2), beta12_bounds, 7)
    out["alpha2"] = entry(alpha, Diag(2), alpha2_bounds, 16)
    out["beta2"] = entry(beta, Diag(2), beta2_bounds, 16)
    return out


def solve_v4(n: int, strategy: str = "auto") -> list[EinsteinSolution]:
    """Solve the (1, 3, n-4) system for one n."""
    decomp = BlockDecomposition((1, 3, n - 4))
    return solve(build_system(decomp), strategy=strategy)


def sweep(
    n_values: list[int], strategy: str = "auto", workers: int = 1
) -> dict[int, list[EinsteinSolution]]:
    """Solve the (1, 3, n-4) family across an n-range, deterministically
    merged by n; independent n values may run in parallel workers."""
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(solve_v4, n_values, [strategy] * len(n_values)))
        return dict(zip(n_values, results))
    return {n: solve_v4(n, strategy) for n in n_values}
