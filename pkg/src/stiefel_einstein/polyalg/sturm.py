"""Real-root counting, isolation, and refinement via Sturm chains.

Univariate polynomials are handled as ascending Fraction coefficient lists;
the RationalPoly entry points convert.  All interval logic is half-open
(lo, hi], matching the Sturm count V(lo) - V(hi).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import DomainError
from .poly import RationalPoly

UCoeffs = list[Fraction]


def _strip(c: UCoeffs) -> UCoeffs:
    while c and c[-1] == 0:
        c.pop()
    return c


def _degree(c: UCoeffs) -> int:
    return len(c) - 1


def _eval(c: UCoeffs, x: Fraction) -> Fraction:
    total = Fraction(0)
    for a in reversed(c):
        total = total * x + a
    return total


def _derivative(c: UCoeffs) -> UCoeffs:
    return [i * a for i, a in enumerate(c)][1:]


def _rem(a: UCoeffs, b: UCoeffs) -> UCoeffs:
    """Remainder of a by b over Q."""
    a = list(a)
    db, lb = _degree(b), b[-1]
    while _degree(a) >= db:
        q = a[-1] / lb
        shift = _degree(a) - db
        for i, bc in enumerate(b):
            a[shift + i] -= q * bc
        a.pop()
        _strip(a)
        if not a:
            break
    return a


def _gcd(a: UCoeffs, b: UCoeffs) -> UCoeffs:
    a, b = list(a), list(b)
    while b:
        a, b = b, _rem(a, b)
    if a:
        lc = a[-1]
        a = [x / lc for x in a]
    return a


def _normalize_input(p) -> UCoeffs:
    if isinstance(p, RationalPoly):
        used = sorted(p.variables_used())
        if len(used) > 1:
            raise DomainError(f"not univariate: uses {used}")
        name = used[0] if used else (p.vars[0] if p.vars else "x")
        return _strip([Fraction(c) for c in p.univariate_coeffs(name)])
    return _strip([Fraction(c) for c in p])


def squarefree_part(p) -> UCoeffs:
    """p / gcd(p, p'), normalized monic-free (content irrelevant here)."""
    c = _normalize_input(p)
    if _degree(c) < 1:
        return c
    g = _gcd(c, _derivative(c))
    if _degree(g) < 1:
        return c
    # exact division
    q: UCoeffs = [Fraction(0)] * (_degree(c) - _degree(g) + 1)
    rem = list(c)
    while _degree(rem) >= _degree(g):
        k = _degree(rem) - _degree(g)
        coef = rem[-1] / g[-1]
        q[k] = coef
        for i, gc in enumerate(g):
            rem[k + i] -= coef * gc
        _strip(rem)
        if not rem:
            break
    return _strip(q)


def sturm_chain(p) -> list[UCoeffs]:
    """Sturm sequence of the squarefree part of p."""
    f = squarefree_part(p)
    if _degree(f) < 1:
        return [f] if f else []
    chain = [f, _derivative(f)]
    while _degree(chain[-1]) > 0:
        r = _rem(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-x for x in r])
    return chain


def _sign_changes(chain: list[UCoeffs], x: Fraction | None, at_inf: int = 0) -> int:
    """Sign variation count at x, or at +-infinity when at_inf is +-1."""
    signs = []
    for c in chain:
        if at_inf:
            s = c[-1] * (at_inf ** _degree(c)) if c else Fraction(0)
        else:
            s = _eval(c, x)
        if s != 0:
            signs.append(1 if s > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(
    p, lo: Fraction | None = None, hi: Fraction | None = None
) -> int:
    """Number of distinct real roots in (lo, hi]; None means -inf / +inf."""
    chain = sturm_chain(p)
    if not chain or _degree(chain[0]) < 1:
        return 0
    va = _sign_changes(chain, lo) if lo is not None else _sign_changes(chain, None, -1)
    vb = _sign_changes(chain, hi) if hi is not None else _sign_changes(chain, None, +1)
    return va - vb


def root_bound(c: UCoeffs) -> Fraction:
    """Cauchy bound: all real roots lie in [-M, M]."""
    c = _strip(list(c))
    if _degree(c) < 1:
        return Fraction(1)
    lc = abs(c[-1])
    return 1 + max(abs(a) / lc for a in c[:-1])


@dataclass(frozen=True)
class IsolatingInterval:
    """Half-open interval (lo, hi] certified to contain exactly one real root."""

    lo: Fraction
    hi: Fraction
    coeffs: tuple[Fraction, ...]

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def width(self) -> Fraction:
        return self.hi - self.lo


def isolate_real_roots(
    p, lo: Fraction | None = None, hi: Fraction | None = None
) -> list[IsolatingInterval]:
    """Disjoint isolating intervals for all distinct real roots in (lo, hi].

    The polynomial's square-free part is taken internally, so multiple roots
    are isolated once.
    """
    f = squarefree_part(p)
    if _degree(f) < 1:
        return []
    chain = [f, _derivative(f)]
    while _degree(chain[-1]) > 0:
        r = _rem(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-x for x in r])
    bound = root_bound(f)
    a = lo if lo is not None else -bound
    b = hi if hi is not None else bound
    if a >= b:
        return []
    out: list[IsolatingInterval] = []
    coeffs = tuple(f)

    def recurse(x: Fraction, y: Fraction, vx: int, vy: int) -> None:
        k = vx - vy
        if k == 0:
            return
        if k == 1:
            out.append(IsolatingInterval(x, y, coeffs))
            return
        mid = (x + y) / 2
        # nudge off a root so interval endpoints stay off the variety
        while _eval(f, mid) == 0:
            mid = mid + (y - x) / 16
        vm = _sign_changes(chain, mid)
        recurse(x, mid, vx, vm)
        recurse(mid, y, vm, vy)

    # keep exact root endpoints countable: (a, b] convention
    va = _sign_changes(chain, a)
    vb = _sign_changes(chain, b)
    # a root exactly at b must be kept; one exactly at a must be excluded.
    # Sturm V(a)-V(b) already implements that for the half-open interval.
    recurse(a, b, va, vb)
    out.sort(key=lambda iv: iv.lo)
    return out


def bisect_to_width(iv: IsolatingInterval, width: Fraction) -> IsolatingInterval:
    """Shrink an isolating interval by bisection until hi - lo <= width.

    Uses Sturm counts rather than endpoint signs, so it stays correct even
    when a bisection point lands exactly on the root.
    """
    f = list(iv.coeffs)
    chain = [f, _derivative(f)]
    while _degree(chain[-1]) > 0:
        r = _rem(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-x for x in r])
    lo, hi = iv.lo, iv.hi
    vlo = _sign_changes(chain, lo)
    while hi - lo > width:
        mid = (lo + hi) / 2
        vm = _sign_changes(chain, mid)
        if vlo - vm == 1:
            hi = mid
        else:
            lo, vlo = mid, vm
    return IsolatingInterval(lo, hi, iv.coeffs)


def alternating_sign_check(p) -> bool:
    """True iff every nonzero coefficient of degree d has sign (-1)^d.

    Such polynomials are positive on (-inf, 0], so all real roots are
    positive.
    """
    c = _normalize_input(p)
    if not c:
        return False
    for d, a in enumerate(c):
        if a == 0:
            continue
        if (d % 2 == 0) != (a > 0):
            return False
    return True
