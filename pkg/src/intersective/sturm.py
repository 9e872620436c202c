"""Exact real-root counting and isolation via Sturm chains.

All arithmetic is over Z and Q.  Chains are built from the squarefree part,
remainders are integer pseudo-remainders negated under a positive scalar
multiplier, so every sign evaluation agrees with the rational chain.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .intpoly import IntPoly, derivative, negate, prem, primitive_part, squarefree_part

DEFAULT_MIN_WIDTH = Fraction(1, 2**20)


@dataclass(frozen=True)
class Interval:
    """Open isolating interval with exact rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        if self.lo >= self.hi:
            raise ValueError("interval endpoints must satisfy lo < hi")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo


def _next_element(a: IntPoly, b: IntPoly) -> IntPoly:
    """Negated remainder of a by b under a positive scalar multiplier."""
    r = prem(a, b)
    if b.lc < 0 and (a.degree - b.degree + 1) % 2 == 1:
        r = negate(r)  # restore the sign lc(b)**odd would have flipped
    return primitive_part(negate(r))


def sturm_chain(f: IntPoly) -> list[IntPoly]:
    """Sturm chain of squarefree_part(f); ends in a nonzero constant."""
    if f.is_zero:
        raise ValueError("the zero polynomial has no Sturm chain")
    if f.degree < 1:
        raise ValueError("Sturm chain requires degree at least 1")
    fstar = squarefree_part(f)
    chain = [fstar, derivative(fstar)]
    while chain[-1].degree > 0:
        nxt = _next_element(chain[-2], chain[-1])
        assert not nxt.is_zero, "squarefree input produced a degenerate chain"
        chain.append(nxt)
    return chain


def _variations(signs: list[int]) -> int:
    count = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            count += 1
        prev = s
    return count


def _sign_at_infinity(f: IntPoly, positive: bool) -> int:
    s = 1 if f.lc > 0 else -1
    if not positive and f.degree % 2 == 1:
        s = -s
    return s


def _sign_at(f: IntPoly, x: Fraction) -> int:
    """Sign of f(x) via homogeneous integer evaluation."""
    num, den = x.numerator, x.denominator
    acc = 0
    scale = 1
    for c in reversed(f.coeffs):
        acc = acc * num + c * scale
        scale *= den
    return (acc > 0) - (acc < 0)


def _variations_at(chain: list[IntPoly], x: Fraction) -> int:
    return _variations([_sign_at(g, x) for g in chain])


def count_real_roots(f: IntPoly) -> int:
    """Number of distinct real roots of f, exactly."""
    chain = sturm_chain(f)
    at_minus = _variations([_sign_at_infinity(g, positive=False) for g in chain])
    at_plus = _variations([_sign_at_infinity(g, positive=True) for g in chain])
    return at_minus - at_plus


def _root_bound(f: IntPoly) -> int:
    """Integer B with every real root of f strictly inside (-B, B)."""
    lead = abs(f.lc)
    biggest = max(abs(c) for c in f.coeffs[:-1]) if f.degree > 0 else 0
    return 1 + (biggest + lead - 1) // lead


def isolate_real_roots(
    f: IntPoly, min_width: Fraction = DEFAULT_MIN_WIDTH
) -> list[Interval]:
    """Disjoint open rational intervals, one around each real root.

    Intervals are bisected down to width <= min_width and each one carries
    a sign change of the squarefree part across its endpoints.
    """
    if min_width <= 0:
        raise ValueError("min_width must be positive")
    chain = sturm_chain(f)
    fstar = chain[0]
    total = count_real_roots(fstar)
    if total == 0:
        return []

    var_cache: dict[Fraction, int] = {}

    def var(x: Fraction) -> int:
        if x not in var_cache:
            var_cache[x] = _variations_at(chain, x)
        return var_cache[x]

    def sign(x: Fraction) -> int:
        return _sign_at(fstar, x)

    bound = Fraction(_root_bound(fstar))
    found: list[Interval] = []
    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        n = var(lo) - var(hi)
        if n == 0:
            continue
        if n == 1:
            found.append(_refine(fstar, sign, lo, hi, min_width))
            continue
        mid = (lo + hi) / 2
        if sign(mid) != 0:
            stack.append((lo, mid))
            stack.append((mid, hi))
            continue
        # mid is itself a root: carve out a verified sliver around it
        w = (hi - lo) / 4
        while (
            sign(mid - w) == 0
            or sign(mid + w) == 0
            or var(mid - w) - var(mid + w) != 1
            or 2 * w > min_width
        ):
            w /= 2
        found.append(Interval(mid - w, mid + w))
        stack.append((lo, mid - w))
        stack.append((mid + w, hi))
    found.sort(key=lambda iv: iv.lo)
    assert len(found) == total
    for iv in found:
        assert sign(iv.lo) * sign(iv.hi) < 0
    return found


def _refine(
    fstar: IntPoly,
    sign,
    lo: Fraction,
    hi: Fraction,
    min_width: Fraction,
) -> Interval:
    """Shrink an interval holding exactly one simple root."""
    s_lo = sign(lo)
    while hi - lo > min_width:
        mid = (lo + hi) / 2
        s_mid = sign(mid)
        if s_mid == 0:
            # exact rational root at a bisection point
            w = (hi - lo) / 4
            while sign(mid - w) == 0 or sign(mid + w) == 0 or 2 * w > min_width:
                w /= 2
            return Interval(mid - w, mid + w)
        if s_mid == s_lo:
            lo = mid
        else:
            hi = mid
    return Interval(lo, hi)
