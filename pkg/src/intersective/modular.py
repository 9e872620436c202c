"""Polynomial arithmetic mod p: root counts, Jacobi symbols, cycle types.

Root counting follows gcd(x^p - x, f) over F_p, so only distinct roots are
seen.  The cycle type of a squarefree polynomial at a good prime is the
multiset of irreducible factor degrees, obtained by distinct-degree
factorization without any equal-degree splitting.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .intpoly import IntPoly, discriminant, squarefree_part

BRUTE_FORCE_MAX_P = 10**4

# Batched Frobenius accumulates deg-many products below p**2 per entry, so
# int64 stays exact while deg * p**2 < 2**63.
_INT64_LIMIT = 1 << 63


@dataclass(frozen=True)
class FpPoly:
    """Dense polynomial over F_p, coefficients ascending and reduced."""

    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.p < 2:
            raise ValueError("modulus must be at least 2")
        if any(c < 0 or c >= self.p for c in self.coeffs):
            raise ValueError("coefficients must be reduced mod p")
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("leading coefficient must be nonzero")

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no degree")
        return len(self.coeffs) - 1


def reduce(f: IntPoly, p: int) -> FpPoly:
    """Reduce f mod p; the zero FpPoly signals that f vanishes mod p."""
    if p < 2:
        raise ValueError("modulus must be at least 2")
    return FpPoly(p, tuple(_trim([c % p for c in f.coeffs])))


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a|n) for odd n >= 1; the Legendre symbol for prime n."""
    if n <= 0 or n % 2 == 0:
        raise ValueError("Jacobi symbol requires a positive odd lower argument")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a, n = n % a, a
    return result if n == 1 else 0


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _fp_monic(a: list[int], p: int) -> list[int]:
    lead = a[-1]
    if lead == 1:
        return a
    inv = pow(lead, p - 2, p)
    return [c * inv % p for c in a]


def _fp_rem(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of a mod b over F_p; b must be monic."""
    r = list(a)
    db = len(b) - 1
    while len(r) - 1 >= db and r:
        lead = r[-1]
        if lead:
            shift = len(r) - 1 - db
            for i in range(db):
                r[shift + i] = (r[shift + i] - lead * b[i]) % p
        r.pop()
    return _trim(r)


def _fp_mulmod(a: list[int], b: list[int], g: list[int], p: int) -> list[int]:
    """a * b mod g over F_p; g monic."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    out = [c % p for c in out]
    return _fp_rem(out, g, p)


def _fp_gcd_monic(a: list[int], b: list[int], p: int) -> list[int]:
    """Monic gcd over F_p (a or b may be empty)."""
    while b:
        b = _fp_monic(b, p)
        a, b = b, _fp_rem(a, b, p)
    if not a:
        return []
    return _fp_monic(a, p)


def _fp_pow_x(e: int, g: list[int], p: int) -> list[int]:
    """x**e mod g over F_p; g monic of degree >= 1."""
    acc = [1]
    x = _fp_rem([0, 1], g, p)
    for bit in bin(e)[2:]:
        acc = _fp_mulmod(acc, acc, g, p)
        if bit == "1":
            acc = _fp_mulmod(acc, x, g, p)
    return acc


def _fp_powmod(a: list[int], e: int, g: list[int], p: int) -> list[int]:
    acc = [1]
    for bit in bin(e)[2:]:
        acc = _fp_mulmod(acc, acc, g, p)
        if bit == "1":
            acc = _fp_mulmod(acc, a, g, p)
    return acc


def count_roots_mod_p(f: IntPoly, p: int) -> int:
    """Number of distinct roots of f in F_p.

    Computed as deg gcd(x**p - x, f mod p); primes dividing lc(f) simply
    see the degree-dropped reduction.  Raises if f vanishes mod p.
    """
    g = reduce(f, p)
    if g.is_zero:
        raise ValueError(f"polynomial is identically zero mod {p}")
    if g.degree == 0:
        return 0
    gm = _fp_monic(list(g.coeffs), p)
    h = _fp_pow_x(p, gm, p)
    # subtract x inside the quotient ring
    xm = _fp_rem([0, 1], gm, p)
    diff = [0] * max(len(h), len(xm))
    for i, c in enumerate(h):
        diff[i] = c
    for i, c in enumerate(xm):
        diff[i] = (diff[i] - c) % p
    diff = _trim(diff)
    if not diff:
        return g.degree
    d = _fp_gcd_monic(gm, diff, p)
    return len(d) - 1


def roots_mod_p_bruteforce(f: IntPoly, p: int) -> set[int]:
    """All roots of f in F_p by direct evaluation; p capped for sanity."""
    if p > BRUTE_FORCE_MAX_P:
        raise ValueError(f"brute-force root search capped at p <= {BRUTE_FORCE_MAX_P}")
    g = reduce(f, p)
    if g.is_zero:
        raise ValueError(f"polynomial is identically zero mod {p}")
    roots = set()
    for x in range(p):
        acc = 0
        for c in reversed(g.coeffs):
            acc = (acc * x + c) % p
        if acc == 0:
            roots.add(x)
    return roots


def cycle_type_of_good_prime(fstar: IntPoly, p: int) -> tuple[int, ...]:
    """Distinct-degree census for squarefree fstar at p not dividing
    lc(fstar) * disc(fstar); no validation, callers guarantee the input."""
    g = _fp_monic([c % p for c in fstar.coeffs], p)
    parts: list[int] = []
    r = g
    h = _fp_rem([0, 1], r, p)
    d = 0
    while len(r) - 1 > 0:
        d += 1
        deg_r = len(r) - 1
        if 2 * d > deg_r:
            parts.append(deg_r)
            break
        h = _fp_powmod(h, p, r, p)
        # gcd(h - x, r) collects every irreducible factor of degree d
        diff = list(h) + [0] * (2 - len(h)) if len(h) < 2 else list(h)
        diff[1] = (diff[1] - 1) % p
        diff = _trim(diff)
        gd = _fp_gcd_monic(r, diff, p) if diff else r
        if len(gd) - 1 > 0:
            parts.extend([d] * ((len(gd) - 1) // d))
            r = _fp_exact_div(r, gd, p)
            h = _fp_rem(h, r, p)
    return tuple(sorted(parts))


def _fp_exact_div(a: list[int], b: list[int], p: int) -> list[int]:
    """a / b over F_p when b divides a; b monic."""
    r = list(a)
    db = len(b) - 1
    q = [0] * (len(a) - db)
    for k in range(len(q) - 1, -1, -1):
        lead = r[k + db]
        q[k] = lead
        if lead:
            for i in range(db + 1):
                r[k + i] = (r[k + i] - lead * b[i]) % p
    assert not any(r[:db])
    return _trim(q)


def cycle_type_mod_p(f: IntPoly, p: int) -> tuple[int, ...]:
    """Multiset of irreducible factor degrees of squarefree_part(f) mod p.

    Requires p prime and coprime to lc(f*) * disc(f*), where f* is the
    squarefree part; such reductions stay squarefree of full degree.
    """
    fstar = squarefree_part(f)
    if fstar.degree == 0:
        raise ValueError("cycle type requires degree at least 1")
    if fstar.lc % p == 0 or discriminant(fstar) % p == 0:
        raise ValueError(f"{p} divides lc or disc of the squarefree part")
    return cycle_type_of_good_prime(fstar, p)


def _batch_powmod(base: np.ndarray, exp: np.ndarray, p: np.ndarray) -> np.ndarray:
    """Elementwise base**exp mod p on int64 arrays."""
    acc = np.ones_like(p)
    b = base % p
    e = exp.copy()
    while e.max() > 0:
        odd = (e & 1).astype(bool)
        acc[odd] = acc[odd] * b[odd] % p[odd]
        b = b * b % p
        e >>= 1
    return acc


def count_roots_block(f: IntPoly, primes: np.ndarray) -> np.ndarray:
    """count_roots_mod_p(f, p) for every p in primes, batched.

    Every prime must leave the degree intact (p does not divide lc(f)).
    Falls back to the scalar routine when int64 cannot hold the
    intermediate products.
    """
    if f.is_zero:
        raise ValueError("polynomial is identically zero")
    d = f.degree
    n = int(primes.size)
    if n == 0:
        return np.empty(0, dtype=np.int64)
    if d == 0:
        return np.zeros(n, dtype=np.int64)
    pmax = int(primes.max())
    if d * pmax * pmax >= _INT64_LIMIT:
        return np.array([count_roots_mod_p(f, int(p)) for p in primes], dtype=np.int64)
    if d == 1:
        return np.ones(n, dtype=np.int64)

    p = primes.astype(np.int64)
    coeffs = f.coeffs
    if max(abs(c) for c in coeffs) < _INT64_LIMIT // 2:
        cols = [np.remainder(np.int64(c), p) for c in coeffs]
    else:
        plist = p.tolist()
        cols = [np.array([c % q for q in plist], dtype=np.int64) for c in coeffs]
    lead = cols[-1]
    assert int((lead == 0).sum()) == 0, "prime divides leading coefficient"
    inv = _batch_powmod(lead, p - 2, p)
    # monic reduction g = x^d + sum G[:, j] x^j
    G = np.stack([col * inv % p for col in cols[:-1]], axis=1)

    def mul_by_x(acc: np.ndarray) -> np.ndarray:
        top = acc[:, d - 1]
        out = np.empty_like(acc)
        out[:, 1:] = acc[:, : d - 1]
        out[:, 0] = 0
        return (out - top[:, None] * G) % p[:, None]

    def square(acc: np.ndarray) -> np.ndarray:
        t = np.zeros((n, 2 * d - 1), dtype=np.int64)
        for i in range(d):
            ai = acc[:, i]
            t[:, 2 * i] += ai * ai
            for j in range(i + 1, d):
                t[:, i + j] += 2 * ai * acc[:, j]
        t %= p[:, None]
        for k in range(2 * d - 2, d - 1, -1):
            c = t[:, k]
            t[:, k - d : k] = (t[:, k - d : k] - c[:, None] * G) % p[:, None]
        return t[:, :d]

    acc = np.zeros((n, d), dtype=np.int64)
    acc[:, 0] = 1
    for k in range(pmax.bit_length() - 1, -1, -1):
        acc = square(acc)
        mask = ((p >> k) & 1).astype(bool)
        if mask.any():
            acc = np.where(mask[:, None], mul_by_x(acc), acc)
    acc[:, 1] = (acc[:, 1] - 1) % p  # x^p - x in the quotient ring

    counts = np.empty(n, dtype=np.int64)
    split = ~acc.any(axis=1)
    counts[split] = d
    g_rows = np.concatenate([G, np.ones((n, 1), dtype=np.int64)], axis=1)
    for idx in np.flatnonzero(~split).tolist():
        counts[idx] = _gcd_degree(
            g_rows[idx].tolist(), _trim(acc[idx].tolist()), int(p[idx])
        )
    return counts


def _gcd_degree(a: list[int], b: list[int], p: int) -> int:
    """deg gcd(a, b) over F_p; a monic, b nonzero of lower degree."""
    while b:
        inv = pow(b[-1], p - 2, p)
        if inv != 1:
            b = [c * inv % p for c in b]
        a, b = b, _fp_rem(a, b, p)
    return len(a) - 1
