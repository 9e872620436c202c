"""Exact arithmetic on univariate integer polynomials and square classes of integers."""

from __future__ import annotations

from math import gcd as _int_gcd
from math import isqrt
from typing import Iterable

from .primes import is_prime

# Trial division limit used when certifying squarefree kernels.
TRIAL_DIVISION_BOUND = 10**6

_U64 = 1 << 64


class IntPoly:
    """Integer-coefficient polynomial, coefficients ascending by degree.

    Canonical form: no trailing zero coefficient.  The zero polynomial is
    the empty tuple and has neither degree nor leading coefficient.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError("coefficients must be plain integers")
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no degree")
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        return to_text(self)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        return add(self, other)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return add(self, negate(other))

    def __neg__(self) -> "IntPoly":
        return negate(self)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        return multiply(self, other)


ZERO = IntPoly()
ONE = IntPoly((1,))
X = IntPoly((0, 1))


def evaluate(f: IntPoly, x: int) -> int:
    """f(x) by Horner's rule, exactly."""
    acc = 0
    for c in reversed(f.coeffs):
        acc = acc * x + c
    return acc


def derivative(f: IntPoly) -> IntPoly:
    return IntPoly([i * c for i, c in enumerate(f.coeffs)][1:])


def add(f: IntPoly, g: IntPoly) -> IntPoly:
    a, b = f.coeffs, g.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return IntPoly(out)


def negate(f: IntPoly) -> IntPoly:
    return IntPoly([-c for c in f.coeffs])


def multiply(f: IntPoly, g: IntPoly) -> IntPoly:
    if f.is_zero or g.is_zero:
        return ZERO
    a, b = f.coeffs, g.coeffs
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return IntPoly(out)


def power(f: IntPoly, k: int) -> IntPoly:
    if k < 0:
        raise ValueError("negative polynomial power")
    result = ONE
    for _ in range(k):
        result = multiply(result, f)
    return result


def scale(f: IntPoly, c: int) -> IntPoly:
    return IntPoly([c * a for a in f.coeffs])


def content(f: IntPoly) -> int:
    """Nonnegative gcd of the coefficients; 0 for the zero polynomial."""
    g = 0
    for c in f.coeffs:
        g = _int_gcd(g, c)
        if g == 1:
            break
    return g


def primitive_part(f: IntPoly) -> IntPoly:
    """f divided by its content, sign preserved."""
    if f.is_zero:
        return ZERO
    ct = content(f)
    if ct == 1:
        return f
    return IntPoly([c // ct for c in f.coeffs])


def prem(f: IntPoly, g: IntPoly) -> IntPoly:
    """Pseudo-remainder: lc(g)**(deg f - deg g + 1) * f modulo g.

    Requires deg f >= deg g and g nonzero; all arithmetic stays in Z[x].
    """
    if g.is_zero:
        raise ZeroDivisionError("pseudo-remainder by the zero polynomial")
    df, dg = f.degree, g.degree
    if df < dg:
        raise ValueError("prem requires deg f >= deg g")
    lg = g.lc
    r = list(f.coeffs)
    steps = df - dg + 1
    dr = df
    while dr >= dg and any(r):
        lead = r[dr]
        steps -= 1
        r = [lg * c for c in r]
        shift = dr - dg
        for i, c in enumerate(g.coeffs):
            r[shift + i] -= lead * c
        while len(r) > 1 and r[-1] == 0:
            r.pop()
        dr = len(r) - 1
        if r == [0]:
            r = []
            break
    if steps > 0 and r:
        m = lg**steps
        r = [m * c for c in r]
    return IntPoly(r)


def _div_coeffs(f: IntPoly, d: int) -> IntPoly:
    out = []
    for c in f.coeffs:
        q, rem = divmod(c, d)
        if rem:
            raise ArithmeticError("inexact scalar division in remainder sequence")
        out.append(q)
    return IntPoly(out)


def exact_div(f: IntPoly, g: IntPoly) -> IntPoly:
    """Quotient f / g when g divides f exactly in Z[x]."""
    if g.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero:
        return ZERO
    if f.degree < g.degree:
        raise ArithmeticError("inexact polynomial division")
    r = list(f.coeffs)
    q = [0] * (f.degree - g.degree + 1)
    lg = g.lc
    for k in range(len(q) - 1, -1, -1):
        lead = r[k + g.degree]
        qk, rem = divmod(lead, lg)
        if rem:
            raise ArithmeticError("inexact polynomial division")
        q[k] = qk
        if qk:
            for i, c in enumerate(g.coeffs):
                r[k + i] -= qk * c
    if any(r[: g.degree]):
        raise ArithmeticError("inexact polynomial division")
    return IntPoly(q)


def poly_gcd(f: IntPoly, g: IntPoly) -> IntPoly:
    """Primitive gcd in Z[x] with positive leading coefficient."""

    def normalized(h: IntPoly) -> IntPoly:
        h = primitive_part(h)
        return negate(h) if not h.is_zero and h.lc < 0 else h

    if f.is_zero:
        return normalized(g)
    if g.is_zero:
        return normalized(f)
    a, b = primitive_part(f), primitive_part(g)
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero:
        if b.degree == 0:
            return ONE
        a, b = b, primitive_part(prem(a, b))
    return normalized(a)


def resultant(f: IntPoly, g: IntPoly) -> int:
    """Res(f, g), exactly, by the subresultant remainder sequence."""
    if f.is_zero or g.is_zero:
        return 0
    A, B = f, g
    s = 1
    if A.degree < B.degree:
        if A.degree % 2 == 1 and B.degree % 2 == 1:
            s = -s
        A, B = B, A
    ca, cb = content(A), content(B)
    t = ca**B.degree * cb**A.degree
    A, B = primitive_part(A), primitive_part(B)
    gg = 1
    h = 1
    while True:
        dA, dB = A.degree, B.degree
        if dA % 2 == 1 and dB % 2 == 1:
            s = -s
        if dB == 0:
            lead = B.coeffs[0]
            num = lead**dA
            if dA > 1:
                final, rem = divmod(num, h ** (dA - 1))
                assert rem == 0
            else:
                final = num
            return s * t * final
        delta = dA - dB
        R = prem(A, B)
        if R.is_zero:
            return 0
        A = B
        B = _div_coeffs(R, gg * h**delta)
        gg = A.lc
        if delta > 0:
            h, rem = divmod(gg**delta, h ** (delta - 1))
            assert rem == 0


def discriminant(f: IntPoly) -> int:
    """disc(f) = (-1)**(d(d-1)/2) Res(f, f') / lc(f) for d = deg f >= 1."""
    if f.is_zero:
        raise ValueError("the zero polynomial has no discriminant")
    d = f.degree
    if d < 1:
        raise ValueError("discriminant requires degree at least 1")
    res = resultant(f, derivative(f))
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    q, rem = divmod(sign * res, f.lc)
    assert rem == 0
    return q


def squarefree_part(f: IntPoly) -> IntPoly:
    """Primitive polynomial with the same complex roots as f, all simple.

    Computed as primitive(f) / gcd(f, f'); the result has positive
    leading coefficient.
    """
    if f.is_zero:
        raise ValueError("the zero polynomial has no squarefree part")
    fp = primitive_part(f)
    if fp.degree == 0:
        return ONE
    g = poly_gcd(fp, derivative(fp))
    q = exact_div(fp, g) if g.degree > 0 else fp
    if q.lc < 0:
        q = negate(q)
    return q


def _iroot(n: int, k: int) -> int:
    """Floor of the k-th root of n >= 1."""
    if n < 2:
        return n
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def _rough_kernel(m: int, original: int) -> tuple[int, ...]:
    """Squarefree kernel factors of m, all of whose prime factors exceed
    TRIAL_DIVISION_BOUND.  Certifies every branch or refuses."""
    if m == 1:
        return ()
    r = isqrt(m)
    if r * r == m:
        # A perfect square contributes nothing regardless of its factors.
        return ()
    if m < TRIAL_DIVISION_BOUND**2:
        return (m,)  # composite would need a factor below the trial bound
    if m < _U64 and is_prime(m):
        return (m,)
    k = 3
    while (1 << k) <= m:
        r = _iroot(m, k)
        if r**k == m:
            # Odd perfect power: kernel equals the kernel of the base.
            return _rough_kernel(r, original)
        k += 2
    raise ValueError(f"cannot certify the squarefree kernel of {original}")


def squarefree_kernel_factors(n: int) -> tuple[int, tuple[int, ...]]:
    """(kernel, prime factors of |kernel|) for n != 0.

    The kernel is the unique squarefree k with n = k * m**2; its sign is
    the sign of n.  Factors beyond the trial bound are certified prime or
    the call raises.
    """
    if n == 0:
        raise ValueError("0 has no square class")
    m = -n if n < 0 else n
    factors = []
    e = 0
    while m % 2 == 0:
        m //= 2
        e += 1
    if e % 2:
        factors.append(2)
    d = 3
    while d * d <= m and d <= TRIAL_DIVISION_BOUND:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            if e % 2:
                factors.append(d)
        d += 2
    if m > 1:
        if d * d > m:
            factors.append(m)  # cofactor below d**2 with no divisor <= sqrt
        else:
            factors.extend(_rough_kernel(m, n))
    factors.sort()
    kernel = 1
    for p in factors:
        kernel *= p
    return (-kernel if n < 0 else kernel), tuple(factors)


def squarefree_kernel(n: int) -> int:
    """Unique squarefree k, same sign as n, with n / k a perfect square."""
    return squarefree_kernel_factors(n)[0]


def to_text(f: IntPoly) -> str:
    """Human-readable rendering, e.g. "x^2+1" or "2x^3-x"."""
    if f.is_zero:
        return "0"
    parts = []
    for i in range(f.degree, -1, -1):
        c = f.coeffs[i]
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            term = str(mag)
        else:
            xs = "x" if i == 1 else f"x^{i}"
            term = xs if mag == 1 else f"{mag}{xs}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+{term}" if c > 0 else f"-{term}")
    return "".join(parts)
