"""Covering analysis for integer binary quadratic forms.

A form q(x, y) = a x^2 + b x y + c y^2 covers a prime p when it has a
nontrivial zero mod p.  For odd p not dividing a this happens exactly when
the discriminant b^2 - 4ac is not a nonresidue mod p, so covering behavior
of a finite set of forms is governed by the square classes of their
discriminants, viewed as F_2 vectors over a shared basis of sign and
primes.  Quadratic reciprocity makes every +/-1 assignment on that basis
realizable by infinitely many primes, which turns the covering question
into exact F_2 linear algebra.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Union

import numpy as np

from .intpoly import IntPoly, multiply, squarefree_kernel_factors
from .modular import jacobi
from .primes import primes_in

EXAMPLE_PRIME_BOUND = 10**6

# 2**rank outcomes are enumerated explicitly; refuse beyond this.
MAX_ENUMERATION_RANK = 24


@dataclass(frozen=True)
class QuadForm:
    """Binary quadratic form a x^2 + b x y + c y^2 with integer coefficients."""

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        if self.a == 0 and self.b == 0 and self.c == 0:
            raise ValueError("form must have a nonzero coefficient")

    def __str__(self) -> str:
        parts = []
        for coeff, mono in ((self.a, "x^2"), (self.b, "xy"), (self.c, "y^2")):
            if coeff == 0:
                continue
            mag = abs(coeff)
            term = mono if mag == 1 else f"{mag}{mono}"
            if not parts:
                parts.append(term if coeff > 0 else f"-{term}")
            else:
                parts.append(f"+{term}" if coeff > 0 else f"-{term}")
        return "".join(parts)


def form_discriminant(q: QuadForm) -> int:
    return q.b * q.b - 4 * q.a * q.c


def is_positive_definite(q: QuadForm) -> bool:
    """Strictly positive values on every nonzero real point."""
    return q.a > 0 and form_discriminant(q) < 0


def form_covers_p_exhaustive(q: QuadForm, p: int) -> bool:
    """Nontrivial zero mod p by direct projective enumeration."""
    if q.a % p == 0:
        return True  # the point (1, 0)
    return any((q.a * x * x + q.b * x + q.c) % p == 0 for x in range(p))


def form_covers_p(q: QuadForm, p: int) -> bool:
    """Whether q has a nontrivial zero mod the prime p.

    For odd p with p not dividing a this is the residue test
    jacobi(b^2 - 4ac, p) != -1; the remaining cases fall back to
    exhaustive enumeration.
    """
    if p == 2 or q.a % p == 0:
        return form_covers_p_exhaustive(q, p)
    return jacobi(form_discriminant(q), p) != -1


@dataclass(frozen=True)
class SquareClass:
    """Square class of a form discriminant as an F_2 vector.

    kernel is the squarefree integer representing the class (1 for squares
    and for discriminant 0); bits has bit j set when basis element j
    divides the kernel, with basis[0] = -1 standing for the sign.
    """

    kernel: int
    bits: int

    @property
    def is_trivial(self) -> bool:
        return self.bits == 0


def build_square_classes(
    forms: list[QuadForm],
) -> tuple[list[SquareClass], tuple[int, ...]]:
    """Square classes of the form discriminants over a shared basis.

    The basis is (-1, p_1, p_2, ...) with the primes ascending; every
    discriminant's kernel is reconstructed exactly by the product of its
    set basis elements.
    """
    if not forms:
        raise ValueError("at least one form is required")
    kernels: list[tuple[int, tuple[int, ...]]] = []
    for q in forms:
        disc = form_discriminant(q)
        kernels.append((1, ()) if disc == 0 else squarefree_kernel_factors(disc))
    basis_primes = sorted({p for _, facs in kernels for p in facs})
    basis = (-1,) + tuple(basis_primes)
    index = {p: j + 1 for j, p in enumerate(basis_primes)}
    classes = []
    for kernel, facs in kernels:
        bits = 1 if kernel < 0 else 0
        for p in facs:
            bits |= 1 << index[p]
        classes.append(SquareClass(kernel, bits))
    return classes, basis


@dataclass(frozen=True)
class FrobeniusClass:
    """A +/-1 assignment on the square-class basis.

    Realized by every prime p with jacobi(e, p) = signs[j] for each basis
    element e = basis[j]; quadratic reciprocity supplies infinitely many.
    """

    basis: tuple[int, ...]
    signs: tuple[int, ...]

    def value_on_bits(self, bits: int) -> int:
        v = 1
        j = 0
        while bits:
            if bits & 1:
                v *= self.signs[j]
            bits >>= 1
            j += 1
        return v

    def as_dict(self) -> dict[int, int]:
        return dict(zip(self.basis, self.signs))


@dataclass(frozen=True)
class Covers:
    """Every sufficiently large prime is covered; witness indices (0-based)
    name an odd subset whose discriminant product is a perfect square."""

    witness: tuple[int, ...]


@dataclass(frozen=True)
class FailsToCover:
    """Uncovered primes have positive density, exactly 2**-rank."""

    density: Fraction
    rank: int
    witness_class: FrobeniusClass
    example_prime: int | None


CoverVerdict = Union[Covers, FailsToCover]


def _verify_covers_witness(classes: list[SquareClass], witness: tuple[int, ...]) -> None:
    if len(witness) % 2 != 1:
        raise AssertionError("covering witness subset must have odd size")
    prod = 1
    for i in witness:
        prod *= classes[i].kernel
    if prod <= 0 or isqrt(prod) ** 2 != prod:
        raise AssertionError("covering witness product is not a perfect square")


_SMALL_PRIME_CACHE: list[int] = []


def _odd_primes_below(bound: int):
    if not _SMALL_PRIME_CACHE:
        _SMALL_PRIME_CACHE.extend(primes_in(3, 10**4))
    for p in _SMALL_PRIME_CACHE:
        if p > bound:
            return
        yield p
    if bound > 10**4:
        yield from primes_in(10**4 + 1, bound)


def _find_uncovered_prime(forms: list[QuadForm], bound: int) -> int | None:
    """Smallest odd prime below bound where every discriminant is a
    nonresidue; such a prime divides no a_i and no disc_i."""
    discs = [form_discriminant(q) for q in forms]
    for p in _odd_primes_below(bound):
        if all(jacobi(d, p) == -1 for d in discs):
            return p
    return None


def decide_cover(
    forms: list[QuadForm], example_prime_bound: int = EXAMPLE_PRIME_BOUND
) -> CoverVerdict:
    """Decide whether the forms jointly cover all sufficiently large primes.

    Covers verdicts carry an odd witness subset whose kernel product is a
    perfect square, checked here by exact arithmetic.  FailsToCover
    verdicts carry the exact uncovered density 2**-rank, the character
    assignment every uncovered prime realizes, and the smallest example
    prime below the search bound (None if the bound is too small).
    """
    classes, basis = build_square_classes(forms)
    for i, cl in enumerate(classes):
        if cl.is_trivial:
            # square (or zero) discriminant: a zero exists mod every prime
            # outside finitely many, including a = 0 degenerations
            witness = (i,)
            _verify_covers_witness(classes, witness)
            return Covers(witness)

    # Solve <u, v_i> = 1 over F_2; inconsistency names a covering subset.
    pivots: dict[int, tuple[int, int, int]] = {}
    for i, cl in enumerate(classes):
        bits, rhs, track = cl.bits, 1, 1 << i
        while bits:
            col = bits.bit_length() - 1
            if col not in pivots:
                pivots[col] = (bits, rhs, track)
                break
            pb, pr, pt = pivots[col]
            bits ^= pb
            rhs ^= pr
            track ^= pt
        else:
            if rhs == 1:
                witness = tuple(
                    j for j in range(len(classes)) if (track >> j) & 1
                )
                _verify_covers_witness(classes, witness)
                return Covers(witness)
            # rhs == 0: dependent row, still consistent

    rank = len(pivots)
    u = 0
    for col in sorted(pivots):
        bits, rhs, _ = pivots[col]
        rest = bits & ~(1 << col)
        if rhs ^ ((rest & u).bit_count() & 1):
            u |= 1 << col
    signs = tuple(-1 if (u >> j) & 1 else 1 for j in range(len(basis)))
    witness_class = FrobeniusClass(basis, signs)
    for cl in classes:
        assert witness_class.value_on_bits(cl.bits) == -1
    example = _find_uncovered_prime(forms, example_prime_bound)
    return FailsToCover(Fraction(1, 2**rank), rank, witness_class, example)


@dataclass
class RootDistribution:
    """Exact distribution of per-prime root counts of the product polynomial."""

    densities: dict[int, Fraction]
    min_roots: int
    rank: int


def _popcount_parity(values: np.ndarray, mask: int) -> np.ndarray:
    v = (values & np.uint32(mask)).view(np.uint8).reshape(values.size, 4)
    table = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint8)
    return (table[v].sum(axis=1) & 1).astype(bool)


def exact_root_distribution(forms: list[QuadForm]) -> RootDistribution:
    """Distribution of the number of distinct roots of prod_i (a_i t^2 + b_i t + c_i)
    mod p over the Frobenius classes, each class carrying density 2**-rank.

    Forms with a nontrivial square class contribute 2 roots on half of the
    classes and 0 on the other half; degenerate factors contribute their
    fixed distinct-root count.  Quadratic factors are assumed pairwise
    coprime, so contributions add.
    """
    classes, _basis = build_square_classes(forms)
    base = 0
    vectors = []
    for q, cl in zip(forms, classes):
        if q.a == 0:
            base += 1 if q.b != 0 else 0  # linear factor; constants add nothing
        elif form_discriminant(q) == 0:
            base += 1  # double root collapses to one distinct root
        elif cl.is_trivial:
            base += 2  # square discriminant splits at every good prime
        else:
            vectors.append(cl.bits)

    # Reduced echelon basis of the span, to coordinates per vector.
    rows: list[int] = []
    for v in vectors:
        for row in rows:
            if v & (1 << (row.bit_length() - 1)):
                v ^= row
        if v:
            rows = [r ^ v if r & (1 << (v.bit_length() - 1)) else r for r in rows]
            rows.append(v)
            rows.sort(key=lambda r: r.bit_length(), reverse=True)
    rank = len(rows)
    if rank > MAX_ENUMERATION_RANK:
        raise ValueError(f"square-class rank {rank} exceeds {MAX_ENUMERATION_RANK}")
    pivot_cols = [row.bit_length() - 1 for row in rows]
    coords = []
    for v in vectors:
        w = 0
        tmp = v
        for j, row in enumerate(rows):
            if tmp & (1 << pivot_cols[j]):
                w |= 1 << j
                tmp ^= row
        assert tmp == 0
        coords.append(w)

    total_classes = 1 << rank
    counts: Counter[int] = Counter()
    if rank <= 14:
        for psi in range(total_classes):
            roots = base
            for w in coords:
                if (psi & w).bit_count() % 2 == 0:
                    roots += 2
            counts[roots] += 1
    else:
        psis = np.arange(total_classes, dtype=np.uint32)
        totals = np.full(total_classes, base, dtype=np.int64)
        for w in coords:
            totals += np.where(_popcount_parity(psis, w), 0, 2)
        for roots, cnt in zip(*np.unique(totals, return_counts=True)):
            counts[int(roots)] = int(cnt)

    densities = {k: Fraction(v, total_classes) for k, v in sorted(counts.items())}
    return RootDistribution(densities, min(counts), rank)


def product_polynomial(forms: list[QuadForm]) -> IntPoly:
    """prod_i (a_i t^2 + b_i t + c_i) as an integer polynomial in t."""
    result = IntPoly((1,))
    for q in forms:
        result = multiply(result, IntPoly((q.c, q.b, q.a)))
    return result
