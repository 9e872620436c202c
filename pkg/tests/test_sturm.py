import random
from fractions import Fraction

import pytest

from intersective.intpoly import (
    IntPoly,
    discriminant,
    evaluate,
    multiply,
    squarefree_part,
)
from intersective.sturm import (
    DEFAULT_MIN_WIDTH,
    Interval,
    count_real_roots,
    isolate_real_roots,
    sturm_chain,
)

TRIPLE = multiply(
    multiply(IntPoly([1, 0, 1]), IntPoly([2, 0, 1])), IntPoly([-2, 0, 1])
)


def frac_eval(f: IntPoly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(f.coeffs):
        acc = acc * x + c
    return acc


def product_of_linear(roots):
    f = IntPoly([1])
    for r in roots:
        f = multiply(f, IntPoly([-r, 1]))
    return f


def test_count_examples():
    assert count_real_roots(TRIPLE) == 2
    f2 = multiply(IntPoly([1, 1, 1]), IntPoly([-2, 0, 0, 1]))
    assert count_real_roots(f2) == 1
    assert count_real_roots(IntPoly([1, 0, 1])) == 0
    assert count_real_roots(IntPoly([-2, 0, 1])) == 2
    assert count_real_roots(IntPoly([0, 1])) == 1
    assert count_real_roots(IntPoly([5, 3])) == 1


def test_count_rejects_constants():
    with pytest.raises(ValueError):
        count_real_roots(IntPoly([]))
    with pytest.raises(ValueError):
        count_real_roots(IntPoly([7]))


def test_chain_shape():
    chain = sturm_chain(IntPoly([-2, 0, 1]))
    assert chain[0] == IntPoly([-2, 0, 1])
    assert chain[-1].degree == 0
    degrees = [g.degree for g in chain]
    assert degrees == sorted(degrees, reverse=True)


def test_chain_built_on_squarefree_part():
    f = IntPoly([1, 0, 1])
    assert sturm_chain(multiply(f, f))[0] == f


def test_count_distinct_roots_only():
    f = IntPoly([-1, 1])
    assert count_real_roots(multiply(f, f)) == 1
    g = multiply(multiply(f, f), IntPoly([-2, 1]))
    assert count_real_roots(g) == 2


def test_count_on_constructed_products():
    rng = random.Random(3110)
    for _ in range(60):
        roots = sorted(rng.sample(range(-12, 13), rng.randint(1, 5)))
        f = product_of_linear(roots)
        pairs = rng.randint(0, 2)
        for _ in range(pairs):
            f = multiply(f, IntPoly([rng.randint(1, 9), 0, 1]))  # no real roots
        assert count_real_roots(f) == len(roots), (roots, pairs)


def test_count_squarefree_invariance():
    rng = random.Random(88)
    for _ in range(30):
        deg = rng.randint(1, 5)
        coeffs = [rng.randint(-9, 9) for _ in range(deg)] + [rng.randint(1, 9)]
        f = IntPoly(coeffs)
        assert count_real_roots(f) == count_real_roots(squarefree_part(f))
        assert count_real_roots(f) == count_real_roots(multiply(f, f))


def test_parity_matches_degree_for_squarefree():
    rng = random.Random(17)
    seen = 0
    while seen < 40:
        deg = rng.randint(1, 7)
        coeffs = [rng.randint(-9, 9) for _ in range(deg)] + [rng.randint(1, 9)]
        f = IntPoly(coeffs)
        if discriminant(f) == 0:
            continue
        seen += 1
        assert (count_real_roots(f) - f.degree) % 2 == 0


def test_isolation_triple():
    intervals = isolate_real_roots(TRIPLE)
    assert len(intervals) == 2
    neg, pos = intervals
    assert neg.hi < 0 < pos.lo
    # roots are +/- sqrt(2): the only sign changes of x^2 - 2
    sq = IntPoly([-2, 0, 1])
    for iv in (neg, pos):
        assert iv.width <= DEFAULT_MIN_WIDTH
        assert frac_eval(sq, iv.lo) * frac_eval(sq, iv.hi) < 0
    assert pos.lo < Fraction(14142136, 10**7) < pos.hi


def test_isolation_cube_root_of_two():
    f = IntPoly([-2, 0, 0, 1])
    (iv,) = isolate_real_roots(f)
    assert Fraction(1) < iv.lo < iv.hi < Fraction(2)
    assert iv.width <= DEFAULT_MIN_WIDTH
    assert frac_eval(f, iv.lo) < 0 < frac_eval(f, iv.hi)


def test_isolation_no_real_roots():
    assert isolate_real_roots(IntPoly([1, 0, 1])) == []
    assert isolate_real_roots(IntPoly([3, 0, 1, 0, 1])) == []


def test_isolation_rational_roots_on_bisection_grid():
    # roots 1/2, 1, +/- sqrt(2); 1 and 1/2 land on bisection midpoints
    f = multiply(multiply(IntPoly([-1, 2]), IntPoly([-2, 0, 1])), IntPoly([-1, 1]))
    intervals = isolate_real_roots(f)
    assert len(intervals) == 4
    fs = squarefree_part(f)
    for iv in intervals:
        assert iv.width <= DEFAULT_MIN_WIDTH
        assert frac_eval(fs, iv.lo) * frac_eval(fs, iv.hi) < 0
    for root in (Fraction(1, 2), Fraction(1)):
        assert sum(1 for iv in intervals if iv.lo < root < iv.hi) == 1


def test_isolation_respects_min_width():
    f = IntPoly([-2, 0, 1])
    for k in (4, 10, 30):
        width = Fraction(1, 2**k)
        for iv in isolate_real_roots(f, width):
            assert iv.width <= width


def test_isolation_intervals_disjoint_and_sorted():
    rng = random.Random(2718)
    for _ in range(25):
        roots = sorted(rng.sample(range(-15, 16), rng.randint(2, 6)))
        f = product_of_linear(roots)
        intervals = isolate_real_roots(f)
        assert len(intervals) == len(roots)
        for a, b in zip(intervals, intervals[1:]):
            assert a.hi <= b.lo
        for iv, root in zip(intervals, roots):
            assert iv.lo < root < iv.hi
            assert frac_eval(f, iv.lo) * frac_eval(f, iv.hi) < 0


def test_isolation_close_roots():
    # roots at 0 and 1/1024 force deep bisection
    f = multiply(IntPoly([0, 1]), IntPoly([-1, 1024]))
    intervals = isolate_real_roots(f)
    assert len(intervals) == 2
    assert intervals[0].hi <= intervals[1].lo
    assert intervals[0].lo < 0 < intervals[0].hi
    assert intervals[1].lo < Fraction(1, 1024) < intervals[1].hi


def test_interval_validation():
    with pytest.raises(ValueError):
        Interval(Fraction(1), Fraction(1))
    with pytest.raises(ValueError):
        isolate_real_roots(IntPoly([0, 1]), Fraction(0))


def test_count_large_coefficient_polynomial():
    f = IntPoly([-(10**30), 0, 1])  # roots +/- 10^15
    assert count_real_roots(f) == 2
    lo, hi = isolate_real_roots(f, Fraction(1, 2))
    assert hi.lo < Fraction(10**15) < hi.hi
    assert evaluate(f, 10**15) == 0
