"""Prime-range scans of root counts, with exact predictions to compare against.

A scan fixes the squarefree part f* of the input, excludes the finitely
many primes dividing 2 * lc(f*) * disc(f*), and counts distinct roots of
f* at every remaining prime in the range.  Work is split into fixed
absolute blocks merged in block order, so reports are identical for any
worker count.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .intpoly import IntPoly, discriminant, squarefree_part
from .modular import count_roots_block, cycle_type_of_good_prime
from .primes import PrimeRange, iter_prime_arrays
from .quadcover import (
    QuadForm,
    RootDistribution,
    exact_root_distribution,
    product_polynomial,
)
from .sturm import count_real_roots

BLOCK_SPAN = 1 << 18
DEFAULT_SCAN_CAP = 10**6
HARD_SCAN_CAP = 10**8

THREADS_ENV_VAR = "INTERSECTIVE_THREADS"

_INT64_SAFE = 1 << 62


class InvariantViolation(RuntimeError):
    """A cycle-type census disagreed with its root count at some prime."""


@dataclass
class ScanReport:
    polynomial: IntPoly
    range: PrimeRange
    excluded_primes: tuple[int, ...]
    histogram: dict[int, int]
    min_roots_observed: int | None
    cycle_type_histogram: dict[tuple[int, ...], int] | None
    empirical_density_with_root: Fraction | None

    @property
    def good_prime_count(self) -> int:
        return sum(self.histogram.values())


def resolve_workers(workers: int | None = None) -> int:
    if workers is not None:
        if workers < 1:
            raise ValueError("worker count must be positive")
        return workers
    env = os.environ.get(THREADS_ENV_VAR)
    if env:
        w = int(env)
        if w < 1:
            raise ValueError(f"{THREADS_ENV_VAR} must be positive")
        return w
    return min(8, os.cpu_count() or 1)


def _scan_block(
    fstar: IntPoly,
    bad: int,
    lo: int,
    hi: int,
    with_cycle_types: bool,
) -> tuple[Counter, Counter | None, list[int], int]:
    hist: Counter = Counter()
    cyc: Counter | None = Counter() if with_cycle_types else None
    excluded: list[int] = []
    covered = 0
    degree = fstar.degree
    for parr in iter_prime_arrays(lo, hi):
        if bad < _INT64_SAFE:
            good_mask = (bad % parr) != 0
        else:
            good_mask = np.array([bad % int(q) != 0 for q in parr.tolist()])
        if not good_mask.all():
            excluded.extend(parr[~good_mask].tolist())
            parr = parr[good_mask]
        if parr.size == 0:
            continue
        counts = count_roots_block(fstar, parr)
        covered += int((counts > 0).sum())
        for k, v in Counter(counts.tolist()).items():
            hist[k] += v
        if cyc is not None:
            for p, rc in zip(parr.tolist(), counts.tolist()):
                ct = cycle_type_of_good_prime(fstar, p)
                if sum(ct) != degree or ct.count(1) != rc:
                    raise InvariantViolation(
                        f"cycle type {ct} of {fstar} at p={p} disagrees with "
                        f"root count {rc}"
                    )
                cyc[ct] += 1
    return hist, cyc, excluded, covered


def scan(
    f: IntPoly,
    rng: PrimeRange,
    with_cycle_types: bool = False,
    workers: int | None = None,
) -> ScanReport:
    """Histogram of distinct-root counts of f over the primes in rng.

    Primes dividing 2 * lc(f*) * disc(f*) are listed separately and kept
    out of the histogram.  With with_cycle_types, every good prime also
    gets a distinct-degree census, cross-checked against the root count.
    """
    if f.is_zero:
        raise ValueError("cannot scan the zero polynomial")
    if f.degree < 1:
        raise ValueError("scan requires degree at least 1")
    if rng.hi > HARD_SCAN_CAP:
        raise ValueError(f"scan range end {rng.hi} exceeds the cap {HARD_SCAN_CAP}")
    fstar = squarefree_part(f)
    bad = 2 * abs(fstar.lc) * abs(discriminant(fstar))

    blocks = []
    start = (rng.lo // BLOCK_SPAN) * BLOCK_SPAN
    while start <= rng.hi:
        blocks.append((max(rng.lo, start), min(rng.hi, start + BLOCK_SPAN - 1)))
        start += BLOCK_SPAN

    nworkers = resolve_workers(workers)
    if nworkers == 1 or len(blocks) == 1:
        partials = [
            _scan_block(fstar, bad, blo, bhi, with_cycle_types)
            for blo, bhi in blocks
        ]
    else:
        with ThreadPoolExecutor(max_workers=nworkers) as pool:
            partials = list(
                pool.map(
                    lambda blk: _scan_block(fstar, bad, blk[0], blk[1], with_cycle_types),
                    blocks,
                )
            )

    hist: Counter = Counter()
    cyc: Counter | None = Counter() if with_cycle_types else None
    excluded: list[int] = []
    covered = 0
    for bh, bc, bex, bcov in partials:  # merge in block order
        hist.update(bh)
        if cyc is not None and bc is not None:
            cyc.update(bc)
        excluded.extend(bex)
        covered += bcov
    good = sum(hist.values())
    return ScanReport(
        polynomial=f,
        range=rng,
        excluded_primes=tuple(excluded),
        histogram=dict(sorted(hist.items())),
        min_roots_observed=min(hist) if hist else None,
        cycle_type_histogram=(
            dict(sorted(cyc.items())) if cyc is not None else None
        ),
        empirical_density_with_root=(
            Fraction(covered, good) if good else None
        ),
    )


@dataclass
class RealRootCheck:
    """Observed minimum root count mod p against the real-root count.

    In exact mode (products of quadratic forms) the minimum over all
    Frobenius classes is computed exactly and the real-root count must
    reach it.  In empirical mode the scan minimum is only evidence: a
    positive minimum over a finite range does not prove one for all
    primes, so the verdict is labeled accordingly.
    """

    min_roots_observed: int | None
    real_root_count: int
    exact_min_roots: int | None
    verdict: str
    mode: str


def check_real_roots(
    f: IntPoly, rng: PrimeRange, workers: int | None = None
) -> RealRootCheck:
    """Empirical check: if every scanned good prime sees a root, expect a real root."""
    report = scan(f, rng, workers=workers)
    real = count_real_roots(f)
    observed = report.min_roots_observed
    if observed is None or observed == 0:
        verdict = "consistent"
    else:
        verdict = "consistent" if real >= 1 else "inconsistent"
    return RealRootCheck(observed, real, None, verdict, "empirical")


def check_real_roots_forms(
    forms: list[QuadForm], rng: PrimeRange, workers: int | None = None
) -> tuple[RealRootCheck, ScanReport, RootDistribution]:
    """Exact check for products of quadratic forms.

    The minimum root count over Frobenius classes is exact, and the
    product polynomial must have at least that many distinct real roots.
    """
    dist = exact_root_distribution(forms)
    f = product_polynomial(forms)
    report = scan(f, rng, workers=workers)
    real = count_real_roots(f)
    verdict = "consistent" if real >= dist.min_roots else "inconsistent"
    check = RealRootCheck(
        report.min_roots_observed, real, dist.min_roots, verdict, "exact"
    )
    return check, report, dist


@dataclass
class DensityRow:
    root_count: int
    exact: Fraction
    empirical: Fraction
    abs_deviation: Fraction


@dataclass
class DensityComparison:
    rows: list[DensityRow]
    max_abs_deviation: Fraction


MIN_DENSITY_RANGE_END = 10**5


def compare_densities(
    forms: list[QuadForm], rng: PrimeRange, workers: int | None = None
) -> tuple[DensityComparison, ScanReport, RootDistribution]:
    """Exact Frobenius-class densities against scanned frequencies.

    The range must reach at least 10**5 so the sample is meaningful.
    """
    if rng.hi < MIN_DENSITY_RANGE_END:
        raise ValueError(
            f"density comparison needs the range to reach {MIN_DENSITY_RANGE_END}"
        )
    dist = exact_root_distribution(forms)
    f = product_polynomial(forms)
    report = scan(f, rng, workers=workers)
    good = report.good_prime_count
    keys = sorted(set(dist.densities) | set(report.histogram))
    rows = []
    worst = Fraction(0)
    for k in keys:
        exact = dist.densities.get(k, Fraction(0))
        empirical = Fraction(report.histogram.get(k, 0), good) if good else Fraction(0)
        dev = abs(exact - empirical)
        worst = max(worst, dev)
        rows.append(DensityRow(k, exact, empirical, dev))
    return DensityComparison(rows, worst), report, dist
