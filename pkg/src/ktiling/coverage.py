"""Covering multiplicity of P + X and k-fold tiling certificates."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import numpy as np

from .arrangement import Arrangement, build_arrangement
from .errors import AreaMismatch, InvariantViolation
from .geometry import CSPolygon, Segment, Vec2, polygon_area
from .kernels import IntegerFrame
from .lattice import BBox, TranslateMultiset, enumerate_translates, lattice_det


@dataclass(frozen=True)
class ExactKFold:
    k: int

    def __str__(self):
        return f"ExactKFold({self.k})"


@dataclass(frozen=True)
class NotTiling:
    witness: Vec2
    multiplicity: int

    def __str__(self):
        return f"NotTiling(witness={self.witness}, multiplicity={self.multiplicity})"


Verdict = Union[ExactKFold, NotTiling]


@dataclass(frozen=True)
class AreaCheck:
    r_area: Fraction
    k_det: Fraction

    @property
    def equal(self) -> bool:
        return self.r_area == self.k_det


@dataclass(frozen=True)
class CoverageReport:
    k_min: int
    k_max: int
    verdict: Verdict
    cell_count: int
    area_check: AreaCheck

    @property
    def is_tiling(self) -> bool:
        return isinstance(self.verdict, ExactKFold)


def area_check(P: CSPolygon, X: TranslateMultiset, k: int) -> AreaCheck:
    return AreaCheck(X.r * polygon_area(P), k * lattice_det(X.lattice))


def average_multiplicity(P: CSPolygon, X: TranslateMultiset) -> Fraction:
    """r * area(P) / det(L): the mean of the covering function."""
    return X.r * polygon_area(P) / lattice_det(X.lattice)


def domain_frame(P: CSPolygon, X: TranslateMultiset) -> IntegerFrame:
    """Integer frame over every translate that can contain a point of the
    fundamental domain."""
    fd = X.lattice.fundamental_domain()
    ts = enumerate_translates(P, X, fd.bbox())
    return IntegerFrame(P.vertices, ts, extra=(X.lattice.u1, X.lattice.u2))


def collect_boundary_segments(P: CSPolygon, X: TranslateMultiset) -> list[Segment]:
    """Edges of every translate meeting the closed fundamental-domain bbox.

    Edges are returned whole (2m per translate); clipping happens when the
    arrangement is built.
    """
    box = X.lattice.fundamental_domain().bbox()
    out = []
    for t in enumerate_translates(P, X, box):
        out.extend(e.translated(t) for e in P.edges())
    return out


def domain_arrangement(P: CSPolygon, X: TranslateMultiset) -> Arrangement:
    return build_arrangement(collect_boundary_segments(P, X), X.lattice.fundamental_domain())


def multiplicity_at(P: CSPolygon, X: TranslateMultiset, p) -> tuple[int, int]:
    """(open_count, closed_count) of translates containing ``p``."""
    p = Vec2(Fraction(p[0]), Fraction(p[1]))
    ts = enumerate_translates(P, X, BBox(p.x, p.x, p.y, p.y))
    frame = IntegerFrame(P.vertices, ts)
    o, c = frame.count([p])
    return o[0], c[0]


def cell_multiplicities(P: CSPolygon, X: TranslateMultiset, arr: Arrangement | None = None):
    """Open-interior multiplicity at each cell sample, in cell order."""
    if arr is None:
        arr = domain_arrangement(P, X)
    frame = domain_frame(P, X)
    opened, closed = frame.count([c.sample for c in arr.cells])
    if opened != closed:
        raise InvariantViolation("a cell sample point lies on a translate boundary")
    return arr, opened


def multiplicity_range(P: CSPolygon, X: TranslateMultiset) -> tuple[int, int]:
    _, mults = cell_multiplicities(P, X)
    return min(mults), max(mults)


def verify_k_fold(P: CSPolygon, X: TranslateMultiset, k: int) -> CoverageReport:
    """Certify or refute that P + X is a k-fold translative tiling.

    Raises AreaMismatch before any geometry when r*area(P) != k*det(L).
    """
    if k < 1:
        raise ValueError("k must be positive")
    check = area_check(P, X, k)
    if not check.equal:
        raise AreaMismatch(check.k_det, check.r_area)
    arr, mults = cell_multiplicities(P, X)
    k_min, k_max = min(mults), max(mults)
    if k_min == k_max == k:
        verdict: Verdict = ExactKFold(k)
    else:
        i = next(i for i, v in enumerate(mults) if v != k)
        verdict = NotTiling(arr.cells[i].sample, mults[i])
    return CoverageReport(k_min, k_max, verdict, len(arr.cells), check)


def infer_k(P: CSPolygon, X: TranslateMultiset) -> int | None:
    """The only k the area condition allows, or None if it is not an integer."""
    avg = average_multiplicity(P, X)
    return int(avg) if avg.denominator == 1 else None


def random_domain_rows(X: TranslateMultiset, frame: IntegerFrame, count: int, rng, bits: int = 16):
    """``count`` random points inside the open fundamental domain as kernel rows.

    Coefficients are (2A+1)/2**(bits+1) for uniform A, never 0 or 1.
    """
    n = 1 << bits
    u1 = frame.scale_vec(X.lattice.u1)
    u2 = frame.scale_vec(X.lattice.u2)
    a = 2 * rng.integers(0, n, size=count, dtype=np.int64) + 1
    b = 2 * rng.integers(0, n, size=count, dtype=np.int64) + 1
    rows = np.empty((count, 3), dtype=object)
    rows[:, 0] = [int(ai) * u1[0] + int(bi) * u2[0] for ai, bi in zip(a, b)]
    rows[:, 1] = [int(ai) * u1[1] + int(bi) * u2[1] for ai, bi in zip(a, b)]
    rows[:, 2] = 2 * n
    if frame.fits_int64(rows):
        return rows.astype(np.int64)
    return rows.tolist()


def monte_carlo_multiplicity(P: CSPolygon, X: TranslateMultiset, samples: int, seed=0) -> dict[int, int]:
    """Histogram of open-interior multiplicity at uniform random points.

    Points landing on a boundary are redrawn. Deterministic for a fixed seed.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    frame = domain_frame(P, X)
    rng = np.random.default_rng(seed)
    hist: Counter = Counter()
    need = samples
    while need:
        rows = random_domain_rows(X, frame, need, rng)
        opened, closed = frame.count_rows(rows)
        for o, c in zip(opened, closed):
            if o == c:
                hist[o] += 1
                need -= 1
    return dict(sorted(hist.items()))
