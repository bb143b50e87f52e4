"""Desk-scale grid search for k-fold lattice (or few-coset) tilings of a polygon.

Bases are parameterised as u1 = (a, b), u2 = (c, d) with d fixed by the
determinant the area condition demands: a*d - b*c = r*area(P)/k.  So the
search walks a rational grid over (a, b, c) only, with a > 0.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, NamedTuple

import numpy as np

from .coverage import CoverageReport, domain_frame, random_domain_rows, verify_k_fold
from .errors import EmptySearchSpace
from .geometry import CSPolygon, Vec2, polygon_area, rat
from .lattice import Lattice, TranslateMultiset

_ZERO = Vec2(Fraction(0), Fraction(0))


class GridAxis(NamedTuple):
    start: Fraction
    stop: Fraction
    step: Fraction

    def values(self) -> list[Fraction]:
        if self.step <= 0:
            raise ValueError("grid step must be positive")
        out, v = [], self.start
        while v <= self.stop:
            out.append(v)
            v += self.step
        return out

    def __str__(self):
        return f"{self.start}:{self.stop}:{self.step}"


def axis(start, stop, step) -> GridAxis:
    return GridAxis(rat(start), rat(stop), rat(step))


@dataclass(frozen=True)
class SearchGrid:
    a: GridAxis = axis(Fraction(1, 2), 5, Fraction(1, 2))
    b: GridAxis = axis(-2, 2, Fraction(1, 2))
    c: GridAxis = axis(-3, 3, Fraction(1, 2))

    @classmethod
    def parse(cls, text: str) -> "SearchGrid":
        """``"a=1/2:5:1/2,b=-2:2:1/2,c=-3:3:1/2"``; omitted axes keep defaults."""
        kw = {}
        for part in filter(None, (p.strip() for p in text.split(","))):
            name, _, rng = part.partition("=")
            name = name.strip()
            if name not in ("a", "b", "c"):
                raise ValueError(f"unknown grid axis {name!r}")
            bits = rng.split(":")
            if len(bits) == 1:
                bits = [bits[0], bits[0], "1"]
            if len(bits) != 3:
                raise ValueError(f"axis {name} needs start:stop:step, got {rng!r}")
            kw[name] = axis(*(b.strip() for b in bits))
        return cls(**kw)

    def __str__(self):
        return f"a={self.a},b={self.b},c={self.c}"


@dataclass(frozen=True)
class SearchSpec:
    polygon: CSPolygon
    k: int
    grid: SearchGrid = field(default_factory=SearchGrid)
    r: int = 1
    offset_denominator: int = 2
    probe_points: int = 24
    seed: int = 0

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if self.r < 1:
            raise ValueError("r must be >= 1")


class SearchHit(NamedTuple):
    lattice: Lattice
    offsets: tuple[Vec2, ...]
    report: CoverageReport


def target_det(spec: SearchSpec) -> Fraction:
    return spec.r * polygon_area(spec.polygon) / spec.k


def candidate_bases(spec: SearchSpec) -> Iterator[Lattice]:
    det = target_det(spec)
    for a in spec.grid.a.values():
        if a <= 0:
            continue
        for b in spec.grid.b.values():
            for c in spec.grid.c.values():
                d = (det + b * c) / a
                yield Lattice(Vec2(a, b), Vec2(c, d))


def _offset_sets(L: Lattice, r: int, n: int) -> Iterator[tuple[Vec2, ...]]:
    if r == 1:
        yield (_ZERO,)
        return
    grid = [L.point(Fraction(i, n), Fraction(j, n)) for i in range(n) for j in range(n)]
    for rest in itertools.combinations_with_replacement(grid, r - 1):
        yield (_ZERO, *rest)


def _probe_rejects(P: CSPolygon, X: TranslateMultiset, k: int, count: int, seed: int) -> bool:
    frame = domain_frame(P, X)
    rows = random_domain_rows(X, frame, count, np.random.default_rng(seed))
    return frame.first_mismatch_rows(rows, k) >= 0


def count_candidates(spec: SearchSpec) -> int:
    g = spec.grid
    return sum(1 for a in g.a.values() if a > 0) * len(g.b.values()) * len(g.c.values())


def search_lattice_k_tilings(
    spec: SearchSpec,
    progress: Callable[[int, int], None] | None = None,
) -> list[SearchHit]:
    """Every grid basis (and offset set, when r > 1) giving an exact k-fold tiling.

    Candidates are first probed at a few random points of the fundamental
    domain; only survivors go through full verification.
    """
    total = count_candidates(spec)
    if total == 0:
        raise EmptySearchSpace(f"grid {spec.grid} yields no basis with a > 0")
    P = spec.polygon
    hits = []
    for i, L in enumerate(candidate_bases(spec)):
        for offsets in _offset_sets(L, spec.r, spec.offset_denominator):
            X = TranslateMultiset(L, offsets)
            if _probe_rejects(P, X, spec.k, spec.probe_points, spec.seed):
                continue
            report = verify_k_fold(P, X, spec.k)
            if report.is_tiling:
                hits.append(SearchHit(L, X.offsets, report))
        if progress is not None:
            progress(i + 1, total)
    return hits
