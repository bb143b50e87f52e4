"""Known lower bounds on the tiling multiplicity of centrally symmetric polygons."""

from __future__ import annotations

from typing import NamedTuple

from .geometry import CSPolygon


class Bound(NamedTuple):
    value: int
    source: str

    def __str__(self):
        return f"{self.value} ({self.source})"


# m -> best known lower bound on the least k admitting a k-fold translative tiling
BOUND_TABLE: dict[int, Bound] = {
    2: Bound(1, "Fedorov"),
    3: Bound(1, "Fedorov"),
    4: Bound(5, "Lemma 3"),
    5: Bound(5, "Lemma 4"),
    6: Bound(6, "Lemma 5"),
    7: Bound(6, "Lemma 6"),
}

# polygons on which the octagon and decagon bounds are attained
EQUALITY_WITNESSES = {4: "d8_lemma3", 5: "d10_lemma4"}


def _check_m(m: int) -> None:
    if m < 2:
        raise ValueError(f"a centrally symmetric 2m-gon needs m >= 2, got {m}")


def theorem1_bound(m: int) -> int:
    _check_m(m)
    return m - 1 if m % 2 == 0 else m - 2


def best_known_bound(m: int) -> Bound:
    _check_m(m)
    if m in BOUND_TABLE:
        return BOUND_TABLE[m]
    return Bound(theorem1_bound(m), "Theorem 1")


def theorem2_bound(P: CSPolygon) -> int:
    """1 for parallelograms and hexagons, 5 for every other polygon."""
    return 1 if P.m in (2, 3) else 5
