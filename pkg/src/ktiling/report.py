"""Deterministic report documents.

A report is an ordered list of ``key: value`` pairs.  Keys are dotted paths in
a fixed order per command; rationals are always written exactly as ``p/q``.
The JSON form carries the same keys in the same order.
"""

from __future__ import annotations

import json
from fractions import Fraction

from . import __version__
from .bounds import best_known_bound, theorem1_bound, theorem2_bound
from .coverage import CoverageReport, NotTiling
from .geometry import CSPolygon, Vec2
from .instance import InstanceConfig
from .vertex import VertexReport


def fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "none"
    if isinstance(value, Vec2):
        return f"({value.x},{value.y})"
    if isinstance(value, (list, tuple)):
        return " ".join(fmt(v) for v in value)
    return str(value)


def _json_value(value):
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, Vec2):
        return [str(value.x), str(value.y)]
    if isinstance(value, (list, tuple)):
        return [_json_value(v) for v in value]
    return str(value)


class ReportDocument:
    def __init__(self, command: str):
        self.items: list[tuple[str, object]] = [("tool", f"ktiling {__version__}"), ("command", command)]

    def add(self, key: str, value) -> None:
        self.items.append((key, value))

    def to_text(self) -> str:
        return "".join(f"{k}: {fmt(v)}\n" for k, v in self.items)

    def to_json(self) -> str:
        return json.dumps({k: _json_value(v) for k, v in self.items}, indent=2) + "\n"

    def render(self, as_json: bool = False) -> str:
        return self.to_json() if as_json else self.to_text()


def add_instance(doc: ReportDocument, cfg: InstanceConfig) -> None:
    doc.add("instance.polygon", list(cfg.polygon))
    doc.add("instance.basis", list(cfg.basis))
    doc.add("instance.offsets", list(cfg.offsets))
    doc.add("instance.k", cfg.k)


def add_coverage(doc: ReportDocument, rep: CoverageReport) -> None:
    doc.add("coverage.area_check.r_area", rep.area_check.r_area)
    doc.add("coverage.area_check.k_det", rep.area_check.k_det)
    doc.add("coverage.area_check.equal", rep.area_check.equal)
    doc.add("coverage.cell_count", rep.cell_count)
    doc.add("coverage.k_min", rep.k_min)
    doc.add("coverage.k_max", rep.k_max)
    doc.add("coverage.verdict", str(rep.verdict))
    if isinstance(rep.verdict, NotTiling):
        doc.add("coverage.witness", rep.verdict.witness)
        doc.add("coverage.witness_multiplicity", rep.verdict.multiplicity)


def add_vertex(doc: ReportDocument, i: int, rep: VertexReport) -> None:
    s = rep.star
    p = f"vertex.{i}"
    doc.add(f"{p}.point", s.v)
    doc.add(f"{p}.boundary_members", len(s.boundary_members))
    doc.add(f"{p}.at_vertex", sum(1 for mb in s.boundary_members if mb.kind.name == "AT_VERTEX"))
    doc.add(f"{p}.wheel_sizes", [len(w) for w in s.wheels])
    doc.add(f"{p}.windings", list(s.windings))
    doc.add(f"{p}.phi", s.phi)
    doc.add(f"{p}.varphi", s.varphi)
    doc.add(f"{p}.ell", s.ell)
    doc.add(f"{p}.kappa", s.kappa)
    doc.add(f"{p}.eq1_value", rep.eq1_value)
    doc.add(f"{p}.lemma1_counts", [f"{G.b}:{c}" for G, c in rep.lemma1_counts])
    for name in ("eq1", "lemma1", "lemma2"):
        v = rep.checks.get(name)
        doc.add(f"{p}.check.{name}", "skipped" if v is None else ("pass" if v else "fail"))
    for j, msg in enumerate(rep.failures):
        doc.add(f"{p}.failure.{j}", msg)


def add_bounds(doc: ReportDocument, m: int, P: CSPolygon | None = None) -> None:
    doc.add("bound.m", m)
    doc.add("bound.theorem1", theorem1_bound(m))
    doc.add("bound.best_known", str(best_known_bound(m)))
    if P is not None:
        doc.add("bound.theorem2", theorem2_bound(P))

