"""The line-oriented instance file format.

::

    # D8 with the five-fold lattice
    polygon = (-1,3) (1,3) (2,1) (2,-1) (1,-3) (-1,-3) (-2,-1) (-2,1)
    basis   = (2,0) (3/2,2)
    offsets = (0,0)
    k       = 5

Numbers are integers or ``p/q`` rationals; decimals are rejected.  ``#``
starts a comment.  ``polygon`` and ``basis`` are required, ``offsets``
defaults to the origin and ``k`` is optional.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .errors import DegenerateBasis, ParseError, PolygonError
from .geometry import CSPolygon, Vec2, make_cs_polygon
from .lattice import Lattice, TranslateMultiset

KEYS = ("polygon", "basis", "offsets", "k")

_NUM = re.compile(r"[+-]?\d+(?:/\d+)?")
_BAD_NUM = re.compile(r"[+-]?[\d.]+(?:[eE][+-]?\d+)?(?:/[\d.]+)?")

_ORIGIN = Vec2(Fraction(0), Fraction(0))


@dataclass(frozen=True)
class InstanceConfig:
    polygon: tuple[Vec2, ...]
    basis: tuple[Vec2, Vec2]
    offsets: tuple[Vec2, ...] = (_ORIGIN,)
    k: int | None = None
    # line numbers of each key, for located geometry errors
    lines: tuple[tuple[str, int], ...] = ()

    def __eq__(self, other):
        if not isinstance(other, InstanceConfig):
            return NotImplemented
        return (self.polygon, self.basis, self.offsets, self.k) == (
            other.polygon,
            other.basis,
            other.offsets,
            other.k,
        )

    def __hash__(self):
        return hash((self.polygon, self.basis, self.offsets, self.k))

    def line_of(self, key: str) -> int:
        return dict(self.lines).get(key, 0)

    def build_polygon(self) -> CSPolygon:
        return make_cs_polygon(self.polygon)

    def build_multiset(self) -> TranslateMultiset:
        return TranslateMultiset(Lattice(*self.basis), self.offsets)

    def build(self) -> tuple[CSPolygon, TranslateMultiset]:
        return self.build_polygon(), self.build_multiset()


class _Scanner:
    def __init__(self, text: str, line: int, col0: int):
        self.text = text
        self.pos = 0
        self.line = line
        self.col0 = col0

    def error(self, msg: str, pos: int | None = None) -> ParseError:
        return ParseError(self.line, self.col0 + (self.pos if pos is None else pos) + 1, msg)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def expect(self, ch: str):
        self.skip_ws()
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            found = self.text[self.pos] if self.pos < len(self.text) else "end of line"
            raise self.error(f"expected {ch!r}, found {found!r}")
        self.pos += 1

    def number(self) -> Fraction:
        self.skip_ws()
        bad = _BAD_NUM.match(self.text, self.pos)
        good = _NUM.match(self.text, self.pos)
        if bad and (not good or bad.end() > good.end()):
            raise self.error(f"not an exact rational: {bad.group()!r} (use p/q)")
        if not good:
            raise self.error("expected a number")
        value = good.group()
        if "/" in value and int(value.split("/")[1]) == 0:
            raise self.error("zero denominator")
        self.pos = good.end()
        return Fraction(value)

    def point(self) -> Vec2:
        self.expect("(")
        x = self.number()
        self.expect(",")
        y = self.number()
        self.expect(")")
        return Vec2(x, y)

    def points(self) -> list[Vec2]:
        pts = []
        while not self.at_end():
            pts.append(self.point())
        return pts


def parse_instance(text: str, check: bool = True) -> InstanceConfig:
    """Parse an instance file.

    With ``check`` the polygon and lattice are also validated and geometric
    failures are reported as ParseError on the offending key's line.
    """
    values: dict[str, object] = {}
    lines: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        key, eq, rest = line.partition("=")
        if not eq:
            raise ParseError(lineno, 1, "expected 'key = value'")
        name = key.strip()
        if name not in KEYS:
            raise ParseError(lineno, len(key) - len(key.lstrip()) + 1, f"unknown key {name!r}")
        if name in values:
            raise ParseError(lineno, 1, f"duplicate key {name!r}")
        sc = _Scanner(rest, lineno, len(key) + 1)
        if name == "k":
            sc.skip_ws()
            m = re.compile(r"\d+").match(rest, sc.pos)
            if not m or rest[m.end():].strip():
                raise sc.error("k must be a positive integer")
            if int(m.group()) < 1:
                raise sc.error("k must be a positive integer")
            values[name] = int(m.group())
        else:
            pts = sc.points()
            if name == "basis" and len(pts) != 2:
                raise ParseError(lineno, 1, f"basis needs exactly 2 vectors, got {len(pts)}")
            if not pts:
                raise ParseError(lineno, 1, f"{name} is empty")
            values[name] = tuple(pts)
        lines[name] = lineno

    for required in ("polygon", "basis"):
        if required not in values:
            raise ParseError(len(text.splitlines()) + 1, 1, f"missing required key {required!r}")

    cfg = InstanceConfig(
        polygon=values["polygon"],
        basis=values["basis"],
        offsets=values.get("offsets", (_ORIGIN,)),
        k=values.get("k"),
        lines=tuple(sorted(lines.items())),
    )
    if check:
        try:
            cfg.build_polygon()
        except PolygonError as exc:
            raise ParseError(lines["polygon"], 1, f"{type(exc).__name__}: {exc}") from exc
        try:
            cfg.build_multiset()
        except DegenerateBasis as exc:
            raise ParseError(lines["basis"], 1, f"DegenerateBasis: {exc}") from exc
    return cfg


def _pts(pts) -> str:
    return " ".join(f"({p.x},{p.y})" for p in pts)


def serialize_instance(cfg: InstanceConfig) -> str:
    out = [f"polygon = {_pts(cfg.polygon)}", f"basis = {_pts(cfg.basis)}", f"offsets = {_pts(cfg.offsets)}"]
    if cfg.k is not None:
        out.append(f"k = {cfg.k}")
    return "\n".join(out) + "\n"


def fixture_names() -> list[str]:
    root = resources.files("ktiling") / "fixtures"
    return sorted(p.name[: -len(".tile")] for p in root.iterdir() if p.name.endswith(".tile"))


def fixture_text(name: str) -> str:
    return (resources.files("ktiling") / "fixtures" / f"{name}.tile").read_text(encoding="utf-8")


def read_instance_text(ref: str) -> str:
    """Contents of a file path, or of a shipped fixture when no such file exists."""
    path = Path(ref)
    if path.is_file():
        return path.read_text(encoding="utf-8")
    name = path.name[: -len(".tile")] if path.name.endswith(".tile") else path.name
    if name in fixture_names():
        return fixture_text(name)
    raise FileNotFoundError(f"no instance file or fixture named {ref!r}")


def load_instance(ref: str, check: bool = True) -> InstanceConfig:
    return parse_instance(read_instance_text(ref), check=check)
