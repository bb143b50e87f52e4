"""Backend selection for the counting kernels and the integer frame they use.

The compiled ``_ckernels`` extension is used when it imports; otherwise the
pure-Python ``_pykernels`` module is used. :func:`use_backend` switches
explicitly (tests and the benchmark run both).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # pragma: no cover - depends on the build
    _ckernels = None

_INT64_SAFE = 1 << 62

_backend = "c" if _ckernels is not None else "python"


def available_backends() -> list[str]:
    return ["c", "python"] if _ckernels is not None else ["python"]


def backend() -> str:
    return _backend


def use_backend(name: str) -> None:
    global _backend
    if name not in available_backends():
        raise ValueError(f"kernel backend {name!r} not available; have {available_backends()}")
    _backend = name


def _lcm_denominators(values) -> int:
    d = 1
    for v in values:
        d = math.lcm(d, Fraction(v).denominator)
    return d


class IntegerFrame:
    """Scale a polygon and its translates to a common integer grid.

    ``scale`` is the lcm of all denominators, so ``poly`` and ``trans`` hold
    exact integers. Extra vectors (e.g. a lattice basis) can be folded into the
    same scale.
    """

    def __init__(self, vertices: Sequence, translates: Sequence, extra: Sequence = ()):
        coords = [c for p in (*vertices, *translates, *extra) for c in p]
        self.scale = D = _lcm_denominators(coords)
        self.poly = [(int(v[0] * D), int(v[1] * D)) for v in vertices]
        self.trans = [(int(t[0] * D), int(t[1] * D)) for t in translates]
        self._poly_max = max((abs(c) for p in self.poly for c in p), default=0)
        self._trans_max = max((abs(c) for p in self.trans for c in p), default=0)
        self._arrays = None

    def scale_vec(self, v) -> tuple[int, int]:
        return int(v[0] * self.scale), int(v[1] * self.scale)

    def encode_points(self, points: Sequence) -> list[tuple[int, int, int]]:
        """Rational points -> rows (X, Y, Q) with point*scale = (X/Q, Y/Q)."""
        rows = []
        D = self.scale
        for p in points:
            x, y = Fraction(p[0]) * D, Fraction(p[1]) * D
            q = math.lcm(x.denominator, y.denominator)
            rows.append((int(x * q), int(y * q), q))
        return rows

    def fits_int64(self, rows) -> bool:
        if len(rows) == 0:
            return True
        if isinstance(rows, np.ndarray):
            big_xy = int(np.abs(rows[:, :2]).max())
            big_q = int(np.abs(rows[:, 2]).max())
        else:
            big_xy = max(max(abs(r[0]), abs(r[1])) for r in rows)
            big_q = max(r[2] for r in rows)
        # |edge delta| * (|X| + Q*(|t| + |v|)), twice, must stay below 2**63
        bound = 2 * (2 * self._poly_max) * (big_xy + big_q * (self._trans_max + self._poly_max))
        return bound < _INT64_SAFE

    def _dispatch(self, rows):
        if _backend == "c" and self.fits_int64(rows):
            arr = rows if isinstance(rows, np.ndarray) else np.array(rows, dtype=np.int64)
            if self._arrays is None:
                self._arrays = (
                    np.array(self.poly, dtype=np.int64).reshape(-1, 2),
                    np.array(self.trans, dtype=np.int64).reshape(-1, 2),
                )
            poly, trans = self._arrays
            return _ckernels, poly, trans, np.ascontiguousarray(arr, dtype=np.int64)
        if isinstance(rows, np.ndarray):
            rows = rows.tolist()
        return _pykernels, self.poly, self.trans, rows

    def count_rows(self, rows) -> tuple[list[int], list[int]]:
        if len(rows) == 0:
            return [], []
        mod, poly, trans, rows = self._dispatch(rows)
        o, c = mod.count_points(poly, trans, rows)
        return [int(v) for v in o], [int(v) for v in c]

    def count(self, points: Sequence) -> tuple[list[int], list[int]]:
        """(open_count, closed_count) for every point."""
        return self.count_rows(self.encode_points(points))

    def first_mismatch_rows(self, rows, k: int) -> int:
        if len(rows) == 0:
            return -1
        mod, poly, trans, rows = self._dispatch(rows)
        return int(mod.first_mismatch(poly, trans, rows, k))
