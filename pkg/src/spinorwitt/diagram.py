"""Diagrams placed in a staircase or rectangular frame, and their inner segments.

Drawing coordinates follow the usual picture: box ``(i, c)`` (row ``i``,
column ``c``, both 1-based) is the unit square ``[c, c+1] x [-i, -(i-1)]``.
A staircase frame of size ``m`` is right-justified, so its row ``i`` holds
columns ``i..m``; a diagram fills the leftmost boxes of each row.

Every row of a frame and of a diagram is a contiguous interval of columns,
which lets the boundary be computed line by line instead of box by box.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import ExceedsFrame, NonPositivePart, NotStrict, NotWeaklyDecreasing

STAIRCASE = "staircase"
RECTANGLE = "rectangle"

HORIZONTAL = "horizontal"
VERTICAL = "vertical"

Point = tuple[int, int]
UnitSegment = tuple[Point, Point]


@dataclass(frozen=True, order=True)
class StrictPartition:
    """Strictly decreasing tuple of positive integers (possibly empty)."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        for p in parts:
            if p <= 0:
                raise NonPositivePart(f"part {p} is not positive in {list(parts)}")
        for a, b in zip(parts, parts[1:]):
            if a <= b:
                raise NotStrict(f"{list(parts)} is not strictly decreasing")

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class Frame:
    """The outer region a diagram lives in: a staircase or a rectangle."""

    kind: str
    rows: int
    cols: int

    @classmethod
    def staircase(cls, m: int) -> "Frame":
        # m = 0 is the empty frame of the n = 1 case
        if m < 0:
            raise ValueError(f"staircase size must be non-negative, got {m}")
        return cls(STAIRCASE, m, m)

    @classmethod
    def rectangle(cls, rows: int, cols: int) -> "Frame":
        if rows < 1 or cols < 1:
            raise ValueError(f"rectangle needs positive sides, got {rows}x{cols}")
        return cls(RECTANGLE, rows, cols)

    @property
    def m(self) -> int:
        if self.kind != STAIRCASE:
            raise AttributeError("only staircase frames have a size m")
        return self.rows

    def row_span(self, i: int) -> tuple[int, int]:
        """Half-open column interval ``[start, stop)`` of row ``i``."""
        if i < 1 or i > self.rows:
            return (0, 0)
        if self.kind == STAIRCASE:
            return (i, self.cols + 1)
        return (1, self.cols + 1)

    @property
    def box_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(
            (i, c) for i in range(1, self.rows + 1) for c in range(*self.row_span(i))
        )

    def to_dict(self) -> dict:
        if self.kind == STAIRCASE:
            return {"kind": STAIRCASE, "m": self.rows}
        return {"kind": RECTANGLE, "rows": self.rows, "cols": self.cols}

    @classmethod
    def from_dict(cls, data: dict) -> "Frame":
        if data["kind"] == STAIRCASE:
            return cls.staircase(data["m"])
        return cls.rectangle(data["rows"], data["cols"])


@dataclass(frozen=True)
class PlacedDiagram:
    """A validated partition inside a frame. Build with :func:`make_diagram`."""

    frame: Frame
    parts: tuple[int, ...]

    def row_span(self, i: int) -> tuple[int, int]:
        if i < 1 or i > len(self.parts):
            return (0, 0)
        start = self.frame.row_span(i)[0]
        return (start, start + self.parts[i - 1])

    @property
    def partition(self) -> StrictPartition:
        return StrictPartition(self.parts)

    @property
    def box_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(
            (i, c) for i in range(1, len(self.parts) + 1) for c in range(*self.row_span(i))
        )

    def to_dict(self) -> dict:
        return {"frame": self.frame.to_dict(), "parts": list(self.parts), "weight": weight(self)}


@dataclass(frozen=True)
class SegmentRun:
    """Maximal straight run of inner unit segments.

    ``start`` is the endpoint with the smaller coordinate (left end of a
    horizontal run, bottom end of a vertical one).
    """

    orientation: str
    start: Point
    length: int

    @property
    def end(self) -> Point:
        x, y = self.start
        if self.orientation == HORIZONTAL:
            return (x + self.length, y)
        return (x, y + self.length)

    def units(self) -> list[UnitSegment]:
        x, y = self.start
        if self.orientation == HORIZONTAL:
            return [((x + k, y), (x + k + 1, y)) for k in range(self.length)]
        return [((x, y + k), (x, y + k + 1)) for k in range(self.length)]

    def sort_key(self):
        return (self.start, 0 if self.orientation == HORIZONTAL else 1, self.length)

    def to_dict(self) -> dict:
        return {"orientation": self.orientation, "start": list(self.start), "length": self.length}


def make_diagram(frame: Frame, parts: Sequence[int]) -> PlacedDiagram:
    parts = [int(p) for p in parts]
    while parts and parts[-1] == 0:
        parts.pop()
    for p in parts:
        if p <= 0:
            raise NonPositivePart(f"part {p} is not positive in {parts}")
    if frame.kind == STAIRCASE:
        for a, b in zip(parts, parts[1:]):
            if a <= b:
                raise NotStrict(f"{parts} is not strictly decreasing")
    else:
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise NotWeaklyDecreasing(f"{parts} is not weakly decreasing")
    if len(parts) > frame.rows:
        raise ExceedsFrame(f"{parts} has more than {frame.rows} rows")
    for i, p in enumerate(parts, start=1):
        start, stop = frame.row_span(i)
        if p > stop - start:
            raise ExceedsFrame(f"row {i} of {parts} has {p} boxes, frame row holds {stop - start}")
    return PlacedDiagram(frame, tuple(parts))


def weight(d: PlacedDiagram) -> int:
    return sum(d.parts)


def _interval_units(span: tuple[int, int]) -> set[int]:
    return set(range(*span))


def _edge_columns(span: tuple[int, int]) -> set[int]:
    # vertical boundary lines of a non-empty row interval
    start, stop = span
    return {start, stop} if stop > start else set()


def _runs_from_units(units: Iterable[int]) -> list[tuple[int, int]]:
    """Group integer positions into maximal ``(first, length)`` runs."""
    runs = []
    for u in sorted(units):
        if runs and runs[-1][0] + runs[-1][1] == u:
            runs[-1] = (runs[-1][0], runs[-1][1] + 1)
        else:
            runs.append((u, 1))
    return runs


def inner_unit_segments(d: PlacedDiagram) -> set[UnitSegment]:
    """Unit segments on the diagram's boundary that are not on the frame's boundary."""
    return {u for run in inner_segment_runs(d) for u in run.units()}


def inner_segment_runs(d: PlacedDiagram) -> list[SegmentRun]:
    frame = d.frame
    runs: list[SegmentRun] = []

    # horizontal line y = -k separates row k (above) from row k+1 (below)
    for k in range(0, frame.rows + 1):
        diag = _interval_units(d.row_span(k)) ^ _interval_units(d.row_span(k + 1))
        outer = _interval_units(frame.row_span(k)) ^ _interval_units(frame.row_span(k + 1))
        for x, length in _runs_from_units(diag - outer):
            runs.append(SegmentRun(HORIZONTAL, (x, -k), length))

    rows_by_x: dict[int, list[int]] = {}
    for i in range(1, len(d.parts) + 1):
        for x in _edge_columns(d.row_span(i)) - _edge_columns(frame.row_span(i)):
            rows_by_x.setdefault(x, []).append(i)
    for x, rows in rows_by_x.items():
        for first, length in _runs_from_units(rows):
            # rows first..first+length-1 span y from -(first+length-1) up to -(first-1)
            runs.append(SegmentRun(VERTICAL, (x, -(first + length - 1)), length))

    runs.sort(key=SegmentRun.sort_key)
    return runs


def is_even(d: PlacedDiagram) -> bool:
    return all(run.length % 2 == 0 for run in inner_segment_runs(d))


def all_partitions_in_box(rows: int, cols: int) -> Iterator[tuple[int, ...]]:
    """Every weakly decreasing partition with at most ``rows`` parts, each ``<= cols``."""

    def rec(remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        yield ()
        if remaining == 0:
            return
        for head in range(cap, 0, -1):
            for tail in rec(remaining - 1, head):
                yield (head,) + tail

    return rec(rows, cols)
