"""Enumerating even shifted Young diagrams inside the staircase of size n-1."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator

from .diagram import (
    Frame,
    StrictPartition,
    all_partitions_in_box,
    is_even,
    make_diagram,
)
from .errors import BoundExceeded

ORACLE_MAX_N = 26
RECT_MAX_AREA = 30
# recursive_enumerate is cheap; count() only cross-checks it up to here
COUNT_CHECK_MAX_N = 30


def canonical_order(members: Iterable[StrictPartition]) -> tuple[StrictPartition, ...]:
    """Reverse-lexicographic on part tuples, so a longer list wins a prefix tie."""
    return tuple(sorted(set(members), reverse=True))


@dataclass(frozen=True)
class DiagramSet:
    n: int
    members: tuple[StrictPartition, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", canonical_order(self.members))

    @property
    def frame(self) -> Frame:
        return Frame.staircase(self.n - 1)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[StrictPartition]:
        return iter(self.members)

    def __contains__(self, item) -> bool:
        if not isinstance(item, StrictPartition):
            item = StrictPartition(tuple(item))
        return item in self.members

    def as_tuples(self) -> set[tuple[int, ...]]:
        return {p.parts for p in self.members}

    def diagrams(self):
        frame = self.frame
        return [make_diagram(frame, p.parts) for p in self.members]


@dataclass(frozen=True)
class PoincarePolynomial:
    """Polynomial in q with non-negative integer coefficients, stored sparsely."""

    coefficients: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {int(d): int(c) for d, c in self.coefficients.items() if c}
        object.__setattr__(self, "coefficients", dict(sorted(clean.items())))

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> "PoincarePolynomial":
        return cls({degree: coefficient})

    def __add__(self, other: "PoincarePolynomial") -> "PoincarePolynomial":
        out = dict(self.coefficients)
        for d, c in other.coefficients.items():
            out[d] = out.get(d, 0) + c
        return PoincarePolynomial(out)

    def __mul__(self, other: "PoincarePolynomial") -> "PoincarePolynomial":
        out: dict[int, int] = {}
        for d1, c1 in self.coefficients.items():
            for d2, c2 in other.coefficients.items():
                out[d1 + d2] = out.get(d1 + d2, 0) + c1 * c2
        return PoincarePolynomial(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, PoincarePolynomial) and self.coefficients == other.coefficients

    def __hash__(self):
        return hash(tuple(self.coefficients.items()))

    def __call__(self, q):
        return sum(c * q**d for d, c in self.coefficients.items())

    @property
    def degree(self) -> int:
        return max(self.coefficients, default=0)

    def reversed(self, top: int) -> "PoincarePolynomial":
        """``q**top * P(1/q)``."""
        return PoincarePolynomial({top - d: c for d, c in self.coefficients.items()})

    def dense(self) -> list[int]:
        return [self.coefficients.get(d, 0) for d in range(self.degree + 1)]

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        terms = []
        for d, c in self.coefficients.items():
            mono = "" if d == 0 else ("q" if d == 1 else f"q^{d}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms)


def subset_partition(mask: int, m: int) -> tuple[int, ...]:
    """Strict partition whose parts are the set bits (1-based) of ``mask``."""
    return tuple(k for k in range(m, 0, -1) if mask >> (k - 1) & 1)


def oracle_enumerate(n: int) -> DiagramSet:
    """Brute force: test every strict partition with parts <= n-1."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > ORACLE_MAX_N:
        raise BoundExceeded(f"oracle enumeration is limited to n <= {ORACLE_MAX_N}, got {n}")
    m = n - 1
    frame = Frame.staircase(m)
    members = []
    for mask in range(1 << m):
        parts = subset_partition(mask, m)
        if is_even(make_diagram(frame, parts)):
            members.append(StrictPartition(parts))
    return DiagramSet(n, members)


@lru_cache(maxsize=None)
def _recursive_members(n: int) -> tuple[tuple[int, ...], ...]:
    if n == 1:
        return ((),)
    if n % 2:
        # first two rows full, or two empty columns on the right
        smaller = _recursive_members(n - 2)
        head = (n - 1, n - 2)
    else:
        # first row full, or last column empty
        smaller = _recursive_members(n - 1)
        head = (n - 1,)
    return tuple(head + p for p in smaller) + smaller


def recursive_enumerate(n: int) -> DiagramSet:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return DiagramSet(n, [StrictPartition(p) for p in _recursive_members(n)])


def count(n: int) -> int:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    closed_form = 2 ** (n // 2)
    if n <= COUNT_CHECK_MAX_N:
        if closed_form != len(_recursive_members(n)):
            raise AssertionError(f"count law fails at n={n}")
    return closed_form


def poincare_polynomial(n: int) -> PoincarePolynomial:
    coefficients: dict[int, int] = {}
    for p in recursive_enumerate(n):
        coefficients[p.weight] = coefficients.get(p.weight, 0) + 1
    return PoincarePolynomial(coefficients)


def rect_enumerate(rows: int, cols: int) -> set[tuple[int, ...]]:
    """Even (ordinary) Young diagrams inside a ``rows x cols`` rectangle, by brute force."""
    if rows < 1 or cols < 1:
        raise ValueError(f"rectangle needs positive sides, got {rows}x{cols}")
    if rows * cols > RECT_MAX_AREA:
        raise BoundExceeded(f"rectangle area {rows * cols} exceeds {RECT_MAX_AREA}")
    frame = Frame.rectangle(rows, cols)
    return {p for p in all_partitions_in_box(rows, cols) if is_even(make_diagram(frame, p))}
