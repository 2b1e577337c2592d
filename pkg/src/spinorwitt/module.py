"""Graded free W^tot(S)-modules, kept as multisets of generators.

The coefficient ring is never evaluated; a module is fully described by the
degrees and twists of its free generators.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Union

from .diagram import StrictPartition
from .enumeration import DiagramSet
from .twist import ZERO, DegreeClass, TwistClass

Provenance = Union[StrictPartition, str]


@dataclass(frozen=True)
class Generator:
    degree: DegreeClass
    twist: TwistClass = ZERO
    provenance: Provenance = ""

    @property
    def residue(self) -> int:
        return self.degree.residue

    def grading(self) -> tuple[int, TwistClass]:
        return (self.degree.degree, self.twist)

    def to_dict(self) -> dict:
        prov = self.provenance
        if isinstance(prov, StrictPartition):
            prov = "[" + ",".join(map(str, prov.parts)) + "]"
        return {
            "degree": self.degree.degree,
            "residue": self.residue,
            "twist": self.twist.names(),
            "provenance": prov,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Generator":
        prov = data.get("provenance", "")
        if prov.startswith("[") and prov.endswith("]"):
            body = prov[1:-1]
            prov = StrictPartition(tuple(int(x) for x in body.split(",")) if body else ())
        return cls(DegreeClass(data["degree"]), TwistClass(frozenset(data["twist"])), prov)


def _generator_key(g: Generator):
    prov = g.provenance
    prov_key = (0, prov.parts, "") if isinstance(prov, StrictPartition) else (1, (), prov)
    return (g.degree.degree, g.twist.sort_key(), prov_key)


@dataclass(frozen=True, eq=False)
class GradedWittModule:
    """Free module; equality is multiset equality of generators."""

    generators: tuple[Generator, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(sorted(self.generators, key=_generator_key)))

    @property
    def rank(self) -> int:
        return len(self.generators)

    def __len__(self) -> int:
        return self.rank

    def __iter__(self):
        return iter(self.generators)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedWittModule):
            return NotImplemented
        return Counter(self.generators) == Counter(other.generators)

    def __hash__(self):
        return hash(self.generators)

    def grading(self) -> Counter:
        """Multiset of ``(degree, twist)``; ignores provenance."""
        return Counter(g.grading() for g in self.generators)

    def degrees(self) -> list[int]:
        return [g.degree.degree for g in self.generators]

    def to_list(self) -> list[dict]:
        return [g.to_dict() for g in self.generators]

    @classmethod
    def from_list(cls, records: Iterable[dict]) -> "GradedWittModule":
        return cls(tuple(Generator.from_dict(r) for r in records))


ZERO_MODULE = GradedWittModule()


def from_diagrams(s: DiagramSet | Iterable[StrictPartition]) -> GradedWittModule:
    return GradedWittModule(
        tuple(Generator(DegreeClass(p.weight), ZERO, p) for p in s)
    )


def shift(m: GradedWittModule, d: int, t: TwistClass = ZERO) -> GradedWittModule:
    return GradedWittModule(
        tuple(Generator(g.degree + d, g.twist + t, g.provenance) for g in m.generators)
    )


def direct_sum(a: GradedWittModule, b: GradedWittModule) -> GradedWittModule:
    return GradedWittModule(a.generators + b.generators)


def rank_table(m: GradedWittModule) -> dict[tuple[int, TwistClass], int]:
    table: dict[tuple[int, TwistClass], int] = {}
    for g in m.generators:
        key = (g.residue, g.twist)
        table[key] = table.get(key, 0) + 1
    return dict(sorted(table.items(), key=lambda kv: (kv[0][0], kv[0][1].sort_key())))


def twisted_component(m: GradedWittModule, t: TwistClass) -> GradedWittModule:
    return GradedWittModule(tuple(g for g in m.generators if g.twist == t))


def rank_table_records(m: GradedWittModule) -> list[dict]:
    return [
        {"residue": residue, "twist": twist.names(), "rank": rank}
        for (residue, twist), rank in rank_table(m).items()
    ]
