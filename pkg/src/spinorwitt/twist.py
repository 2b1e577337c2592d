"""Line-bundle twists modulo squares, and Z/4 degrees.

Witt groups only see a twisting line bundle through its class in Pic/2, so a
twist is an F2-vector over a fixed registry of named line bundles. Tensor
products become symmetric differences and every square vanishes.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import ParityViolation


class Symbol(str, enum.Enum):
    O1 = "O1"                  # Pfaffian line bundle O(1)
    DetEnTilde = "DetEnTilde"  # det of the tautological-complement Lagrangian
    DetEn = "DetEn"
    E1 = "E1"
    DetE = "DetE"              # det of the bundle in a projective bundle P(E)
    BaseL = "BaseL"            # formal line bundle pulled back from the base


REGISTRY = tuple(Symbol)


@dataclass(frozen=True)
class TwistClass:
    support: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "support", frozenset(Symbol(s) for s in self.support))

    @classmethod
    def of(cls, *symbols) -> "TwistClass":
        return cls(frozenset(symbols))

    @classmethod
    def from_exponents(cls, exponents: Mapping) -> "TwistClass":
        """Class of the tensor product of ``symbol ** exponent`` over the mapping."""
        return cls(frozenset(s for s, k in exponents.items() if k % 2))

    def __add__(self, other: "TwistClass") -> "TwistClass":
        return TwistClass(self.support ^ other.support)

    def __contains__(self, symbol) -> bool:
        return Symbol(symbol) in self.support

    def __bool__(self) -> bool:
        return bool(self.support)

    @property
    def is_trivial(self) -> bool:
        return not self.support

    def substitute_trivial(self, symbols: Iterable) -> "TwistClass":
        """Apply the relation that each of ``symbols`` is a trivial bundle."""
        return TwistClass(self.support - {Symbol(s) for s in symbols})

    def names(self) -> list[str]:
        return sorted(s.value for s in self.support)

    def sort_key(self):
        return tuple(self.names())

    def __str__(self) -> str:
        return "{" + ",".join(self.names()) + "}"

    def __repr__(self) -> str:
        return f"TwistClass({self.names()})"


ZERO = TwistClass()


def twist_add(a: TwistClass, b: TwistClass) -> TwistClass:
    return a + b


@dataclass(frozen=True, order=True)
class DegreeClass:
    """An exact integer degree; Witt groups only see its residue mod 4."""

    degree: int

    @property
    def residue(self) -> int:
        return self.degree % 4

    def __add__(self, other) -> "DegreeClass":
        if isinstance(other, DegreeClass):
            other = other.degree
        return DegreeClass(self.degree + int(other))


def o_twist(k: int) -> TwistClass:
    """Class of O(k)."""
    return TwistClass.from_exponents({Symbol.O1: k})


def det_Ln_twist(n: int) -> TwistClass:
    """Class of det L_n^+, which is det(E~_n) tensor O(-2)."""
    if n < 2:
        raise ValueError(f"det L_n^+ needs n >= 2, got {n}")
    return TwistClass.from_exponents({Symbol.DetEnTilde: 1, Symbol.O1: -2})


def omega_iota_twist(n: int, depth: int = 0) -> TwistClass:
    """Canonical bundle of the closed embedding of the codimension-(n-1) stratum.

    depth 0 is O(-2) (x) det E~_n (x) E_1^(n-2); depth 1, one level down the
    flag, replaces the E_1 exponent by n-4.
    """
    if depth not in (0, 1):
        raise ValueError(f"depth must be 0 or 1, got {depth}")
    if n < 2:
        raise ValueError(f"omega_iota needs n >= 2, got {n}")
    e1_exponent = n - 2 if depth == 0 else n - 4
    return TwistClass.from_exponents({Symbol.O1: -2, Symbol.DetEnTilde: 1, Symbol.E1: e1_exponent})


def omega_theta_twist(n: int) -> TwistClass:
    """Canonical bundle of the composite embedding theta = iota o iota_1 (n odd)."""
    if n % 2 == 0 or n < 3:
        raise ParityViolation(f"omega_theta is defined for odd n >= 3, got {n}")
    return omega_iota_twist(n, 1) + omega_iota_twist(n, 0)


def relative_canonical_twist(r: int) -> TwistClass:
    """Class of q^* det(E)^dual (x) O(-r-1) for a projective bundle of relative dimension r.

    r = 0 is the degenerate case P(E) = X; the formula is still evaluated.
    """
    if r < 0:
        raise ValueError(f"relative dimension must be non-negative, got {r}")
    return TwistClass.from_exponents({Symbol.DetE: -1, Symbol.O1: -r - 1})
