"""Recursive decomposition of W^tot(OG+(n)) as hypothesis-checked rewrite rules.

Each rule carries its parity hypothesis; applying a rule whose hypothesis
fails raises instead of producing a wrong module. The result is checked
against the diagram enumeration by :func:`cross_check`.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from .enumeration import COUNT_CHECK_MAX_N, recursive_enumerate
from .errors import BoundExceeded, MismatchReport, NontrivialTwistUnresolved, ParityViolation, TwistCheckFailed
from .module import GradedWittModule, Generator, direct_sum, from_diagrams, shift
from .twist import ZERO, DegreeClass, Symbol, TwistClass, omega_theta_twist, relative_canonical_twist


class Rule(str, enum.Enum):
    BaseCase = "BaseCase"
    OddSplit = "OddSplit"
    EvenSplit = "EvenSplit"
    TwistVanish = "TwistVanish"
    PbfEvenIso = "PbfEvenIso"
    PbfOddVanish = "PbfOddVanish"


CITES = {
    Rule.BaseCase: "OG+(1,E) = S, so W^tot(OG+(1,E)) = W^tot(S)",
    Rule.OddSplit: (
        "n odd: W^tot(OG+(n)) = W^tot(OG+^{E2}(n))[-(2n-3)] + W^tot(OG+^{E2}(n)), "
        "OG+^{E2}(n) = OG+(n-2); split localization sequence along theta = iota o iota_1, "
        "[omega_theta] trivial in Pic/2"
    ),
    Rule.EvenSplit: (
        "n even: W^tot(OG+(n)) = W^tot(OG+^{E1}(n))[-(n-1), det E~_n] + W^tot(OG+^{E1}(n)), "
        "OG+^{E1}(n) = OG+(n-1); split localization sequence along iota"
    ),
    Rule.TwistVanish: "W^i(OG+-(n), L (x) O(1)) = 0",
    Rule.PbfEvenIso: "r even: W^i(P(E), O(-1)) = W^{i-r}(X, det E) via q_* o per and e(Q) o q^*",
    Rule.PbfOddVanish: "r odd: pushforward after pullback along the exceptional projective bundle vanishes",
}


@dataclass(frozen=True)
class RuleCheck:
    """Outcome of a successful hypothesis check: the shift and twist the rule applies."""

    rule: Rule
    param: int
    shift: int
    twist: TwistClass


def check_rule(rule: Rule, n: Optional[int] = None, r: Optional[int] = None,
               twist: Optional[TwistClass] = None) -> RuleCheck:
    rule = Rule(rule)
    if rule in (Rule.PbfEvenIso, Rule.PbfOddVanish):
        if r is None or r < 0:
            raise ValueError(f"{rule.value} needs a relative dimension r >= 0")
        want_even = rule is Rule.PbfEvenIso
        if (r % 2 == 0) != want_even:
            parity = "even" if want_even else "odd"
            raise ParityViolation(f"{rule.value} needs {parity} r, got r={r}")
        return RuleCheck(rule, r, r, relative_canonical_twist(r))

    if rule is Rule.TwistVanish:
        if twist is None or Symbol.O1 not in twist:
            raise ValueError("TwistVanish applies only to twists containing O1")
        return RuleCheck(rule, n or 0, 0, twist)

    if n is None or n < 1:
        raise ValueError(f"{rule.value} needs n >= 1")
    if rule is Rule.BaseCase:
        if n != 1:
            raise ValueError(f"BaseCase applies only at n=1, got n={n}")
        return RuleCheck(rule, n, 0, ZERO)
    if rule is Rule.OddSplit:
        if n % 2 == 0 or n < 3:
            raise ParityViolation(f"OddSplit needs odd n >= 3, got n={n}")
        t = omega_theta_twist(n)
        if not t.is_trivial:
            raise TwistCheckFailed(f"[omega_theta] = {t} is not trivial at n={n}")
        return RuleCheck(rule, n, 2 * n - 3, t)
    # EvenSplit
    if n % 2:
        raise ParityViolation(f"EvenSplit needs even n, got n={n}")
    return RuleCheck(rule, n, n - 1, TwistClass.of(Symbol.DetEnTilde))


@dataclass(frozen=True)
class TraceStep:
    rule: Rule
    n: int
    shift: int
    twist: TwistClass
    cite: str

    def to_dict(self) -> dict:
        return {
            "rule": self.rule.value,
            "n": self.n,
            "shift": self.shift,
            "twist": self.twist.names(),
            "cite": self.cite,
        }


DerivationTrace = tuple[TraceStep, ...]


def _relabel(m: GradedWittModule, prefix: str) -> GradedWittModule:
    return GradedWittModule(
        tuple(Generator(g.degree, g.twist, f"{prefix}/{g.provenance}") for g in m.generators)
    )


@lru_cache(maxsize=None)
def _decompose(n: int, trivial_det: bool) -> tuple[GradedWittModule, DerivationTrace]:
    if n == 1:
        check_rule(Rule.BaseCase, n=1)
        base = GradedWittModule((Generator(DegreeClass(0), ZERO, Rule.BaseCase.value),))
        return base, (TraceStep(Rule.BaseCase, 1, 0, ZERO, CITES[Rule.BaseCase]),)

    rule = Rule.OddSplit if n % 2 else Rule.EvenSplit
    checked = check_rule(rule, n=n)
    twist = checked.twist
    if rule is Rule.EvenSplit and trivial_det:
        twist = twist.substitute_trivial([Symbol.DetEnTilde])
    smaller, trace = _decompose(n - 2 if rule is Rule.OddSplit else n - 1, trivial_det)

    module = direct_sum(
        _relabel(shift(smaller, checked.shift, twist), f"{rule.value}@{n}:shift"),
        _relabel(smaller, f"{rule.value}@{n}:keep"),
    )
    step = TraceStep(rule, n, checked.shift, twist, CITES[rule])
    return module, (step,) + trace


def decompose(n: int, trivial_det: bool = True) -> tuple[GradedWittModule, DerivationTrace]:
    """Module and citation trace for W^tot(OG+(n, E)).

    With ``trivial_det=False`` an even-n split keeps its det E~_n twist; no
    later rule can discharge it, so :class:`NontrivialTwistUnresolved` is
    raised with the twisted module attached.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    module, trace = _decompose(n, bool(trivial_det))
    leftover = [g for g in module.generators if Symbol.DetEnTilde in g.twist]
    if leftover:
        raise NontrivialTwistUnresolved(
            f"{len(leftover)} generators keep a det E~_{n} twist with no rule to discharge it",
            module=module,
            trace=trace,
        )
    return module, trace


@dataclass(frozen=True)
class CrossCheckReport:
    n: int
    match: bool
    witt_rank: int
    cell_count: int
    missing: tuple = field(default=())  # in diagrams, not in the derivation
    extra: tuple = field(default=())    # in the derivation, not in diagrams

    def to_dict(self) -> dict:
        def fmt(items):
            return [{"degree": d, "twist": t.names(), "multiplicity": k} for (d, t), k in items]

        return {
            "n": self.n,
            "match": self.match,
            "witt_rank": self.witt_rank,
            "cell_count": self.cell_count,
            "missing": fmt(self.missing),
            "extra": fmt(self.extra),
        }


def compare(n: int, derived: GradedWittModule, expected: GradedWittModule) -> CrossCheckReport:
    got, want = derived.grading(), expected.grading()
    key = lambda kv: (kv[0][0], kv[0][1].sort_key())  # noqa: E731
    missing = tuple(sorted((want - got).items(), key=key))
    extra = tuple(sorted((got - want).items(), key=key))
    return CrossCheckReport(
        n=n,
        match=not missing and not extra,
        witt_rank=derived.rank,
        cell_count=2 ** (n - 1),
        missing=missing,
        extra=extra,
    )


def cross_check(n: int) -> CrossCheckReport:
    """Compare the rewrite engine with the diagram enumeration at ``n``."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > COUNT_CHECK_MAX_N:
        raise BoundExceeded(f"cross-check is limited to n <= {COUNT_CHECK_MAX_N}, got {n}")
    derived, _ = decompose(n, trivial_det=True)
    report = compare(n, derived, from_diagrams(recursive_enumerate(n)))
    if not report.match:
        raise MismatchReport(
            f"n={n}: missing {report.missing}, extra {report.extra}", report=report
        )
    return report
