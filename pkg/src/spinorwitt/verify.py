"""The invariant suite behind ``spinorwitt verify``."""
from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from .derivation import Rule, check_rule, cross_check, decompose
from .diagram import Frame, inner_unit_segments, is_even, make_diagram
from .enumeration import PoincarePolynomial, count, oracle_enumerate, poincare_polynomial, recursive_enumerate
from .errors import ParityViolation, SpinorWittError
from .module import rank_table, twisted_component
from .render import RenderSpec, parse_svg_inner_segments, render_ascii, render_svg
from .twist import REGISTRY, ZERO, Symbol, TwistClass, omega_iota_twist, omega_theta_twist, relative_canonical_twist

N7_EXPECTED = {
    (), (2, 1), (4, 3), (4, 3, 2, 1), (6, 5), (6, 5, 2, 1), (6, 5, 4, 3), (6, 5, 4, 3, 2, 1),
}
N7_DEGREES = [0, 3, 7, 10, 11, 14, 18, 21]
DEFAULT_MAX_N = 20
ORACLE_CHECK_MAX_N = 14
TWIST_CHECK_MAX_N = 99


class CheckFailed(AssertionError):
    pass


def _require(condition: bool, message: str = "check failed") -> None:
    # explicit raise so the suite still runs under python -O
    if not condition:
        raise CheckFailed(message)


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str
    seconds: float

    def to_dict(self) -> dict:
        return {"name": self.name, "ok": self.ok, "detail": self.detail, "seconds": round(self.seconds, 4)}


def _n7_ground_truth(max_n: int) -> str:
    got = recursive_enumerate(7).as_tuples()
    brute = oracle_enumerate(7).as_tuples()
    _require(got == N7_EXPECTED, f"recursive n=7 gave {sorted(got)}")
    _require(brute == N7_EXPECTED, f"oracle n=7 gave {sorted(brute)}")
    return "8 diagrams, oracle and recursion agree"


def _oracle_equivalence(max_n: int) -> str:
    top = min(max_n, ORACLE_CHECK_MAX_N)
    for n in range(1, top + 1):
        rec, brute = recursive_enumerate(n), oracle_enumerate(n)
        _require(rec.as_tuples() == brute.as_tuples(), (
            f"n={n}: recursion-only {sorted(rec.as_tuples() - brute.as_tuples())}, "
            f"oracle-only {sorted(brute.as_tuples() - rec.as_tuples())}"
        ))
        frame = Frame.staircase(n - 1)
        _require(all(is_even(make_diagram(frame, p.parts)) for p in rec), f"n={n}: odd member")
    return f"1 <= n <= {top}"


def _counting_law(max_n: int) -> str:
    for n in range(1, max_n + 1):
        _require(len(recursive_enumerate(n)) == 2 ** (n // 2) == count(n), f"n={n}")
    return f"|E_(n-1)| = 2^floor(n/2) for n <= {max_n}"


def _generating_functions(max_n: int) -> str:
    one = PoincarePolynomial.monomial(0)
    for n in range(1, max_n + 1):
        p = poincare_polynomial(n)
        if n >= 3 and n % 2:
            _require(p == (one + PoincarePolynomial.monomial(2 * n - 3)) * poincare_polynomial(n - 2), f"odd n={n}")
        if n % 2 == 0:
            _require(p == (one + PoincarePolynomial.monomial(n - 1)) * poincare_polynomial(n - 1), f"even n={n}")
        top = n * (n - 1) // 2
        _require(p.reversed(top) == p, f"palindromicity n={n}")
        _require(p(1) == len(recursive_enumerate(n)))
        _require(p.degree <= top)
    return f"recursions and palindromicity for n <= {max_n}"


def _twist_arithmetic(max_n: int) -> str:
    for n in range(3, TWIST_CHECK_MAX_N + 1, 2):
        _require(omega_theta_twist(n).is_trivial, f"omega_theta nontrivial at n={n}")
    for n in range(4, TWIST_CHECK_MAX_N + 1):
        _require(omega_iota_twist(n, 0) == omega_iota_twist(n, 1), f"iota depths differ at n={n}")
    return f"[omega_theta] trivial for odd 3 <= n <= {TWIST_CHECK_MAX_N}"


def _twisted_vanishing(max_n: int) -> str:
    others = [s for s in REGISTRY if s is not Symbol.O1]
    o1_twists = []
    for mask in range(1 << len(others)):
        extra = [s for k, s in enumerate(others) if mask >> k & 1]
        o1_twists.append(TwistClass.of(Symbol.O1, *extra))
    for n in range(1, max_n + 1):
        module, _ = decompose(n, trivial_det=True)
        for t in o1_twists:
            _require(twisted_component(module, t).rank == 0, f"n={n}, twist {t}")
    return f"O1-twisted components vanish for n <= {max_n}"


def _cross_check(max_n: int) -> str:
    for n in range(1, max_n + 1):
        cross_check(n)
    module, _ = decompose(7)
    _require(sorted(module.degrees()) == N7_DEGREES)
    table = rank_table(module)
    _require([table.get((r, ZERO), 0) for r in range(4)] == [1, 1, 3, 3])
    return f"decompose == from_diagrams for n <= {max_n}; n=7 residues (1,1,3,3)"


def _rule_gating(max_n: int) -> str:
    for rule, kwargs in (
        (Rule.OddSplit, {"n": 4}),
        (Rule.PbfEvenIso, {"r": 3}),
        (Rule.PbfOddVanish, {"r": 2}),
    ):
        try:
            check_rule(rule, **kwargs)
        except ParityViolation:
            continue
        raise AssertionError(f"{rule.value} {kwargs} did not raise ParityViolation")
    for r in range(0, 40):
        want = {Symbol.DetE} if r % 2 else {Symbol.DetE, Symbol.O1}
        _require(relative_canonical_twist(r).support == want, f"r={r}")
    return "parity gates raise; relative canonical twist matches"


def _render(max_n: int) -> str:
    top = min(max_n, 9)
    spec = RenderSpec()
    for n in range(1, top + 1):
        ds = recursive_enumerate(n)
        svg = render_svg(ds, spec)
        _require(svg == render_svg(ds, spec), f"SVG not deterministic at n={n}")
        parsed = parse_svg_inner_segments(svg)
        diagrams = ds.diagrams()
        _require([p for p, _ in parsed] == [d.parts for d in diagrams])
        for (_, units), d in zip(parsed, diagrams):
            _require(units == inner_unit_segments(d), f"n={n} {d.parts}")
            _require(render_ascii(d, spec) == render_ascii(d, spec))
    return f"SVG parse-back equals inner segments for n <= {top}"


CHECKS: list[tuple[str, Callable[[int], str]]] = [
    ("n7_ground_truth", _n7_ground_truth),
    ("oracle_equivalence", _oracle_equivalence),
    ("counting_law", _counting_law),
    ("generating_functions", _generating_functions),
    ("twist_arithmetic", _twist_arithmetic),
    ("twisted_vanishing", _twisted_vanishing),
    ("theorem_cross_check", _cross_check),
    ("rule_gating", _rule_gating),
    ("render", _render),
]


def run_checks(max_n: int = DEFAULT_MAX_N) -> list[CheckResult]:
    results = []
    for name, fn in CHECKS:
        t0 = time.perf_counter()
        try:
            detail, ok = fn(max_n), True
        except (AssertionError, SpinorWittError) as exc:
            detail, ok = str(exc) or type(exc).__name__, False
        results.append(CheckResult(name, ok, detail, time.perf_counter() - t0))
    return results
