import itertools

import pytest
from hypothesis import given, strategies as st

from spinorwitt.errors import ParityViolation
from spinorwitt.twist import (
    REGISTRY,
    ZERO,
    DegreeClass,
    Symbol,
    TwistClass,
    det_Ln_twist,
    o_twist,
    omega_iota_twist,
    omega_theta_twist,
    relative_canonical_twist,
    twist_add,
)

O1, DT, E1, DE = Symbol.O1, Symbol.DetEnTilde, Symbol.E1, Symbol.DetE
ALL = [TwistClass(frozenset(c)) for k in range(len(REGISTRY) + 1) for c in itertools.combinations(REGISTRY, k)]


def T(*s):
    return TwistClass.of(*s)


def test_twist_add_examples():
    assert twist_add(T(O1), T(O1)) == ZERO
    assert twist_add(ZERO, T(DT)) == T(DT)
    assert twist_add(T(O1, E1), T(E1, DE)) == T(O1, DE)


def test_vector_space_axioms_exhaustive():
    assert len(ALL) == 64
    for a in ALL:
        assert a + ZERO == a
        assert a + a == ZERO
        for b in ALL:
            assert a + b == b + a
    for a, b, c in itertools.product(ALL[::5], ALL[::3], ALL[::7]):
        assert (a + b) + c == a + (b + c)


def test_squares_vanish():
    assert TwistClass.from_exponents({O1: 2, DT: -4, E1: 6}) == ZERO


@pytest.mark.parametrize("k, expected", [(-2, ZERO), (1, T(O1)), (-3, T(O1))])
def test_o_twist(k, expected):
    assert o_twist(k) == expected


@given(st.integers(-1000, 1000), st.integers(-1000, 1000))
def test_o_twist_homomorphism(a, b):
    assert o_twist(a + b) == o_twist(a) + o_twist(b)


@pytest.mark.parametrize("n", [2, 5, 8])
def test_det_Ln(n):
    assert det_Ln_twist(n) == T(DT)
    assert det_Ln_twist(n) + T(DT) == ZERO


@pytest.mark.parametrize(
    "n, depth, expected",
    [(4, 0, T(DT)), (5, 0, T(DT, E1)), (5, 1, T(DT, E1))],
)
def test_omega_iota(n, depth, expected):
    assert omega_iota_twist(n, depth) == expected


def test_omega_iota_depths_agree():
    for n in range(4, 200):
        assert omega_iota_twist(n, 0) == omega_iota_twist(n, 1)


@pytest.mark.parametrize("n", [3, 7])
def test_omega_theta_examples(n):
    assert omega_theta_twist(n) == ZERO


def test_omega_theta_trivial_all_odd():
    for n in range(3, 100, 2):
        assert omega_theta_twist(n).is_trivial


@pytest.mark.parametrize("n", [4, 2, 1])
def test_omega_theta_parity(n):
    with pytest.raises(ParityViolation):
        omega_theta_twist(n)


@pytest.mark.parametrize("r, expected", [(1, T(DE)), (2, T(DE, O1)), (0, T(DE, O1))])
def test_relative_canonical(r, expected):
    assert relative_canonical_twist(r) == expected


@given(st.integers(-500, 500), st.integers(-500, 500))
def test_degree_residue_additive(a, b):
    assert (DegreeClass(a) + DegreeClass(b)).residue == (DegreeClass(a).residue + DegreeClass(b).residue) % 4
    assert DegreeClass(a).residue in range(4)


def test_substitute_and_names():
    t = T(DT, E1)
    assert t.substitute_trivial([DT]) == T(E1)
    assert t.names() == ["DetEnTilde", "E1"]
    assert TwistClass(frozenset(["E1", "DetEnTilde"])) == t
