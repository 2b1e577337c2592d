import pytest
from hypothesis import given, strategies as st

from oracles import brute_even_rectangle, brute_even_staircase, conjugate
from spinorwitt.diagram import Frame, is_even, make_diagram
from spinorwitt.enumeration import (
    DiagramSet,
    PoincarePolynomial,
    count,
    oracle_enumerate,
    poincare_polynomial,
    rect_enumerate,
    recursive_enumerate,
)
from spinorwitt.errors import BoundExceeded

N7 = {(), (2, 1), (4, 3), (4, 3, 2, 1), (6, 5), (6, 5, 2, 1), (6, 5, 4, 3), (6, 5, 4, 3, 2, 1)}


@pytest.mark.parametrize("enumerate_", [oracle_enumerate, recursive_enumerate])
def test_n7_example(enumerate_):
    assert enumerate_(7).as_tuples() == N7


@pytest.mark.parametrize(
    "n, expected",
    [
        (1, {()}),
        (2, {(), (1,)}),
        (3, {(), (2, 1)}),
        (4, {(), (2, 1), (3,), (3, 2, 1)}),
    ],
)
def test_small_cases(n, expected):
    # expected sets frozen from tests/oracles.py brute force
    assert brute_even_staircase(n) == expected
    assert oracle_enumerate(n).as_tuples() == expected
    assert recursive_enumerate(n).as_tuples() == expected


@pytest.mark.parametrize("n", range(1, 12))
def test_oracle_enumerate_matches_independent_brute_force(n):
    assert oracle_enumerate(n).as_tuples() == brute_even_staircase(n)


@pytest.mark.parametrize("n", range(1, 15))
def test_recursion_equals_oracle(n):
    assert recursive_enumerate(n).as_tuples() == oracle_enumerate(n).as_tuples()


def test_oracle_bound():
    with pytest.raises(BoundExceeded):
        oracle_enumerate(27)


def test_canonical_order():
    members = [p.parts for p in recursive_enumerate(7)]
    assert members == [
        (6, 5, 4, 3, 2, 1), (6, 5, 4, 3), (6, 5, 2, 1), (6, 5), (4, 3, 2, 1), (4, 3), (2, 1), (),
    ]
    assert DiagramSet(7, list(recursive_enumerate(7))[::-1]).members == recursive_enumerate(7).members


@pytest.mark.parametrize("n, c", [(7, 8), (1, 1), (20, 1024)])
def test_count(n, c):
    assert count(n) == c


def test_count_law_up_to_20():
    for n in range(1, 21):
        assert len(recursive_enumerate(n)) == 2 ** (n // 2)


def test_members_are_even():
    for n in range(1, 17):
        frame = Frame.staircase(n - 1)
        assert all(is_even(make_diagram(frame, p.parts)) for p in recursive_enumerate(n))


def test_poincare_examples():
    p7 = poincare_polynomial(7)
    assert p7.coefficients == {d: 1 for d in (0, 3, 7, 10, 11, 14, 18, 21)}
    assert poincare_polynomial(1).coefficients == {0: 1}
    assert poincare_polynomial(2).coefficients == {0: 1, 1: 1}
    assert str(poincare_polynomial(2)) == "1 + q"


def _binomial(k):
    return PoincarePolynomial({0: 1}) + PoincarePolynomial.monomial(k)


@pytest.mark.parametrize("n", range(1, 21))
def test_poincare_recursions_and_palindromicity(n):
    p = poincare_polynomial(n)
    if n % 2 and n >= 3:
        assert p == _binomial(2 * n - 3) * poincare_polynomial(n - 2)
    elif n % 2 == 0:
        assert p == _binomial(n - 1) * poincare_polynomial(n - 1)
    top = n * (n - 1) // 2
    assert p.reversed(top) == p
    assert p(1) == len(recursive_enumerate(n))
    assert p.degree <= top


@given(st.integers(min_value=0, max_value=6), st.integers(min_value=0, max_value=6))
def test_polynomial_product_evaluates(a, b):
    p, q = _binomial(a), _binomial(b)
    assert (p * q)(2) == p(2) * q(2)


@pytest.mark.parametrize(
    "rows, cols, expected",
    [
        (1, 1, {(), (1,)}),
        (2, 2, {(), (2,), (1, 1), (2, 2)}),
        (1, 2, {(), (2,)}),
    ],
)
def test_rect_examples(rows, cols, expected):
    assert brute_even_rectangle(rows, cols) == expected
    assert rect_enumerate(rows, cols) == expected


@pytest.mark.parametrize("rows, cols", [(2, 3), (3, 3), (4, 4), (5, 6), (3, 7), (1, 30)])
def test_rect_matches_oracle(rows, cols):
    assert rect_enumerate(rows, cols) == brute_even_rectangle(rows, cols)


@pytest.mark.parametrize("rows, cols", [(2, 3), (3, 4), (4, 5), (5, 6)])
def test_rect_closed_under_transpose(rows, cols):
    found = rect_enumerate(rows, cols)
    assert {conjugate(p) for p in found} == rect_enumerate(cols, rows)


def test_rect_bound():
    with pytest.raises(BoundExceeded):
        rect_enumerate(5, 7)
