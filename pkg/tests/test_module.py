from hypothesis import given, strategies as st

from spinorwitt.diagram import StrictPartition
from spinorwitt.enumeration import count, recursive_enumerate
from spinorwitt.module import (
    ZERO_MODULE,
    Generator,
    GradedWittModule,
    direct_sum,
    from_diagrams,
    rank_table,
    shift,
    twisted_component,
)
from spinorwitt.twist import REGISTRY, ZERO, DegreeClass, Symbol, TwistClass

N7_DEGREES = [0, 3, 7, 10, 11, 14, 18, 21]

twists = st.sets(st.sampled_from(REGISTRY)).map(lambda s: TwistClass(frozenset(s)))
generators = st.builds(
    lambda d, t, label: Generator(DegreeClass(d), t, label),
    st.integers(-30, 30), twists, st.sampled_from(["a", "b", "c"]),
)
modules = st.lists(generators, max_size=8).map(lambda gs: GradedWittModule(tuple(gs)))


def test_from_diagrams_n7():
    m = from_diagrams(recursive_enumerate(7))
    assert m.rank == 8
    assert m.degrees() == N7_DEGREES
    assert all(g.twist == ZERO for g in m)
    assert {g.provenance for g in m} == set(recursive_enumerate(7).members)


def test_from_diagrams_trivial_cases():
    m = from_diagrams(recursive_enumerate(1))
    assert m.rank == 1 and m.degrees() == [0]
    assert from_diagrams([]) == ZERO_MODULE


def test_rank_matches_count():
    for n in range(1, 21):
        assert from_diagrams(recursive_enumerate(n)).rank == count(n)


def test_shift_examples():
    base = GradedWittModule((Generator(DegreeClass(0), ZERO, "x"),))
    assert shift(base, 0) == base
    assert shift(base, 2 * 7 - 3).degrees() == [11]


@given(modules, st.integers(-20, 20), st.integers(-20, 20), twists)
def test_shift_twists_self_cancel(m, a, b, t):
    assert shift(shift(m, a, t), b, t) == shift(m, a + b, ZERO)
    assert shift(m, a, t).rank == m.rank


@given(modules, modules, modules)
def test_direct_sum_laws(a, b, c):
    assert direct_sum(a, ZERO_MODULE) == a
    assert direct_sum(a, b) == direct_sum(b, a)
    assert direct_sum(direct_sum(a, b), c) == direct_sum(a, direct_sum(b, c))
    assert direct_sum(a, b).rank == a.rank + b.rank


def test_direct_sum_reproduces_odd_recursion():
    # evaluated both sides for n=7, n-2=5
    smaller = from_diagrams(recursive_enumerate(5))
    assert direct_sum(shift(smaller, 11), smaller).grading() == from_diagrams(recursive_enumerate(7)).grading()


def test_rank_table_n7():
    table = rank_table(from_diagrams(recursive_enumerate(7)))
    assert table == {(0, ZERO): 1, (1, ZERO): 1, (2, ZERO): 3, (3, ZERO): 3}


def test_rank_table_trivial():
    assert rank_table(ZERO_MODULE) == {}
    assert rank_table(from_diagrams(recursive_enumerate(1))) == {(0, ZERO): 1}


@given(modules)
def test_rank_table_sums_to_rank(m):
    assert sum(rank_table(m).values()) == m.rank


def test_twisted_component():
    m = from_diagrams(recursive_enumerate(7))
    assert twisted_component(m, TwistClass.of(Symbol.O1)) == ZERO_MODULE
    assert twisted_component(m, ZERO) == m
    assert twisted_component(m, TwistClass.of(Symbol.E1, Symbol.DetE)).rank == 0


@given(modules)
def test_json_round_trip(m):
    assert GradedWittModule.from_list(m.to_list()) == m


def test_json_round_trip_partition_provenance():
    m = from_diagrams(recursive_enumerate(5))
    back = GradedWittModule.from_list(m.to_list())
    assert back == m
    assert any(g.provenance == StrictPartition(()) for g in back)
    assert m.to_list()[-1] == {"degree": 10, "residue": 2, "twist": [], "provenance": "[4,3,2,1]"}
