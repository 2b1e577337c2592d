"""Witt groups of spinor varieties via even shifted Young diagrams.

The total Witt group of OG+(n, E) is free over W^tot(S) with one generator
in degree |lambda| for every even shifted Young diagram lambda inside the
staircase of size n-1. This package enumerates those diagrams, runs the
recursive decomposition that produces the same module, and checks the two
against each other.
"""
from .derivation import Rule, check_rule, cross_check, decompose
from .diagram import (
    Frame,
    PlacedDiagram,
    SegmentRun,
    StrictPartition,
    inner_segment_runs,
    is_even,
    make_diagram,
    weight,
)
from .enumeration import (
    DiagramSet,
    PoincarePolynomial,
    count,
    oracle_enumerate,
    poincare_polynomial,
    rect_enumerate,
    recursive_enumerate,
)
from .module import (
    Generator,
    GradedWittModule,
    direct_sum,
    from_diagrams,
    rank_table,
    shift,
    twisted_component,
)
from .twist import (
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

__version__ = "0.1.0"
