"""Cartan graphs and root systems of diagonal braidings, with rank-4 classification data."""
from .unitgroup import (
    FieldUnit, GroupSpec, GroupSpecError, SpecMismatch, combine, element_order, inverse,
    min_power_hitting, power, qint_vanishes,
)
from .braiding import (
    A4, B4, C4, D4, F4, BraidingMatrix, DynkinDiagram, InternalCaseGap, NotIFinite,
    cartan_entry, cartan_matrix, dynkin_of, is_indecomposable, reflect, reflect_diagram,
    reflect_diagram_cases,
)
from .cartangraph import (
    CartanGraph, DecomposableWarning, ExchangeGraph, PointLimitExceeded, build_graph,
    check_goodnei_theorem, exchange_graph, good_A4_at, good_B4_at, is_standard,
)
from .rootsystem import (
    ExceededLimits, Finite, MixedSignRoot, check_lemma_jik, check_root_axioms,
    enumerate_roots, roots_by_reduced_words,
)
from .classification import (
    ConstraintViolated, builtin_rows, instantiate_row, match_diagram, verify_row,
)

__version__ = "0.1.0"
