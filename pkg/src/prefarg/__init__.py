"""Preference-based reductions of argumentation frameworks, inverse solvers.

The library decides, for a framework and a target in/out/undec labelling,
whether some CC-wise total preference order makes the labelling complete
after one of the four standard reductions, and constructs a witness order
when one exists. An exhaustive oracle double-checks the deciders on small
instances.
"""

from .errors import (
    DomainMismatchError,
    InconsistentPreferenceError,
    InvalidOrderError,
    ParseError,
    PrefargError,
    SizeLimitError,
    UnknownArgumentError,
    WpsgConstraintError,
)
from .framework import Attack, Framework
from .io_formats import (
    emit_apx,
    emit_dot,
    emit_labelling,
    emit_order,
    emit_pref_fn,
    emit_result,
    parse_apx,
    parse_labelling,
    parse_order,
    parse_pref_fn,
    parse_result,
)
from .oracle import brute_force_ex, enumerate_orders, weak_orders
from .preferences import (
    PreferenceFunction,
    PreferenceOrder,
    consistency_certificate,
    is_consistent,
    order_to_pref_fn,
    pref_fn_to_order,
    validate_order,
)
from .reductions import graph_from_pref_fn, reduce
from .semantics import (
    IN,
    OUT,
    UNDEC,
    Labelling,
    Violation,
    completeness_violation,
    enumerate_complete,
    grounded_labelling,
    is_complete,
    require_total,
)
from .solvers import (
    Certificate,
    Decision,
    decide,
    decide_ex1,
    decide_ex2,
    decide_ex3,
    decide_ex4,
    is_valid_ranking,
    rank,
    verify_witness,
)

__all__ = [
    "Attack",
    "Certificate",
    "Decision",
    "DomainMismatchError",
    "Framework",
    "IN",
    "InconsistentPreferenceError",
    "InvalidOrderError",
    "Labelling",
    "OUT",
    "ParseError",
    "PrefargError",
    "PreferenceFunction",
    "PreferenceOrder",
    "SizeLimitError",
    "UNDEC",
    "UnknownArgumentError",
    "Violation",
    "WpsgConstraintError",
    "brute_force_ex",
    "completeness_violation",
    "consistency_certificate",
    "decide",
    "decide_ex1",
    "decide_ex2",
    "decide_ex3",
    "decide_ex4",
    "emit_apx",
    "emit_dot",
    "emit_labelling",
    "emit_order",
    "emit_pref_fn",
    "emit_result",
    "enumerate_complete",
    "enumerate_orders",
    "graph_from_pref_fn",
    "grounded_labelling",
    "is_complete",
    "is_consistent",
    "is_valid_ranking",
    "order_to_pref_fn",
    "parse_apx",
    "parse_labelling",
    "parse_order",
    "parse_pref_fn",
    "parse_result",
    "pref_fn_to_order",
    "rank",
    "reduce",
    "require_total",
    "validate_order",
    "verify_witness",
    "weak_orders",
]
