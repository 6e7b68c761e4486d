"""Levin-Sidi d- and D-transformations with classical baselines."""

import json

from ._core import (
    AccelError,
    D_transform_expr,
    TransformResult,
    aitken,
    d_transform,
    d_transform_expr,
    eval_constant,
    euler_transform,
    exact_sum_recurrence,
    levin,
    normalize_expr,
    reproduce_json,
    wynn_epsilon,
)

__all__ = [
    "AccelError",
    "D_transform_expr",
    "TransformResult",
    "aitken",
    "d_transform",
    "d_transform_expr",
    "eval_constant",
    "euler_transform",
    "exact_sum_recurrence",
    "levin",
    "normalize_expr",
    "reproduce",
    "wynn_epsilon",
]


def reproduce(table):
    """Run one of table1..table5 and return its reports as a list of dicts."""
    return json.loads(reproduce_json(table))
