"""Standard message combiners.

A combiner merges two messages bound for the same node.  It must be
associative and commutative because the engine pre-combines on every
partition before the final combine at the master, in no fixed grouping.
"""
from __future__ import annotations

import operator
from typing import Any, Callable

Combiner = Callable[[Any, Any], Any]


class CombinerConfigError(TypeError):
    """No default combiner is registered for a message type."""


def add(a, b):
    return a + b


def minimum(a, b):
    return a if a <= b else b


def maximum(a, b):
    return a if a >= b else b


def pair_sum(a: tuple, b: tuple) -> tuple:
    """Componentwise sum of equal-length tuples."""
    return tuple(map(operator.add, a, b))


def componentwise(*parts: Combiner) -> Combiner:
    """Build a tuple combiner applying ``parts[i]`` to slot ``i``.

    >>> componentwise(add, maximum)((1, 4), (2, 3))
    (3, 4)
    """
    def combine(a: tuple, b: tuple) -> tuple:
        return tuple(f(x, y) for f, x, y in zip(parts, a, b))
    return combine


def union(a: frozenset, b: frozenset) -> frozenset:
    return a | b


def union_capped(cap: int) -> Combiner:
    """Set union that keeps only the ``cap`` smallest elements.

    Dropping elements larger than the ``cap`` smallest never changes a later
    result, so the combiner stays associative.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")

    def combine(a: frozenset, b: frozenset) -> frozenset:
        u = a | b
        if len(u) <= cap:
            return u
        return frozenset(sorted(u)[:cap])
    return combine


def concat(a: tuple, b: tuple) -> tuple:
    """Tuple concatenation: associative but order-sensitive.

    Consumers must reduce the result order-insensitively (e.g. sort it).
    """
    return a + b


_DEFAULTS: dict[str, Combiner] = {
    "int": add,
    "float": add,
    "tuple[float, float]": pair_sum,
    "tuple[int, int]": pair_sum,
    "frozenset": union,
}


def register_default(type_name: str, combiner: Combiner) -> None:
    _DEFAULTS[type_name] = combiner


def default_combiner(message_type: type | str) -> Combiner:
    """Default combiner for a message type, by name.

    Numbers sum, numeric pairs sum componentwise, frozensets union.  Anything
    else must be chosen explicitly.
    """
    name = message_type if isinstance(message_type, str) else message_type.__name__
    try:
        return _DEFAULTS[name.replace(" ", "").replace(",", ", ")]
    except KeyError:
        raise CombinerConfigError(
            f"no default combiner for message type {name!r}; pass one explicitly"
        ) from None


STANDARD: dict[str, Combiner] = {
    "sum": add,
    "min": minimum,
    "max": maximum,
    "pair_sum": pair_sum,
    "union": union,
    "union_capped_8": union_capped(8),
}
