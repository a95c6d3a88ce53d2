"""Built-in matrix sets used throughout the test tables.

``example`` is the standard 3-state primitive pair whose exponent is 7 and
whose associated automata have reset thresholds 2 and 3.  ``cpr`` and
``kari`` are the 4- and 6-state primitive sets obtained from the
Cerny-Piricka-Rozenaurova and Kari slowly-synchronizing automata by adding
a single 1 to one letter.
"""

from __future__ import annotations

from .boolmat import BoolMatrix, MatrixSet


def example_set() -> MatrixSet:
    a = BoolMatrix.from_rows([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    b = BoolMatrix.from_rows([[0, 1, 0], [1, 0, 1], [0, 0, 1]])
    return MatrixSet(3, (a, b), ("a", "b"))


def cpr_set() -> MatrixSet:
    a = BoolMatrix.from_rows(
        [[0, 0, 1, 0], [1, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1]]
    )
    b = BoolMatrix.from_rows(
        [[1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [0, 1, 0, 0]]
    )
    return MatrixSet(4, (a, b), ("a", "b"))


def kari_set() -> MatrixSet:
    a = BoolMatrix.from_rows(
        [
            [1, 0, 0, 1, 0, 0],
            [0, 1, 0, 0, 0, 0],
            [0, 0, 1, 0, 0, 0],
            [0, 0, 0, 0, 1, 0],
            [0, 0, 0, 1, 0, 0],
            [0, 0, 0, 0, 0, 1],
        ]
    )
    b = BoolMatrix.from_rows(
        [
            [0, 0, 0, 0, 1, 0],
            [0, 0, 1, 0, 0, 0],
            [0, 0, 0, 1, 0, 0],
            [0, 1, 0, 0, 0, 0],
            [0, 0, 0, 0, 0, 1],
            [1, 0, 0, 0, 0, 0],
        ]
    )
    return MatrixSet(6, (a, b), ("a", "b"))


BUILTIN_NAMES = ("example", "cpr", "kari")

_FACTORIES = {
    "example": example_set,
    "cpr": cpr_set,
    "kari": kari_set,
}


def builtin_set(name: str) -> MatrixSet:
    try:
        return _FACTORIES[name]()
    except KeyError:
        raise ValueError(
            f"unknown builtin {name!r}; available: {', '.join(BUILTIN_NAMES)}"
        )
