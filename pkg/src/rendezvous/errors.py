"""Exception types shared across the workbench.

Every error carries a short machine-readable ``category`` string that the
CLI prints on stderr, so scripts can branch on failure kinds without
parsing prose.
"""

from __future__ import annotations


class WorkbenchError(Exception):
    """Base class for all workbench-specific failures."""

    category = "error"


class DimensionError(WorkbenchError):
    """Operands disagree on matrix dimension, or a size cap is violated."""

    category = "dimension"


class NonNZError(WorkbenchError):
    """A generator has a zero row or zero column where NZ input is required."""

    category = "not-nz"

    def __init__(self, label: str, kind: str, index: int):
        self.label = label
        self.kind = kind  # "row" or "column"
        self.index = index
        super().__init__(f"generator {label} has zero {kind} {index}")


class LetterCapError(WorkbenchError):
    """Enumerating the associated automaton would exceed the letter cap."""

    category = "letter-cap"

    def __init__(self, would_be: int, cap: int):
        self.would_be = would_be
        self.cap = cap
        super().__init__(
            f"associated automaton would have {would_be} letters, cap is {cap}"
        )


class UnreachableVertexError(WorkbenchError):
    """No path from the requested pair vertex to the requested singleton."""

    category = "unreachable"

    def __init__(self, source: tuple[int, int], target: tuple[int, int] | None = None):
        self.source = source
        self.target = target
        where = f"singleton {target}" if target is not None else "any singleton"
        super().__init__(f"pair vertex {source} cannot reach {where}")


class NotPrimitiveError(WorkbenchError):
    """An operation requiring a primitive set was given a non-primitive one."""

    category = "not-primitive"

    def __init__(self, message: str, certificate=None):
        self.certificate = certificate
        super().__init__(message)


class SearchLimitError(WorkbenchError):
    """A BFS hit its depth or state limit before producing a needed value."""

    category = "limit"


class SetFileError(WorkbenchError):
    """A matrix-set file failed to parse."""

    category = "set-file"

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
