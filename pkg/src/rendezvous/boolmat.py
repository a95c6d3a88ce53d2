"""Boolean matrix arithmetic over the {0,1} semiring.

Addition is logical OR, multiplication is logical AND.  A matrix is stored
as one Python int per row, with bit ``j`` of ``rows[i]`` holding entry
``(i, j)``.  Row-level operations (products, supports, weights) are then
word-parallel bit operations; columns are materialized on demand.

All values here are immutable after construction, so they can be shared
freely between threads and reused as dict keys.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DimensionError, NonNZError


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class WeightProfile:
    """Row/column weights of a matrix plus their maxima.

    Weights are support sizes (popcounts).  Argmax ties break toward the
    lowest index so repeated runs stay reproducible.
    """

    per_row: tuple[int, ...]
    per_column: tuple[int, ...]
    max_row_weight: int
    max_col_weight: int
    argmax_row: int
    argmax_col: int

    @property
    def max_weight(self) -> int:
        return max(self.max_row_weight, self.max_col_weight)


@dataclass(frozen=True)
class BoolMatrix:
    """Square binary matrix over the boolean semiring."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise DimensionError(f"dimension must be >= 1, got {self.n}")
        if len(self.rows) != self.n:
            raise DimensionError(f"expected {self.n} rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.rows):
            if row < 0 or row > full:
                raise DimensionError(f"row {i} has bits outside dimension {self.n}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "BoolMatrix":
        """Build from nested 0/1 entries; any positive entry is taken as 1."""
        packed = []
        for row in rows:
            mask = 0
            for j, value in enumerate(row):
                if value:
                    mask |= 1 << j
            packed.append(mask)
        return cls(len(packed), tuple(packed))

    @classmethod
    def identity(cls, n: int) -> "BoolMatrix":
        return cls(n, tuple(1 << i for i in range(n)))

    @classmethod
    def zeros(cls, n: int) -> "BoolMatrix":
        return cls(n, (0,) * n)

    @classmethod
    def ones(cls, n: int) -> "BoolMatrix":
        full = (1 << n) - 1
        return cls(n, (full,) * n)

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def row(self, i: int) -> int:
        """Bitmask of row ``i`` (bit j set iff entry (i, j) is 1)."""
        return self.rows[i]

    def col(self, j: int) -> int:
        """Bitmask of column ``j`` (bit i set iff entry (i, j) is 1)."""
        mask = 0
        for i, row in enumerate(self.rows):
            mask |= ((row >> j) & 1) << i
        return mask

    def transpose(self) -> "BoolMatrix":
        n = self.n
        cols = [0] * n
        for i, row in enumerate(self.rows):
            for j in bits(row):
                cols[j] |= 1 << i
        return BoolMatrix(n, tuple(cols))

    def __matmul__(self, other: "BoolMatrix") -> "BoolMatrix":
        """Boolean product: result (i, j) = OR over s of self(i,s) AND other(s,j)."""
        if not isinstance(other, BoolMatrix):
            return NotImplemented
        if self.n != other.n:
            raise DimensionError(
                f"cannot multiply {self.n}x{self.n} by {other.n}x{other.n}"
            )
        rows = other.rows
        out = []
        for mask in self.rows:
            acc = 0
            for s in bits(mask):
                acc |= rows[s]
            out.append(acc)
        return BoolMatrix(self.n, tuple(out))

    def is_all_ones(self) -> bool:
        full = (1 << self.n) - 1
        return all(row == full for row in self.rows)

    def nz_defect(self) -> tuple[str, int] | None:
        """First zero row or zero column, or None when the matrix is NZ."""
        for i, row in enumerate(self.rows):
            if row == 0:
                return ("row", i)
        seen = 0
        for row in self.rows:
            seen |= row
        full = (1 << self.n) - 1
        if seen != full:
            missing = full & ~seen
            return ("column", next(bits(missing)))
        return None

    def is_nz(self) -> bool:
        """True iff the matrix has no zero row and no zero column."""
        return self.nz_defect() is None

    def weight_profile(self) -> WeightProfile:
        per_row = tuple(row.bit_count() for row in self.rows)
        per_col = tuple(self.col(j).bit_count() for j in range(self.n))
        max_row = max(per_row)
        max_col = max(per_col)
        return WeightProfile(
            per_row=per_row,
            per_column=per_col,
            max_row_weight=max_row,
            max_col_weight=max_col,
            argmax_row=per_row.index(max_row),
            argmax_col=per_col.index(max_col),
        )

    def to_lines(self) -> list[str]:
        return [
            "".join("1" if (row >> j) & 1 else "0" for j in range(self.n))
            for row in self.rows
        ]

    def __str__(self) -> str:
        return "\n".join(self.to_lines())


def _toggle_prime(label: str) -> str:
    return label[:-1] if label.endswith("'") else label + "'"


def _unreachable_pair(n: int, rows: tuple[int, ...]) -> tuple[int, int] | None:
    """Pair (i, j) with no directed path i -> j in the bit-row digraph, if any."""
    if n == 1:
        return None
    # Forward reachability from 0, then backward; strong connectivity needs both.
    reach = 1
    frontier = [0]
    while frontier:
        nxt = []
        for v in frontier:
            new = rows[v] & ~reach
            reach |= new
            nxt.extend(bits(new))
        frontier = nxt
    full = (1 << n) - 1
    if reach != full:
        return (0, next(bits(full & ~reach)))
    back = [0] * n
    for i in range(n):
        for j in bits(rows[i]):
            back[j] |= 1 << i
    reach = 1
    frontier = [0]
    while frontier:
        nxt = []
        for v in frontier:
            new = back[v] & ~reach
            reach |= new
            nxt.extend(bits(new))
        frontier = nxt
    if reach != full:
        return (next(bits(full & ~reach)), 0)
    return None


@dataclass(frozen=True)
class MatrixSet:
    """Ordered, labeled set of same-dimension boolean matrices.

    Generator order is part of the value: breadth-first searches and all
    tie-breaking downstream depend on it.
    """

    n: int
    generators: tuple[BoolMatrix, ...]
    labels: tuple[str, ...]

    def __post_init__(self):
        if not self.generators:
            raise DimensionError("a matrix set needs at least one generator")
        for g in self.generators:
            if g.n != self.n:
                raise DimensionError(
                    f"generator dimension {g.n} does not match set dimension {self.n}"
                )
        if len(self.labels) != len(self.generators):
            raise DimensionError("one label per generator required")

    @classmethod
    def of(
        cls,
        generators: Iterable[BoolMatrix],
        labels: Iterable[str] | None = None,
    ) -> "MatrixSet":
        gens = tuple(generators)
        if labels is None:
            labels = tuple(f"M{i + 1}" for i in range(len(gens)))
        else:
            labels = tuple(labels)
        n = gens[0].n if gens else 0
        return cls(n, gens, labels)

    @property
    def m(self) -> int:
        return len(self.generators)

    def transposed(self) -> "MatrixSet":
        """Transpose every generator, keeping order; labels get a prime toggled."""
        return MatrixSet(
            self.n,
            tuple(g.transpose() for g in self.generators),
            tuple(_toggle_prime(lbl) for lbl in self.labels),
        )

    def union_rows(self) -> tuple[int, ...]:
        """Bit rows of the entrywise OR of all generators."""
        acc = [0] * self.n
        for g in self.generators:
            for i, row in enumerate(g.rows):
                acc[i] |= row
        return tuple(acc)

    def is_irreducible(self) -> bool:
        """True iff the union digraph (edge i->j iff some generator has (i,j)=1)
        is strongly connected."""
        return _unreachable_pair(self.n, self.union_rows()) is None

    def reducibility_witness(self) -> tuple[int, int] | None:
        """States (i, j) with no path i -> j in the union digraph, if reducible."""
        return _unreachable_pair(self.n, self.union_rows())

    def first_non_nz(self) -> tuple[int, str, int] | None:
        """(generator index, 'row'/'column', line index) of the first NZ defect."""
        for g_idx, g in enumerate(self.generators):
            defect = g.nz_defect()
            if defect is not None:
                return (g_idx, defect[0], defect[1])
        return None

    def require_nz(self) -> None:
        defect = self.first_non_nz()
        if defect is not None:
            g_idx, kind, index = defect
            raise NonNZError(self.labels[g_idx], kind, index)
