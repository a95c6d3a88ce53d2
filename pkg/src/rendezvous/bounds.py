"""Bound tables for the k-rendezvous time of primitive NZ sets.

Two bound families are computed, both exact rationals:

* ``bound_b``: solves the one-step growth recursion in which a product with
  a weight-k column is extended, within n(1+n-a)/2 further letters, to one
  with a weight-(k+1) column; ``a`` is the analytic lower bound on the
  number of columns escaping a weight-k column's support.  Available as a
  recursion and in closed form, which agree exactly.

* ``bound_f``: refines ``bound_b`` by letting one merge step raise the
  weight by p at once.  The lift cost ``lift_bound(n, k, h)`` (steps needed
  to grow weight h to weight k) solves a max-over-p / min-of-two-routes
  dynamic program and has no closed form; ``bound_f`` takes the best
  splitting point h.

The escape count ``a``: for a matrix with all row/column weights <= k and a
column c of weight exactly k, count the columns whose support is not inside
supp(column c); minimizing over c gives ``evaluate_escape``.  The sharp
range of the minimum over all such matrices is pinched between
``escape_lower`` and ``escape_upper``, with ``build_witness`` producing a
matrix attaining the upper value.

Everything here is pure arithmetic on (n, k, h, p); no dimension cap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .boolmat import BoolMatrix


def _ceildiv(a: int, b: int) -> int:
    return -(-a // b)


def _validate_nk(n: int, k: int) -> None:
    if n < 2 or not 2 <= k <= n - 1:
        raise ValueError(f"need n >= 2 and 2 <= k <= n-1, got n={n}, k={k}")


def _validate_bound_args(n: int, k: int) -> None:
    if n < 2 or not 2 <= k <= n:
        raise ValueError(f"need n >= 2 and 2 <= k <= n, got n={n}, k={k}")


def escape_lower(n: int, k: int) -> int:
    """Lower bound max{n-k(k-1)-1, ceil((n-k)/k), 1} on the escape count."""
    _validate_nk(n, k)
    return max(n - k * (k - 1) - 1, _ceildiv(n - k, k), 1)


def escape_upper(n: int, k: int) -> int:
    """Least escape count attained by an explicit witness matrix.

    Equals n-k(k-1)-1 when that dominates ceil((n-k)/k), the ceiling term
    otherwise; together with ``escape_lower`` this pins the exact value.
    """
    _validate_nk(n, k)
    linear = n - k * (k - 1) - 1
    ceiling = _ceildiv(n - k, k)
    return linear if linear >= ceiling else ceiling


def escape_lower_refined(n: int, k: int, p: int) -> int:
    """Escape lower bound max{n-k(k-1)-1, ceil((n-k)/p), 1} under the extra
    constraint that no column escapes a weight-k column by more than p
    elements."""
    if n < 3 or not 2 <= k < n or not 1 <= p <= min(k, n - k):
        raise ValueError(
            f"need n >= 3, 2 <= k < n, 1 <= p <= min(k, n-k); got n={n}, k={k}, p={p}"
        )
    return max(n - k * (k - 1) - 1, _ceildiv(n - k, p), 1)


@dataclass(frozen=True)
class EscapeWitness:
    matrix: BoolMatrix
    claimed: int
    kind: str  # "hat" (linear branch) or "tilde" (ceiling branch)


def build_witness(n: int, k: int) -> EscapeWitness:
    """Block matrix attaining the escape upper bound.

    Layout: a width-v band of stacked constant-column blocks (v - 1 blocks
    of height k and a remainder block) makes column 0 the weight-k column;
    the remaining columns are weight-1 fillers placed in the first k rows,
    at most k-1 per row, plus, in the linear branch, a shifted identity
    below them.  Column 0's support is the first k rows, so exactly the
    non-first column-band columns and the identity columns escape it.
    """
    _validate_nk(n, k)
    ceil_nk = _ceildiv(n - k, k)
    v = ceil_nk + 1
    rows = [0] * n
    r = 0
    for t in range(v):
        height = k if t < v - 1 else n - k * (v - 1)
        for _ in range(height):
            rows[r] |= 1 << t
            r += 1
    assert r == n
    linear = n - k * (k - 1) - 1
    if linear >= ceil_nk:
        alpha = linear - ceil_nk
        c = v
        for i in range(k):
            for _ in range(k - 1):
                rows[i] |= 1 << c
                c += 1
        for t in range(alpha):
            rows[k + t] |= 1 << (c + t)
        c += alpha
        assert c == n
        return EscapeWitness(BoolMatrix(n, tuple(rows)), linear, "hat")
    # Ceiling branch: n - v filler columns fit in the first k rows at k-1
    # per row exactly because n - v <= k(k-1) here.
    c = v
    i = 0
    remaining = n - v
    while remaining > 0:
        take = min(k - 1, remaining)
        for _ in range(take):
            rows[i] |= 1 << c
            c += 1
        remaining -= take
        i += 1
    assert c == n
    return EscapeWitness(BoolMatrix(n, tuple(rows)), ceil_nk, "tilde")


@dataclass(frozen=True)
class EscapeEvaluation:
    """Escape count of a concrete matrix, or the reason it is out of scope.

    ``columns`` lists the weight-k columns; ``p`` is the largest number of
    support elements by which any column escapes a weight-k column, and
    ``refined_value`` restricts the minimum to the weight-k columns
    witnessing that maximum.
    """

    member: bool
    reason: str | None = None
    value: int | None = None
    columns: tuple[int, ...] = ()
    p: int | None = None
    refined_value: int | None = None
    refined_columns: tuple[int, ...] = ()


def evaluate_escape(mat: BoolMatrix, k: int) -> EscapeEvaluation:
    """Check membership (NZ, all weights <= k, some column weight exactly k)
    and evaluate the escape count with its p-refinement."""
    n = mat.n
    if not 1 <= k <= n - 1:
        raise ValueError(f"need 1 <= k <= n-1, got k={k} for n={n}")
    defect = mat.nz_defect()
    if defect is not None:
        return EscapeEvaluation(member=False, reason=f"zero {defect[0]} {defect[1]}")
    profile = mat.weight_profile()
    for i, w in enumerate(profile.per_row):
        if w > k:
            return EscapeEvaluation(
                member=False, reason=f"row {i} has weight {w} > {k}"
            )
    for j, w in enumerate(profile.per_column):
        if w > k:
            return EscapeEvaluation(
                member=False, reason=f"column {j} has weight {w} > {k}"
            )
    weight_k = tuple(j for j, w in enumerate(profile.per_column) if w == k)
    if not weight_k:
        return EscapeEvaluation(member=False, reason=f"no column of weight {k}")
    cols = [mat.col(j) for j in range(n)]

    def escape_count(c: int) -> int:
        return sum(1 for i in range(n) if cols[i] & ~cols[c])

    value = min(escape_count(c) for c in weight_k)
    p = max(
        (cols[i] & ~cols[c]).bit_count()
        for c in weight_k
        for i in range(n)
        if i != c
    )
    refined_cols = tuple(
        c
        for c in weight_k
        if any((cols[i] & ~cols[c]).bit_count() == p for i in range(n) if i != c)
    )
    refined = min(escape_count(c) for c in refined_cols)
    return EscapeEvaluation(
        member=True,
        value=value,
        columns=weight_k,
        p=p,
        refined_value=refined,
        refined_columns=refined_cols,
    )


_HARMONIC: list[Fraction] = [Fraction(0)]


def _harmonic(m: int) -> Fraction:
    """Sum of 1/i for i in [1, m], cached incrementally."""
    while len(_HARMONIC) <= m:
        i = len(_HARMONIC)
        _HARMONIC.append(_HARMONIC[-1] + Fraction(1, i))
    return _HARMONIC[m]


def _b_poly(n: int, k: int) -> Fraction:
    return Fraction(n * (k**3 - 3 * k**2 + 8 * k - 12), 6) + 1


def _b_increment(n: int, target: int, ceil_variant: bool) -> Fraction:
    """Growth-step cost from weight target-1 to weight target.

    The default variant drops the ceiling on the (n-k)/k term, matching the
    closed form exactly; branch selection goes by the target weight.  The
    ceiled variant keeps the exact escape lower bound in every step and has
    no closed form.
    """
    step = target - 1
    if ceil_variant:
        a = max(n - step * (step - 1) - 1, _ceildiv(n - step, step), 1)
        return Fraction(n * (1 + n - a), 2)
    s = math.isqrt(n)
    half = n // 2
    if target <= s:
        return Fraction(n * (2 + step * (step - 1)), 2)
    if target <= half:
        return n + Fraction(n * n * (step - 1), 2 * step)
    return Fraction(n * n, 2)


@lru_cache(maxsize=512)
def _b_table(n: int, k_max: int, ceil_variant: bool) -> tuple[Fraction, ...]:
    """Cumulative bound values for k in [2, k_max], index k-2."""
    values = [Fraction(1)]
    for target in range(3, k_max + 1):
        values.append(values[-1] + _b_increment(n, target, ceil_variant))
    return tuple(values)


def bound_b_recursive(n: int, k: int, ceil_variant: bool = False) -> Fraction:
    """Recursively accumulated growth bound on the k-rendezvous time."""
    _validate_bound_args(n, k)
    return _b_table(n, k, ceil_variant)[k - 2]


def bound_b_closed(n: int, k: int) -> Fraction:
    """Closed form of the growth bound; equals ``bound_b_recursive`` exactly.

    Three regimes: a cubic polynomial in k while k <= isqrt(n), a harmonic
    correction up to n/2, and n^2/2 per step beyond.
    """
    _validate_bound_args(n, k)
    if k == 2:
        return Fraction(1)
    s = math.isqrt(n)
    half = n // 2
    if k <= s:
        return _b_poly(n, k)
    if k <= half:
        return (
            _b_poly(n, s)
            + Fraction(n * (n + 2) * (k - s), 2)
            - Fraction(n * n, 2) * (_harmonic(k - 1) - _harmonic(s - 1))
        )
    anchor = max(half, 2)
    return bound_b_closed(n, anchor) + Fraction((k - anchor) * n * n, 2)


@lru_cache(maxsize=4096)
def _lift_table(n: int, k: int) -> tuple[int, ...]:
    """Doubled lift-cost values for h in [2, k], index h-2.

    Entry h solves max over p in [1, min(h, n-h)] of the better of two
    routes: merge p extra support elements at once and pay at most
    n(n-1)/2, or gain one weight level at the refined escape rate and pay
    n(n+1-a)/2.  Values are stored doubled so the table stays integral.
    """
    doubled = [0] * (k + 1)  # index by h; h >= k stays 0
    e2 = n * (n - 1)
    for h in range(k - 1, 1, -1):
        best = 0
        for p in range(1, min(h, n - h) + 1):
            ahat = escape_lower_refined(n, h, p)
            via_jump = (doubled[h + p] if h + p <= k else 0) + e2
            via_step = doubled[h + 1] + n * (n + 1 - ahat)
            cand = min(via_jump, via_step)
            if cand > best:
                best = cand
        doubled[h] = best
    return tuple(doubled[2 : k + 1])


def lift_bound(n: int, k: int, h: int) -> Fraction:
    """Bound on the extra product length needed to grow a weight-h row or
    column into a weight-k one; zero once h >= k."""
    if h < 2:
        raise ValueError(f"need h >= 2, got {h}")
    _validate_bound_args(n, k)
    if h >= k:
        return Fraction(0)
    return Fraction(_lift_table(n, k)[h - 2], 2)


@lru_cache(maxsize=64)
def _lift_grid(n: int, k_max: int) -> np.ndarray:
    """Doubled lift costs for all h, k in [2, k_max] at once.

    Same recurrence as ``_lift_table`` but vectorized over k, so the whole
    triangular table costs one numpy pass per (h, p).  Row h' holds zeros
    for every k <= h'; rows beyond k_max are never positive, so references
    to h+p > k_max clamp to an all-zero row.
    """
    size = k_max + 2
    grid = np.zeros((size, k_max + 1), dtype=np.int64)
    e2 = n * (n - 1)
    for h in range(k_max - 1, 1, -1):
        acc = None
        row_step = grid[h + 1]
        for p in range(1, min(h, n - h) + 1):
            ahat = escape_lower_refined(n, h, p)
            row_jump = grid[min(h + p, size - 1)]
            cand = np.minimum(row_jump + e2, row_step + n * (n + 1 - ahat))
            acc = cand if acc is None else np.maximum(acc, cand)
        acc[: h + 1] = 0
        grid[h] = acc
    return grid


def bound_f(n: int, k: int) -> tuple[Fraction, int]:
    """Best split of the growth bound: min over h of bound_b(n, h) plus the
    lift cost from h to k.  Returns (value, achieving h); ties go to the
    smallest h.  Never exceeds bound_b_recursive(n, k)."""
    _validate_bound_args(n, k)
    table = _lift_table(n, k)
    best: Fraction | None = None
    arg = 2
    for h in range(2, k + 1):
        lift = Fraction(table[h - 2], 2) if h < k else Fraction(0)
        cand = bound_b_recursive(n, h) + lift
        if best is None or cand < best:
            best = cand
            arg = h
    return best, arg


def bound_f_table(n: int, k_max: int) -> dict[int, tuple[Fraction, int]]:
    """``bound_f`` for every k in [2, k_max] sharing one lift grid.

    The min over h runs in integers over a common denominator, so large
    tables avoid per-step rational normalization; results are identical to
    per-cell ``bound_f``.
    """
    _validate_bound_args(n, k_max)
    grid = _lift_grid(n, k_max)
    b_values = _b_table(n, k_max, False)
    denom = 2 * math.lcm(*(b.denominator for b in b_values))
    half_denom = denom // 2
    base = [int(b * denom) for b in b_values]
    out: dict[int, tuple[Fraction, int]] = {}
    for k in range(2, k_max + 1):
        col = grid[:, k]
        best = base[0] + int(col[2]) * half_denom
        arg = 2
        for h in range(3, k + 1):
            term = base[h - 2] + int(col[h]) * half_denom
            if term < best:
                best = term
                arg = h
        out[k] = (Fraction(best, denom), arg)
    return out


def szykula_bound(n: int) -> Fraction:
    """Cubic reset-threshold bound (15617n^3 + 7500n^2 + 9375n - 31250)/93750."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return Fraction(15617 * n**3 + 7500 * n**2 + 9375 * n - 31250, 93750)


def conjectured_equality_onset(k: int) -> int:
    """Dimension 2k^2 - 8k + 12 past which the two bounds are conjectured
    to coincide for fixed k > 6."""
    return 2 * k * k - 8 * k + 12


@dataclass(frozen=True)
class ScanCell:
    f_value: Fraction
    b_value: Fraction
    argmin_h: int

    @property
    def f_eq_b(self) -> bool:
        return self.f_value == self.b_value


@dataclass
class ScanReport:
    """Observed evidence for the two bound conjectures; reports, never asserts.

    ``thresholds[k]`` is the smallest scanned n such that the bounds agree
    at every strictly larger scanned n (None when they still differ at the
    top of the range).
    """

    n_values: tuple[int, ...]
    k_values: tuple[int, ...]
    cells: dict[tuple[int, int], ScanCell]
    thresholds: dict[int, int | None]
    conjectured: dict[int, int]

    def argmin_always_two(self, k: int) -> bool:
        return all(
            cell.argmin_h == 2
            for (n, kk), cell in self.cells.items()
            if kk == k
        )


def scan_conjectures(n_values, k_values) -> ScanReport:
    ns = tuple(sorted(set(int(n) for n in n_values)))
    ks = tuple(sorted(set(int(k) for k in k_values)))
    if not ns or not ks:
        raise ValueError("scan ranges must be nonempty")
    cells: dict[tuple[int, int], ScanCell] = {}
    for n in ns:
        usable = [k for k in ks if 2 <= k <= n]
        if not usable:
            continue
        table = bound_f_table(n, max(usable))
        for k in usable:
            f_value, arg = table[k]
            cells[(n, k)] = ScanCell(f_value, bound_b_recursive(n, k), arg)
    thresholds: dict[int, int | None] = {}
    conjectured: dict[int, int] = {}
    for k in ks:
        conjectured[k] = conjectured_equality_onset(k)
        scanned = [n for n in ns if (n, k) in cells]
        if not scanned:
            thresholds[k] = None
            continue
        failures = [n for n in scanned if not cells[(n, k)].f_eq_b]
        if not failures:
            thresholds[k] = scanned[0]
        elif failures[-1] == scanned[-1]:
            thresholds[k] = None
        else:
            thresholds[k] = failures[-1]
    return ScanReport(ns, ks, cells, thresholds, conjectured)
