"""Greedy column-growing heuristic for short positive-column products.

Seeded with the generator holding the heaviest column, the algorithm
repeatedly picks the column whose support escapes the grown column's
support at the smallest pair-digraph distance, appends the labels of that
shortest merging path, and multiplies them in.  Each round strictly
enlarges the grown column's support, so at most n - 1 rounds produce a
product with an all-ones column.

Prefix weight profiles (rows and columns both) are tracked letter by
letter, giving an upper bound on the k-rendezvous time for every k at
once.
"""

from __future__ import annotations

from dataclasses import dataclass

from .boolmat import BoolMatrix, MatrixSet
from .errors import NotPrimitiveError
from .pairgraph import build_pair_digraph, check_primitivity, normalized, singleton_distances

MODES = ("specific", "any")


@dataclass
class HeuristicTrace:
    """Word produced by the heuristic (seed generator first), its product,
    the grown column, and per-k first-reach prefix lengths."""

    word: tuple[int, ...]
    final: BoolMatrix
    column_index: int
    per_k_length: dict[int, int]
    mode: str
    iterations: int

    @property
    def length(self) -> int:
        return len(self.word)


def run_heuristic(mset: MatrixSet, mode: str = "specific") -> HeuristicTrace:
    """Run the greedy growth loop on a primitive set.

    ``specific`` keeps growing one fixed column i, always routing pairs to
    the singleton (i, i); ``any`` routes each pair to its nearest singleton
    and relabels the grown column to the singleton reached.  Ties always
    break toward the lowest generator index, then the lowest column index.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    report = check_primitivity(mset)
    if not report.primitive:
        raise NotPrimitiveError(report.describe(), report)
    n = mset.n
    full = (1 << n) - 1
    pd = build_pair_digraph(mset)

    seed_idx = 0
    seed_weight = -1
    for g_idx, g in enumerate(mset.generators):
        w = max(g.col(j).bit_count() for j in range(n))
        if w > seed_weight:
            seed_weight = w
            seed_idx = g_idx
    current = mset.generators[seed_idx]
    col_weights = [current.col(j).bit_count() for j in range(n)]
    grown = col_weights.index(max(col_weights))

    word: list[int] = [seed_idx]
    per_k: dict[int, int] = {}
    best_k = 1

    def note(mat: BoolMatrix) -> None:
        nonlocal best_k
        w = mat.weight_profile().max_weight
        for k in range(max(2, best_k + 1), w + 1):
            per_k[k] = len(word)
        best_k = max(best_k, w)

    note(current)

    if mode == "specific":
        distances = singleton_distances(pd, target=(grown, grown))
    else:
        distances = singleton_distances(pd)

    support = current.col(grown)
    iterations = 0
    while support != full:
        iterations += 1
        best_j = None
        best_d = None
        for j in range(n):
            if current.col(j) & ~support == 0:
                continue
            d = distances.dist.get(normalized(grown, j))
            if d is None:
                continue
            if best_d is None or d < best_d:
                best_d = d
                best_j = j
        # Primitivity guarantees every pair reaches every singleton.
        assert best_j is not None, "no mergeable column found on a primitive set"
        labels, endpoint = distances.path_from(normalized(grown, best_j))
        for g_idx in labels:
            current = current @ mset.generators[g_idx]
            word.append(g_idx)
            note(current)
        if mode == "any":
            grown = endpoint[0]
        previous = support
        support = current.col(grown)
        # Merging paths absorb the escaping column, so growth is strict.
        assert previous & ~support == 0 and support != previous

    assert current.col(grown) == full
    return HeuristicTrace(
        word=tuple(word),
        final=current,
        column_index=grown,
        per_k_length=per_k,
        mode=mode,
        iterations=iterations,
    )
