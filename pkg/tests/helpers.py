"""Shared generators and independent oracles for the test suite.

The oracles here deliberately use their own straightforward algorithms
(naive closures, entry-level checks) so production code is checked against
an independent route, not against itself.
"""

from __future__ import annotations

import random

from rendezvous import BoolMatrix, MatrixSet, is_primitive
from rendezvous.automata import Automaton


def random_nz_matrix(rng: random.Random, n: int) -> BoolMatrix:
    rows = []
    for _ in range(n):
        row = rng.getrandbits(n) & ((1 << n) - 1)
        if row == 0:
            row = 1 << rng.randrange(n)
        rows.append(row)
    covered = 0
    for row in rows:
        covered |= row
    for j in range(n):
        if not (covered >> j) & 1:
            rows[rng.randrange(n)] |= 1 << j
    return BoolMatrix(n, tuple(rows))


def random_nz_set(rng: random.Random, n: int, m: int) -> MatrixSet:
    return MatrixSet.of([random_nz_matrix(rng, n) for _ in range(m)])


def random_primitive_set(
    rng: random.Random, n: int, m: int, attempts: int = 20000
) -> MatrixSet:
    for _ in range(attempts):
        candidate = random_nz_set(rng, n, m)
        if is_primitive(candidate):
            return candidate
    raise RuntimeError(f"no primitive set found for n={n}, m={m}")


def random_automaton(rng: random.Random, n: int, m: int) -> Automaton:
    letters = tuple(
        BoolMatrix(n, tuple(1 << rng.randrange(n) for _ in range(n)))
        for _ in range(m)
    )
    return Automaton(n, letters, tuple(f"x{i}" for i in range(m)))


def naive_product(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    """Triple-loop boolean product on 0/1 nested lists (oracle route)."""
    n = len(a)
    return [
        [1 if any(a[i][s] and b[s][j] for s in range(n)) else 0 for j in range(n)]
        for i in range(n)
    ]


def as_lists(mat: BoolMatrix) -> list[list[int]]:
    return [[mat.entry(i, j) for j in range(mat.n)] for i in range(mat.n)]


def semigroup_closure(mset: MatrixSet, cap: int = 500_000) -> set[tuple[int, ...]]:
    """Full forward closure of the generated semigroup, as row-tuple keys."""
    gens = [g.rows for g in mset.generators]
    n = mset.n

    def mult(rows: tuple[int, ...], g: tuple[int, ...]) -> tuple[int, ...]:
        out = []
        for mask in rows:
            acc = 0
            for s in range(n):
                if (mask >> s) & 1:
                    acc |= g[s]
            out.append(acc)
        return tuple(out)

    seen = set(gens)
    frontier = list(dict.fromkeys(gens))
    while frontier:
        nxt = []
        for rows in frontier:
            for g in gens:
                child = mult(rows, g)
                if child not in seen:
                    seen.add(child)
                    nxt.append(child)
                    if len(seen) > cap:
                        raise RuntimeError("closure cap exceeded")
        frontier = nxt
    return seen


def brute_force_primitive(mset: MatrixSet, cap: int = 500_000) -> bool:
    """Primitivity oracle: the all-ones matrix lies in the semigroup closure."""
    full = (1 << mset.n) - 1
    target = tuple(full for _ in range(mset.n))
    return target in semigroup_closure(mset, cap)


def forward_reset_threshold(aut: Automaton, max_depth: int = 200) -> int | None:
    """Reset threshold by forward BFS over letter products looking for an
    all-ones column (independent of the backward subset BFS)."""
    n = aut.n
    gens = [as_lists(letter) for letter in aut.letters]
    current = [g for g in gens]
    seen = {tuple(tuple(r) for r in g) for g in current}

    def has_ones_column(mat: list[list[int]]) -> bool:
        return any(all(mat[i][j] for i in range(n)) for j in range(n))

    depth = 1
    while current and depth <= max_depth:
        for mat in current:
            if has_ones_column(mat):
                return depth
        nxt = []
        for mat in current:
            for g in gens:
                child = naive_product(mat, g)
                key = tuple(tuple(r) for r in child)
                if key not in seen:
                    seen.add(key)
                    nxt.append(child)
        current = nxt
        depth += 1
    return None
