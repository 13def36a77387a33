"""Shared test utilities: independent oracles and seeded instance generators.

The oracles here deliberately avoid the library's elimination and circuit
machinery: rank comes from brute-force minors, cycle questions from graph
search, so cross-checks against the library are genuinely two-sided.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from omtutte.matroid import Digraph, OrientedRealization, from_digraph


def determinant(rows: list[list[Fraction]]) -> Fraction:
    """Laplace expansion; fine for the tiny matrices used in tests."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return rows[0][0]
    total = Fraction(0)
    for j, head in enumerate(rows[0]):
        if head == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        total += (-1) ** j * head * determinant(minor)
    return total


def oracle_rank(cols: list[tuple[Fraction, ...]]) -> int:
    """Largest k admitting a nonsingular k-by-k minor."""
    if not cols or not cols[0]:
        return 0
    nrows = len(cols[0])
    for k in range(min(len(cols), nrows), 0, -1):
        for col_pick in itertools.combinations(range(len(cols)), k):
            for row_pick in itertools.combinations(range(nrows), k):
                minor = [[cols[c][r] for c in col_pick] for r in row_pick]
                if determinant(minor) != 0:
                    return k
    return 0


def arcs_with_flips(g: Digraph, flipped: frozenset[int]) -> list[tuple[int, object, object]]:
    out = []
    for label, tail, head in g.arcs:
        if label in flipped:
            out.append((label, head, tail))
        else:
            out.append((label, tail, head))
    return out


def has_directed_cycle(g: Digraph, flipped: frozenset[int] = frozenset()) -> bool:
    """DFS cycle detection on the reoriented digraph; loops count as cycles."""
    arcs = arcs_with_flips(g, flipped)
    succ: dict = {v: [] for v in g.vertices}
    for _, tail, head in arcs:
        if tail == head:
            return True
        succ[tail].append(head)
    WHITE, GREY, BLACK = 0, 1, 2
    color = {v: WHITE for v in g.vertices}

    def visit(v) -> bool:
        color[v] = GREY
        for w in succ[v]:
            if color[w] == GREY:
                return True
            if color[w] == WHITE and visit(w):
                return True
        color[v] = BLACK
        return False

    return any(color[v] == WHITE and visit(v) for v in g.vertices)


def every_arc_on_directed_cycle(g: Digraph, flipped: frozenset[int] = frozenset()) -> bool:
    """Graph statement of total cyclicity: head reaches tail for each arc."""
    arcs = arcs_with_flips(g, flipped)
    succ: dict = {v: set() for v in g.vertices}
    for _, tail, head in arcs:
        succ[tail].add(head)

    def reaches(src, dst) -> bool:
        seen = {src}
        stack = [src]
        while stack:
            v = stack.pop()
            if v == dst:
                return True
            for w in succ[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return False

    return all(tail == head or reaches(head, tail) for _, tail, head in arcs)


def weakly_connected(g: Digraph) -> bool:
    if not g.vertices:
        return True
    adj: dict = {v: set() for v in g.vertices}
    for _, tail, head in g.arcs:
        adj[tail].add(head)
        adj[head].add(tail)
    seen = {g.vertices[0]}
    stack = [g.vertices[0]]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == set(g.vertices)


def random_digraph(rng: random.Random, max_vertices: int = 4, max_arcs: int = 5) -> Digraph:
    """A weakly connected digraph within the size bounds; loops permitted."""
    while True:
        nv = rng.randint(1, max_vertices)
        ne = rng.randint(1, max_arcs)
        vertices = [f"w{i}" for i in range(nv)]
        arcs = [(i + 1, rng.choice(vertices), rng.choice(vertices)) for i in range(ne)]
        g = Digraph.from_arcs(arcs)
        if weakly_connected(g):
            return g


def random_realization(rng: random.Random, max_rows: int = 4, max_cols: int = 8) -> OrientedRealization:
    nrows = rng.randint(1, max_rows)
    ncols = rng.randint(1, max_cols)
    rows = [[Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(ncols)]
            for _ in range(nrows)]
    return OrientedRealization(range(1, ncols + 1), rows)


def random_digraph_realization(rng: random.Random) -> OrientedRealization:
    return from_digraph(random_digraph(rng))


# The 16-row activity table of the doubled triangle, keyed by reorientation
# subset: (dual_active, active, dual_out, dual_in, active_out, active_in, monomial).
DOUBLED_TRIANGLE_ROWS = {
    (): ("13", "", "13", "", "", "", "x^2"),
    (4,): ("1", "", "1", "", "", "", "x"),
    (3,): ("", "12", "", "", "12", "", "y^2"),
    (3, 4): ("13", "", "1", "3", "", "", "x*u"),
    (2,): ("3", "1", "3", "", "1", "", "x*y"),
    (2, 3): ("", "1", "", "", "1", "", "y"),
    (2, 4): ("", "12", "", "", "1", "2", "y*v"),
    (2, 3, 4): ("3", "1", "", "3", "1", "", "u*y"),
    (1,): ("3", "1", "3", "", "", "1", "x*v"),
    (1, 4): ("", "1", "", "", "", "1", "v"),
    (1, 3): ("", "12", "", "", "2", "1", "y*v"),
    (1, 3, 4): ("3", "1", "", "3", "", "1", "u*v"),
    (1, 2): ("13", "", "3", "1", "", "", "x*u"),
    (1, 2, 4): ("", "12", "", "", "", "12", "v^2"),
    (1, 2, 3): ("1", "", "", "1", "", "", "u"),
    (1, 2, 3, 4): ("13", "", "", "13", "", "", "u^2"),
}

# The 32-row table of the two-graph perspective: A -> (dual_active, active, monomial).
TWO_GRAPH_ROWS = {
    (): ("12", "", "x^2"),
    (5,): ("1", "", "x"),
    (4,): ("", "", "1"),
    (4, 5): ("", "", "1"),
    (3,): ("1", "", "x"),
    (3, 5): ("1", "", "x"),
    (3, 4): ("", "", "1"),
    (3, 4, 5): ("1", "", "x"),
    (2,): ("", "1", "y"),
    (2, 5): ("", "1", "y"),
    (2, 4): ("", "1", "y"),
    (2, 4, 5): ("", "1", "y"),
    (2, 3): ("", "", "1"),
    (2, 3, 5): ("1", "", "x"),
    (2, 3, 4): ("", "", "1"),
    (2, 3, 4, 5): ("12", "", "x*u"),
    (1,): ("12", "", "x*u"),
    (1, 5): ("", "", "1"),
    (1, 4): ("1", "", "u"),
    (1, 4, 5): ("", "", "1"),
    (1, 3): ("", "1", "v"),
    (1, 3, 5): ("", "1", "v"),
    (1, 3, 4): ("", "1", "v"),
    (1, 3, 4, 5): ("", "1", "v"),
    (1, 2): ("1", "", "u"),
    (1, 2, 5): ("", "", "1"),
    (1, 2, 4): ("1", "", "u"),
    (1, 2, 4, 5): ("1", "", "u"),
    (1, 2, 3): ("", "", "1"),
    (1, 2, 3, 5): ("", "", "1"),
    (1, 2, 3, 4): ("1", "", "u"),
    (1, 2, 3, 4, 5): ("12", "", "u^2"),
}


def labels_of(text: str) -> frozenset:
    return frozenset(int(ch) for ch in text)
