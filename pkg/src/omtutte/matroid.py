"""Ordered ground sets, rational realizations, ranks, bases, and Tutte polynomials.

A matroid is always given by a realization: a matrix of exact rationals with
one column per ground element, in ground order.  Digraphs are ingested via
their signed vertex-arc incidence matrices, so graphic instances get signed
circuits for free.  Rank is column rank computed by exact elimination.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .poly import Polynomial, X, Y, ONE

ENUMERATION_GUARD = 20


class MatroidError(ValueError):
    pass


class EnumerationGuardError(MatroidError):
    """Ground set too large for a full 2^|E| sweep without an explicit override."""


class InputFormatError(MatroidError):
    """Malformed digraph or matrix text."""


def check_guard(n: int, force: bool) -> None:
    if n > ENUMERATION_GUARD and not force:
        raise EnumerationGuardError(
            f"ground set has {n} elements; full enumeration is guarded at "
            f"{ENUMERATION_GUARD} (pass force=True / --force to override)"
        )


# -- exact linear algebra -----------------------------------------------------

Vector = tuple[Fraction, ...]


def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    rows = [list(r) for r in rows]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = rows[r][c]
        rows[r] = [v / inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def _column_rank(cols: Sequence[Vector]) -> int:
    if not cols:
        return 0
    nrows = len(cols[0])
    if nrows == 0:
        return 0
    rows = [[col[i] for col in cols] for i in range(nrows)]
    _, pivots = _rref(rows)
    return len(pivots)


def _kernel_basis(rows: Sequence[Vector], ncols: int) -> list[Vector]:
    """Basis of the right kernel of the matrix given by ``rows``."""
    reduced, pivots = _rref([list(r) for r in rows])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for r, p in enumerate(pivots):
            vec[p] = -reduced[r][f]
        basis.append(tuple(vec))
    return basis


# -- digraphs -----------------------------------------------------------------

@dataclass(frozen=True)
class Digraph:
    """Arc-labelled directed multigraph; loops permitted, labels distinct."""

    vertices: tuple
    arcs: tuple[tuple[int, str, str], ...]

    @classmethod
    def from_arcs(cls, arcs: Iterable[tuple[int, object, object]],
                  vertices: Iterable[object] = ()) -> "Digraph":
        arc_list = []
        seen = set()
        verts = set(vertices)
        for label, tail, head in arcs:
            label = int(label)
            if label <= 0:
                raise MatroidError(f"arc labels must be positive integers, got {label}")
            if label in seen:
                raise MatroidError(f"duplicate arc label {label}")
            seen.add(label)
            verts.add(tail)
            verts.add(head)
            arc_list.append((label, tail, head))
        arc_list.sort(key=lambda a: a[0])
        return cls(tuple(sorted(verts, key=str)), tuple(arc_list))

    @classmethod
    def parse(cls, text: str) -> "Digraph":
        """One arc per line: ``<label> <tail> <head>``; ``#`` starts a comment."""
        arcs = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 3:
                raise InputFormatError(
                    f"line {lineno}: expected '<label> <tail> <head>', got {raw!r}")
            try:
                label = int(parts[0])
            except ValueError:
                raise InputFormatError(f"line {lineno}: arc label {parts[0]!r} is not an integer")
            arcs.append((label, parts[1], parts[2]))
        return cls.from_arcs(arcs)


# -- realizations -------------------------------------------------------------

class OrientedRealization:
    """Rational matrix whose columns realize the matroid, in ground order."""

    __slots__ = ("ground", "matrix", "_index", "_rank_cache")

    def __init__(self, ground: Sequence[int], matrix: Sequence[Sequence[Fraction]]):
        ground = tuple(int(g) for g in ground)
        if len(set(ground)) != len(ground):
            raise MatroidError("ground labels must be distinct")
        rows = tuple(tuple(Fraction(v) for v in row) for row in matrix)
        for row in rows:
            if len(row) != len(ground):
                raise MatroidError(
                    f"matrix row has {len(row)} entries for {len(ground)} ground elements")
        self.ground = ground
        self.matrix = rows
        self._index = {e: i for i, e in enumerate(ground)}
        self._rank_cache: dict[frozenset, int] = {}

    # -- basic queries ----------------------------------------------------

    def __len__(self) -> int:
        return len(self.ground)

    def index_of(self, label: int) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise MatroidError(f"unknown ground element {label}") from None

    def column(self, label: int) -> Vector:
        i = self.index_of(label)
        return tuple(row[i] for row in self.matrix)

    def columns(self, labels: Iterable[int]) -> list[Vector]:
        return [self.column(e) for e in labels]

    def rank(self, subset: Iterable[int] | None = None) -> int:
        """Rank of the column submatrix indexed by ``subset`` (default: all of E)."""
        labels = frozenset(self.ground if subset is None else subset)
        for e in labels:
            self.index_of(e)
        cached = self._rank_cache.get(labels)
        if cached is None:
            cached = _column_rank(self.columns(sorted(labels)))
            self._rank_cache[labels] = cached
        return cached

    def is_loop(self, e: int) -> bool:
        return self.rank({e}) == 0

    def is_isthmus(self, e: int) -> bool:
        rest = set(self.ground) - {e}
        self.index_of(e)
        return self.rank(rest) < self.rank()

    # -- minors, duality, reorientation -------------------------------------

    def delete(self, e: int) -> "OrientedRealization":
        i = self.index_of(e)
        ground = self.ground[:i] + self.ground[i + 1:]
        matrix = [row[:i] + row[i + 1:] for row in self.matrix]
        return OrientedRealization(ground, matrix)

    def contract(self, e: int) -> "OrientedRealization":
        """Quotient of the column space by column e; a loop contracts as a delete."""
        i = self.index_of(e)
        col = self.column(e)
        pivot_row = next((r for r, v in enumerate(col) if v != 0), None)
        if pivot_row is None:
            return self.delete(e)
        pivot = col[pivot_row]
        pivot_vals = self.matrix[pivot_row]
        ground = self.ground[:i] + self.ground[i + 1:]
        new_rows = []
        for r, row in enumerate(self.matrix):
            if r == pivot_row:
                continue
            new_row = [row[j] - pivot_vals[j] / pivot * col[r]
                       for j in range(len(row)) if j != i]
            new_rows.append(tuple(new_row))
        return OrientedRealization(ground, new_rows)

    def delete_many(self, labels: Iterable[int]) -> "OrientedRealization":
        m = self
        for e in sorted(labels):
            m = m.delete(e)
        return m

    def contract_many(self, labels: Iterable[int]) -> "OrientedRealization":
        m = self
        for e in sorted(labels):
            m = m.contract(e)
        return m

    def dual(self) -> "OrientedRealization":
        """Realization whose row space is the orthogonal complement of this one's."""
        basis = _kernel_basis(self.matrix, len(self.ground))
        return OrientedRealization(self.ground, basis)

    def negate_columns(self, labels: Iterable[int]) -> "OrientedRealization":
        idx = {self.index_of(e) for e in labels}
        matrix = [tuple(-v if j in idx else v for j, v in enumerate(row))
                  for row in self.matrix]
        return OrientedRealization(self.ground, matrix)

    def __repr__(self) -> str:
        return f"OrientedRealization(ground={self.ground}, rank={self.rank()})"

    @classmethod
    def parse_matrix(cls, text: str) -> "OrientedRealization":
        """First line ``<rows> <cols>``, then row-major rational entries."""
        tokens = []
        for raw in text.splitlines():
            tokens.extend(raw.split("#", 1)[0].split())
        if len(tokens) < 2:
            raise InputFormatError("matrix text must start with '<rows> <cols>'")
        try:
            nrows, ncols = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise InputFormatError(f"bad matrix header {tokens[0]!r} {tokens[1]!r}")
        if nrows < 0 or ncols < 0:
            raise InputFormatError("matrix dimensions must be non-negative")
        entries = tokens[2:]
        if len(entries) != nrows * ncols:
            raise InputFormatError(
                f"expected {nrows * ncols} matrix entries, got {len(entries)}")
        try:
            values = [Fraction(t) for t in entries]
        except (ValueError, ZeroDivisionError) as exc:
            raise InputFormatError(f"bad rational entry: {exc}")
        rows = [values[r * ncols:(r + 1) * ncols] for r in range(nrows)]
        return cls(range(1, ncols + 1), rows)


def from_digraph(g: Digraph) -> OrientedRealization:
    """Signed incidence realization: +1 at the head row, -1 at the tail row."""
    vrow = {v: i for i, v in enumerate(g.vertices)}
    labels = [a[0] for a in g.arcs]
    matrix = [[Fraction(0)] * len(labels) for _ in g.vertices]
    for j, (_, tail, head) in enumerate(g.arcs):
        matrix[vrow[head]][j] += 1
        matrix[vrow[tail]][j] -= 1
    return OrientedRealization(labels, matrix)


# -- subset sweeps ------------------------------------------------------------

def subsets_in_order(ground: Sequence[int]):
    """All subsets by binary counting on the ordered ground set (bit i = ground[i])."""
    n = len(ground)
    for mask in range(1 << n):
        yield mask, frozenset(ground[i] for i in range(n) if mask >> i & 1)


def tutte_closed(m: OrientedRealization, force: bool = False) -> Polynomial:
    """Tutte polynomial as the corank-nullity sum over all subsets of E."""
    n = len(m.ground)
    check_guard(n, force)
    r = m.rank()
    counts: dict[tuple[int, int], int] = {}
    for _, subset in subsets_in_order(m.ground):
        ra = m.rank(subset)
        key = (r - ra, len(subset) - ra)
        counts[key] = counts.get(key, 0) + 1
    xm1 = X - ONE
    ym1 = Y - ONE
    total = Polynomial.zero()
    for (i, j), count in sorted(counts.items()):
        total = total + count * xm1 ** i * ym1 ** j
    return total


def bases(m: OrientedRealization, force: bool = False) -> list[frozenset[int]]:
    """All maximal independent sets, in ascending canonical order."""
    n = len(m.ground)
    check_guard(n, force)
    r = m.rank()
    out = []
    for combo in itertools.combinations(m.ground, r):
        if m.rank(combo) == r:
            out.append(frozenset(combo))
    return out


@dataclass(frozen=True)
class BasisActivity:
    internal: frozenset[int]
    external: frozenset[int]

    @property
    def iota(self) -> int:
        return len(self.internal)

    @property
    def epsilon(self) -> int:
        return len(self.external)


def basis_activities(m: OrientedRealization, b: Iterable[int]) -> BasisActivity:
    """Internally/externally active elements of a basis.

    An element e of B is internally active when it is smallest in its
    fundamental cocircuit; e outside B is externally active when it is
    smallest in its fundamental circuit.
    """
    b = frozenset(b)
    r = m.rank()
    if len(b) != r or m.rank(b) != r:
        raise MatroidError(f"{sorted(b)} is not a basis")
    ground = set(m.ground)
    internal = set()
    for e in b:
        cocircuit = {e}
        rest = b - {e}
        for f in ground - b:
            if m.rank(rest | {f}) == r:
                cocircuit.add(f)
        if e == min(cocircuit):
            internal.add(e)
    external = set()
    for e in ground - b:
        circuit = {e}
        for f in b:
            if m.rank((b - {f}) | {e}) == r:
                circuit.add(f)
        if e == min(circuit):
            external.add(e)
    return BasisActivity(frozenset(internal), frozenset(external))


def tutte_bases(m: OrientedRealization, force: bool = False) -> Polynomial:
    """Tutte polynomial as the basis-activity state sum; equals tutte_closed."""
    total = Polynomial.zero()
    for b in bases(m, force=force):
        act = basis_activities(m, b)
        total = total + X ** act.iota * Y ** act.epsilon
    return total
