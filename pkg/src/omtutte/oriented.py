"""Signed circuits and cocircuits, reorientation, and orientation activities.

Circuits are enumerated once per realization (subsets of size at most rank+1
scanned for minimal dependence, signs read off the one-dimensional kernel of
the support columns); reorientation afterwards only flips stored signs and
negates realization columns, so the 2^|E| reorientation sweep never re-runs
linear algebra.  "Smallest" always refers to the ascending label order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .matroid import (
    MatroidError,
    OrientedRealization,
    _column_rank,
    _kernel_basis,
    check_guard,
)
from .poly import Monomial


@dataclass(frozen=True)
class SignedSubset:
    """Disjoint positive/negative element sets; circuits have nonempty support."""

    positive: frozenset[int]
    negative: frozenset[int]

    def __post_init__(self):
        if self.positive & self.negative:
            raise MatroidError("positive and negative parts must be disjoint")

    @classmethod
    def make(cls, positive: Iterable[int] = (), negative: Iterable[int] = ()) -> "SignedSubset":
        return cls(frozenset(positive), frozenset(negative))

    @property
    def support(self) -> frozenset[int]:
        return self.positive | self.negative

    @property
    def is_positive(self) -> bool:
        return not self.negative

    def negate(self) -> "SignedSubset":
        return SignedSubset(self.negative, self.positive)

    def reorient(self, labels: frozenset[int]) -> "SignedSubset":
        pos = (self.positive - labels) | (self.negative & labels)
        neg = (self.negative - labels) | (self.positive & labels)
        return SignedSubset(pos, neg)

    def sort_key(self) -> tuple:
        return (tuple(sorted(self.support)), tuple(sorted(self.positive)))

    def __str__(self) -> str:
        parts = [f"+{e}" for e in sorted(self.positive)]
        parts += [f"-{e}" for e in sorted(self.negative)]
        return "{" + ",".join(parts) + "}"


def conformal(y: SignedSubset, x: SignedSubset) -> bool:
    """True when y's signs sit inside x's: Y+ within X+ and Y- within X-."""
    return y.positive <= x.positive and y.negative <= x.negative


def _sorted_family(family: Iterable[SignedSubset]) -> tuple[SignedSubset, ...]:
    return tuple(sorted(family, key=SignedSubset.sort_key))


def signed_circuits(m: OrientedRealization, force: bool = False) -> tuple[SignedSubset, ...]:
    """All signed circuits of the realization, closed under negation.

    A support is a circuit when it is dependent and contains no smaller
    circuit; the sign pattern is the kernel vector of its columns.
    """
    check_guard(len(m.ground), force)
    family: list[SignedSubset] = []
    supports: list[frozenset[int]] = []
    loops = [e for e in m.ground if m.is_loop(e)]
    for e in loops:
        circuit = SignedSubset.make({e})
        family += [circuit, circuit.negate()]
        supports.append(circuit.support)
    nonloops = [e for e in m.ground if not m.is_loop(e)]
    r = m.rank()
    for size in range(2, min(r + 1, len(nonloops)) + 1):
        for combo in itertools.combinations(nonloops, size):
            support = frozenset(combo)
            if any(s <= support for s in supports):
                continue
            cols = m.columns(combo)
            if _column_rank(cols) == size:
                continue
            nrows = len(cols[0]) if cols else 0
            rows = [[col[i] for col in cols] for i in range(nrows)]
            kernel = _kernel_basis(rows, size)
            if len(kernel) != 1:
                raise MatroidError("internal error: circuit kernel is not one-dimensional")
            coeffs = kernel[0]
            circuit = SignedSubset(
                frozenset(e for e, c in zip(combo, coeffs) if c > 0),
                frozenset(e for e, c in zip(combo, coeffs) if c < 0),
            )
            if len(circuit.support) != size:
                raise MatroidError("internal error: zero coefficient on a circuit support")
            family += [circuit, circuit.negate()]
            supports.append(support)
    return _sorted_family(family)


def signed_cocircuits(m: OrientedRealization, force: bool = False) -> tuple[SignedSubset, ...]:
    """Signed circuits of the dual realization."""
    return signed_circuits(m.dual(), force=force)


class OrientedMatroid:
    """A realization together with its signed circuit and cocircuit families.

    Values are immutable; ``reorient`` returns a new instance with signs
    flipped and the realization's columns negated accordingly, keeping the
    two views consistent.
    """

    __slots__ = ("realization", "circuits", "cocircuits", "reorientation")

    def __init__(self, realization: OrientedRealization,
                 circuits: tuple[SignedSubset, ...],
                 cocircuits: tuple[SignedSubset, ...],
                 reorientation: frozenset[int] = frozenset()):
        self.realization = realization
        self.circuits = circuits
        self.cocircuits = cocircuits
        self.reorientation = reorientation

    @classmethod
    def from_realization(cls, m: OrientedRealization, force: bool = False) -> "OrientedMatroid":
        return cls(m, signed_circuits(m, force=force), signed_cocircuits(m, force=force))

    @property
    def ground(self) -> tuple[int, ...]:
        return self.realization.ground

    def reorient(self, labels: Iterable[int]) -> "OrientedMatroid":
        a = frozenset(labels)
        for e in a:
            self.realization.index_of(e)
        if not a:
            return self
        return OrientedMatroid(
            self.realization.negate_columns(a),
            _sorted_family(c.reorient(a) for c in self.circuits),
            _sorted_family(c.reorient(a) for c in self.cocircuits),
            self.reorientation ^ a,
        )

    def dual(self) -> "OrientedMatroid":
        return OrientedMatroid(self.realization.dual(), self.cocircuits,
                               self.circuits, self.reorientation)

    def minor_delete(self, e: int, force: bool = False) -> "OrientedMatroid":
        return OrientedMatroid.from_realization(self.realization.delete(e), force=force)

    def minor_contract(self, e: int, force: bool = False) -> "OrientedMatroid":
        return OrientedMatroid.from_realization(self.realization.contract(e), force=force)

    def __repr__(self) -> str:
        return (f"OrientedMatroid(|E|={len(self.ground)}, "
                f"circuits={len(self.circuits) // 2}, reoriented={sorted(self.reorientation)})")


def orientation_active_sets(om: OrientedMatroid) -> tuple[frozenset[int], frozenset[int]]:
    """(active, dual-active): smallest elements of positive circuits resp. cocircuits."""
    active = frozenset(min(c.support) for c in om.circuits if c.is_positive)
    dual_active = frozenset(min(c.support) for c in om.cocircuits if c.is_positive)
    return active, dual_active


def element_indicators(om: OrientedMatroid, a: int) -> tuple[int, int]:
    """Membership indicators of ``a`` in the active and dual-active sets."""
    om.realization.index_of(a)
    active, dual_active = orientation_active_sets(om)
    return (1 if a in active else 0, 1 if a in dual_active else 0)


def is_acyclic(om: OrientedMatroid) -> bool:
    """No positive circuit exists."""
    return not any(c.is_positive for c in om.circuits)


def is_totally_cyclic(om: OrientedMatroid) -> bool:
    """Every element of E lies in some positive circuit."""
    covered: set[int] = set()
    for c in om.circuits:
        if c.is_positive:
            covered |= c.support
    return covered == set(om.ground)


def minty_check(om: OrientedMatroid) -> bool:
    """Each element sits in a positive circuit or a positive cocircuit, never both."""
    in_circuit: set[int] = set()
    for c in om.circuits:
        if c.is_positive:
            in_circuit |= c.support
    in_cocircuit: set[int] = set()
    for c in om.cocircuits:
        if c.is_positive:
            in_cocircuit |= c.support
    universe = set(om.ground)
    return (in_circuit | in_cocircuit == universe) and not (in_circuit & in_cocircuit)


@dataclass(frozen=True)
class ActivityRecord:
    """Activity data of one reorientation A, plus its monomial contribution.

    ``active`` and ``dual_active`` are the active sets of the reoriented
    matroid; each is split by membership outside/inside A into the four
    refinement sets.  The monomial is
    x^|dual_out| * u^|dual_in| * y^|active_out| * v^|active_in|.
    """

    A: frozenset[int]
    active: frozenset[int]
    dual_active: frozenset[int]
    active_out: frozenset[int]
    active_in: frozenset[int]
    dual_out: frozenset[int]
    dual_in: frozenset[int]
    monomial: Monomial

    @classmethod
    def build(cls, A: frozenset[int], active: frozenset[int],
              dual_active: frozenset[int]) -> "ActivityRecord":
        active_out = active - A
        active_in = active & A
        dual_out = dual_active - A
        dual_in = dual_active & A
        mono = Monomial.from_exponents({
            "x": len(dual_out),
            "u": len(dual_in),
            "y": len(active_out),
            "v": len(active_in),
        })
        return cls(A, active, dual_active, active_out, active_in,
                   dual_out, dual_in, mono)


def activity_record(om_base: OrientedMatroid, A: Iterable[int]) -> ActivityRecord:
    """Activity record of the reorientation of ``om_base`` on ``A``."""
    a = frozenset(A)
    active, dual_active = orientation_active_sets(om_base.reorient(a))
    return ActivityRecord.build(a, active, dual_active)
