"""Oriented matroid perspectives (strong map pairs) and the 3-variable Tutte polynomial.

A pair (M, M') on the same ordered ground set is accepted only when it passes
the pairwise circuit/cocircuit scans: no circuit support of M meets a
cocircuit support of M' in exactly one element, and no signed circuit of M
shares a nonempty all-equal-sign intersection with a signed cocircuit of M'
(checked over the negation-closed families, hence sign-reversal invariant).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .matroid import (
    Digraph,
    InputFormatError,
    MatroidError,
    OrientedRealization,
    check_guard,
    from_digraph,
    subsets_in_order,
)
from .oriented import OrientedMatroid, SignedSubset
from .poly import Polynomial, X, Y, Z, ONE


class PerspectiveError(MatroidError):
    """The supplied pair is not a matroid perspective."""


@dataclass(frozen=True)
class ValidationReport:
    weak: bool
    oriented: bool
    weak_witness: tuple[SignedSubset, SignedSubset] | None = None
    oriented_witness: tuple[SignedSubset, SignedSubset] | None = None

    @property
    def passed(self) -> bool:
        return self.weak and self.oriented


def validate(m: OrientedMatroid, mprime: OrientedMatroid) -> ValidationReport:
    """Pairwise strong-map checks; witnesses are the first failing pairs."""
    if m.ground != mprime.ground:
        raise PerspectiveError("the two matroids must share the same ordered ground set")
    weak = True
    weak_witness = None
    for circ in m.circuits:
        for cocirc in mprime.cocircuits:
            if len(circ.support & cocirc.support) == 1:
                weak = False
                weak_witness = (circ, cocirc)
                break
        if not weak:
            break
    oriented = True
    oriented_witness = None
    for circ in m.circuits:
        for cocirc in mprime.cocircuits:
            shared = circ.support & cocirc.support
            if not shared:
                continue
            if (circ.positive & shared) == (cocirc.positive & shared):
                oriented = False
                oriented_witness = (circ, cocirc)
                break
        if not oriented:
            break
    return ValidationReport(weak, oriented, weak_witness, oriented_witness)


class Perspective:
    """Validated pair M -> M' of oriented matroids on one ordered ground set."""

    __slots__ = ("m", "mprime")

    def __init__(self, m: OrientedMatroid, mprime: OrientedMatroid):
        report = validate(m, mprime)
        if not report.passed:
            witness = report.weak_witness or report.oriented_witness
            kind = "weak" if not report.weak else "oriented"
            raise PerspectiveError(
                f"pair fails the {kind} strong-map check; witness circuit "
                f"{witness[0]} against cocircuit {witness[1]}")
        if mprime.realization.rank() > m.realization.rank():
            raise PerspectiveError("rank of M' exceeds rank of M")
        self.m = m
        self.mprime = mprime

    @property
    def ground(self) -> tuple[int, ...]:
        return self.m.ground

    def is_identity(self) -> bool:
        return self.m is self.mprime

    def rank_drop(self) -> int:
        return self.m.realization.rank() - self.mprime.realization.rank()

    def minor_delete(self, e: int, force: bool = False) -> "Perspective":
        return Perspective(self.m.minor_delete(e, force=force),
                           self.mprime.minor_delete(e, force=force))

    def minor_contract(self, e: int, force: bool = False) -> "Perspective":
        return Perspective(self.m.minor_contract(e, force=force),
                           self.mprime.minor_contract(e, force=force))

    def __repr__(self) -> str:
        return f"Perspective(|E|={len(self.ground)}, rank_drop={self.rank_drop()})"


def identity_perspective(m: OrientedRealization | OrientedMatroid,
                         force: bool = False) -> Perspective:
    """The perspective M -> M."""
    om = m if isinstance(m, OrientedMatroid) else OrientedMatroid.from_realization(m, force=force)
    return Perspective(om, om)


def from_major(n: OrientedRealization, c: Iterable[int], force: bool = False) -> Perspective:
    """Delete/contract factorization: M = n with c deleted, M' = n with c contracted."""
    c = frozenset(c)
    for e in c:
        n.index_of(e)
    if c == set(n.ground):
        raise PerspectiveError("cannot contract the whole ground set; E would be empty")
    m_real = n.delete_many(c)
    mprime_real = n.contract_many(c)
    return Perspective(OrientedMatroid.from_realization(m_real, force=force),
                       OrientedMatroid.from_realization(mprime_real, force=force))


def tutte3_closed(p: Perspective, force: bool = False) -> Polynomial:
    """3-variable Tutte polynomial of the perspective via the closed subset sum."""
    m = p.m.realization
    mp = p.mprime.realization
    check_guard(len(m.ground), force)
    r_m = m.rank()
    r_mp = mp.rank()
    drop = r_m - r_mp
    counts: dict[tuple[int, int, int], int] = {}
    for _, subset in subsets_in_order(m.ground):
        ra = m.rank(subset)
        rpa = mp.rank(subset)
        zexp = drop - (ra - rpa)
        if zexp < 0:
            raise PerspectiveError(
                f"negative z exponent at subset {sorted(subset)}; "
                "the pair violates the strong-map rank axiom")
        key = (r_mp - rpa, len(subset) - ra, zexp)
        counts[key] = counts.get(key, 0) + 1
    xm1 = X - ONE
    ym1 = Y - ONE
    total = Polynomial.zero()
    for (i, j, k), count in sorted(counts.items()):
        total = total + count * xm1 ** i * ym1 ** j * Z ** k
    return total


def bounded_perspective(m: OrientedRealization, e: int, force: bool = False) -> Perspective:
    """Perspective onto the contraction by ``e`` extended by a loop at e's slot.

    Requires e to be neither a loop nor an isthmus, mirroring the
    bounded-region / bipolar-orientation construction.
    """
    if m.is_loop(e):
        raise PerspectiveError(f"element {e} is a loop; a non-factor element is required")
    if m.is_isthmus(e):
        raise PerspectiveError(f"element {e} is an isthmus; a non-factor element is required")
    contracted = m.contract(e)
    pos = m.index_of(e)
    rows = [row[:pos] + (Fraction(0),) + row[pos:] for row in contracted.matrix]
    mprime_real = OrientedRealization(m.ground, rows)
    return Perspective(OrientedMatroid.from_realization(m, force=force),
                       OrientedMatroid.from_realization(mprime_real, force=force))


# -- perspective file format ----------------------------------------------------

def _parse_payload(fmt: str, text: str) -> OrientedRealization:
    if fmt == "digraph":
        return from_digraph(Digraph.parse(text))
    if fmt == "matrix":
        return OrientedRealization.parse_matrix(text)
    raise InputFormatError(f"unknown input format {fmt!r}; expected digraph or matrix")


def parse_perspective(text: str, force: bool = False) -> Perspective:
    """Parse the perspective file format.

    Either::

        major: <digraph|matrix>
        ...payload lines...
        contract: <labels>

    or::

        pair: <digraph|matrix> <digraph|matrix>
        ...payload one...
        ---
        ...payload two...
    """
    lines = text.splitlines()
    header = None
    header_at = 0
    for i, raw in enumerate(lines):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            header = stripped
            header_at = i
            break
    if header is None:
        raise InputFormatError("empty perspective file")
    body = lines[header_at + 1:]
    if header.startswith("major:"):
        fmt = header.split(":", 1)[1].strip()
        contract_line = None
        payload: list[str] = []
        for raw in body:
            stripped = raw.split("#", 1)[0].strip()
            if stripped.startswith("contract:"):
                contract_line = stripped
            else:
                payload.append(raw)
        if contract_line is None:
            raise InputFormatError("major-form perspective needs a 'contract:' line")
        labels_text = contract_line.split(":", 1)[1].split()
        try:
            labels = frozenset(int(t) for t in labels_text)
        except ValueError:
            raise InputFormatError(f"bad contract labels {labels_text!r}")
        major = _parse_payload(fmt, "\n".join(payload))
        return from_major(major, labels, force=force)
    if header.startswith("pair:"):
        fmts = header.split(":", 1)[1].split()
        if len(fmts) == 1:
            fmts = fmts * 2
        if len(fmts) != 2:
            raise InputFormatError("pair header needs one or two format words")
        chunks: list[list[str]] = [[]]
        for raw in body:
            if raw.strip() == "---":
                chunks.append([])
            else:
                chunks[-1].append(raw)
        if len(chunks) != 2:
            raise InputFormatError("pair-form perspective needs exactly one '---' separator")
        m_real = _parse_payload(fmts[0], "\n".join(chunks[0]))
        mp_real = _parse_payload(fmts[1], "\n".join(chunks[1]))
        if m_real.ground != mp_real.ground:
            raise PerspectiveError("the two inputs must share the same ordered ground set")
        return Perspective(OrientedMatroid.from_realization(m_real, force=force),
                           OrientedMatroid.from_realization(mp_real, force=force))
    raise InputFormatError("perspective file must start with 'major:' or 'pair:'")
