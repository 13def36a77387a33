"""Generating functions over all reorientations, counting identities, derivatives.

The central sweep visits every subset A of the ground set, computes the four
activity counts (the dual pair taken in M', the primal pair in M), and sums
the monomials x^|dual_out| u^|dual_in| y^|active_out| v^|active_in|.  The
reference polynomial is always the closed rank formula shifted by x -> x+u,
y -> y+v, never the sweep itself, so the identity check has genuinely
independent sides.

Circuits and cocircuits are pre-packed into bitmasks once; the per-subset
work is pure integer arithmetic.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .matroid import MatroidError, OrientedRealization, check_guard
from .oriented import (
    ActivityRecord,
    OrientedMatroid,
    SignedSubset,
    orientation_active_sets,
)
from .perspective import Perspective, identity_perspective, tutte3_closed
from .poly import Monomial, Polynomial, X, U, Y, V, ONE


class IdentityError(AssertionError):
    """An exact identity that must hold for valid input failed; signals a bug."""


# -- packed sweep machinery ---------------------------------------------------

def _pack_family(family: Sequence[SignedSubset], index: dict[int, int]) -> list[tuple[int, int, int]]:
    """One (positive mask, negative mask, min-element bit) triple per +/- pair."""
    packed = []
    seen = set()
    for s in family:
        sup = s.support
        canon = (sup, s.positive) if tuple(sorted(s.positive)) <= tuple(sorted(s.negative)) else (sup, s.negative)
        if canon in seen:
            continue
        seen.add(canon)
        pos = 0
        for e in s.positive:
            pos |= 1 << index[e]
        neg = 0
        for e in s.negative:
            neg |= 1 << index[e]
        min_bit = 1 << index[min(sup)]
        packed.append((pos, neg, min_bit))
    return packed


def _active_min_mask(packed: Sequence[tuple[int, int, int]], a_mask: int) -> int:
    """Bits of the smallest elements of sign vectors positive after reorienting on A."""
    out = 0
    for pos, neg, min_bit in packed:
        if out & min_bit:
            continue
        if (neg & a_mask) == neg and not (pos & a_mask):
            out |= min_bit
        elif (pos & a_mask) == pos and not (neg & a_mask):
            out |= min_bit
    return out


def _mask_to_set(mask: int, ground: Sequence[int]) -> frozenset[int]:
    return frozenset(ground[i] for i in range(len(ground)) if mask >> i & 1)


class _Sweeper:
    """Packed circuit/cocircuit tables for one perspective."""

    def __init__(self, p: Perspective):
        self.ground = p.ground
        index = {e: i for i, e in enumerate(self.ground)}
        self.circuits_m = _pack_family(p.m.circuits, index) if self.ground else []
        self.cocircuits_mp = _pack_family(p.mprime.cocircuits, index) if self.ground else []

    def record(self, a_mask: int) -> ActivityRecord:
        active_mask = _active_min_mask(self.circuits_m, a_mask)
        dual_mask = _active_min_mask(self.cocircuits_mp, a_mask)
        return ActivityRecord.build(
            _mask_to_set(a_mask, self.ground),
            _mask_to_set(active_mask, self.ground),
            _mask_to_set(dual_mask, self.ground),
        )

    def counts(self, a_mask: int) -> tuple[int, int, int, int]:
        """(dual_out, dual_in, active_out, active_in) sizes for one reorientation."""
        active = _active_min_mask(self.circuits_m, a_mask)
        dual = _active_min_mask(self.cocircuits_mp, a_mask)
        return ((dual & ~a_mask).bit_count(), (dual & a_mask).bit_count(),
                (active & ~a_mask).bit_count(), (active & a_mask).bit_count())


@dataclass(frozen=True)
class ExpansionReport:
    """Full reorientation sweep: one row per subset, in binary counting order."""

    rows: tuple[ActivityRecord, ...]
    total: Polynomial
    reference: Polynomial
    passed: bool

    def to_tsv(self) -> str:
        header = "A\tdual_active\tactive\tdual_out\tdual_in\tactive_out\tactive_in\tmonomial"
        lines = [header]
        for row in self.rows:
            lines.append("\t".join([
                _set_text(row.A), _set_text(row.dual_active), _set_text(row.active),
                _set_text(row.dual_out), _set_text(row.dual_in),
                _set_text(row.active_out), _set_text(row.active_in),
                str(row.monomial),
            ]))
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "pass": self.passed,
            "sum": str(self.total),
            "reference": str(self.reference),
            "rows": [{
                "A": _set_text(row.A),
                "dual_active": _set_text(row.dual_active),
                "active": _set_text(row.active),
                "dual_out": _set_text(row.dual_out),
                "dual_in": _set_text(row.dual_in),
                "active_out": _set_text(row.active_out),
                "active_in": _set_text(row.active_in),
                "monomial": str(row.monomial),
            } for row in self.rows],
        }


def _set_text(labels: frozenset[int]) -> str:
    if not labels:
        return "-"
    return "".join(str(e) for e in sorted(labels))


def monomial_of(p: Perspective, A: Iterable[int]) -> ActivityRecord:
    """Activity record of one reorientation: dual data in M', primal in M."""
    a = frozenset(A)
    _, dual_active = orientation_active_sets(p.mprime.reorient(a))
    active, _ = orientation_active_sets(p.m.reorient(a))
    return ActivityRecord.build(a, active, dual_active)


def _sweep_rows(p: Perspective, force: bool, threads: int = 1) -> tuple[ActivityRecord, ...]:
    n = len(p.ground)
    check_guard(n, force)
    sweeper = _Sweeper(p)
    total = 1 << n
    if threads <= 1 or total < 1024:
        return tuple(sweeper.record(a) for a in range(total))
    chunk = (total + threads - 1) // threads
    spans = [(lo, min(lo + chunk, total)) for lo in range(0, total, chunk)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = pool.map(lambda span: [sweeper.record(a) for a in range(*span)], spans)
        rows: list[ActivityRecord] = []
        for part in parts:
            rows.extend(part)
    return tuple(rows)


def expansion_sum(p: Perspective, force: bool = False, threads: int = 1) -> ExpansionReport:
    """The 4-variable activity generating function, checked against the shift.

    The reference side substitutes x -> x+u, y -> y+v into the closed-formula
    Tutte polynomial at z = 1; passed is exact polynomial equality.
    """
    rows = _sweep_rows(p, force, threads)
    terms: dict[Monomial, int] = {}
    for row in rows:
        terms[row.monomial] = terms.get(row.monomial, 0) + 1
    total = Polynomial(terms)
    reference = tutte3_closed(p, force=force).substitute({"z": 1}).substitute(
        {"x": X + U, "y": Y + V})
    return ExpansionReport(rows, total, reference, total == reference)


def doubling_expansion(p: Perspective, force: bool = False) -> Polynomial:
    """Two-variable activity sum over all A; equals the Tutte polynomial at (2x, 2y, 1).

    Each reorientation contributes x to the dual activity count times y to
    the primal activity count.
    """
    n = len(p.ground)
    check_guard(n, force)
    sweeper = _Sweeper(p)
    terms: dict[Monomial, int] = {}
    for a_mask in range(1 << n):
        d_out, d_in, a_out, a_in = sweeper.counts(a_mask)
        mono = Monomial.from_exponents({"x": d_out + d_in, "y": a_out + a_in})
        terms[mono] = terms.get(mono, 0) + 1
    return Polynomial(terms)


@dataclass(frozen=True)
class SpecializationReport:
    """Two-variable consequences recomputed from the stored sweep rows."""

    tutte: Polynomial
    interpolation: Polynomial
    restricted: Polynomial
    restricted_swap: Polynomial
    doubling_out: int
    doubling_in: int
    two_zero: int
    interpolation_ok: bool
    restricted_ok: bool
    restricted_swap_ok: bool
    doubling_ok: bool

    @property
    def passed(self) -> bool:
        return (self.interpolation_ok and self.restricted_ok
                and self.restricted_swap_ok and self.doubling_ok)


def specialization_suite(p: Perspective, report: ExpansionReport | None = None,
                         force: bool = False) -> SpecializationReport:
    """Check the 2-variable specializations of the 4-variable expansion.

    (a) the (x-1)/(y-1) interpolation over all rows equals t(x,y,1);
    (b) the restriction to rows whose inside-A activities vanish equals
        t(x,y,1), and so does its complement-swapped twin;
    (c) the two doubling counts (2 to the remaining activity, over rows with
        the other three activities zero) both equal t(2,0,1).
    """
    if report is None:
        report = expansion_sum(p, force=force)
    tutte = tutte3_closed(p, force=force).substitute({"z": 1})
    xm1 = X - ONE
    ym1 = Y - ONE
    interpolation = Polynomial.zero()
    restricted = Polynomial.zero()
    restricted_swap = Polynomial.zero()
    doubling_out = 0
    doubling_in = 0
    for row in report.rows:
        d_out, d_in = len(row.dual_out), len(row.dual_in)
        a_out, a_in = len(row.active_out), len(row.active_in)
        interpolation = interpolation + xm1 ** d_out * ym1 ** a_out
        if d_in == 0 and a_in == 0:
            restricted = restricted + X ** d_out * Y ** a_out
        if d_out == 0 and a_out == 0:
            restricted_swap = restricted_swap + X ** d_in * Y ** a_in
        if d_in == 0 and a_out == 0 and a_in == 0:
            doubling_out += 2 ** d_out
        if d_out == 0 and a_out == 0 and a_in == 0:
            doubling_in += 2 ** d_in
    two_zero = tutte.evaluate({"x": 2, "y": 0})
    if two_zero.denominator != 1:
        raise IdentityError("t(2,0,1) is not an integer")
    two_zero = int(two_zero)
    return SpecializationReport(
        tutte=tutte,
        interpolation=interpolation,
        restricted=restricted,
        restricted_swap=restricted_swap,
        doubling_out=doubling_out,
        doubling_in=doubling_in,
        two_zero=two_zero,
        interpolation_ok=interpolation == tutte,
        restricted_ok=restricted == tutte,
        restricted_swap_ok=restricted_swap == tutte,
        doubling_ok=doubling_out == two_zero and doubling_in == two_zero,
    )


# -- counting identities -------------------------------------------------------

def count_acyclic(m: OrientedRealization | OrientedMatroid, force: bool = False) -> int:
    """Number of reorientation subsets A with no positive circuit in -_A M."""
    om = m if isinstance(m, OrientedMatroid) else OrientedMatroid.from_realization(m, force=force)
    n = len(om.ground)
    check_guard(n, force)
    index = {e: i for i, e in enumerate(om.ground)}
    circuits = _pack_family(om.circuits, index) if om.ground else []
    count = 0
    for a_mask in range(1 << n):
        if not _active_min_mask(circuits, a_mask):
            count += 1
    return count


def count_bounded(p: Perspective, force: bool = False) -> int:
    """Number of A with -_A M acyclic and -_A M' totally cyclic."""
    n = len(p.ground)
    check_guard(n, force)
    index = {e: i for i, e in enumerate(p.ground)}
    circuits_m = _pack_family(p.m.circuits, index) if p.ground else []
    circuits_mp = _pack_family(p.mprime.circuits, index) if p.ground else []
    supports = [(pos | neg, pos, neg) for pos, neg, _ in circuits_mp]
    full = (1 << n) - 1
    count = 0
    for a_mask in range(1 << n):
        if _active_min_mask(circuits_m, a_mask):
            continue
        covered = 0
        for sup, pos, neg in supports:
            if (neg & a_mask) == neg and not (pos & a_mask):
                covered |= sup
            elif (pos & a_mask) == pos and not (neg & a_mask):
                covered |= sup
            if covered == full:
                break
        if covered == full:
            count += 1
    return count


def signed_sum(p: Perspective, force: bool = False) -> int:
    """Alternating activity sum over all A, with its three sign variants.

    The principal variant puts the signs on the two outside-A counts; all
    four variants must agree (they are the +-1 evaluations of the same
    4-variable expansion), and disagreement raises, since it would mean the
    expansion itself is broken.
    """
    n = len(p.ground)
    check_guard(n, force)
    sweeper = _Sweeper(p)
    sums = [0, 0, 0, 0]
    for a_mask in range(1 << n):
        d_out, d_in, a_out, a_in = sweeper.counts(a_mask)
        sums[0] += (-1) ** (d_out + a_out)
        sums[1] += (-1) ** (d_in + a_in)
        sums[2] += (-1) ** (d_out + a_in)
        sums[3] += (-1) ** (d_in + a_out)
    if len(set(sums)) != 1:
        raise IdentityError(f"sign-variant alternating sums disagree: {sums}")
    return sums[0]


def count_basic_orientations(m: OrientedRealization | OrientedMatroid,
                             force: bool = False) -> tuple[int, int]:
    """Counts of A with both outside-A resp. both inside-A activities zero.

    Each equals the number of bases, i.e. the Tutte polynomial at (1, 1).
    """
    p = identity_perspective(m, force=force)
    n = len(p.ground)
    check_guard(n, force)
    sweeper = _Sweeper(p)
    out_free = 0
    in_free = 0
    for a_mask in range(1 << n):
        d_out, d_in, a_out, a_in = sweeper.counts(a_mask)
        if d_out == 0 and a_out == 0:
            out_free += 1
        if d_in == 0 and a_in == 0:
            in_free += 1
    return out_free, in_free


# -- derivatives ----------------------------------------------------------------

def derivative_expansion(p: Perspective, dp: int, dq: int,
                         report: ExpansionReport | None = None,
                         force: bool = False) -> Polynomial:
    """p! q! times the x/y activity sum over rows with inside-A counts (p, q).

    Equals the formal (p, q) partial derivative of t(x, y, 1).
    """
    if dp < 0 or dq < 0:
        raise ValueError("derivative orders must be non-negative")
    if report is None:
        report = expansion_sum(p, force=force)
    total = Polynomial.zero()
    for row in report.rows:
        if len(row.dual_in) == dp and len(row.active_in) == dq:
            total = total + X ** len(row.dual_out) * Y ** len(row.active_out)
    return math.factorial(dp) * math.factorial(dq) * total


def derivative_diag(p: Perspective, dp: int,
                    report: ExpansionReport | None = None,
                    force: bool = False) -> Polynomial:
    """p! times the x-power sum over rows whose inside-A counts total p.

    Equals the p-th formal derivative of t(x, x, 1).
    """
    if dp < 0:
        raise ValueError("derivative order must be non-negative")
    if report is None:
        report = expansion_sum(p, force=force)
    total = Polynomial.zero()
    for row in report.rows:
        if len(row.dual_in) + len(row.active_in) == dp:
            total = total + X ** (len(row.dual_out) + len(row.active_out))
    return math.factorial(dp) * total


# -- the dichotomy and the minor recursion --------------------------------------

class DichotomyCase(Enum):
    CASE_I = "i"
    CASE_II = "ii"
    BOTH = "both"


class DichotomyError(IdentityError):
    """Neither dichotomy case holds; the input is invalid or there is a bug."""


def dichotomy_case(p: Perspective, force: bool = False) -> DichotomyCase:
    """Which indicator-transfer case holds at the greatest element.

    Case i: deleting the greatest element e preserves the base indicators
    and contracting e matches the e-flipped ones, for every smaller element;
    case ii swaps the roles of deletion and contraction.  A valid
    perspective always satisfies at least one case.
    """
    ground = p.ground
    if not ground:
        raise MatroidError("the dichotomy needs at least one ground element")
    e = max(ground)
    others = set(ground) - {e}

    def active_pair(om: OrientedMatroid) -> tuple[frozenset[int], frozenset[int]]:
        active, dual_active = orientation_active_sets(om)
        return active & others, dual_active & others

    act_m, _ = active_pair(p.m)
    _, dual_mp = active_pair(p.mprime)
    act_m_flip, _ = active_pair(p.m.reorient({e}))
    _, dual_mp_flip = active_pair(p.mprime.reorient({e}))
    act_m_del, _ = active_pair(p.m.minor_delete(e, force=force))
    act_m_con, _ = active_pair(p.m.minor_contract(e, force=force))
    _, dual_mp_del = active_pair(p.mprime.minor_delete(e, force=force))
    _, dual_mp_con = active_pair(p.mprime.minor_contract(e, force=force))

    case_i = (dual_mp == dual_mp_del and act_m == act_m_del
              and dual_mp_flip == dual_mp_con and act_m_flip == act_m_con)
    case_ii = (dual_mp == dual_mp_con and act_m == act_m_con
               and dual_mp_flip == dual_mp_del and act_m_flip == act_m_del)
    if case_i and case_ii:
        return DichotomyCase.BOTH
    if case_i:
        return DichotomyCase.CASE_I
    if case_ii:
        return DichotomyCase.CASE_II
    raise DichotomyError(
        f"neither dichotomy case holds at greatest element {e}: "
        f"active(M)={sorted(act_m)}, active(M\\e)={sorted(act_m_del)}, "
        f"active(M/e)={sorted(act_m_con)}, active(-eM)={sorted(act_m_flip)}; "
        f"dual(M')={sorted(dual_mp)}, dual(M'\\e)={sorted(dual_mp_del)}, "
        f"dual(M'/e)={sorted(dual_mp_con)}, dual(-eM')={sorted(dual_mp_flip)}")


def deletion_contraction_check(p: Perspective, force: bool = False) -> bool:
    """One step of the minor recursion for the 4-variable expansion.

    Greatest element an isthmus of M': multiply the deleted minor's sum by
    (x+u); a loop of M: by (y+v); otherwise the deleted and contracted
    minors' sums add up.  The empty perspective sums to 1.
    """
    if not p.ground:
        return expansion_sum(p, force=force).total == ONE
    e = max(p.ground)
    full = expansion_sum(p, force=force).total
    if p.mprime.realization.is_isthmus(e):
        minor = expansion_sum(p.minor_delete(e, force=force), force=force).total
        return full == (X + U) * minor
    if p.m.realization.is_loop(e):
        minor = expansion_sum(p.minor_delete(e, force=force), force=force).total
        return full == (Y + V) * minor
    deleted = expansion_sum(p.minor_delete(e, force=force), force=force).total
    contracted = expansion_sum(p.minor_contract(e, force=force), force=force).total
    return full == deleted + contracted
