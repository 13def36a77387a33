"""Exact sparse polynomial arithmetic over the integers.

Polynomials live in the fixed variable universe (x, u, y, v, z) and are
represented as a dictionary mapping monomials to arbitrary-precision integer
coefficients.  Zero-coefficient terms are never stored, so structural
equality is polynomial equality and the text rendering is deterministic.

Evaluation returns exact rationals (fractions.Fraction); there is no
floating point anywhere, so identity checks are fully reliable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

VARIABLES = ("x", "u", "y", "v", "z")
_VAR_INDEX = {name: i for i, name in enumerate(VARIABLES)}

_NVARS = len(VARIABLES)
_ZERO_EXPS = (0,) * _NVARS


class PolynomialParseError(ValueError):
    """Malformed polynomial text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (position {position})")
        self.position = position


def _check_variable(name: str) -> int:
    if name not in _VAR_INDEX:
        raise ValueError(f"unknown variable {name!r}; allowed: {', '.join(VARIABLES)}")
    return _VAR_INDEX[name]


@dataclass(frozen=True)
class Monomial:
    """A product of variable powers, stored as one exponent per variable.

    Exponents are kept in VARIABLES order; variables with exponent 0 are
    absent from the mapping view returned by :meth:`exponents`.
    """

    exps: tuple[int, ...]

    def __post_init__(self):
        if len(self.exps) != _NVARS:
            raise ValueError(f"expected {_NVARS} exponents, got {len(self.exps)}")
        if any(e < 0 for e in self.exps):
            raise ValueError("negative exponent in monomial")

    @classmethod
    def one(cls) -> "Monomial":
        return cls(_ZERO_EXPS)

    @classmethod
    def from_exponents(cls, mapping: Mapping[str, int]) -> "Monomial":
        exps = [0] * _NVARS
        for name, e in mapping.items():
            exps[_check_variable(name)] = e
        return cls(tuple(exps))

    def exponents(self) -> dict[str, int]:
        """Mapping view {variable: exponent} with zero exponents omitted."""
        return {VARIABLES[i]: e for i, e in enumerate(self.exps) if e}

    @property
    def degree(self) -> int:
        return sum(self.exps)

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def sort_key(self) -> tuple:
        # total degree first, then the exponent vector; callers sort descending
        return (self.degree, self.exps)

    def __str__(self) -> str:
        parts = []
        for i, e in enumerate(self.exps):
            if e == 1:
                parts.append(VARIABLES[i])
            elif e > 1:
                parts.append(f"{VARIABLES[i]}^{e}")
        return "*".join(parts) if parts else "1"


class Polynomial:
    """Immutable sparse polynomial with integer coefficients.

    Supports +, -, *, ** with other polynomials and ints.  All operations
    return canonical polynomials (no zero terms).
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        clean = {}
        if terms:
            for mono, coeff in terms.items():
                if coeff:
                    clean[mono] = coeff
        object.__setattr__(self, "_terms", clean)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls()

    @classmethod
    def one(cls) -> "Polynomial":
        return cls.constant(1)

    @classmethod
    def constant(cls, value: int) -> "Polynomial":
        return cls({Monomial.one(): int(value)})

    @classmethod
    def variable(cls, name: str) -> "Polynomial":
        idx = _check_variable(name)
        exps = [0] * _NVARS
        exps[idx] = 1
        return cls({Monomial(tuple(exps)): 1})

    # -- inspection --------------------------------------------------------

    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def coefficient(self, mono: Monomial) -> int:
        return self._terms.get(mono, 0)

    def variables(self) -> set[str]:
        out: set[str] = set()
        for mono in self._terms:
            out.update(mono.exponents())
        return out

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def total_degree(self) -> int:
        return max((m.degree for m in self._terms), default=0)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for mono, coeff in other._terms.items():
            out[mono] = out.get(mono, 0) + coeff
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = m1 * m2
                out[mono] = out.get(mono, 0) + c1 * c2
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == Polynomial.constant(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- substitution, evaluation, derivatives ------------------------------

    def substitute(self, bindings: Mapping[str, "Polynomial | int"]) -> "Polynomial":
        """Simultaneously replace variables by polynomials, fully expanded."""
        fixed: dict[int, Polynomial] = {}
        for name, value in bindings.items():
            fixed[_check_variable(name)] = _coerce_strict(value)
        result = Polynomial.zero()
        for mono, coeff in self._terms.items():
            term = Polynomial.constant(coeff)
            residual = [0] * _NVARS
            for i, e in enumerate(mono.exps):
                if not e:
                    continue
                if i in fixed:
                    term = term * fixed[i] ** e
                else:
                    residual[i] = e
            term = term * Polynomial({Monomial(tuple(residual)): 1})
            result = result + term
        return result

    def evaluate(self, assignment: Mapping[str, "Fraction | int"]) -> Fraction:
        """Exact value at a rational point; every present variable must be bound."""
        values: dict[int, Fraction] = {}
        for name, val in assignment.items():
            values[_check_variable(name)] = Fraction(val)
        total = Fraction(0)
        for mono, coeff in self._terms.items():
            term = Fraction(coeff)
            for i, e in enumerate(mono.exps):
                if not e:
                    continue
                if i not in values:
                    raise ValueError(f"no value assigned to variable {VARIABLES[i]!r}")
                term *= values[i] ** e
            total += term
        return total

    def partial_derivative(self, var: str, order: int = 1) -> "Polynomial":
        """Formal derivative with respect to ``var`` applied ``order`` times."""
        if not isinstance(order, int) or order < 0:
            raise ValueError("derivative order must be a non-negative integer")
        idx = _check_variable(var)
        poly = self
        for _ in range(order):
            out: dict[Monomial, int] = {}
            for mono, coeff in poly._terms.items():
                e = mono.exps[idx]
                if not e:
                    continue
                exps = list(mono.exps)
                exps[idx] = e - 1
                out[Monomial(tuple(exps))] = coeff * e
            poly = Polynomial(out)
        return poly

    # -- canonical text ----------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        ordered = sorted(self._terms, key=Monomial.sort_key, reverse=True)
        pieces = []
        for i, mono in enumerate(ordered):
            coeff = self._terms[mono]
            mono_text = str(mono)
            mag = abs(coeff)
            if mono_text == "1":
                body = str(mag)
            elif mag == 1:
                body = mono_text
            else:
                body = f"{mag}*{mono_text}"
            if i == 0:
                pieces.append(body if coeff > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"Polynomial({self})"

    @classmethod
    def parse(cls, text: str) -> "Polynomial":
        return _parse(text)


def _coerce(value) -> "Polynomial":
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, int):
        return Polynomial.constant(value)
    return NotImplemented


def _coerce_strict(value) -> "Polynomial":
    out = _coerce(value)
    if out is NotImplemented:
        raise TypeError(f"cannot treat {value!r} as a polynomial")
    return out


# -- parser -----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>[a-zA-Z])|(?P<op>[-+*^]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            bad_at = len(text) - len(stripped)
            raise PolynomialParseError(f"unexpected character {text[bad_at]!r}", bad_at)
        kind = match.lastgroup
        tokens.append((kind, match.group(kind), match.start(kind)))
        pos = match.end()
    return tokens


def _parse(text: str) -> Polynomial:
    tokens = _tokenize(text)
    if not tokens:
        raise PolynomialParseError("empty polynomial text", 0)
    terms: dict[Monomial, int] = {}
    i = 0
    first = True
    while i < len(tokens):
        sign = 1
        kind, value, at = tokens[i]
        if kind == "op" and value in "+-":
            if value == "+" and first:
                raise PolynomialParseError("polynomial cannot start with '+'", at)
            sign = -1 if value == "-" else 1
            i += 1
        elif not first:
            raise PolynomialParseError("expected '+' or '-' between terms", at)
        first = False
        coeff, exps, i = _parse_term(tokens, i)
        mono = Monomial(tuple(exps))
        terms[mono] = terms.get(mono, 0) + sign * coeff
    return Polynomial(terms)


def _parse_term(tokens, i) -> tuple[int, list[int], int]:
    coeff = 1
    exps = [0] * _NVARS
    expect_factor = True
    while True:
        if i >= len(tokens):
            if expect_factor:
                last = tokens[-1][2] if tokens else 0
                raise PolynomialParseError("term ends without a factor", last)
            return coeff, exps, i
        kind, value, at = tokens[i]
        if expect_factor:
            if kind == "int":
                coeff *= int(value)
                i += 1
            elif kind == "var":
                if value not in _VAR_INDEX:
                    raise PolynomialParseError(f"unknown variable {value!r}", at)
                power = 1
                i += 1
                if i < len(tokens) and tokens[i][0] == "op" and tokens[i][1] == "^":
                    if i + 1 >= len(tokens) or tokens[i + 1][0] != "int":
                        raise PolynomialParseError("'^' must be followed by an integer", at)
                    power = int(tokens[i + 1][1])
                    i += 2
                exps[_VAR_INDEX[value]] += power
            else:
                raise PolynomialParseError(f"expected a coefficient or variable, got {value!r}", at)
            expect_factor = False
        else:
            if kind == "op" and value == "*":
                expect_factor = True
                i += 1
            elif kind == "op" and value == "^":
                raise PolynomialParseError("'^' is only allowed on variables", at)
            elif kind == "op" and value in "+-":
                return coeff, exps, i
            else:
                raise PolynomialParseError(f"expected an operator, got {value!r}", at)


# Convenience generators for the five variables.
X = Polynomial.variable("x")
U = Polynomial.variable("u")
Y = Polynomial.variable("y")
V = Polynomial.variable("v")
Z = Polynomial.variable("z")
ONE = Polynomial.one()
