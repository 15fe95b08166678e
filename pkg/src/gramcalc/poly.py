"""Exact sparse multivariate polynomial arithmetic over big integers.

Letters are identifier strings treated as independent commuting
indeterminates.  A monomial maps letters to positive exponents; a
polynomial maps monomials to nonzero integer coefficients.  Both are
immutable and kept in canonical form, so equal values compare equal and
render identically.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping

_LETTER_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


def validate_letter(name: str) -> str:
    """Check that a letter is an identifier starting with an alphabetic char."""
    if not isinstance(name, str) or _LETTER_RE.match(name) is None:
        raise ValueError(f"invalid letter {name!r}")
    return name


class Monomial:
    """A product of letter powers such as x^4*y; the empty product is 1.

    Hashable and totally ordered: ascending total degree first, then
    descending lexicographic on exponents with letters in name order.
    That ordering puts x*y before 3*x*y^2 and x^4*y before 2*x^3*y^2,
    and is the global term order used everywhere.
    """

    __slots__ = ("_exps", "_degree", "_hash")

    def __init__(self, exponents: Mapping[str, int] | Iterable[tuple[str, int]] = ()) -> None:
        kept: list[tuple[str, int]] = []
        for letter, exp in sorted(dict(exponents).items()):
            validate_letter(letter)
            if not isinstance(exp, int):
                raise TypeError(f"exponent of {letter!r} must be int, got {type(exp).__name__}")
            if exp < 0:
                raise ValueError(f"negative exponent {letter}^{exp}")
            if exp > 0:
                kept.append((letter, exp))
        self._exps = tuple(kept)
        self._degree = sum(e for _, e in kept)
        self._hash = hash(self._exps)

    @property
    def exps(self) -> tuple[tuple[str, int], ...]:
        return self._exps

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def letters(self) -> tuple[str, ...]:
        return tuple(letter for letter, _ in self._exps)

    def exponent(self, letter: str) -> int:
        for name, exp in self._exps:
            if name == letter:
                return exp
        return 0

    def with_exponent(self, letter: str, exp: int) -> Monomial:
        """Copy with one letter's exponent replaced (0 removes the letter)."""
        exps = dict(self._exps)
        exps[letter] = exp
        return Monomial(exps)

    def __mul__(self, other: Monomial) -> Monomial:
        if not isinstance(other, Monomial):
            return NotImplemented
        exps = dict(self._exps)
        for letter, exp in other._exps:
            exps[letter] = exps.get(letter, 0) + exp
        return Monomial(exps)

    def sort_key(self) -> tuple:
        return (self._degree, tuple((letter, -exp) for letter, exp in self._exps))

    def render(self) -> str:
        if not self._exps:
            return "1"
        return "*".join(f"{letter}^{exp}" if exp > 1 else letter for letter, exp in self._exps)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Monomial):
            return NotImplemented
        return self._exps == other._exps

    def __lt__(self, other: Monomial) -> bool:
        if not isinstance(other, Monomial):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"Monomial({self.render()})"


MONOMIAL_ONE = Monomial()


class Polynomial:
    """A finite integer combination of monomials, in canonical form.

    Canonical form stores no zero coefficients; the zero polynomial has an
    empty term map and the constant 1 is the empty monomial with
    coefficient 1.  All operations are pure and preserve canonical form.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = ()) -> None:
        data: dict[Monomial, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, coeff in items:
            if not isinstance(mono, Monomial):
                raise TypeError(f"term key must be Monomial, got {type(mono).__name__}")
            if not isinstance(coeff, int):
                raise TypeError(f"coefficient must be int, got {type(coeff).__name__}")
            merged = data.get(mono, 0) + coeff
            if merged:
                data[mono] = merged
            else:
                data.pop(mono, None)
        self._terms = data

    @classmethod
    def zero(cls) -> Polynomial:
        return cls()

    @classmethod
    def one(cls) -> Polynomial:
        return cls.constant(1)

    @classmethod
    def constant(cls, value: int) -> Polynomial:
        return cls({MONOMIAL_ONE: value}) if value else cls()

    @classmethod
    def variable(cls, letter: str) -> Polynomial:
        return cls({Monomial({letter: 1}): 1})

    @classmethod
    def from_term(cls, mono: Monomial, coeff: int = 1) -> Polynomial:
        return cls({mono: coeff}) if coeff else cls()

    def terms(self) -> list[tuple[Monomial, int]]:
        """Terms in the global deterministic order."""
        return sorted(self._terms.items(), key=lambda item: item[0].sort_key())

    def coefficient(self, mono: Monomial) -> int:
        return self._terms.get(mono, 0)

    def letters(self) -> tuple[str, ...]:
        found = {letter for mono in self._terms for letter in mono.letters}
        return tuple(sorted(found))

    def term_count(self) -> int:
        return len(self._terms)

    def _coerce(self, other: Polynomial | int) -> Polynomial | None:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return Polynomial.constant(other)
        return None

    def __add__(self, other: Polynomial | int) -> Polynomial:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        data = dict(self._terms)
        for mono, coeff in rhs._terms.items():
            merged = data.get(mono, 0) + coeff
            if merged:
                data[mono] = merged
            else:
                data.pop(mono, None)
        out = Polynomial.zero()
        out._terms = data
        return out

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        out = Polynomial.zero()
        out._terms = {mono: -coeff for mono, coeff in self._terms.items()}
        return out

    def __sub__(self, other: Polynomial | int) -> Polynomial:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: Polynomial | int) -> Polynomial:
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: Polynomial | int) -> Polynomial:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        data: dict[Monomial, int] = {}
        for mono_a, coeff_a in self._terms.items():
            for mono_b, coeff_b in rhs._terms.items():
                mono = mono_a * mono_b
                merged = data.get(mono, 0) + coeff_a * coeff_b
                if merged:
                    data[mono] = merged
                else:
                    data.pop(mono, None)
        out = Polynomial.zero()
        out._terms = data
        return out

    __rmul__ = __mul__

    def __pow__(self, exp: int) -> Polynomial:
        if not isinstance(exp, int) or exp < 0:
            raise ValueError(f"polynomial power must be a nonnegative int, got {exp!r}")
        out = Polynomial.one()
        for _ in range(exp):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for i, (mono, coeff) in enumerate(self.terms()):
            mag = abs(coeff)
            if mono.degree == 0:
                body = str(mag)
            elif mag == 1:
                body = mono.render()
            else:
                body = f"{mag}*{mono.render()}"
            if i == 0:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f" + {body}" if coeff > 0 else f" - {body}")
        return "".join(parts)

    def render(self) -> str:
        """Canonical text form, identical for equal polynomials."""
        return str(self)

    def __repr__(self) -> str:
        return f"Polynomial({self})"
