"""The formal derivative induced by a letter-substitution rule set.

A grammar maps letters to polynomials.  The derivative D is the linear
operator with D(letter) = rule(letter) extended by the Leibniz product
rule; letters without a rule differentiate to zero (a warning at
construction, an error in strict mode).  Iterated operators of the shape
"differentiate, then multiply by a fixed monomial" cover D^n and (xD)^n.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Mapping

from .poly import MONOMIAL_ONE, Monomial, Polynomial, validate_letter


class UnruledLetterWarning(UserWarning):
    """A rule right-hand side or input mentions a letter with no rule."""


class UnruledLetterError(ValueError):
    """Strict-mode derivation met a letter with no rule."""


class Grammar:
    """Immutable map from letters to their substitution polynomials."""

    __slots__ = ("_rules",)

    def __init__(self, rules: Mapping[str, Polynomial]) -> None:
        if not rules:
            raise ValueError("a grammar needs at least one rule")
        cleaned: dict[str, Polynomial] = {}
        for letter in sorted(rules):
            validate_letter(letter)
            body = rules[letter]
            if not isinstance(body, Polynomial):
                raise TypeError(f"rule for {letter!r} must be a Polynomial")
            cleaned[letter] = body
        self._rules = cleaned
        unruled = self.unruled_letters()
        if unruled:
            warnings.warn(
                f"letters {', '.join(unruled)} appear in rule bodies but have no rule; "
                "they will differentiate to zero",
                UnruledLetterWarning,
                stacklevel=2,
            )

    def rule(self, letter: str) -> Polynomial | None:
        return self._rules.get(letter)

    def letters(self) -> tuple[str, ...]:
        return tuple(self._rules)

    def unruled_letters(self) -> tuple[str, ...]:
        seen = {letter for body in self._rules.values() for letter in body.letters()}
        return tuple(sorted(seen - set(self._rules)))

    def render(self) -> str:
        return "; ".join(f"{letter} -> {body}" for letter, body in self._rules.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Grammar):
            return NotImplemented
        return self._rules == other._rules

    def __repr__(self) -> str:
        return f"Grammar({self.render()})"


@dataclass(frozen=True)
class OperatorExpr:
    """One derivation step: differentiate, then multiply by a fixed monomial.

    The empty-monomial prefix is plain D; prefix x gives the operator xD.
    """

    prefix: Monomial = MONOMIAL_ONE

    def render(self) -> str:
        return "D" if self.prefix == MONOMIAL_ONE else f"{self.prefix.render()}D"

    def __str__(self) -> str:
        return self.render()


def _check_ruled(grammar: Grammar, poly: Polynomial) -> None:
    missing = sorted(set(poly.letters()) - set(grammar.letters()))
    if missing:
        raise UnruledLetterError(
            f"letters {', '.join(missing)} have no rule (strict mode)"
        )


def derive(grammar: Grammar, poly: Polynomial, strict: bool = False) -> Polynomial:
    """Apply the formal derivative once.

    Termwise: a monomial c*prod(l^e) contributes c * sum over ruled letters
    of e * l^(e-1) * rule(l) * (the other letter powers).  Unruled letters
    contribute nothing unless strict, which raises UnruledLetterError.
    """
    if strict:
        _check_ruled(grammar, poly)
    total = Polynomial.zero()
    for mono, coeff in poly.terms():
        for letter, exp in mono.exps:
            rule = grammar.rule(letter)
            if rule is None:
                continue
            lowered = Polynomial.from_term(mono.with_exponent(letter, exp - 1), coeff * exp)
            total = total + lowered * rule
    return total


@dataclass(frozen=True)
class DerivationTrace:
    """All iterates of an operator run: iterates[0] is the seed."""

    grammar: Grammar
    operator: OperatorExpr
    seed: Polynomial
    iterates: tuple[Polynomial, ...]

    @property
    def steps(self) -> int:
        return len(self.iterates) - 1

    @property
    def final(self) -> Polynomial:
        return self.iterates[-1]


def apply_operator(
    grammar: Grammar,
    operator: OperatorExpr,
    seed: Polynomial,
    steps: int,
    strict: bool = False,
) -> DerivationTrace:
    """Iterate prefix*D starting from seed; step 0 is the seed unchanged."""
    if steps < 0:
        raise ValueError(f"steps must be nonnegative, got {steps}")
    prefix = Polynomial.from_term(operator.prefix)
    iterates = [seed]
    current = seed
    for _ in range(steps):
        current = prefix * derive(grammar, current, strict=strict)
        iterates.append(current)
    return DerivationTrace(grammar, operator, seed, tuple(iterates))
