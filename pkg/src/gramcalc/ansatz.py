"""Structural ansatz inversion: read coefficient triangles off iterates.

Each identity in the case registry asserts that the step-n iterate is a
sum of monomials whose exponents follow affine laws in (n, k).  Extraction
recovers k from one designated letter, checks every other letter against
its law, divides out an optional geometric scale factor, and places the
coefficient at index k.  Any monomial that fails a law is a structural
failure, which is an error rather than a mismatch: it means either an
engine bug or a mistranscribed case.
"""

from __future__ import annotations

from dataclasses import dataclass

from .poly import Polynomial


class AnsatzMismatch(ValueError):
    """A derivation iterate does not fit the declared structural shape."""


@dataclass(frozen=True)
class Affine:
    """Integer form const + n_coef*n + k_coef*k."""

    const: int = 0
    n_coef: int = 0
    k_coef: int = 0

    def at(self, n: int, k: int = 0) -> int:
        return self.const + self.n_coef * n + self.k_coef * k


@dataclass(frozen=True)
class KBound:
    """Integer form (const + n_coef*n) // divisor, floor division."""

    const: int = 0
    n_coef: int = 0
    divisor: int = 1

    def at(self, n: int) -> int:
        return (self.const + self.n_coef * n) // self.divisor


@dataclass(frozen=True)
class Ansatz:
    """Exponent laws plus k-range, scale and reference index shift.

    The solve letter's law must have k_coef != 0 so k can be recovered;
    expected coefficients equal scale_base**scale_exp(n,k) times the
    reference value, and reference rows live at index n + n_shift with
    entries offset by k_shift.
    """

    exponent_laws: tuple[tuple[str, Affine], ...]
    solve_letter: str
    k_min: KBound
    k_max: KBound
    scale_base: int = 1
    scale_exp: Affine = Affine()
    n_shift: int = 0
    k_shift: int = 0

    def __post_init__(self) -> None:
        laws = dict(self.exponent_laws)
        if self.solve_letter not in laws:
            raise ValueError(f"solve letter {self.solve_letter!r} has no exponent law")
        if laws[self.solve_letter].k_coef == 0:
            raise ValueError(f"solve letter {self.solve_letter!r} needs k_coef != 0")
        if self.scale_base < 1:
            raise ValueError("scale base must be a positive integer")

    def law(self, letter: str) -> Affine | None:
        for name, form in self.exponent_laws:
            if name == letter:
                return form
        return None

    @property
    def k_origin(self) -> int:
        # Registry cases all use an n-independent lower bound.
        return self.k_min.at(1)


def extract_row(poly: Polynomial, ansatz: Ansatz, n: int) -> list[int]:
    """Invert the ansatz on the step-n iterate, producing entries for
    k = k_min(n)..k_max(n); ks carried by no monomial are zero."""
    lo, hi = ansatz.k_min.at(n), ansatz.k_max.at(n)
    if hi < lo:
        raise AnsatzMismatch(f"empty k-range {lo}..{hi} at n={n}")
    laws = dict(ansatz.exponent_laws)
    solve = laws[ansatz.solve_letter]
    row = [0] * (hi - lo + 1)
    for mono, coeff in poly.terms():
        residue = mono.exponent(ansatz.solve_letter) - solve.at(n)
        if residue % solve.k_coef:
            raise AnsatzMismatch(
                f"monomial {mono} at n={n}: exponent of {ansatz.solve_letter!r} "
                "does not determine an integer k"
            )
        k = residue // solve.k_coef
        if not lo <= k <= hi:
            raise AnsatzMismatch(f"monomial {mono} at n={n}: k={k} outside {lo}..{hi}")
        for letter in set(mono.letters) | set(laws):
            law = laws.get(letter)
            if law is None:
                raise AnsatzMismatch(f"monomial {mono} at n={n}: unexpected letter {letter!r}")
            if mono.exponent(letter) != law.at(n, k):
                raise AnsatzMismatch(
                    f"monomial {mono} at n={n}, k={k}: exponent of {letter!r} "
                    f"is {mono.exponent(letter)}, law says {law.at(n, k)}"
                )
        exp = ansatz.scale_exp.at(n, k)
        if exp < 0:
            raise AnsatzMismatch(f"negative scale exponent {exp} at n={n}, k={k}")
        scale = ansatz.scale_base**exp
        if coeff % scale:
            raise AnsatzMismatch(
                f"coefficient {coeff} of {mono} at n={n} is not divisible by {scale}"
            )
        row[k - lo] += coeff // scale
    return row


@dataclass(frozen=True)
class Triangle:
    """Extracted or oracle-computed rows, n = 1..max_n, k from k_origin."""

    k_origin: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def max_n(self) -> int:
        return len(self.rows)

    def row(self, n: int) -> tuple[int, ...]:
        if not 1 <= n <= self.max_n:
            raise ValueError(f"row {n} outside 1..{self.max_n}")
        return self.rows[n - 1]
