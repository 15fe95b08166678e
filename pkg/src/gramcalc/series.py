"""Truncated bivariate series with exact rational coefficients.

A TruncatedSeries holds, for each z-power n up to its order, the plain
coefficient of z^n as a polynomial in t (a tuple of Fractions indexed by
t-power).  This is just enough machinery to build the Eulerian-polynomial
generating series, rescale t, and take a formal square root; no floating
point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .oracles import eulerian_row_recurrence

TPoly = tuple[Fraction, ...]

_ZERO: TPoly = ()
_ONE: TPoly = (Fraction(1),)


def _trim(coeffs: list[Fraction]) -> TPoly:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _add(a: TPoly, b: TPoly) -> TPoly:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def _neg(a: TPoly) -> TPoly:
    return tuple(-c for c in a)


def _mul(a: TPoly, b: TPoly) -> TPoly:
    if not a or not b:
        return _ZERO
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return _trim(out)


def _scale_t(a: TPoly, c: int) -> TPoly:
    return _trim([coeff * c**j for j, coeff in enumerate(a)])


@dataclass(frozen=True)
class TruncatedSeries:
    """coeffs[n] is the t-polynomial multiplying z^n, for n = 0..order."""

    coeffs: tuple[TPoly, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def z_coefficient(self, n: int) -> TPoly:
        if not 0 <= n <= self.order:
            raise ValueError(f"z-order {n} outside 0..{self.order}")
        return self.coeffs[n]


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Product truncated at the smaller order."""
    order = min(a.order, b.order)
    coeffs = []
    for n in range(order + 1):
        acc: TPoly = _ZERO
        for i in range(n + 1):
            acc = _add(acc, _mul(a.coeffs[i], b.coeffs[n - i]))
        coeffs.append(acc)
    return TruncatedSeries(tuple(coeffs))


def a_series(order: int) -> TruncatedSeries:
    """The Eulerian generating series: constant term 1 and z^n coefficient
    t*A_n(t)/n!, where A_n is the n-th Eulerian polynomial."""
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    if order > 12:
        raise ValueError(f"a_series is capped at order 12, got {order}")
    coeffs: list[TPoly] = [_ONE]
    fact = 1
    for n in range(1, order + 1):
        fact *= n
        row = eulerian_row_recurrence(n)
        coeffs.append(tuple([Fraction(0)] + [Fraction(c, fact) for c in row]))
    return TruncatedSeries(tuple(coeffs))


def substitute_t_scale(s: TruncatedSeries, c: int) -> TruncatedSeries:
    """Substitute t -> c*t coefficientwise."""
    return TruncatedSeries(tuple(_scale_t(p, c) for p in s.coeffs))


def sqrt_series(s: TruncatedSeries) -> TruncatedSeries:
    """The unique square root with constant term 1, degreewise:
    2*S_n = s_n - sum_{i=1..n-1} S_i * S_{n-i}."""
    if s.coeffs[0] != _ONE:
        raise ValueError("square root needs constant term 1")
    half = Fraction(1, 2)
    out: list[TPoly] = [_ONE]
    for n in range(1, s.order + 1):
        acc = s.coeffs[n]
        for i in range(1, n):
            acc = _add(acc, _neg(_mul(out[i], out[n - i])))
        out.append(tuple(c * half for c in acc))
    return TruncatedSeries(tuple(out))


def t_triangle_row(s: TruncatedSeries, n: int) -> list[int]:
    """Read off n! times the t-coefficients of z^n, for t-powers 1..n.

    Every entry must come out integral; a fractional value or a nonzero
    constant term signals a bug upstream.
    """
    poly = s.z_coefficient(n)
    if poly and poly[0] != 0:
        raise ValueError(f"z^{n} coefficient has a nonzero constant t-term")
    if len(poly) > n + 1:
        raise ValueError(f"z^{n} coefficient has t-degree above {n}")
    fact = 1
    for m in range(2, n + 1):
        fact *= m
    row = []
    for k in range(1, n + 1):
        value = (poly[k] if k < len(poly) else Fraction(0)) * fact
        if value.denominator != 1:
            raise ValueError(f"non-integral triangle entry at n={n}, k={k}: {value}")
        row.append(int(value))
    return row


def sqrt_triangle_row(n: int) -> list[int]:
    """Row n of the triangle carried by the square root of the t->2t
    rescaled Eulerian series."""
    series = sqrt_series(substitute_t_scale(a_series(n), 2))
    return t_triangle_row(series, n)
