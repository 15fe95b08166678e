"""Independent oracles for the coefficient triangles.

Every triangle the derivation engine produces is recomputed here from
first principles: brute-force enumeration of the counted objects,
explicit recurrences, closed formulas, or set-partition composition.
Nothing in this module touches the grammar engine.

Rows are lists of exact ints.  Each oracle documents its k-range;
enumeration methods carry hard caps so the whole suite stays fast.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations, product
from typing import Callable, Iterator


class OracleCapError(ValueError):
    """Requested row exceeds the method's enumeration or recurrence cap."""


def _check(name: str, n: int, cap: int, low: int = 1) -> None:
    if n < low:
        raise ValueError(f"{name} needs n >= {low}, got {n}")
    if n > cap:
        raise OracleCapError(f"{name} is capped at n <= {cap}, got {n}")


# ---------------------------------------------------------------------------
# Eulerian numbers: permutations of [n] by descents, equivalently excedances.
# Row n has k = 0..n-1.

def eulerian_row_recurrence(n: int) -> list[int]:
    _check("eulerian recurrence", n, 25)
    row = [1]  # n = 0
    for m in range(1, n + 1):
        prev = row
        row = []
        for k in range(m):
            stay = (k + 1) * (prev[k] if k < len(prev) else 0)
            step = (m - k) * (prev[k - 1] if 0 <= k - 1 < len(prev) else 0)
            row.append(stay + step)
    return row


def eulerian_row_descents(n: int) -> list[int]:
    """Count i < n with pi(i) > pi(i+1) over all permutations of [n]."""
    _check("eulerian descent enumeration", n, 8)
    row = [0] * n
    for pi in permutations(range(1, n + 1)):
        row[sum(pi[i] > pi[i + 1] for i in range(n - 1))] += 1
    return row


def eulerian_row_excedances(n: int) -> list[int]:
    """Count i with pi(i) > i over all permutations of [n]."""
    _check("eulerian excedance enumeration", n, 8)
    row = [0] * n
    for pi in permutations(range(1, n + 1)):
        row[sum(pi[i] > i + 1 for i in range(n))] += 1
    return row


def eulerian_row(n: int, method: str = "recurrence") -> list[int]:
    return _dispatch("eulerian", method)(n)


# ---------------------------------------------------------------------------
# Second-order Eulerian numbers: Stirling permutations of order n by ascents.
# Row n has k = 0..n-1.

def stirling_permutations(n: int) -> Iterator[list[int]]:
    """All permutations of {1,1,...,n,n} where the segment between the two
    copies of i contains only values greater than i.

    Generated by inserting the adjacent pair m,m into every gap of each
    word of order m-1; that produces each valid word exactly once.
    """
    words = [[1, 1]]
    for m in range(2, n + 1):
        words = [w[:gap] + [m, m] + w[gap:] for w in words for gap in range(len(w) + 1)]
    yield from words


def second_order_row_recurrence(n: int) -> list[int]:
    _check("second-order eulerian recurrence", n, 25)
    row = [1]  # n = 1
    for m in range(1, n):
        prev = row
        row = []
        for k in range(m + 1):
            up = (2 * m - k + 1) * (prev[k - 1] if 0 <= k - 1 < len(prev) else 0)
            stay = (k + 1) * (prev[k] if k < len(prev) else 0)
            row.append(up + stay)
    return row


def second_order_row_enumeration(n: int) -> list[int]:
    """Ascents are plain adjacent rises w[i] < w[i+1], no end sentinels."""
    _check("stirling permutation enumeration", n, 6)
    row = [0] * n
    for w in stirling_permutations(n):
        row[sum(w[i] < w[i + 1] for i in range(len(w) - 1))] += 1
    return row


def second_order_eulerian_row(n: int, method: str = "recurrence") -> list[int]:
    return _dispatch("eulerian2", method)(n)


# ---------------------------------------------------------------------------
# Type B Eulerian numbers: signed permutations by descents with pi(0) = 0.
# Row n has k = 0..n; n = 0 is allowed and gives [1].

def type_b_row_recurrence(n: int) -> list[int]:
    _check("type B recurrence", n, 25, low=0)
    row = [1]  # n = 0
    for m in range(1, n + 1):
        prev = row
        row = []
        for k in range(m + 1):
            up = (2 * m - 2 * k + 1) * (prev[k - 1] if 0 <= k - 1 < len(prev) else 0)
            stay = (2 * k + 1) * (prev[k] if k < len(prev) else 0)
            row.append(up + stay)
    return row


def type_b_row_enumeration(n: int) -> list[int]:
    """Window notation (pi(1),...,pi(n)) over all sign choices; descents are
    positions 1..n with pi(i-1) > pi(i) under pi(0) = 0."""
    _check("type B enumeration", n, 6, low=0)
    row = [0] * (n + 1)
    for pi in permutations(range(1, n + 1)):
        for signs in product((1, -1), repeat=n):
            window = (0,) + tuple(s * v for s, v in zip(signs, pi))
            row[sum(window[i] > window[i + 1] for i in range(n))] += 1
    return row


def type_b_row_explicit(n: int) -> list[int]:
    """Alternating binomial sum of odd-number powers."""
    _check("type B explicit formula", n, 25, low=0)
    return [
        sum((-1) ** i * math.comb(n + 1, i) * (2 * k - 2 * i + 1) ** n for i in range(k + 1))
        for k in range(n + 1)
    ]


def type_b_row(n: int, method: str = "recurrence") -> list[int]:
    return _dispatch("typeB", method)(n)


# ---------------------------------------------------------------------------
# Restricted Eulerian numbers: injections from [n-r] into [n] counted by
# excedances sigma(i) > i at positions 1..n-r.  Row has k = 0..n-r.

def restricted_eulerian_row(n: int, r: int) -> list[int]:
    if not 0 <= r <= n:
        raise ValueError(f"need 0 <= r <= n, got r={r}, n={n}")
    _check("restricted eulerian enumeration", n, 7)
    size = n - r
    row = [0] * (size + 1)
    for sigma in permutations(range(1, n + 1), size):
        row[sum(sigma[i] > i + 1 for i in range(size))] += 1
    return row


# ---------------------------------------------------------------------------
# Perfect matchings of [2n] counted by pairs whose smaller element is odd.
# Row has k = 1..n (element 1 is always a smaller entry, so k >= 1).

def _matchings(elements: list[int]) -> Iterator[list[tuple[int, int]]]:
    if not elements:
        yield []
        return
    first = elements[0]
    for i in range(1, len(elements)):
        rest = elements[1:i] + elements[i + 1 :]
        for tail in _matchings(rest):
            yield [(first, elements[i])] + tail


def matchings_odd_smaller_row(n: int) -> list[int]:
    _check("matching enumeration", n, 6)
    row = [0] * n
    for matching in _matchings(list(range(1, 2 * n + 1))):
        k = sum(1 for a, _ in matching if a % 2 == 1)  # a = min of its pair
        row[k - 1] += 1
    return row


# ---------------------------------------------------------------------------
# Peak statistics on permutations of [n].  Interior peaks are positions
# 1 < i < n with pi(i-1) < pi(i) > pi(i+1); left peaks additionally allow
# i = 1 under the convention pi(0) = 0.

def peak_rows(n: int) -> tuple[list[int], list[int]]:
    _check("peak enumeration", n, 8)
    interior = [0] * ((n - 1) // 2 + 1)
    left = [0] * (n // 2 + 1)
    for pi in permutations(range(1, n + 1)):
        interior[sum(pi[i - 1] < pi[i] > pi[i + 1] for i in range(1, n - 1))] += 1
        w = (0,) + pi
        left[sum(w[i - 1] < w[i] > w[i + 1] for i in range(1, n))] += 1
    return interior, left


def interior_peak_row(n: int) -> list[int]:
    return peak_rows(n)[0]


def left_peak_row(n: int) -> list[int]:
    return peak_rows(n)[1]


# ---------------------------------------------------------------------------
# Classical triangles by their standard recurrences.  Rows have k = 1..n.

def stirling1_row(n: int) -> list[int]:
    """Unsigned Stirling numbers of the first kind (permutations by cycles)."""
    _check("stirling1", n, 25)
    row = [1]  # n = 1
    for m in range(2, n + 1):
        prev = row
        row = [
            (prev[k - 2] if k >= 2 else 0) + (m - 1) * (prev[k - 1] if k <= len(prev) else 0)
            for k in range(1, m + 1)
        ]
    return row


def stirling2_row(n: int) -> list[int]:
    """Stirling numbers of the second kind (set partitions into k blocks)."""
    _check("stirling2", n, 25)
    row = [1]
    for m in range(2, n + 1):
        prev = row
        row = [
            (prev[k - 2] if k >= 2 else 0) + k * (prev[k - 1] if k <= len(prev) else 0)
            for k in range(1, m + 1)
        ]
    return row


def lah_row(n: int) -> list[int]:
    """Unsigned Lah numbers (partitions into k linearly ordered blocks)."""
    _check("lah", n, 25)
    row = [1]
    for m in range(2, n + 1):
        prev = row
        row = [
            (prev[k - 2] if k >= 2 else 0)
            + (m - 1 + k) * (prev[k - 1] if k <= len(prev) else 0)
            for k in range(1, m + 1)
        ]
    return row


def classical_rows(n: int) -> tuple[list[int], list[int], list[int]]:
    """Stirling first kind, Stirling second kind, and Lah rows together."""
    return stirling1_row(n), stirling2_row(n), lah_row(n)


# ---------------------------------------------------------------------------
# Forests of k increasing trees on [n], branching-weighted per tree size.
# Single-tree counts t_m = prod_{j=1..m-1} ((r-1)j + 1); the forest row is
# the sum over set partitions into k blocks of the product of t_{|block|},
# computed by the partial-composition recurrence (condition on the block
# containing element 1).  Rows have k = 1..n; r = 2 reproduces Lah numbers.

def forest_row(n: int, r: int) -> list[int]:
    if r < 2:
        raise ValueError(f"forest branching factor needs r >= 2, got {r}")
    _check("forest composition", n, 10)
    tree = [0] * (n + 1)
    for m in range(1, n + 1):
        tree[m] = math.prod((r - 1) * j + 1 for j in range(1, m))
    table = [[0] * (n + 1) for _ in range(n + 1)]
    table[0][0] = 1
    for m in range(1, n + 1):
        for k in range(1, m + 1):
            table[m][k] = sum(
                math.comb(m - 1, s - 1) * tree[s] * table[m - s][k - 1]
                for s in range(1, m - k + 2)
            )
    return table[n][1:]


# ---------------------------------------------------------------------------
# Increasing mobiles (circular rooted trees) with n nodes and k leaves,
# by the recurrence d(n+1,k) = n*d(n,k-1) + k*d(n,k), d(1,1) = 1.
# Rows have k = 1..n.

def mobile_row(n: int) -> list[int]:
    _check("mobile", n, 25)
    row = [1]  # n = 1
    for m in range(1, n):
        prev = row
        row = [
            m * (prev[k - 2] if k >= 2 else 0) + k * (prev[k - 1] if k <= len(prev) else 0)
            for k in range(1, m + 2)
        ]
    return row


# ---------------------------------------------------------------------------
# Series-extracted triangle; delegates to the truncated-series module.
# Rows have k = 1..n.

def sqrt_series_row(n: int) -> list[int]:
    _check("sqrt-series", n, 12)
    from .series import sqrt_triangle_row

    return sqrt_triangle_row(n)


# ---------------------------------------------------------------------------
# Name/method table for the CLI and the verification harness.

@dataclass(frozen=True)
class OracleMethod:
    fn: Callable[..., list[int]]
    cap: int


@dataclass(frozen=True)
class OracleDef:
    methods: dict[str, OracleMethod]
    k_origin: int
    params: tuple[str, ...] = ()

    @property
    def default_method(self) -> str:
        return next(iter(self.methods))


TABLE: dict[str, OracleDef] = {
    "eulerian": OracleDef(
        {
            "recurrence": OracleMethod(eulerian_row_recurrence, 25),
            "descents": OracleMethod(eulerian_row_descents, 8),
            "excedances": OracleMethod(eulerian_row_excedances, 8),
        },
        k_origin=0,
    ),
    "eulerian2": OracleDef(
        {
            "recurrence": OracleMethod(second_order_row_recurrence, 25),
            "enumeration": OracleMethod(second_order_row_enumeration, 6),
        },
        k_origin=0,
    ),
    "typeB": OracleDef(
        {
            "recurrence": OracleMethod(type_b_row_recurrence, 25),
            "enumeration": OracleMethod(type_b_row_enumeration, 6),
            "explicit-formula": OracleMethod(type_b_row_explicit, 25),
        },
        k_origin=0,
    ),
    "restricted": OracleDef(
        {"enumeration": OracleMethod(restricted_eulerian_row, 7)},
        k_origin=0,
        params=("r",),
    ),
    "matchings": OracleDef(
        {"enumeration": OracleMethod(matchings_odd_smaller_row, 6)},
        k_origin=1,
    ),
    "peaks-interior": OracleDef(
        {"enumeration": OracleMethod(interior_peak_row, 8)},
        k_origin=0,
    ),
    "peaks-left": OracleDef(
        {"enumeration": OracleMethod(left_peak_row, 8)},
        k_origin=0,
    ),
    "stirling1": OracleDef({"recurrence": OracleMethod(stirling1_row, 25)}, k_origin=1),
    "stirling2": OracleDef({"recurrence": OracleMethod(stirling2_row, 25)}, k_origin=1),
    "lah": OracleDef({"recurrence": OracleMethod(lah_row, 25)}, k_origin=1),
    "forest": OracleDef(
        {"bell-composition": OracleMethod(forest_row, 10)},
        k_origin=1,
        params=("r",),
    ),
    "mobile": OracleDef({"recurrence": OracleMethod(mobile_row, 25)}, k_origin=1),
    "sqrt-series": OracleDef({"series": OracleMethod(sqrt_series_row, 12)}, k_origin=1),
}


def _dispatch(oracle: str, method: str) -> Callable[..., list[int]]:
    spec = TABLE[oracle]
    if method not in spec.methods:
        raise ValueError(f"oracle {oracle!r} has no method {method!r}")
    return spec.methods[method].fn


def oracle_row(oracle: str, n: int, method: str | None = None, **params: int) -> list[int]:
    """Compute one oracle row by public name, checking caps and parameters."""
    if oracle not in TABLE:
        raise ValueError(f"unknown oracle {oracle!r}")
    spec = TABLE[oracle]
    method = method or spec.default_method
    fn = _dispatch(oracle, method)
    missing = set(spec.params) - set(params)
    extra = set(params) - set(spec.params)
    if missing or extra:
        raise ValueError(
            f"oracle {oracle!r} takes parameters {spec.params}, got {tuple(params)}"
        )
    return fn(n, **params)
