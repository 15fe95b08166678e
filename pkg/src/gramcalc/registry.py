"""The bundled registry of derivation identities.

Each case couples a rule set, a seed word and an operator with the
structural ansatz of its iterates and an oracle binding.  Case ids
(P1, P2, P3, P4x, P4y, T1, c1..c12) are the stable public names; the
parametric families c4 and c11 are instantiated on a fixed grid and
labelled like "c4[r=0]".  Per-method caps bound the engine row index n
so that every bound oracle method stays inside its own cap.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .ansatz import Affine, Ansatz, KBound, Triangle, extract_row
from .dsl import parse_grammar, parse_operator, parse_polynomial
from .grammar import Grammar, OperatorExpr, apply_operator
from .poly import Polynomial


@dataclass(frozen=True)
class OracleBinding:
    """Named oracle with bound methods and per-method engine-row caps.

    k_factorial marks bindings whose reference row is the oracle row
    scaled entrywise by k! (the ordered variants of the classical
    triangles); params are forwarded to the oracle (currently only r).
    """

    oracle: str
    methods: tuple[tuple[str, int], ...]
    params: tuple[tuple[str, int], ...] = ()
    k_factorial: bool = False

    @property
    def max_cap(self) -> int:
        return max(cap for _, cap in self.methods)


@dataclass(frozen=True)
class CaseSpec:
    case_id: str
    note: str
    grammar: Grammar
    seed: Polynomial
    operator: OperatorExpr
    ansatz: Ansatz
    binding: OracleBinding

    @property
    def label(self) -> str:
        if not self.binding.params:
            return self.case_id
        inner = ",".join(f"{name}={value}" for name, value in self.binding.params)
        return f"{self.case_id}[{inner}]"


def _case(
    case_id: str,
    note: str,
    grammar: str,
    seed: str,
    op: str,
    laws: dict[str, Affine],
    solve: str,
    k_min: KBound,
    k_max: KBound,
    binding: OracleBinding,
    scale_base: int = 1,
    scale_exp: Affine = Affine(),
    n_shift: int = 0,
) -> CaseSpec:
    return CaseSpec(
        case_id=case_id,
        note=note,
        grammar=parse_grammar(grammar),
        seed=parse_polynomial(seed),
        operator=parse_operator(op),
        ansatz=Ansatz(
            exponent_laws=tuple(sorted(laws.items())),
            solve_letter=solve,
            k_min=k_min,
            k_max=k_max,
            scale_base=scale_base,
            scale_exp=scale_exp,
            n_shift=n_shift,
        ),
        binding=binding,
    )


@lru_cache(maxsize=1)
def _registry() -> tuple[CaseSpec, ...]:
    cases = [
        _case(
            "P1", "Stirling set-partition numbers",
            "x -> x*y; y -> y", "x", "D",
            {"x": Affine(1), "y": Affine(0, 0, 1)}, "y",
            KBound(1), KBound(0, 1),
            OracleBinding("stirling2", (("recurrence", 12),)),
        ),
        _case(
            "P2", "Eulerian numbers",
            "x -> x*y; y -> x*y", "x", "D",
            {"x": Affine(1, 0, 1), "y": Affine(0, 1, -1)}, "x",
            KBound(0), KBound(-1, 1),
            OracleBinding(
                "eulerian", (("recurrence", 12), ("descents", 8), ("excedances", 8))
            ),
        ),
        _case(
            "P3", "second-order Eulerian numbers",
            "x -> x^2*y; y -> x^2*y", "x", "D",
            {"x": Affine(0, 2, -1), "y": Affine(1, 0, 1)}, "y",
            KBound(0), KBound(-1, 1),
            OracleBinding("eulerian2", (("recurrence", 12), ("enumeration", 6))),
        ),
        _case(
            "P4x", "interior peak counts",
            "x -> y^2; y -> x*y", "x", "D",
            {"x": Affine(-1, 1, -2), "y": Affine(2, 0, 2)}, "y",
            KBound(0), KBound(-1, 1, 2),
            OracleBinding("peaks-interior", (("enumeration", 8),)),
        ),
        _case(
            "P4y", "left peak counts",
            "x -> y^2; y -> x*y", "y", "D",
            {"x": Affine(0, 1, -2), "y": Affine(1, 0, 2)}, "y",
            KBound(0), KBound(0, 1, 2),
            OracleBinding("peaks-left", (("enumeration", 8),)),
        ),
        _case(
            "T1", "second-order Eulerian numbers via xD",
            "x -> x*y; y -> x*y", "x", "xD",
            {"x": Affine(0, 2, -1), "y": Affine(1, 0, 1)}, "y",
            KBound(0), KBound(-1, 1),
            OracleBinding("eulerian2", (("recurrence", 12), ("enumeration", 6))),
        ),
        _case(
            "c1", "type B Eulerian numbers",
            "x -> x*y^2; y -> x^2*y", "x*y", "D",
            {"x": Affine(1, 2, -2), "y": Affine(1, 0, 2)}, "y",
            KBound(0), KBound(0, 1),
            OracleBinding(
                "typeB",
                (("recurrence", 12), ("enumeration", 6), ("explicit-formula", 12)),
            ),
        ),
        _case(
            "c2", "Eulerian numbers, row n+1, scaled by 2^n",
            "x -> x*y^2; y -> x^2*y", "x^2*y^2", "D",
            {"x": Affine(2, 2, -2), "y": Affine(2, 0, 2)}, "y",
            KBound(0), KBound(0, 1),
            OracleBinding(
                "eulerian", (("recurrence", 11), ("descents", 7), ("excedances", 7))
            ),
            scale_base=2, scale_exp=Affine(0, 1, 0), n_shift=1,
        ),
        _case(
            "c3", "perfect matchings with k odd-smaller pairs",
            "x -> x*y^2; y -> x^2*y", "x", "D",
            {"x": Affine(1, 2, -2), "y": Affine(0, 0, 2)}, "y",
            KBound(1), KBound(0, 1),
            OracleBinding("matchings", (("enumeration", 6),)),
        ),
        *[
            _case(
                "c4", f"restricted Eulerian numbers, r={r}",
                "x -> x*y; y -> x*y", f"x*y^{r}", "D",
                {"x": Affine(1, 0, 1), "y": Affine(r, 1, -1)}, "x",
                KBound(0), KBound(0, 1),
                OracleBinding(
                    "restricted", (("enumeration", 7 - r),), params=(("r", r),)
                ),
                n_shift=r,
            )
            for r in (0, 1, 2, 3)
        ],
        _case(
            "c5", "Eulerian numbers scaled by 2^k",
            "x -> x*y^2; y -> x*y", "x", "D",
            {"x": Affine(1, 0, 1), "y": Affine(0, 2, -2)}, "x",
            KBound(0), KBound(-1, 1),
            OracleBinding(
                "eulerian", (("recurrence", 12), ("descents", 8), ("excedances", 8))
            ),
            scale_base=2, scale_exp=Affine(0, 0, 1),
        ),
        _case(
            "c6", "square-root series triangle",
            "x -> x*y^2; y -> x*y", "y", "D",
            {"x": Affine(0, 0, 1), "y": Affine(1, 2, -2)}, "x",
            KBound(1), KBound(0, 1),
            OracleBinding("sqrt-series", (("series", 12),)),
        ),
        _case(
            "c7", "ordered set partitions (k! times Stirling2)",
            "x -> x^2*y; y -> y", "x", "D",
            {"x": Affine(1, 0, 1), "y": Affine(0, 0, 1)}, "x",
            KBound(1), KBound(0, 1),
            OracleBinding("stirling2", (("recurrence", 12),), k_factorial=True),
        ),
        _case(
            "c8", "cycle-ordered permutations (k! times Stirling1)",
            "x -> x^2*y; y -> y^2", "x", "D",
            {"x": Affine(1, 0, 1), "y": Affine(0, 1, 0)}, "x",
            KBound(1), KBound(0, 1),
            OracleBinding("stirling1", (("recurrence", 12),), k_factorial=True),
        ),
        _case(
            "c9", "Lah numbers",
            "x -> x*y^2; y -> y^2", "x", "D",
            {"x": Affine(1), "y": Affine(0, 1, 1)}, "y",
            KBound(1), KBound(0, 1),
            OracleBinding("lah", (("recurrence", 12),)),
        ),
        _case(
            "c10", "ordered-forest counts, branching 3",
            "x -> x*y^3; y -> y^3", "x", "D",
            {"x": Affine(1), "y": Affine(0, 2, 1)}, "y",
            KBound(1), KBound(0, 1),
            OracleBinding(
                "forest", (("bell-composition", 10),), params=(("r", 3),)
            ),
        ),
        *[
            _case(
                "c11", f"plane increasing {r}-ary forests",
                f"x -> x*y^{r}; y -> y^{r}", "x", "D",
                {"x": Affine(1), "y": Affine(0, r - 1, 1)}, "y",
                KBound(1), KBound(0, 1),
                OracleBinding(
                    "forest", (("bell-composition", 10),), params=(("r", r),)
                ),
            )
            for r in (4, 5)
        ],
        _case(
            "c12", "increasing mobile leaf counts",
            "x -> x^2*y; y -> x*y", "y", "D",
            {"x": Affine(0, 1, 0), "y": Affine(0, 0, 1)}, "y",
            KBound(1), KBound(0, 1),
            OracleBinding("mobile", (("recurrence", 12),)),
        ),
    ]
    labels = [case.label for case in cases]
    if len(set(labels)) != len(labels):
        raise AssertionError("registry labels must be unique")
    return tuple(cases)


def case_registry() -> list[CaseSpec]:
    """All case instances in fixed verification order."""
    return list(_registry())


def cases_for(name: str) -> list[CaseSpec]:
    """Instances matching a public id ("c4") or an exact label ("c4[r=0]")."""
    matches = [case for case in _registry() if name in (case.case_id, case.label)]
    if not matches:
        known = sorted({case.case_id for case in _registry()})
        raise KeyError(f"unknown case {name!r}; known ids: {', '.join(known)}")
    return matches


def compute_case_triangle(case: CaseSpec, max_n: int, strict: bool = True) -> Triangle:
    """Run the case's derivation and extract rows 1..max_n."""
    if max_n < 1:
        raise ValueError(f"max_n must be positive, got {max_n}")
    trace = apply_operator(case.grammar, case.operator, case.seed, max_n, strict=strict)
    rows = tuple(
        tuple(extract_row(trace.iterates[n], case.ansatz, n)) for n in range(1, max_n + 1)
    )
    return Triangle(k_origin=case.ansatz.k_origin, rows=rows)
