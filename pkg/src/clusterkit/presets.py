"""Named presets: one-command reproduction of the worked examples."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .analysis import FieldTag, column_criterion, gcd_criterion
from .constructions import (
    CartanMatrix,
    acyclic_seed_from_cartan,
    acyclic_staircase,
    lie_matrix,
    lie_preset,
    staircase_intermediate_matrix,
    type_a_chain,
    type_a_seed,
    verify_polynomial_generators,
)
from .laurent import LaurentPoly, exact_div
from .seeds import ExchangeMatrix, Seed, SeedProfile, matrix_rank, seed_mutate


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class Preset:
    name: str
    description: str
    matrix: Callable[[], ExchangeMatrix]
    verify: Callable[[], list[Check]]


def a3_matrix() -> ExchangeMatrix:
    return ExchangeMatrix([[0, -1, 0], [1, 0, -1], [0, 1, 0]], SeedProfile(3, 3, 3))


def lampe_matrix() -> ExchangeMatrix:
    return ExchangeMatrix([[0, -2], [2, 0]], SeedProfile(2, 2, 2))


def rank2_matrix(b: int, c: int) -> ExchangeMatrix:
    """The 2 x 2 seed matrix with exchange relations x1*x1' = x2^c + 1, x2*x2' = x1^b + 1."""
    return ExchangeMatrix([[0, b], [-c, 0]], SeedProfile(2, 2, 2))


def acyclic_n3_cartan() -> CartanMatrix:
    return CartanMatrix([[2, -2, 0], [-2, 2, -1], [0, -1, 2]])


def _verify_a3() -> list[Check]:
    seed = Seed.initial(a3_matrix())
    s1 = seed_mutate(seed, 1)
    s13 = seed_mutate(s1, 3)
    one = LaurentPoly.const(3, 1)
    x = lambda i: LaurentPoly.variable(3, i)
    z1 = exact_div(one + x(2), x(1))
    z3 = exact_div(one + x(2), x(3))
    checks = [
        Check("first mutated entry equals (1 + x2)/x1", s13.cluster[0] == z1),
        Check("third mutated entry equals (1 + x2)/x3", s13.cluster[2] == z3),
        Check("witness identity x1*z1 = x3*z3", x(1) * z1 == x(3) * z3),
    ]
    verdict = column_criterion(a3_matrix())
    checks.append(
        Check(
            "column criterion: not factorial with witness (1, 3)",
            verdict.is_not_factorial and (verdict.witness.k, verdict.witness.s) == (1, 3),
            verdict.justification,
        )
    )
    return checks


def _verify_lampe() -> list[Check]:
    B = lampe_matrix()
    over_c = gcd_criterion(B, FieldTag.COMPLEXES)
    over_q = gcd_criterion(B, FieldTag.RATIONALS)
    return [
        Check(
            "gcd criterion over C: not factorial with k=1, d=2",
            over_c.is_not_factorial and over_c.witness.k == 1 and over_c.witness.d == 2,
            over_c.justification,
        ),
        Check("gcd criterion over Q: inconclusive", over_q.status == "inconclusive", over_q.justification),
        Check("column criterion: inconclusive", column_criterion(B).status == "inconclusive"),
        Check("matrix has maximal rank 2", matrix_rank(B) == 2),
    ]


def _verify_type_a(m: int) -> Callable[[], list[Check]]:
    def run() -> list[Check]:
        res = type_a_chain(m)
        vr = verify_polynomial_generators(res.certificate, res.disjoint_pair)
        return [
            Check(f"chain identities hold for m={m}", True, str(res.identity_counts)),
            Check("polynomial-ring certificate verifies", vr.ok, "; ".join(vr.failures)),
        ]

    return run


def _verify_acyclic_n3() -> list[Check]:
    C = acyclic_n3_cartan()
    seed = acyclic_seed_from_cartan(C)
    st = acyclic_staircase(C)
    m = 6
    x = lambda i: LaurentPoly.variable(m, i)
    w1 = exact_div(x(2) ** 2 + x(4), x(1))
    w2 = exact_div(
        x(2) ** 4 * x(3) + 2 * x(2) ** 2 * x(3) * x(4) + x(3) * x(4) ** 2 + x(1) ** 2 * x(5),
        x(1) ** 2 * x(2),
    )
    w3 = exact_div(
        x(2) ** 4 * x(3)
        + 2 * x(2) ** 2 * x(3) * x(4)
        + x(3) * x(4) ** 2
        + x(1) ** 2 * x(5)
        + x(1) ** 2 * x(2) * x(6),
        x(1) ** 2 * x(2) * x(3),
    )
    shape_ok = True
    cur = seed
    for i in range(1, 4):
        cur = seed_mutate(cur, i)
        shape_ok = shape_ok and cur.matrix == staircase_intermediate_matrix(seed.matrix, i)
    vr = verify_polynomial_generators(st.certificate, st.disjoint_pair)
    return [
        Check("staircase entry 1 matches the closed formula", st.mutated.cluster[0] == w1),
        Check("staircase entry 2 matches the closed formula", st.mutated.cluster[1] == w2),
        Check("staircase entry 3 matches the closed formula", st.mutated.cluster[2] == w3),
        Check("intermediate matrices match the block shapes", shape_ok),
        Check("polynomial-ring certificate verifies", vr.ok, "; ".join(vr.failures)),
    ]


def _verify_lie() -> list[Check]:
    lp = lie_preset()
    return [
        Check("six-stage schedule runs to completion", True, f"word {','.join(map(str, lp.full_word))}"),
        Check("initial and final clusters are disjoint", lp.disjoint),
        Check(
            "all entries are integer Laurent polynomials",
            all(isinstance(c, LaurentPoly) for s in lp.stages for c in s.cluster),
        ),
    ]


def _registry() -> dict[str, Preset]:
    presets = {
        "a3": Preset(
            "a3",
            "3 x 3 skew-symmetric seed of the smallest non-factorial finite-type example",
            a3_matrix,
            _verify_a3,
        ),
        "lampe": Preset(
            "lampe",
            "2 x 2 maximal-rank seed that is not factorial over the complexes",
            lampe_matrix,
            _verify_lampe,
        ),
        "acyclic-n3": Preset(
            "acyclic-n3",
            "6 x 3 acyclic seed built from a rank-3 generalized Cartan matrix",
            lambda: acyclic_seed_from_cartan(acyclic_n3_cartan()).matrix,
            _verify_acyclic_n3,
        ),
        "lie-rank2": Preset(
            "lie-rank2",
            "8 x 6 rank-2 Kac-Moody seed with its six-stage mutation schedule",
            lie_matrix,
            _verify_lie,
        ),
    }
    for m in range(2, 9):
        presets[f"type-a-m{m}"] = Preset(
            f"type-a-m{m}",
            f"tridiagonal chain seed on {m} variables with one frozen coefficient",
            (lambda mm: lambda: type_a_seed(mm).matrix)(m),
            _verify_type_a(m),
        )
    return presets


PRESETS = _registry()


def get_preset(name: str) -> Preset:
    try:
        return PRESETS[name]
    except KeyError:
        known = ", ".join(sorted(PRESETS))
        raise KeyError(f"unknown preset {name!r}; available: {known}") from None
