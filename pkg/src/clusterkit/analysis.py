"""Ring-theoretic toolkit: units, associates, disjointness, factoriality criteria.

Units of the algebra are signs times monomials in the invertible
coefficient variables x_{n+1}..x_p.  Over the integer coefficient model
the scalar is restricted to +-1; an ambient field would only contribute a
scalar rescaling on top of these monomial units, so associate tests and
unit classification are reported for the integer model and documented as
such.  Two structurally distinct cluster variables are never associate,
which makes cluster disjointness a structural test.

The two non-factoriality criteria return a verdict that is either
NotFactorial with an explicit, re-validated witness, or Inconclusive.
No criterion ever claims factoriality: the affirmative direction is
handled by explicit polynomial-ring certificates in the constructions
module.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .laurent import (
    FieldTag,
    LaurentPoly,
    NotDivisible,
    RationalFn,
    exact_div,
    odd_divisor,
    xd_plus_one_reducible,
)
from .seeds import ExchangeMatrix, Seed, SeedProfile, apply_word


class DegenerateColumn(ValueError):
    """A mutable column is entirely zero (connectedness violation upstream)."""


@dataclass(frozen=True)
class UnitForm:
    """A unit: sign * product of invertible coefficient variables."""

    sign: int
    coeff_exponents: tuple[tuple[int, int], ...]  # (variable index in n+1..p, exponent)


@dataclass(frozen=True)
class ColumnWitness:
    k: int
    s: int
    negated: bool  # column s equals minus column k


@dataclass(frozen=True)
class GcdWitness:
    k: int
    d: int
    field: FieldTag
    odd_factor: int | None  # odd divisor > 1 triggering the rational factorization


@dataclass(frozen=True)
class FactorialityVerdict:
    status: str  # "not_factorial" | "inconclusive"
    criterion: str | None  # "equal_columns" | "column_gcd"
    witness: ColumnWitness | GcdWitness | None
    justification: str

    def __post_init__(self):
        if self.status == "not_factorial" and self.witness is None:
            raise ValueError("a NotFactorial verdict requires a witness")
        if self.status == "inconclusive" and self.witness is not None:
            raise ValueError("an Inconclusive verdict carries no witness")

    @property
    def is_not_factorial(self) -> bool:
        return self.status == "not_factorial"

    def to_json(self) -> dict:
        out = {"status": self.status, "criterion": self.criterion, "justification": self.justification}
        if isinstance(self.witness, ColumnWitness):
            out["witness"] = {"k": self.witness.k, "s": self.witness.s, "negated": self.witness.negated}
        elif isinstance(self.witness, GcdWitness):
            out["witness"] = {
                "k": self.witness.k,
                "d": self.witness.d,
                "field": self.witness.field.value,
                "odd_factor": self.witness.odd_factor,
            }
        else:
            out["witness"] = None
        return out


INCONCLUSIVE = FactorialityVerdict(
    "inconclusive", None, None, "no criterion applied; factoriality undecided"
)


def classify_unit(e: LaurentPoly, profile: SeedProfile) -> UnitForm | None:
    """UnitForm when e is +-(monomial in the invertible coefficients), else None.

    Over the integer model the only scalar units are +-1; with field
    scalars every nonzero lambda would additionally be a unit, which
    rescales but never changes what is or is not a unit multiple.
    """
    if e.is_zero:
        raise ValueError("the zero element is not classifiable")
    if len(e.terms) != 1:
        return None
    exps, c = e.terms[0]
    if c not in (1, -1):
        return None
    n, p = profile.n, profile.p
    carried = []
    for i, ex in enumerate(exps, start=1):
        if ex == 0:
            continue
        if not n + 1 <= i <= p:
            return None
        carried.append((i, ex))
    return UnitForm(c, tuple(carried))


def are_associate(a: LaurentPoly, b: LaurentPoly, profile: SeedProfile) -> bool:
    """True when a = u*b for a unit u (sign times invertible-coefficient monomial)."""
    if a.is_zero or b.is_zero:
        raise ValueError("associateness is defined for nonzero elements")
    try:
        q = exact_div(a, b)
    except NotDivisible:
        return False
    return classify_unit(q, profile) is not None


def _associate_pairing_agrees(c1, c2, profile) -> bool:
    disjoint = not any(a == b for a in c1 for b in c2)
    nonassoc = not any(are_associate(a, b, profile) for a in c1 for b in c2)
    return disjoint == nonassoc


def clusters_disjoint(s1: Seed, s2: Seed) -> bool:
    """Whether the two seeds share no mutable cluster entry.

    Structural disjointness coincides with pairwise non-associateness of
    the mutable entries; the agreement of the two formulations is
    asserted in debug mode.
    """
    if s1.profile != s2.profile:
        raise ValueError("clusters belong to different algebra contexts")
    c1, c2 = s1.mutable_entries(), s2.mutable_entries()
    disjoint = not any(a == b for a in c1 for b in c2)
    assert _associate_pairing_agrees(c1, c2, s1.profile)
    return disjoint


def staircase_disjoint(s: Seed) -> tuple[Seed, bool]:
    """Apply the word (1, 2, ..., n) and report disjointness against the input."""
    z = apply_word(s, range(1, s.profile.n + 1))
    return z, clusters_disjoint(s, z)


def column_criterion(B: ExchangeMatrix) -> FactorialityVerdict:
    """Non-factoriality from a repeated column: c_k = +-c_s with b_ks = 0."""
    n = B.profile.n
    for k in range(1, n + 1):
        ck = B.column(k)
        for s in range(k + 1, n + 1):
            if B.entry(k, s) != 0:
                continue
            cs = B.column(s)
            if ck == cs or ck == tuple(-v for v in cs):
                negated = ck != cs
                # re-validate the witness before returning it
                assert B.entry(k, s) == 0 and (ck == cs or ck == tuple(-v for v in cs))
                sign = "-" if negated else ""
                return FactorialityVerdict(
                    "not_factorial",
                    "equal_columns",
                    ColumnWitness(k, s, negated),
                    f"columns {k} and {s} satisfy c_{k} = {sign}c_{s} with b_{k}{s} = 0; "
                    f"mutating at {k} then {s} produces two non-associate irreducible "
                    f"factorizations of the same element",
                )
    return FactorialityVerdict(
        "inconclusive", None, None, "no pair of mutable columns is equal up to sign with a zero linking entry"
    )


def gcd_criterion(B: ExchangeMatrix, field: FieldTag = FieldTag.RATIONALS) -> FactorialityVerdict:
    """Non-factoriality from a column gcd d with X^d + 1 reducible over the field."""
    n, m = B.profile.n, B.profile.m
    for k in range(1, n + 1):
        col = B.column(k)
        nonzero = [abs(v) for v in col if v]
        if not nonzero:
            raise DegenerateColumn(f"column {k} is entirely zero")
        d = 0
        for v in nonzero:
            d = gcd(d, v)
        if xd_plus_one_reducible(d, field):
            assert all(v % d == 0 for v in col)
            q = odd_divisor(d)
            if field is FieldTag.COMPLEXES:
                why = f"X^{d}+1 splits into linear factors over the complexes (d = {d} >= 2)"
            else:
                why = f"d = {d} is not a power of two: X^{d}+1 has the rational factor X^{d // q}+1"
            return FactorialityVerdict(
                "not_factorial",
                "column_gcd",
                GcdWitness(k, d, field, q),
                f"column {k} has entry gcd {d} and {why}; the exchange relation at {k} "
                f"then factors into non-associate non-units in two ways",
            )
    return FactorialityVerdict(
        "inconclusive",
        None,
        None,
        f"every mutable column gcd d has X^d+1 irreducible over {field.value}",
    )


def coordinate_images(target: Seed) -> list[LaurentPoly]:
    """Expressions of the initial variables in the target seed's coordinates.

    Replays the reversed mutation word from a fresh formal seed placed at
    the target's matrix, so entry i of the result is the initial variable
    x_i written in the target cluster's coordinates.
    """
    fresh = Seed.initial(target.matrix)
    back = apply_word(fresh, reversed(target.word))
    return list(back.cluster)


def _compose_as_quotient(e: LaurentPoly, images: list[LaurentPoly]) -> tuple[LaurentPoly, LaurentPoly]:
    """Rewrite e(x) at Laurent-polynomial images as a quotient num / den.

    Negative exponents are cleared by one common factor per variable, so
    the numerator is assembled with ring operations only; power tables
    keep repeated exponents cheap.
    """
    m = images[0].m
    if e.is_zero:
        return LaurentPoly.zero(m), LaurentPoly.const(m, 1)
    mins = e.min_exponents()
    shifts = [min(0, v) for v in mins]
    powers: list[dict[int, LaurentPoly]] = [{} for _ in range(e.m)]

    def power(i: int, k: int) -> LaurentPoly:
        table = powers[i]
        if k not in table:
            table[k] = images[i] ** k
        return table[k]

    num = LaurentPoly.zero(m)
    for exps, c in e.terms:
        term = LaurentPoly.const(m, c)
        for i, ex in enumerate(exps):
            k = ex - shifts[i]
            if k:
                term = term * power(i, k)
        num = num + term
    den = LaurentPoly.const(m, 1)
    for i, s in enumerate(shifts):
        if s:
            den = den * power(i, -s)
    return num, den


def _integer_content(p: LaurentPoly) -> int:
    out = 0
    for _, c in p.terms:
        out = gcd(out, c)
        if out == 1:
            break
    return out


def _rational_laurent_quotient(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly | None:
    """num / den as a Laurent polynomial over the rationals, or None.

    Integer contents are split off first, so by the Gauss lemma the
    primitive parts divide over the rationals exactly when they divide
    over the integers; the returned value drops the scalar factor, which
    never affects exponent patterns.
    """
    if den.is_zero:
        raise ZeroDivisionError("zero denominator after substitution")
    if num.is_zero:
        return num
    cn = _integer_content(num)
    cd = _integer_content(den)
    prim_num = LaurentPoly(num.m, [(e, c // cn) for e, c in num.terms])
    prim_den = LaurentPoly(den.m, [(e, c // cd) for e, c in den.terms])
    try:
        return exact_div(prim_num, prim_den)
    except NotDivisible:
        return None


def laurent_membership(e: LaurentPoly | RationalFn, target: Seed) -> bool:
    """Whether e (over the initial variables) lies in the target cluster's Laurent ring.

    The value is rewritten in target coordinates as a quotient of Laurent
    polynomials; it lies in the fully localized ring exactly when the
    denominator divides the numerator there (monomials are units, so no
    common-factor reduction is needed), and in the target's Laurent ring
    when additionally the non-invertible coefficients p+1..m keep
    nonnegative exponents in the quotient.
    """
    images = coordinate_images(target)
    if isinstance(e, LaurentPoly):
        num, den = _compose_as_quotient(e, images)
    else:
        num, _ = _compose_as_quotient(e.num, images)
        den, _ = _compose_as_quotient(e.den, images)
    q = _rational_laurent_quotient(num, den)
    if q is None:
        return False
    p = target.profile.p
    mins = q.min_exponents()
    return all(mins[i] >= 0 for i in range(p, target.profile.m))


def upper_bound_member(e: LaurentPoly | RationalFn, seed_y: Seed, seed_z: Seed) -> bool:
    """Membership in the intersection of two clusters' Laurent rings."""
    return laurent_membership(e, seed_y) and laurent_membership(e, seed_z)
