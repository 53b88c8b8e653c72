"""Ring-analysis tests: units, associates, criteria, membership."""

from __future__ import annotations

import random

import pytest

from clusterkit.analysis import (
    DegenerateColumn,
    FactorialityVerdict,
    UnitForm,
    are_associate,
    classify_unit,
    clusters_disjoint,
    column_criterion,
    gcd_criterion,
    laurent_membership,
    staircase_disjoint,
    upper_bound_member,
)
from clusterkit.constructions import acyclic_seed_from_cartan, CartanMatrix
from clusterkit.explore import ExplorationLimits, explore
from clusterkit.laurent import FieldTag, LaurentPoly, RationalFn, exact_div
from clusterkit.presets import a3_matrix, lampe_matrix, rank2_matrix
from clusterkit.seeds import ExchangeMatrix, Seed, SeedProfile, apply_word

COEFF_PROFILE = SeedProfile(1, 2, 3)  # one mutable, one invertible coefficient, one frozen


def var(i, m=3):
    return LaurentPoly.variable(m, i)


def one(m=3):
    return LaurentPoly.const(m, 1)


# -- unit classification -------------------------------------------------------


def test_classify_unit_form_match():
    e = LaurentPoly.monomial(3, (0, -2, 0))
    assert classify_unit(e, COEFF_PROFILE) == UnitForm(1, ((2, -2),))


def test_classify_unit_rejects_mutable_and_frozen():
    assert classify_unit(var(1), COEFF_PROFILE) is None  # mutable
    assert classify_unit(var(3), COEFF_PROFILE) is None  # non-invertible coefficient
    assert classify_unit(one() + var(2), COEFF_PROFILE) is None  # two terms
    assert classify_unit(2 * var(2), COEFF_PROFILE) is None  # non-unit scalar


def test_classify_unit_signs_and_zero():
    assert classify_unit(-one(), COEFF_PROFILE) == UnitForm(-1, ())
    assert classify_unit(one(), COEFF_PROFILE) == UnitForm(1, ())
    with pytest.raises(ValueError):
        classify_unit(LaurentPoly.zero(3), COEFF_PROFILE)


def test_unit_classification_characterizes_unit_monomials():
    # UnitForm exactly on +-(monomials in the invertible window)
    rng = random.Random(5)
    profile = SeedProfile(2, 4, 5)
    for _ in range(200):
        exps = tuple(rng.randint(-2, 2) for _ in range(5))
        coeff = rng.choice((-2, -1, 1, 2))
        e = LaurentPoly.monomial(5, exps, coeff)
        expected = abs(coeff) == 1 and all(
            e == 0 for i, e in enumerate(exps, start=1) if not 3 <= i <= 4
        )
        assert (classify_unit(e, profile) is not None) == expected


# -- associates ----------------------------------------------------------------


def test_associate_examples():
    z = var(3) + one()
    assert are_associate(var(2) * z, z, COEFF_PROFILE)  # unit multiple
    assert are_associate(-z, z, COEFF_PROFILE)  # sign unit
    assert not are_associate(z + one(), z, COEFF_PROFILE)
    with pytest.raises(ValueError):
        are_associate(LaurentPoly.zero(3), z, COEFF_PROFILE)


def test_distinct_cluster_variables_never_associate():
    seed = Seed.initial(a3_matrix())
    report = explore(seed, ExplorationLimits(max_depth=64, max_seeds=100000))
    variables = report.distinct_variables
    for i, a in enumerate(variables):
        for j, b in enumerate(variables):
            assert are_associate(a, b, seed.profile) == (i == j)


# -- disjointness ---------------------------------------------------------------


def test_cluster_not_disjoint_from_itself():
    seed = Seed.initial(a3_matrix())
    assert not clusters_disjoint(seed, seed)


def test_a3_word_13_shares_middle_variable():
    seed = Seed.initial(a3_matrix())
    assert not clusters_disjoint(seed, apply_word(seed, (1, 3)))


def test_acyclic_staircase_clusters_disjoint():
    seed = acyclic_seed_from_cartan(CartanMatrix([[2, -2, 0], [-2, 2, -1], [0, -1, 2]]))
    mutated, disjoint = staircase_disjoint(seed)
    assert disjoint
    assert mutated.word == (1, 2, 3)


def test_staircase_on_a3():
    seed = Seed.initial(a3_matrix())
    _, disjoint = staircase_disjoint(seed)
    assert disjoint


def test_staircase_single_mutable_index():
    B = ExchangeMatrix([[0], [1], [-2]], SeedProfile(1, 2, 3))
    seed = Seed.initial(B)
    mutated, disjoint = staircase_disjoint(seed)
    assert disjoint and mutated.word == (1,)


def test_disjoint_requires_same_context():
    with pytest.raises(ValueError):
        clusters_disjoint(Seed.initial(a3_matrix()), Seed.initial(lampe_matrix()))


# -- column criterion ------------------------------------------------------------


def test_column_criterion_a3():
    verdict = column_criterion(a3_matrix())
    assert verdict.is_not_factorial
    assert (verdict.witness.k, verdict.witness.s) == (1, 3)
    assert verdict.witness.negated
    # the witness re-validates
    B = a3_matrix()
    k, s = verdict.witness.k, verdict.witness.s
    assert B.entry(k, s) == 0
    assert B.column(k) == tuple(-v for v in B.column(s))


def test_column_criterion_inconclusive_cases():
    assert column_criterion(lampe_matrix()).status == "inconclusive"
    b0 = acyclic_seed_from_cartan(CartanMatrix([[2, -2, 0], [-2, 2, -1], [0, -1, 2]])).matrix
    assert column_criterion(b0).status == "inconclusive"


def test_verdict_shape_invariants():
    with pytest.raises(ValueError):
        FactorialityVerdict("not_factorial", "equal_columns", None, "missing witness")


# -- gcd criterion -----------------------------------------------------------------


def test_gcd_criterion_lampe_over_c():
    verdict = gcd_criterion(lampe_matrix(), FieldTag.COMPLEXES)
    assert verdict.is_not_factorial
    assert verdict.witness.k == 1 and verdict.witness.d == 2
    data = verdict.to_json()
    assert data["criterion"] == "column_gcd" and data["witness"]["d"] == 2


def test_gcd_criterion_lampe_over_q_inconclusive():
    assert gcd_criterion(lampe_matrix(), FieldTag.RATIONALS).status == "inconclusive"


def test_gcd_criterion_odd_exponent_over_q():
    B = ExchangeMatrix([[0, -1], [3, 0]], SeedProfile(2, 2, 2))
    verdict = gcd_criterion(B, FieldTag.RATIONALS)
    assert verdict.is_not_factorial and verdict.witness.d == 3 and verdict.witness.odd_factor == 3


def test_gcd_criterion_degenerate_column():
    B = ExchangeMatrix.__new__(ExchangeMatrix)
    object.__setattr__(B, "entries", ((0, 1), (0, 0), (0, -1)))
    object.__setattr__(B, "profile", SeedProfile(2, 2, 3))
    with pytest.raises(DegenerateColumn):
        gcd_criterion(B, FieldTag.RATIONALS)


def test_gcd_witness_revalidates():
    verdict = gcd_criterion(rank2_matrix(2, 2), FieldTag.COMPLEXES)
    assert verdict.is_not_factorial
    col = rank2_matrix(2, 2).column(verdict.witness.k)
    assert all(v % verdict.witness.d == 0 for v in col)


# -- membership ---------------------------------------------------------------------


def test_membership_initial_coordinates():
    seed = Seed.initial(a3_matrix())
    assert laurent_membership(var(1), seed)
    z1 = exact_div(one() + var(2), var(1))
    assert laurent_membership(z1, seed)
    assert not laurent_membership(RationalFn(one(), one() + var(2)), seed)


def test_membership_nontrivial_target():
    seed = Seed.initial(a3_matrix())
    target = apply_word(seed, (1, 3))
    # every finite-type variable is Laurent in the mutated cluster too
    report = explore(seed, ExplorationLimits(max_depth=64, max_seeds=100000))
    for v in report.distinct_variables:
        assert laurent_membership(v, target)


def test_membership_respects_frozen_window():
    # x3 is invertible for p = 3 but not for p = 2
    entries = [[0, -1], [1, 0], [0, 1]]
    inv3 = Seed.initial(ExchangeMatrix(entries, SeedProfile(2, 3, 3)))
    frozen3 = Seed.initial(ExchangeMatrix(entries, SeedProfile(2, 2, 3)))
    e = RationalFn(one(), var(3))
    assert laurent_membership(e, inv3)
    assert not laurent_membership(e, frozen3)


def test_upper_bound_member():
    seed = Seed.initial(a3_matrix())
    s13 = apply_word(seed, (1, 3))
    assert upper_bound_member(one() + var(2), seed, s13)
    assert not upper_bound_member(RationalFn(one(), one() + var(2)), seed, s13)
    report = explore(seed, ExplorationLimits(max_depth=2, max_seeds=1000))
    for v in report.distinct_variables:
        assert upper_bound_member(v, seed, s13)


def test_membership_agrees_with_reduce_based_formulation():
    # the division-based decision must match substituting and inspecting
    # the reduced denominator, term for term
    from clusterkit.analysis import coordinate_images
    from clusterkit.laurent import substitute

    rng = random.Random(61)
    seed = Seed.initial(a3_matrix())
    targets = [seed, apply_word(seed, (1,)), apply_word(seed, (1, 3)), apply_word(seed, (2, 1))]
    for _ in range(40):
        acc = {}
        for _ in range(rng.randint(1, 3)):
            exps = tuple(rng.randint(-2, 2) for _ in range(3))
            acc[exps] = acc.get(exps, 0) + rng.randint(-3, 3)
        e = LaurentPoly(3, acc)
        if e.is_zero:
            continue
        for target in targets:
            images = [RationalFn.from_laurent(v) for v in coordinate_images(target)]
            value = substitute(e, images)
            p = target.profile.p
            reduce_based = value.is_zero or (
                value.den.is_monomial and all(i <= p for i in value.den.support_vars())
            )
            assert laurent_membership(e, target) == reduce_based


# -- worked identity -------------------------------------------------------------


def test_a3_four_variables_identity_and_nonassociateness():
    seed = Seed.initial(a3_matrix())
    s13 = apply_word(seed, (1, 3))
    x1, x3 = var(1), var(3)
    z1, z3 = s13.cluster[0], s13.cluster[2]
    assert x1 * z1 == x3 * z3
    four = [x1, x3, z1, z3]
    for i, a in enumerate(four):
        for j, b in enumerate(four):
            if i != j:
                assert not are_associate(a, b, seed.profile)
